#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "bmlab/cli/config.hpp"
#include "bmlab/cli/emit.hpp"
#include "bmlab/cli/suites.hpp"

using namespace bmlab::cli;

namespace {

std::vector<Certificate> without_timing(std::vector<Certificate> v) {
  for (auto& c : v) c.wall_ms = 0;
  return v;
}

Certificate sample(const std::string& id, const std::string& status) {
  Certificate c;
  c.identity_id = id;
  c.lhs = "1.5e0";
  c.rhs = "1.5e0";
  c.residual = "3.1e-30";
  c.relative = true;
  c.tolerance = "1e-25";
  c.digits = 40;
  c.precision_bits = 384;
  c.trunc_order = 200;
  c.wall_ms = 7;
  c.status = status;
  c.provenance = {"a, with comma", "b"};
  c.note = "say \"hi\" | bye";
  return c;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const SuiteConfig d = default_config();
  CHECK(d.precision_bits == 384);
  CHECK(d.trunc_order == 200);
  CHECK_FALSE(d.data_dir.empty());

  const SuiteConfig c = parse_config(
      "# comment\n"
      "precision_bits = 512\n"
      "trunc_order=120   # trailing\n"
      "\n"
      "osc_max_zeros = 900\n"
      "tail_terms = 18\n"
      "tolerance.lvalues = 1e-30\n"
      "format = csv\n");
  CHECK(c.precision_bits == 512);
  CHECK(c.trunc_order == 120);
  CHECK(c.osc_max_zeros == 900);
  CHECK(c.tail_terms == 18);
  CHECK(c.format == "csv");
  REQUIRE(c.tolerance_override("lvalues"));
  CHECK(*c.tolerance_override("lvalues") == doctest::Approx(1e-30));
  CHECK_FALSE(c.tolerance_override("crandall"));

  CHECK_THROWS_AS(parse_config("bogus = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("precision_bits = many\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("precision_bits = -3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("precision_bits\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/bmlab.cfg"), std::runtime_error);
}

TEST_CASE("environment overrides precision only") {
  SuiteConfig c = default_config();
  ::setenv("BMLAB_PRECISION_BITS", "200", 1);
  apply_environment(c);
  ::unsetenv("BMLAB_PRECISION_BITS");
  CHECK(c.precision_bits == 200);
  CHECK(c.trunc_order == 200);
  ::setenv("BMLAB_PRECISION_BITS", "x", 1);
  CHECK_THROWS_AS(apply_environment(c), std::invalid_argument);
  ::unsetenv("BMLAB_PRECISION_BITS");
}

TEST_CASE("suite registry") {
  CHECK(suite_list().size() == 15);
  CHECK(is_suite("table1"));
  CHECK(is_suite("pslq-discovery"));
  CHECK_FALSE(is_suite("table2"));
  CHECK_THROWS_AS(run_suite("table2", default_config()), UsageError);
  for (const auto& s : suite_list()) CHECK_FALSE(s.description.empty());
}

TEST_CASE("table1 suite: ten exact certificates, sorted and stable") {
  const auto a = run_suite("table1", default_config());
  REQUIRE(a.size() == 10);
  CHECK(all_passed(a));
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].identity_id < a[i].identity_id);
  for (const auto& c : a) {
    CHECK(c.tolerance == "0");
    CHECK(c.residual == "0");
  }
  const auto b = run_suite("table1", default_config());
  CHECK(render_json(without_timing(a)) == render_json(without_timing(b)));
}

TEST_CASE("missing data directory becomes a failing certificate") {
  SuiteConfig c = default_config();
  c.data_dir = "/nonexistent";
  const auto certs = run_suite("table1", c);
  REQUIRE(certs.size() == 1);
  CHECK_FALSE(certs[0].passed());
  CHECK(certs[0].note.find("table1.json") != std::string::npos);
}

TEST_CASE("numeric suite is deterministic and honours tolerance overrides") {
  SuiteConfig c = default_config();
  c.precision_bits = 192;
  const auto a = run_suite("crandall", c);
  const auto b = run_suite("crandall", c);
  REQUIRE(a.size() == 3);
  CHECK(render_json(without_timing(a)) == render_json(without_timing(b)));
  // an unreachable override fails everything but exact agreement
  CHECK(all_passed(a));
  c.tolerance_overrides["crandall"] = 1e-300;
  const auto strict = run_suite("crandall", c);
  for (const auto& cert : strict) {
    CHECK(cert.tolerance == "1e-300");
    CHECK(cert.passed() == (cert.residual == "0"));
  }
}

TEST_CASE("apply_tolerance keeps exact and error certificates") {
  Certificate exact = sample("x", "pass");
  exact.tolerance = "0";
  apply_tolerance(exact, 1.0);
  CHECK(exact.tolerance == "0");
  Certificate err = sample("y", "fail");
  err.residual = "nan";
  apply_tolerance(err, 1.0);
  CHECK_FALSE(err.passed());
  Certificate num = sample("z", "pass");
  apply_tolerance(num, 1e-31);
  CHECK_FALSE(num.passed());
  apply_tolerance(num, 1e-29);
  CHECK(num.passed());
  num.residual = "2.5e-400";
  apply_tolerance(num, 1e-300);
  CHECK(num.passed());
  num.residual = "2.5e-200";
  apply_tolerance(num, 1e-300);
  CHECK_FALSE(num.passed());
}

TEST_CASE("json report round trip") {
  const std::vector<Certificate> in{sample("b.two", "fail"), sample("a.one", "pass")};
  const std::string text = render_json(in);
  const auto out = parse_json_report(text);
  REQUIRE(out.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(out[i].identity_id == in[i].identity_id);
    CHECK(out[i].residual == in[i].residual);
    CHECK(out[i].status == in[i].status);
    CHECK(out[i].provenance == in[i].provenance);
    CHECK(out[i].note == in[i].note);
    CHECK(out[i].wall_ms == in[i].wall_ms);
  }
  CHECK(render_json(out) == text);
  CHECK(text.find("\"passed\": 1") != std::string::npos);
  CHECK_THROWS(parse_json_report("{\"certificates\": []}"));
}

TEST_CASE("csv and markdown") {
  const std::vector<Certificate> in{sample("a.one", "pass")};
  std::istringstream csv(render_csv(in));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  const auto h = split_csv_line(header), r = split_csv_line(row);
  REQUIRE(h.size() == 13);
  REQUIRE(r.size() == h.size());
  CHECK(h[0] == "identity_id");
  CHECK(r[0] == "a.one");
  CHECK(r[1] == "pass");
  CHECK(r[11] == "a, with comma; b");
  CHECK(r[12] == "say \"hi\" | bye");

  const std::string md = render_markdown(in);
  CHECK(md.find("| identity_id | residual | tolerance | status |") == 0);
  CHECK(md.find("| a.one | 3.1e-30 (rel) | 1e-25 | pass |") != std::string::npos);
  CHECK(md.find("1 of 1 passed") != std::string::npos);

  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK_THROWS_AS(emit(in, Format::Json, "/nonexistent/dir/out.json"), std::runtime_error);
}
