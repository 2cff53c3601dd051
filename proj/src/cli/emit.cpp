#include "bmlab/cli/emit.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace bmlab::cli {

namespace {

constexpr const char* kSchema = "bmlab-certificates/1";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

size_t pass_count(const std::vector<Certificate>& certs) {
  return static_cast<size_t>(std::count_if(certs.begin(), certs.end(), [](const Certificate& c) { return c.passed(); }));
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "markdown" || name == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv, markdown)");
}

std::string render_json(const std::vector<Certificate>& certs) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["count"] = certs.size();
  j["passed"] = pass_count(certs);
  j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : certs) j["certificates"].push_back(to_json(c));
  return j.dump(2) + "\n";
}

std::string render_csv(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  os << "identity_id,status,residual,tolerance,relative,lhs,rhs,digits,precision_bits,trunc_order,wall_ms,"
        "provenance,note\n";
  for (const auto& c : certs) {
    os << csv_field(c.identity_id) << ',' << c.status << ',' << csv_field(c.residual) << ',' << csv_field(c.tolerance)
       << ',' << (c.relative ? "true" : "false") << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ','
       << c.digits << ',' << c.precision_bits << ',' << c.trunc_order << ',' << c.wall_ms << ','
       << csv_field(join(c.provenance, "; ")) << ',' << csv_field(c.note) << '\n';
  }
  return os.str();
}

std::string render_markdown(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  os << "| identity_id | residual | tolerance | status |\n|---|---|---|---|\n";
  for (const auto& c : certs)
    os << "| " << md_cell(c.identity_id) << " | " << md_cell(c.residual) << (c.relative ? " (rel)" : "") << " | "
       << md_cell(c.tolerance) << " | " << c.status << " |\n";
  os << "\n" << pass_count(certs) << " of " << certs.size() << " passed\n";
  return os.str();
}

std::string render(const std::vector<Certificate>& certs, Format f) {
  switch (f) {
    case Format::Json:
      return render_json(certs);
    case Format::Csv:
      return render_csv(certs);
    case Format::Markdown:
      return render_markdown(certs);
  }
  throw std::logic_error("render: bad format");
}

std::vector<Certificate> parse_json_report(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", std::string()) != kSchema) throw std::invalid_argument("not a certificate report");
  std::vector<Certificate> out;
  for (const auto& c : j.at("certificates")) out.push_back(certificate_from_json(c));
  return out;
}

void emit(const std::vector<Certificate>& certs, Format f, const std::string& path) {
  const std::string body = render(certs, f);
  if (path.empty() || path == "-") {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace bmlab::cli
