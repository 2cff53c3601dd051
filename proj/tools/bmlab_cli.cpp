#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "bmlab/cli/config.hpp"
#include "bmlab/cli/emit.hpp"
#include "bmlab/cli/suites.hpp"

using namespace bmlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Bessel moment identity verifier"};
  std::vector<std::string> suites;
  std::string config_path, out, format;
  long prec_bits = 0;
  int trunc = 0;
  bool list = false;
  app.add_option("--suite", suites, "suite to run (repeatable; default: all)");
  app.add_option("--prec-bits", prec_bits, "working precision in bits")->check(CLI::PositiveNumber);
  app.add_option("--trunc", trunc, "q-expansion truncation order")->check(CLI::Range(20, 100000));
  app.add_option("--out", out, "output file (default: stdout)");
  app.add_option("--format", format, "json, csv or markdown");
  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_flag("--list", list, "list suites and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& s : suite_list()) std::cout << s.name << "\t" << s.description << "\n";
    return 0;
  }
  try {
    SuiteConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    apply_environment(cfg);
    if (prec_bits > 0) cfg.precision_bits = prec_bits;
    if (trunc > 0) cfg.trunc_order = trunc;
    if (!out.empty()) cfg.output = out;
    if (!format.empty()) cfg.format = format;
    const Format fmt = parse_format(cfg.format);
    if (suites.empty())
      for (const auto& s : suite_list()) suites.push_back(s.name);
    for (const auto& s : suites)
      if (!is_suite(s)) throw UsageError("unknown suite '" + s + "' (use --list)");

    std::vector<Certificate> all;
    for (const auto& s : suites) {
      const auto t0 = std::chrono::steady_clock::now();
      auto certs = run_suite(s, cfg);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      size_t pass = 0;
      for (const auto& c : certs) pass += c.passed() ? 1 : 0;
      std::cerr << s << ": " << pass << "/" << certs.size() << " passed (" << ms << " ms)\n";
      for (const auto& c : certs)
        if (!c.passed()) std::cerr << "  FAIL " << c.identity_id << " residual " << c.residual << " " << c.note << "\n";
      all.insert(all.end(), certs.begin(), certs.end());
    }
    emit(all, fmt, cfg.output);
    return all_passed(all) ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
