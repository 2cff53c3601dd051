#include "bmlab/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef BMLAB_DATA_DIR
#define BMLAB_DATA_DIR "data"
#endif

namespace bmlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& v, const std::string& where) {
  size_t used = 0;
  long r = 0;
  try {
    r = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || r <= 0) throw std::invalid_argument(where + ": expected a positive integer, got '" + v + "'");
  return r;
}

double to_double(const std::string& v, const std::string& where) {
  size_t used = 0;
  double r = 0;
  try {
    r = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || r < 0) throw std::invalid_argument(where + ": expected a non-negative number, got '" + v + "'");
  return r;
}

}  // namespace

std::optional<double> SuiteConfig::tolerance_override(const std::string& suite) const {
  auto it = tolerance_overrides.find(suite);
  if (it == tolerance_overrides.end()) return std::nullopt;
  return it->second;
}

SuiteConfig default_config() {
  SuiteConfig c;
  c.data_dir = BMLAB_DATA_DIR;
  return c;
}

SuiteConfig parse_config(const std::string& text, SuiteConfig cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(lineno);
    if (eq == std::string::npos) throw std::invalid_argument(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "precision_bits") {
      cfg.precision_bits = to_long(value, where);
    } else if (key == "trunc_order") {
      cfg.trunc_order = static_cast<int>(to_long(value, where));
    } else if (key == "osc_max_zeros") {
      cfg.osc_max_zeros = to_long(value, where);
    } else if (key == "tail_terms") {
      cfg.tail_terms = static_cast<int>(to_long(value, where));
    } else if (key == "data_dir") {
      cfg.data_dir = value;
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "format") {
      cfg.format = value;
    } else if (key.rfind("tolerance.", 0) == 0) {
      cfg.tolerance_overrides[key.substr(10)] = to_double(value, where);
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path, SuiteConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

void apply_environment(SuiteConfig& cfg) {
  if (const char* v = std::getenv("BMLAB_PRECISION_BITS"); v != nullptr && *v != '\0')
    cfg.precision_bits = to_long(v, "BMLAB_PRECISION_BITS");
}

}  // namespace bmlab::cli
