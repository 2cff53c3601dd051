#pragma once

#include <map>
#include <optional>
#include <string>

namespace bmlab::cli {

/// Run configuration. File format: one `key = value` per line, `#` starts a comment.
/// Keys: precision_bits, trunc_order, osc_max_zeros, tail_terms, data_dir, output, format,
/// and tolerance.<suite> (replaces every nonzero tolerance of that suite).
struct SuiteConfig {
  long precision_bits = 384;
  /// q-expansion order for the modular objects.
  int trunc_order = 200;
  /// Zero-partition panels before an oscillatory integral gives up.
  long osc_max_zeros = 4000;
  /// Panel terms fed to the Levin tail extrapolation.
  int tail_terms = 24;
  std::map<std::string, double> tolerance_overrides;
  std::string data_dir;
  std::string output;
  std::string format = "json";

  std::optional<double> tolerance_override(const std::string& suite) const;
};

/// Defaults, with data_dir pointing at the source tree's data directory.
SuiteConfig default_config();

/// Applies `key = value` lines on top of `base`; throws std::invalid_argument on unknown keys
/// or malformed values (the message names the line).
SuiteConfig parse_config(const std::string& text, SuiteConfig base = default_config());
SuiteConfig load_config(const std::string& path, SuiteConfig base = default_config());

/// BMLAB_PRECISION_BITS overrides precision_bits when set.
void apply_environment(SuiteConfig& cfg);

}  // namespace bmlab::cli
