#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmlab/cli/certificate.hpp"
#include "bmlab/cli/config.hpp"

namespace bmlab::cli {

struct SuiteInfo {
  std::string name;
  std::string description;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Suites in canonical run order.
const std::vector<SuiteInfo>& suite_list();
bool is_suite(const std::string& name);

/// Runs every item of the suite (items in parallel), sorted by identity_id. An item that
/// throws, or a suite whose setup throws (e.g. missing data file), becomes an error
/// certificate. Unknown names throw UsageError.
std::vector<Certificate> run_suite(const std::string& name, const SuiteConfig& cfg);

/// All suites in suite_list() order, each block sorted by identity_id.
std::vector<Certificate> run_all(const SuiteConfig& cfg);

bool all_passed(const std::vector<Certificate>& certs);

/// Re-judges a numeric certificate against a new tolerance (exact and error certificates are kept).
void apply_tolerance(Certificate& c, double tol);

}  // namespace bmlab::cli
