#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::cli {

struct Tolerance {
  double value = 0.0;  // 0 means exact equality
  bool relative = true;
};

/// One verified identity. Decimal strings carry `digits` significant digits.
struct Certificate {
  std::string identity_id;
  std::string lhs;
  std::string rhs;
  std::string residual;
  bool relative = true;
  std::string tolerance;
  long digits = 0;
  long precision_bits = 0;
  int trunc_order = 0;
  long wall_ms = 0;
  std::string status;  // "pass" | "fail"
  std::vector<std::string> provenance;
  std::string note;

  bool passed() const { return status == "pass"; }
};

/// Significant digits used for lhs/rhs renderings.
constexpr long kValueDigits = 40;
constexpr long kResidualDigits = 6;

/// Residual = lhs - rhs (absolute) or |lhs - rhs|/|rhs| (relative); pass iff |residual| < tol,
/// or residual == 0 when tol == 0.
Certificate numeric_certificate(std::string id, const mpnum::BigFloat& lhs, const mpnum::BigFloat& rhs, Tolerance tol,
                                long precision_bits, int trunc_order, std::vector<std::string> provenance = {});

/// Residual against a zero target, scaled by a reference magnitude (relative when scale != 0).
Certificate scaled_zero_certificate(std::string id, const mpnum::BigFloat& value, const mpnum::BigFloat& scale,
                                    Tolerance tol, long precision_bits, int trunc_order,
                                    std::vector<std::string> provenance = {});

/// Symbolic equality: residual "0" on success, the reason otherwise.
Certificate exact_certificate(std::string id, std::string lhs, std::string rhs, bool equal, int trunc_order,
                              std::vector<std::string> provenance = {});

/// A certificate that records a failure to evaluate.
Certificate error_certificate(std::string id, const std::string& what, long precision_bits, int trunc_order,
                              std::vector<std::string> provenance = {});

nlohmann::ordered_json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace bmlab::cli
