#pragma once

#include <json.hpp>

#include "bmlab/exact/diffop.hpp"
#include "bmlab/exact/poly.hpp"

namespace bmlab::exact {

// Canonical JSON forms. Coefficients are decimal strings "p" or "p/q".
//   Poly:        {"variable": "t", "coefficients": ["c0", "c1", ...]}
//   LaurentPoly: {"variable": "t", "low": e0, "coefficients": ["c_e0", ...]}
//   DiffOp:      {"variable": "t", "order": k, "coefficients": [LaurentPoly, ...]}

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const DiffOp& op);

Poly poly_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
DiffOp diffop_from_json(const nlohmann::json& j);

}  // namespace bmlab::exact
