#include "bmlab/exact/json_io.hpp"

namespace bmlab::exact {

using nlohmann::json;

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return json{{"variable", p.variable()}, {"coefficients", coeffs}};
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  const int low = p.is_zero() ? 0 : p.min_exponent();
  if (!p.is_zero())
    for (int e = low; e <= p.max_exponent(); ++e) coeffs.push_back(to_string(p.coeff(e)));
  return json{{"variable", p.variable()}, {"low", low}, {"coefficients", coeffs}};
}

json to_json(const DiffOp& op) {
  json coeffs = json::array();
  for (const auto& c : op.coefficients()) coeffs.push_back(to_json(c));
  return json{{"variable", op.variable()}, {"order", op.order()}, {"coefficients", coeffs}};
}

Poly poly_from_json(const json& j) {
  std::vector<BigRational> c;
  for (const auto& s : j.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
  return Poly(j.at("variable").get<std::string>(), std::move(c));
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p(j.at("variable").get<std::string>());
  int e = j.at("low").get<int>();
  for (const auto& s : j.at("coefficients")) p.add_term(e++, parse_rational(s.get<std::string>()));
  return p;
}

DiffOp diffop_from_json(const json& j) {
  std::vector<LaurentPoly> c;
  for (const auto& x : j.at("coefficients")) c.push_back(laurent_from_json(x));
  return DiffOp(j.at("variable").get<std::string>(), std::move(c));
}

}  // namespace bmlab::exact
