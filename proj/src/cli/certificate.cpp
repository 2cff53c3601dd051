#include "bmlab/cli/certificate.hpp"

#include <cstdio>

namespace bmlab::cli {

using mpnum::BigFloat;

namespace {

std::string format_tolerance(const Tolerance& t) {
  if (t.value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", t.value);
  return buf;
}

Certificate base(std::string id, long bits, int trunc, std::vector<std::string> prov) {
  Certificate c;
  c.identity_id = std::move(id);
  c.precision_bits = bits;
  c.trunc_order = trunc;
  c.provenance = std::move(prov);
  return c;
}

bool within(const BigFloat& residual, const Tolerance& tol) {
  if (tol.value == 0.0) return residual.is_zero();
  return residual.is_finite() && abs(residual) < BigFloat(tol.value, residual.precision());
}

}  // namespace

Certificate numeric_certificate(std::string id, const BigFloat& lhs, const BigFloat& rhs, Tolerance tol,
                                long precision_bits, int trunc_order, std::vector<std::string> provenance) {
  Certificate c = base(std::move(id), precision_bits, trunc_order, std::move(provenance));
  const BigFloat r = tol.relative ? relative_difference(lhs, rhs) : lhs - rhs;
  c.lhs = lhs.to_string(kValueDigits);
  c.rhs = rhs.to_string(kValueDigits);
  c.residual = r.to_string(kResidualDigits);
  c.relative = tol.relative;
  c.tolerance = format_tolerance(tol);
  c.digits = kValueDigits;
  c.status = within(r, tol) ? "pass" : "fail";
  return c;
}

Certificate scaled_zero_certificate(std::string id, const BigFloat& value, const BigFloat& scale, Tolerance tol,
                                    long precision_bits, int trunc_order, std::vector<std::string> provenance) {
  Certificate c = base(std::move(id), precision_bits, trunc_order, std::move(provenance));
  const bool rel = tol.relative && !scale.is_zero();
  const BigFloat r = rel ? abs(value) / abs(scale) : value;
  c.lhs = value.to_string(kValueDigits);
  c.rhs = "0";
  c.residual = r.to_string(kResidualDigits);
  c.relative = rel;
  c.tolerance = format_tolerance(tol);
  c.digits = kValueDigits;
  c.status = within(r, tol) ? "pass" : "fail";
  if (rel) c.note = "residual relative to " + abs(scale).to_string(kResidualDigits);
  return c;
}

Certificate exact_certificate(std::string id, std::string lhs, std::string rhs, bool equal, int trunc_order,
                              std::vector<std::string> provenance) {
  Certificate c = base(std::move(id), 0, trunc_order, std::move(provenance));
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.residual = equal ? "0" : "nonzero";
  c.relative = false;
  c.tolerance = "0";
  c.status = equal ? "pass" : "fail";
  return c;
}

Certificate error_certificate(std::string id, const std::string& what, long precision_bits, int trunc_order,
                              std::vector<std::string> provenance) {
  Certificate c = base(std::move(id), precision_bits, trunc_order, std::move(provenance));
  c.lhs = "";
  c.rhs = "";
  c.residual = "nan";
  c.tolerance = "";
  c.status = "fail";
  c.note = "error: " + what;
  return c;
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["identity_id"] = c.identity_id;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["residual"] = c.residual;
  j["relative"] = c.relative;
  j["tolerance"] = c.tolerance;
  j["digits"] = c.digits;
  j["precision_bits"] = c.precision_bits;
  j["trunc_order"] = c.trunc_order;
  j["wall_ms"] = c.wall_ms;
  j["status"] = c.status;
  j["provenance"] = c.provenance;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.identity_id = j.at("identity_id").get<std::string>();
  c.lhs = j.at("lhs").get<std::string>();
  c.rhs = j.at("rhs").get<std::string>();
  c.residual = j.at("residual").get<std::string>();
  c.relative = j.at("relative").get<bool>();
  c.tolerance = j.at("tolerance").get<std::string>();
  c.digits = j.at("digits").get<long>();
  c.precision_bits = j.at("precision_bits").get<long>();
  c.trunc_order = j.at("trunc_order").get<int>();
  c.wall_ms = j.at("wall_ms").get<long>();
  c.status = j.at("status").get<std::string>();
  c.provenance = j.at("provenance").get<std::vector<std::string>>();
  c.note = j.value("note", std::string());
  return c;
}

}  // namespace bmlab::cli
