#include "padicft/json_io.hpp"

#include <stdexcept>

namespace padicft {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json to_json(const CycNumber& a) {
  json num = json::array();
  for (const auto& c : a.num()) num.push_back(integer_to_json(c));
  return {{"num", num}, {"den", integer_to_json(a.den())}};
}

CycNumber cyc_from_json(const ContextPtr& ctx, const json& j) {
  std::vector<Integer> num;
  for (const auto& c : j.at("num")) num.push_back(integer_from_json(c));
  if (static_cast<long>(num.size()) != ctx->degree()) {
    throw std::invalid_argument("cyclotomic number has the wrong number of coefficients");
  }
  return CycNumber(ctx, std::move(num), integer_from_json(j.at("den")));
}

PValuation valuation_from_string(const std::string& s) {
  if (s == "inf") return PValuation::infinity();
  return PValuation(parse_fraction(s));
}

json to_json(const WitnessRecord& w) {
  json y = json::array();
  for (const auto& c : w.y) y.push_back(to_json(c));
  json phi = json::array();
  for (const auto& c : w.phi.coeffs()) phi.push_back(to_json(c));
  return {{"p", w.p},
          {"r", w.r},
          {"e", to_fraction_string(w.e)},
          {"y", y},
          {"phi", phi},
          {"checks",
           {{"dist_to_phi0_exponent", w.checks.dist_to_phi0_exponent.to_string()},
            {"fourier_norm_exponent", w.checks.fourier_norm_exponent.to_string()}}},
          {"lower_factor_exponent", w.lower_factor_exponent.to_string()},
          {"routes_agree", w.routes_agree}};
}

WitnessRecord witness_from_json(const json& j) {
  const long p = j.at("p").get<long>();
  const int r = j.at("r").get<int>();
  const auto ctx = CyclotomicContext::make(p, 2 * r);
  std::vector<CycNumber> y;
  for (const auto& c : j.at("y")) y.push_back(cyc_from_json(ctx, c));
  std::vector<CycNumber> phi;
  for (const auto& c : j.at("phi")) phi.push_back(cyc_from_json(ctx, c));
  const auto& checks = j.at("checks");
  WitnessRecord w{p,
                  r,
                  parse_fraction(j.at("e").get<std::string>()),
                  std::move(y),
                  SchwartzVec(ctx, std::move(phi)),
                  WitnessChecks{valuation_from_string(checks.at("dist_to_phi0_exponent").get<std::string>()),
                                valuation_from_string(checks.at("fourier_norm_exponent").get<std::string>())},
                  valuation_from_string(j.value("lower_factor_exponent", std::string("inf"))),
                  j.value("routes_agree", false)};
  return w;
}

json to_json(const WitnessVerification& v) {
  return {{"dist_to_phi0_exponent", v.recomputed.dist_to_phi0_exponent.to_string()},
          {"fourier_norm_exponent", v.recomputed.fourier_norm_exponent.to_string()},
          {"matches_record", v.matches_record},
          {"bounds_hold", v.bounds_hold},
          {"passed", v.passed()}};
}

json to_json(const AttainabilityReport& report) {
  json per_n = json::array();
  for (const auto& rec : report.per_n) {
    per_n.push_back({{"n", rec.n},
                     {"beta", rec.beta},
                     {"v_poch", rec.v_poch.to_string()},
                     {"v_omega", rec.v_omega.to_string()},
                     {"v_omega_dual", rec.v_omega_dual.to_string()},
                     {"min_eps_exponent", rec.min_eps_exponent.to_string()}});
  }
  return {{"p", report.p},
          {"r", report.r},
          {"d", report.d},
          {"per_n", per_n},
          {"gamma_exponent", report.gamma_exponent.to_string()},
          {"argmin_n", report.argmin_n},
          {"delta", to_fraction_string(report.delta)},
          {"critical_interval", {report.critical.first, report.critical.second}},
          {"dual_valuation_failures", report.dual_valuation_failures},
          {"dual_relation_failures", report.dual_relation_failures},
          {"average_failures", report.average_failures},
          {"consistent", report.consistent()}};
}

}  // namespace padicft
