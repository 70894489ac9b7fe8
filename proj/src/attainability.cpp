#include "padicft/attainability.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicft/qcalc.hpp"

namespace padicft {

namespace {

Rational rat_max0(const Rational& x) { return x > 0 ? x : Rational(0); }

long floor_log(long p, long n) {
  long k = 0;
  for (long pk = p; pk <= n; pk *= p) ++k;
  return k;
}

}  // namespace

long beta_p(long p, long n) {
  if (n < 0) throw std::invalid_argument("beta_p: negative n");
  long weighted = 0;  // sum_{i>=1} i a_i p^(i-1)
  long place = 1;
  long rest = n / p;
  for (long i = 1; rest > 0; ++i, rest /= p, place *= p) weighted += i * (rest % p) * place;
  return n + (p - 1) * weighted;
}

PValuation pochhammer_valuation(const ContextPtr& ctx, long n) {
  if (n < 0 || n >= ctx->order()) throw std::invalid_argument("pochhammer_valuation: need 0 <= n < order");
  Rational v(beta_p(ctx->p(), n), ctx->degree());
  v.canonicalize();
  return PValuation(v);
}

int level_of(const ContextPtr& ctx) {
  if (ctx->m() % 2 != 0) throw std::invalid_argument("context order must be p^(2r)");
  return ctx->m() / 2;
}

LevelData LevelData::compute(const ContextPtr& ctx) {
  LevelData data;
  data.ctx = ctx;
  data.r = level_of(ctx);
  data.d = ctx->order();
  data.block = ipow(ctx->p(), data.r);
  const long d = data.d;
  const long block = data.block;
  data.omega.assign(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  std::vector<CycNumber> dual_sums(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  for_each_zeta_binomial_row(ctx, d - 1, [&](long n, const std::vector<CycNumber>& row) {
    CycNumber& omega = data.omega[static_cast<std::size_t>(n)];
    for (long kb = 0; kb <= n; kb += block) {
      omega.add_zeta_multiple(row[static_cast<std::size_t>(kb)], choose2(kb + 1) - n * kb, kb % 2 == 0 ? 1 : -1);
    }
    if (n % block == 0) {
      for (long j = 0; j <= n; ++j) dual_sums[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    }
  });
  data.omega_dual.reserve(static_cast<std::size_t>(d));
  for (long n = 0; n < d; ++n) {
    data.omega_dual.push_back(dual_sums[static_cast<std::size_t>(n)].times_zeta_power(choose2(n + 1)));
  }
  data.pochhammer = zeta_pochhammers(ctx, d - 1);
  return data;
}

CycNumber omega_at_zeta(const ContextPtr& ctx, long n) {
  const int r = level_of(ctx);
  const long block = ipow(ctx->p(), r);
  if (n < 0 || n >= ctx->order()) throw std::invalid_argument("omega_at_zeta: need 0 <= n < p^(2r)");
  CycNumber out = CycNumber::zero(ctx);
  for_each_zeta_binomial_row(ctx, n, [&](long row_n, const std::vector<CycNumber>& row) {
    if (row_n != n) return;
    for (long kb = 0; kb <= n; kb += block) {
      out.add_zeta_multiple(row[static_cast<std::size_t>(kb)], choose2(kb + 1) - n * kb, kb % 2 == 0 ? 1 : -1);
    }
  });
  return out;
}

CycNumber omega_dual(const ContextPtr& ctx, long n) {
  const int r = level_of(ctx);
  const long block = ipow(ctx->p(), r);
  if (n < 0 || n >= ctx->order()) throw std::invalid_argument("omega_dual: need 0 <= n < p^(2r)");
  CycNumber sum = CycNumber::zero(ctx);
  for_each_zeta_binomial_row(ctx, (block - 1) * block, [&](long row_n, const std::vector<CycNumber>& row) {
    if (row_n % block == 0 && n <= row_n) sum += row[static_cast<std::size_t>(n)];
  });
  return sum.times_zeta_power(choose2(n + 1));
}

PValuation min_eps_exponent(const LevelData& data, long n) {
  const PValuation v_omega = cyc_valuation(data.omega.at(static_cast<std::size_t>(n)));
  const PValuation v_poch = pochhammer_valuation(data.ctx, n);
  return v_omega + PValuation(rat_max0(Rational(data.r) - v_poch.value()));
}

PValuation min_eps_exponent(const ContextPtr& ctx, long n) {
  const int r = level_of(ctx);
  const PValuation v_omega = cyc_valuation(omega_at_zeta(ctx, n));
  const PValuation v_poch = pochhammer_valuation(ctx, n);
  return v_omega + PValuation(rat_max0(Rational(r) - v_poch.value()));
}

std::pair<long, long> critical_interval(long d, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie strictly between 0 and 1");
  const Rational lo = (1 - delta) * (d - 1) / 2;
  const Rational hi = (1 + delta) * (d - 1) / 2;
  return {ceil_of(lo).get_si(), floor_of(hi).get_si()};
}

AttainabilityReport gamma_r(const LevelData& data, const Rational& delta) {
  const auto& ctx = data.ctx;
  AttainabilityReport report;
  report.p = ctx->p();
  report.r = data.r;
  report.d = data.d;
  report.delta = delta;
  report.critical = critical_interval(data.d, delta);
  report.gamma_exponent = PValuation::infinity();
  const CycNumber block = CycNumber::integer(ctx, data.block);
  const auto averages = omega_roots_average_all(ctx);
  for (long n = 0; n < data.d; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    IndexRecord rec;
    rec.n = n;
    rec.beta = beta_p(ctx->p(), n);
    rec.v_poch = pochhammer_valuation(ctx, n);
    rec.v_omega = cyc_valuation(data.omega[idx]);
    rec.v_omega_dual = cyc_valuation(data.omega_dual[idx]);
    rec.min_eps_exponent = min_eps_exponent(data, n);
    if (rec.min_eps_exponent < report.gamma_exponent) {
      report.gamma_exponent = rec.min_eps_exponent;
      report.argmin_n = n;
    }
    if (rec.v_omega.is_finite() &&
        !(rec.v_omega_dual == rec.v_omega + PValuation(Rational(data.r - rec.v_poch.value())))) {
      report.dual_valuation_failures.push_back(n);
    }
    const CycNumber lhs = data.pochhammer[idx] * data.omega_dual[idx];
    const CycNumber rhs = (block * data.omega[idx]).times_zeta_power(choose2(n + 1));
    if (!(lhs == rhs)) report.dual_relation_failures.push_back(n);
    if (!(averages[idx] == data.omega[idx])) report.average_failures.push_back(n);
    report.per_n.push_back(std::move(rec));
  }
  return report;
}

AttainabilityReport gamma_r(const ContextPtr& ctx, const Rational& delta) {
  return gamma_r(LevelData::compute(ctx), delta);
}

BetaBoundsReport check_beta_bounds(long p, int r) {
  BetaBoundsReport report;
  report.p = p;
  report.r = r;
  const long d = ipow(p, 2 * r);
  bool first = true;
  for (long n = 1; n < d; ++n) {
    const Rational base = Rational(p - 1, p) * n * floor_log(p, n);
    const Rational beta = beta_p(p, n);
    const Rational lower_slack = beta - (base + 1);
    const Rational upper_slack = (base + n) - beta;
    if (first || lower_slack < report.worst_lower_slack) report.worst_lower_slack = lower_slack;
    if (first || upper_slack < report.worst_upper_slack) report.worst_upper_slack = upper_slack;
    first = false;
    if (lower_slack < 0 || upper_slack < 0) report.failures.push_back(n);
  }
  return report;
}

bool OmegaBoundReport::passed() const {
  return phi_failures.empty() &&
         std::all_of(per_n.begin(), per_n.end(), [](const OmegaBoundRecord& rec) { return rec.holds; });
}

OmegaBoundReport check_omega_lower_bound(const LevelData& data) {
  const auto& ctx = data.ctx;
  const long p = ctx->p();
  const int r = data.r;
  OmegaBoundReport report;
  for (long n = 0; n < data.d; ++n) {
    OmegaBoundRecord rec;
    rec.n = n;
    rec.v_omega = cyc_valuation(data.omega[static_cast<std::size_t>(n)]);
    rec.divisor_bound = 0;
    for (int j = r; j <= 2 * r - 1; ++j) rec.divisor_bound += make_rational(n / ipow(p, j), ipow(p, 2 * r - j));
    rec.linear_bound = make_rational(r * n, data.d) - Rational(1, p - 1);
    rec.holds = rec.v_omega >= PValuation(rec.divisor_bound) && rec.divisor_bound >= rec.linear_bound;
    report.per_n.push_back(std::move(rec));
  }
  for (int j = r; j <= 2 * r - 1; ++j) {
    const PValuation v = cyc_valuation(cyc_reduce(ctx, phi_prime_power(p, j)));
    if (!(v == PValuation(Rational(1, ipow(p, 2 * r - j))))) report.phi_failures.push_back(j);
  }
  return report;
}

OmegaBoundReport check_omega_lower_bound(const ContextPtr& ctx) {
  return check_omega_lower_bound(LevelData::compute(ctx));
}

bool RangeReport::all_side_conditions() const {
  return std::all_of(records.begin(), records.end(), [](const RangeRecord& rec) { return rec.side_condition; });
}

bool RangeReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const RangeRecord& rec) { return rec.implication_holds(); });
}

RangeReport check_outside_critical_interval(const LevelData& data, const Rational& delta, const Rational& e) {
  if (e < 0) throw std::invalid_argument("epsilon exponent must be nonnegative");
  RangeReport report;
  report.p = data.ctx->p();
  report.r = data.r;
  report.delta = delta;
  report.e = e;
  report.critical = critical_interval(data.d, delta);
  const Rational r = data.r;
  for (long n = 0; n < data.d; ++n) {
    const bool low = n < report.critical.first;
    const bool high = n > report.critical.second;
    if (!low && !high) continue;
    RangeRecord rec;
    rec.n = n;
    rec.low_side = low;
    rec.v_poch = pochhammer_valuation(data.ctx, n);
    const Rational& vn = rec.v_poch.value();
    if (low) {
      rec.side_condition = vn <= r - e;
      rec.criterion = min_eps_exponent(data, n) >= PValuation(e);
    } else {
      rec.side_condition = vn >= r + e;
      const PValuation v_dual = cyc_valuation(data.omega_dual[static_cast<std::size_t>(n)]);
      rec.criterion = v_dual + PValuation(rat_max0(vn - r)) >= PValuation(e);
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

RangeReport check_outside_critical_interval(const ContextPtr& ctx, const Rational& delta, const Rational& e) {
  return check_outside_critical_interval(LevelData::compute(ctx), delta, e);
}

GeneratingFunctionReport check_generating_function(const LevelData& data) {
  const auto& ctx = data.ctx;
  GeneratingFunctionReport report;
  const long d = data.d;
  const long block = data.block;
  for (long n = 0; n < d; ++n) {
    const CycNumber& w = data.omega_dual[static_cast<std::size_t>(n)];
    report.lhs.push_back(n % 2 == 0 ? w : -w);
  }
  report.rhs.assign(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  std::vector<CycNumber> prod{CycNumber::one(ctx)};
  report.rhs[0] += prod[0];
  for (long l = 1; l <= (block - 1) * block; ++l) {
    prod.push_back(CycNumber::zero(ctx));
    for (std::size_t j = prod.size() - 1; j >= 1; --j) prod[j].add_zeta_multiple(prod[j - 1], l, -1);
    if (l % block == 0) {
      for (std::size_t j = 0; j < prod.size(); ++j) report.rhs[j] += prod[j];
    }
  }
  for (long n = 0; n < d; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    if (!(report.lhs[idx] == report.rhs[idx])) report.mismatches.push_back(n);
  }
  return report;
}

GeneratingFunctionReport check_generating_function(const ContextPtr& ctx) {
  return check_generating_function(LevelData::compute(ctx));
}

}  // namespace padicft
