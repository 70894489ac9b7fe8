#pragma once

#include <utility>
#include <vector>

#include "padicft/cyclotomic.hpp"

namespace padicft {

/// beta_p(n) = n + (p-1)/p * sum_i i a_i p^i over the base-p digits a_i of n.
/// v_p((zeta; zeta)_n) = beta_p(n) / e whenever n < order(zeta).
long beta_p(long p, long n);

/// v_p((zeta; zeta)_n) for the context's zeta, n < order.
PValuation pochhammer_valuation(const ContextPtr& ctx, long n);

/// Level r of a context of order p^(2r); throws for odd m.
int level_of(const ContextPtr& ctx);

// Everything the attainability analysis needs at one level, computed in a
// single streaming pass over the rows of Gaussian binomials at zeta.
struct LevelData {
  ContextPtr ctx;
  int r = 0;
  long d = 0;      // p^(2r)
  long block = 0;  // p^r
  std::vector<CycNumber> omega;       // lacunary sums at zeta
  std::vector<CycNumber> omega_dual;  // zeta^C(n+1,2) sum_k [k p^r, n]_zeta
  std::vector<CycNumber> pochhammer;  // (zeta; zeta)_n

  static LevelData compute(const ContextPtr& ctx);
};

CycNumber omega_at_zeta(const ContextPtr& ctx, long n);
CycNumber omega_dual(const ContextPtr& ctx, long n);

/// Largest e such that eps = p^-e satisfies the attainability inequality at
/// index n: v_p(Omega_n) + max(0, r - v_p((zeta;zeta)_n)). +inf when Omega_n = 0.
PValuation min_eps_exponent(const ContextPtr& ctx, long n);
PValuation min_eps_exponent(const LevelData& data, long n);

/// Inward-rounded [ceil((1-delta)(d-1)/2), floor((1+delta)(d-1)/2)].
std::pair<long, long> critical_interval(long d, const Rational& delta);

struct IndexRecord {
  long n = 0;
  long beta = 0;
  PValuation v_poch;
  PValuation v_omega;
  PValuation v_omega_dual;
  PValuation min_eps_exponent;
};

struct AttainabilityReport {
  long p = 0;
  int r = 0;
  long d = 0;
  std::vector<IndexRecord> per_n;
  PValuation gamma_exponent;  // gamma_r = p^-gamma_exponent
  long argmin_n = 0;          // smallest n attaining gamma_exponent
  Rational delta;
  std::pair<long, long> critical;
  // v(omega_dual) == r + v(Omega) - v_poch for every n with Omega != 0
  std::vector<long> dual_valuation_failures;
  // (zeta;zeta)_n * omega_dual == zeta^C(n+1,2) p^r Omega, multiplication only
  std::vector<long> dual_relation_failures;
  // q-binomial route and root-of-unity average give the same Omega
  std::vector<long> average_failures;

  bool consistent() const {
    return dual_valuation_failures.empty() && dual_relation_failures.empty() && average_failures.empty();
  }
};

AttainabilityReport gamma_r(const ContextPtr& ctx, const Rational& delta = Rational(1, 2));
AttainabilityReport gamma_r(const LevelData& data, const Rational& delta = Rational(1, 2));

struct BetaBoundsReport {
  long p = 0;
  int r = 0;
  std::vector<long> failures;
  Rational worst_lower_slack;  // min over n of beta - lower bound
  Rational worst_upper_slack;  // min over n of upper bound - beta
  bool passed() const { return failures.empty(); }
};

/// (p-1)/p n floor(log_p n) + 1 <= beta_p(n) <= (p-1)/p n floor(log_p n) + n
/// for 1 <= n < p^(2r).
BetaBoundsReport check_beta_bounds(long p, int r);

struct OmegaBoundRecord {
  long n = 0;
  PValuation v_omega;
  Rational divisor_bound;  // sum_{j=r}^{2r-1} floor(n/p^j) / p^(2r-j)
  Rational linear_bound;   // r n / p^(2r) - 1/(p-1)
  bool holds = false;
};

struct OmegaBoundReport {
  std::vector<OmegaBoundRecord> per_n;
  std::vector<int> phi_failures;  // j with v(Phi_{p^j}(zeta)) != p^(j-2r)
  bool passed() const;
};

OmegaBoundReport check_omega_lower_bound(const ContextPtr& ctx);
OmegaBoundReport check_omega_lower_bound(const LevelData& data);

struct RangeRecord {
  long n = 0;
  bool low_side = true;         // below the critical interval; otherwise above
  PValuation v_poch;
  bool side_condition = false;  // low: v_n <= r - e; high: v_n >= r + e
  bool criterion = false;       // low: primal inequality; high: dual inequality
  bool implication_holds() const { return !side_condition || criterion; }
};

struct RangeReport {
  long p = 0;
  int r = 0;
  Rational delta;
  Rational e;
  std::pair<long, long> critical;
  std::vector<RangeRecord> records;  // every n outside the critical interval
  bool all_side_conditions() const;
  bool passed() const;  // every side condition implies its criterion
};

/// Evaluates the valuation side conditions that make the attainability
/// inequality automatic away from the middle of [0, d-1], for eps = p^-e.
RangeReport check_outside_critical_interval(const ContextPtr& ctx, const Rational& delta, const Rational& e);
RangeReport check_outside_critical_interval(const LevelData& data, const Rational& delta, const Rational& e);

struct GeneratingFunctionReport {
  std::vector<CycNumber> lhs;  // (-1)^n omega_dual_n, n < d
  std::vector<CycNumber> rhs;  // X^n coefficients of sum_k prod_{l=1}^{k p^r} (1 - zeta^l X)
  std::vector<long> mismatches;
  bool passed() const { return mismatches.empty(); }
};

GeneratingFunctionReport check_generating_function(const ContextPtr& ctx);
GeneratingFunctionReport check_generating_function(const LevelData& data);

}  // namespace padicft
