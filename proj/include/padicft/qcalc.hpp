#pragma once

#include <functional>
#include <vector>

#include "padicft/cyclotomic.hpp"
#include "padicft/laurent_poly.hpp"

namespace padicft {

/// C(n, 2) for signed n, i.e. n(n-1)/2.
inline long choose2(long n) { return n * (n - 1) / 2; }

// Triangular table of Gaussian binomials [n k]_q, 0 <= k <= n <= max_n, built
// once by the q-Pascal recurrence. Read-only afterwards, so it may be shared
// between threads.
class QBinomTable {
 public:
  explicit QBinomTable(long max_n);

  long max_n() const { return max_n_; }
  /// Zero outside 0 <= k <= n. Throws std::out_of_range for n > max_n.
  const LaurentPoly& operator()(long n, long k) const;

 private:
  long max_n_;
  std::vector<std::vector<LaurentPoly>> rows_;
  LaurentPoly zero_;
};

/// [n k]_q, zero when k is outside [0, n].
LaurentPoly q_binomial(long n, long k);

/// (x; q)_n = prod_{k<n} (1 - x q^k); the empty product is 1.
LaurentPoly pochhammer(long n, const LaurentPoly& x);

/// Coefficients in X of prod_{k<n} (1 - scale * q^k * X), a polynomial in X over
/// Z[q, q^-1]. scale = 1 gives (X; q)_n, scale = q gives (Xq; q)_n.
std::vector<LaurentPoly> pochhammer_in_x(long n, const LaurentPoly& scale);

/// (-1)^k q^(k(k+1)/2) [n k]_q for k = 0..n, the X-coefficients of (Xq; q)_n.
std::vector<LaurentPoly> q_binomial_theorem_coeffs(long n);

/// Lacunary alternating sum of [n, k p^r]_q with the q-power twist
/// q^(C(kp^r+1, 2) - n k p^r); requires 0 <= n < p^(2r).
LaurentPoly omega_poly(long p, int r, long n);
LaurentPoly omega_poly(long p, int r, long n, const QBinomTable& table);

struct OmegaEvaluations {
  CycNumber from_polynomial;     // omega_poly(q) reduced at zeta
  CycNumber from_roots_average;  // p^-r sum_k prod_{l<n} (1 - zeta^(k p^r - l))
  bool agree() const { return from_polynomial == from_roots_average; }
};

/// Both evaluations of the lacunary sum at zeta; ctx must have order p^(2r).
OmegaEvaluations omega_roots_check(const ContextPtr& ctx, long n);
OmegaEvaluations omega_roots_check(const ContextPtr& ctx, long n, const QBinomTable& table);

/// Root-of-unity average alone, for all n < p^(2r) at once.
std::vector<CycNumber> omega_roots_average_all(const ContextPtr& ctx);

struct DivisibilityReport {
  long p = 0;
  int r = 0;
  long n = 0;
  LaurentPoly divisor;   // prod_{j=r}^{2r-1} Phi_{p^j}^floor(n/p^j)
  LaurentPoly dividend;  // omega_poly(p, r, n)
  bool divides = false;
  LaurentPoly quotient;  // meaningful only when divides
};

/// Divisibility of the lacunary sum by its prime-power cyclotomic factors.
DivisibilityReport check_cyclotomic_divisibility(long p, int r, long n);
DivisibilityReport check_cyclotomic_divisibility(long p, int r, long n, const QBinomTable& table);

// ---- Gaussian binomials evaluated at zeta --------------------------------

/// Calls row_fn(n, row) for n = 0..max_n where row[k] = [n k]_zeta, k <= n.
/// Only two rows are alive at a time, which keeps large levels within memory.
void for_each_zeta_binomial_row(const ContextPtr& ctx, long max_n,
                                const std::function<void(long, const std::vector<CycNumber>&)>& row_fn);

class ZetaBinomialTable {
 public:
  ZetaBinomialTable(ContextPtr ctx, long max_n);

  const ContextPtr& context() const { return ctx_; }
  long max_n() const { return max_n_; }
  /// Zero outside 0 <= k <= n.
  const CycNumber& operator()(long n, long k) const;

 private:
  ContextPtr ctx_;
  long max_n_;
  std::vector<std::vector<CycNumber>> rows_;
  CycNumber zero_;
};

/// (zeta; zeta)_n for n = 0..max_n.
std::vector<CycNumber> zeta_pochhammers(const ContextPtr& ctx, long max_n);

}  // namespace padicft
