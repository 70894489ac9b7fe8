#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "padicft/cyclotomic.hpp"

namespace padicft {

// Level-r Schwartz function on Q_p: supported on p^-r Z_p and constant modulo
// p^r Z_p. coeffs[i] is the value on the coset i/p^r + p^r Z_p, i < p^(2r).
// Values live in Q(zeta) with zeta = psi(1/p^(2r)), so the context has m = 2r.
class SchwartzVec {
 public:
  SchwartzVec(ContextPtr ctx, std::vector<CycNumber> coeffs);

  static SchwartzVec zero(const ContextPtr& ctx);
  /// Indicator of the coset i/p^r + p^r Z_p.
  static SchwartzVec basis(const ContextPtr& ctx, long i);

  const ContextPtr& context() const { return ctx_; }
  int level() const { return ctx_->m() / 2; }
  long size() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<CycNumber>& coeffs() const { return coeffs_; }
  const CycNumber& operator[](long i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  SchwartzVec& operator+=(const SchwartzVec& rhs);
  SchwartzVec& operator-=(const SchwartzVec& rhs);
  friend SchwartzVec operator+(SchwartzVec a, const SchwartzVec& b) { return a += b; }
  friend SchwartzVec operator-(SchwartzVec a, const SchwartzVec& b) { return a -= b; }
  friend SchwartzVec operator*(const CycNumber& c, const SchwartzVec& a);
  friend bool operator==(const SchwartzVec& a, const SchwartzVec& b);

 private:
  ContextPtr ctx_;
  std::vector<CycNumber> coeffs_;
};

/// Sup-norm as an exponent: ||phi|| = p^-sup_norm_exponent(phi).
PValuation sup_norm_exponent(const SchwartzVec& phi);

/// The indicator function of Z_p at level r (ctx of order p^(2r)).
SchwartzVec indicator_of_integers(const ContextPtr& ctx);

/// p^-r Z phi with Z = (zeta^(ij)).
SchwartzVec fourier(const SchwartzVec& phi);

/// x -> phi(-x), i.e. index i -> (d - i) mod d.
SchwartzVec reflect(const SchwartzVec& phi);

struct SupportMesh {
  int support;  // least n with phi = 0 outside p^-n Z_p
  int mesh;     // least n with phi invariant under p^n Z_p
  friend bool operator==(const SupportMesh&, const SupportMesh&) = default;
};

/// Both lie in [-r, r]. Throws std::invalid_argument for the zero function.
SupportMesh support_mesh(const SchwartzVec& phi);

// Heisenberg element (t; b, b'). Acting on level r requires t in p^-2r Z,
// b and b' in p^-r Z; values are taken modulo what the level can see.
struct HeisenbergElement {
  Rational t;
  Rational b;
  Rational b_prime;
};

/// ((t; b, b') phi)(x) = psi(t) psi(b x) phi(x + b'), psi(a/p^(2r)) = zeta^a.
/// Throws std::invalid_argument for parameters off the level-r grid.
SchwartzVec heisenberg_act(const HeisenbergElement& g, const SchwartzVec& phi);

/// (t; b, b') -> (t - b b'; -b', b), the element F conjugates g into.
HeisenbergElement fourier_conjugate(const HeisenbergElement& g);

// ---- witnesses ----------------------------------------------------------------

struct WitnessChecks {
  PValuation dist_to_phi0_exponent;  // v of phi - 1_{Z_p}
  PValuation fourier_norm_exponent;  // v of F(phi)
  friend bool operator==(const WitnessChecks&, const WitnessChecks&) = default;
};

struct WitnessRecord {
  long p = 0;
  int r = 0;
  Rational e;
  std::vector<CycNumber> y;
  SchwartzVec phi;
  WitnessChecks checks;
  PValuation lower_factor_exponent;  // v of L(y + J); at least e - r
  bool routes_agree = false;         // p^-r R Z (y+J) == U^-1 p^r L (y+J)
};

struct NotAttainable {
  long n = 0;           // first index where the inequality fails
  Rational deficit;     // e minus the largest exponent admissible at n
};

/// Builds phi with ||phi - 1_{Z_p}|| <= p^-e and ||F(phi)|| <= p^-e by the
/// inductive cancellation scheme, or reports the first index where no such
/// choice exists. ctx must have order p^(2r); e >= 0.
std::variant<WitnessRecord, NotAttainable> build_witness(const ContextPtr& ctx, const Rational& e);

struct WitnessVerification {
  WitnessChecks recomputed;
  bool matches_record = false;  // recomputed == stored checks
  bool bounds_hold = false;     // both exponents >= e
  bool passed() const { return matches_record && bounds_hold; }
};

/// Recomputes both sup-norm exponents of a witness from phi alone.
WitnessVerification verify_witness(const WitnessRecord& w);

}  // namespace padicft
