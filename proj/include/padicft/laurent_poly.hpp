#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "padicft/integer.hpp"

namespace padicft {

// Element of Z[q, q^-1], stored densely from the lowest nonzero degree upward.
// Canonical form: both end coefficients are nonzero; the zero polynomial has
// no coefficients and min_deg() == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::vector<Integer> coeffs, long min_deg = 0);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, long degree);

  bool is_zero() const { return coeffs_.empty(); }
  long min_deg() const { return min_deg_; }
  // Only meaningful for nonzero polynomials.
  long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(long degree) const;

  Integer eval_at_one() const;
  LaurentPoly shifted(long k) const;  // times q^k

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Integer& c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
  long min_deg_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

/// Exact quotient c with a == b * c in Z[q, q^-1], or std::nullopt when b does
/// not divide a. Throws std::invalid_argument if b is zero.
std::optional<LaurentPoly> laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Cyclotomic polynomial of order p^j (j >= 1): sum of q^(i p^(j-1)), i < p.
LaurentPoly phi_prime_power(long p, int j);

/// Integer power of a polynomial, a^0 == 1.
LaurentPoly pow(const LaurentPoly& a, long k);

}  // namespace padicft
