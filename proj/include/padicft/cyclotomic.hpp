#pragma once

#include <compare>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "padicft/integer.hpp"
#include "padicft/laurent_poly.hpp"

namespace padicft {

// Fixes Z[zeta] for zeta a primitive p^m-th root of unity, presented as
// Z[q]/Phi_{p^m}(q) with basis 1, zeta, ..., zeta^(e-1), e = (p-1)p^(m-1).
// m == 0 is accepted as the degenerate case zeta = 1 (the ring Z, e = 1).
class CyclotomicContext {
 public:
  static std::shared_ptr<const CyclotomicContext> make(long p, int m);

  long p() const { return p_; }
  int m() const { return m_; }
  long degree() const { return degree_; }  // e
  long order() const { return order_; }    // p^m
  const std::vector<Integer>& phi_coeffs() const { return phi_; }

  /// Reduces an arbitrary coefficient vector (index = power of zeta) to the
  /// basis of length degree().
  std::vector<Integer> reduce(std::vector<Integer> coeffs) const;

  /// acc += c * zeta^k, acc of length degree().
  void add_monomial(std::vector<Integer>& acc, long k, const Integer& c) const;
  void sub_monomial(std::vector<Integer>& acc, long k, const Integer& c) const;

  bool operator==(const CyclotomicContext& other) const { return p_ == other.p_ && m_ == other.m_; }

 private:
  CyclotomicContext(long p, int m);

  long normalize_exponent(long k) const;

  long p_;
  int m_;
  long degree_;
  long order_;
  long stride_;  // p^(m-1); the nonzero exponents of Phi are multiples of it
  std::vector<Integer> phi_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

// Element of Q(zeta) as num(zeta) / den. Canonical: den > 0 and the content of
// (num, den) is 1, so equality is coefficient-wise.
class CycNumber {
 public:
  CycNumber(ContextPtr ctx, std::vector<Integer> num, Integer den = 1);

  static CycNumber zero(const ContextPtr& ctx);
  static CycNumber one(const ContextPtr& ctx);
  static CycNumber integer(const ContextPtr& ctx, const Integer& c);
  static CycNumber rational(const ContextPtr& ctx, const Rational& c);
  /// +-zeta^k
  static CycNumber zeta_power(const ContextPtr& ctx, long k, int sign = 1);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Integer>& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }

  CycNumber times_zeta_power(long k) const;
  /// *this += sign * zeta^k * x, the inner step of every q-Pascal style recurrence.
  CycNumber& add_zeta_multiple(const CycNumber& x, long k, int sign = 1);

  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator-(const CycNumber& a);

  friend bool operator==(const CycNumber& a, const CycNumber& b);

  CycNumber inverse() const;
  std::string to_string() const;

 private:
  void canonicalize();
  void require_same_context(const CycNumber& other) const;

  ContextPtr ctx_;
  std::vector<Integer> num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& a);

/// Image of a(q) under q -> zeta.
CycNumber cyc_reduce(const ContextPtr& ctx, const LaurentPoly& a);

// Exact p-adic valuation normalized by v_p(p) = 1, or +infinity.
class PValuation {
 public:
  PValuation() = default;
  explicit PValuation(Rational value) : finite_(true), value_(std::move(value)) { value_.canonicalize(); }
  PValuation(long value) : finite_(true), value_(value) {}

  static PValuation infinity() {
    PValuation v;
    v.finite_ = false;
    return v;
  }

  bool is_finite() const { return finite_; }
  /// Throws std::domain_error for +infinity.
  const Rational& value() const;

  friend PValuation operator+(const PValuation& a, const PValuation& b);
  friend PValuation operator-(const PValuation& a, const Rational& b);
  friend bool operator==(const PValuation& a, const PValuation& b);
  friend std::strong_ordering operator<=>(const PValuation& a, const PValuation& b);

  /// "num/den" or "inf".
  std::string to_string() const;

 private:
  bool finite_ = true;
  Rational value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PValuation& v);

PValuation min(const PValuation& a, const PValuation& b);

/// Valuation through the uniformizer t = zeta - 1: rewrite the numerator as
/// sum b_i t^i (i < e); the terms have pairwise distinct valuations
/// v_p(b_i) + i/e, so their minimum is the valuation.
PValuation cyc_valuation(const CycNumber& a);

/// Field norm from Q(zeta) to Q, as the resultant of Phi_{p^m} and the
/// numerator, divided by den^e.
Rational cyc_norm(const CycNumber& a);

}  // namespace padicft
