#include "padicft/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padicft {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree_of(const RatPoly& a) { return static_cast<long>(a.size()) - 1; }

// a = q*b + r, returns r and writes q when requested.
RatPoly poly_rem(RatPoly a, const RatPoly& b, RatPoly* quot = nullptr) {
  const long db = degree_of(b);
  if (quot) quot->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  trim(a);
  while (degree_of(a) >= db) {
    const long shift = degree_of(a) - db;
    Rational factor = a.back() / b.back();
    if (quot) (*quot)[static_cast<std::size_t>(shift)] = factor;
    for (long j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(shift + j)] -= factor * b[static_cast<std::size_t>(j)];
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly to_rat_poly(const std::vector<Integer>& c) {
  RatPoly out(c.begin(), c.end());
  trim(out);
  return out;
}

Rational rpow(const Rational& base, long k) {
  Rational out = 1;
  for (long i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

// ---- CyclotomicContext ------------------------------------------------------

CyclotomicContext::CyclotomicContext(long p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic context: p must be prime");
  if (m < 0) throw std::invalid_argument("cyclotomic context: m must be nonnegative");
  order_ = ipow(p, m);
  if (m == 0) {
    degree_ = 1;
    stride_ = 0;
    phi_ = {Integer(-1), Integer(1)};
    return;
  }
  stride_ = ipow(p, m - 1);
  degree_ = (p - 1) * stride_;
  phi_.assign(static_cast<std::size_t>(degree_ + 1), Integer(0));
  for (long i = 0; i < p; ++i) phi_[static_cast<std::size_t>(i * stride_)] = 1;
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::make(long p, int m) {
  return std::shared_ptr<const CyclotomicContext>(new CyclotomicContext(p, m));
}

long CyclotomicContext::normalize_exponent(long k) const {
  k %= order_;
  return k < 0 ? k + order_ : k;
}

void CyclotomicContext::add_monomial(std::vector<Integer>& acc, long k, const Integer& c) const {
  const long t = normalize_exponent(k);
  if (t < degree_) {
    acc[static_cast<std::size_t>(t)] += c;
    return;
  }
  // zeta^e = -(1 + zeta^s + ... + zeta^((p-2)s))
  for (long i = 0; i + 1 < p_; ++i) acc[static_cast<std::size_t>(t - degree_ + i * stride_)] -= c;
}

void CyclotomicContext::sub_monomial(std::vector<Integer>& acc, long k, const Integer& c) const {
  const long t = normalize_exponent(k);
  if (t < degree_) {
    acc[static_cast<std::size_t>(t)] -= c;
    return;
  }
  for (long i = 0; i + 1 < p_; ++i) acc[static_cast<std::size_t>(t - degree_ + i * stride_)] += c;
}

std::vector<Integer> CyclotomicContext::reduce(std::vector<Integer> coeffs) const {
  if (static_cast<long>(coeffs.size()) <= degree_) {
    coeffs.resize(static_cast<std::size_t>(degree_), Integer(0));
    return coeffs;
  }
  std::vector<Integer> out(static_cast<std::size_t>(degree_), Integer(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) add_monomial(out, static_cast<long>(i), coeffs[i]);
  }
  return out;
}

// ---- CycNumber --------------------------------------------------------------

CycNumber::CycNumber(ContextPtr ctx, std::vector<Integer> num, Integer den)
    : ctx_(std::move(ctx)), den_(std::move(den)) {
  if (!ctx_) throw std::invalid_argument("CycNumber: null context");
  if (den_ == 0) throw std::invalid_argument("CycNumber: zero denominator");
  num_ = ctx_->reduce(std::move(num));
  canonicalize();
}

CycNumber CycNumber::zero(const ContextPtr& ctx) { return CycNumber(ctx, {}); }

CycNumber CycNumber::one(const ContextPtr& ctx) { return CycNumber(ctx, {Integer(1)}); }

CycNumber CycNumber::integer(const ContextPtr& ctx, const Integer& c) { return CycNumber(ctx, {c}); }

CycNumber CycNumber::rational(const ContextPtr& ctx, const Rational& c) {
  return CycNumber(ctx, {Integer(c.get_num())}, Integer(c.get_den()));
}

CycNumber CycNumber::zeta_power(const ContextPtr& ctx, long k, int sign) {
  std::vector<Integer> acc(static_cast<std::size_t>(ctx->degree()), Integer(0));
  ctx->add_monomial(acc, k, Integer(sign));
  return CycNumber(ctx, std::move(acc));
}

bool CycNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

void CycNumber::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  if (is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 1) return;
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycNumber::require_same_context(const CycNumber& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw std::invalid_argument("CycNumber: operands live in different cyclotomic contexts");
  }
}

CycNumber CycNumber::times_zeta_power(long k) const {
  std::vector<Integer> acc(num_.size(), Integer(0));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) ctx_->add_monomial(acc, static_cast<long>(i) + k, num_[i]);
  }
  CycNumber out = *this;
  out.num_ = std::move(acc);
  return out;
}

CycNumber& CycNumber::add_zeta_multiple(const CycNumber& x, long k, int sign) {
  require_same_context(x);
  if (den_ == x.den_) {
    for (std::size_t i = 0; i < x.num_.size(); ++i) {
      if (x.num_[i] == 0) continue;
      if (sign > 0) {
        ctx_->add_monomial(num_, static_cast<long>(i) + k, x.num_[i]);
      } else {
        ctx_->sub_monomial(num_, static_cast<long>(i) + k, x.num_[i]);
      }
    }
    canonicalize();
    return *this;
  }
  CycNumber term = x.times_zeta_power(k);
  return sign > 0 ? (*this += term) : (*this -= term);
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  require_same_context(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber operator-(const CycNumber& a) {
  CycNumber out = a;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  require_same_context(rhs);
  const std::size_t e = num_.size();
  std::vector<Integer> prod(2 * e - 1, Integer(0));
  for (std::size_t i = 0; i < e; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (rhs.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  num_ = ctx_->reduce(std::move(prod));
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber: division by zero");
  // Extended Euclid in Q[x] against Phi; Phi is irreducible so the last
  // nonzero remainder is a constant.
  RatPoly r0 = to_rat_poly(ctx_->phi_coeffs());
  RatPoly r1 = to_rat_poly(num_);
  RatPoly s0;
  RatPoly s1 = {Rational(1)};
  while (degree_of(r1) > 0) {
    RatPoly q;
    RatPoly r = poly_rem(r0, r1, &q);
    // s0 - q*s1
    RatPoly next(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) next[i + j] -= q[i] * s1[j];
    }
    trim(next);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(next);
    // keep the remainder monic to contain coefficient growth
    const Rational lead = r1.back();
    for (auto& c : r1) c /= lead;
    for (auto& c : s1) c /= lead;
  }
  const Rational c = r1.front();
  Integer den = 1;
  for (auto& x : s1) {
    x /= c;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> num(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    Rational scaled = s1[i] * den;
    num[i] = scaled.get_num();
  }
  return CycNumber(ctx_, std::move(num), den) * CycNumber::integer(ctx_, den_);
}

CycNumber& CycNumber::operator/=(const CycNumber& rhs) {
  require_same_context(rhs);
  if (rhs.is_zero()) throw std::domain_error("CycNumber: division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return *a.ctx_ == *b.ctx_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  LaurentPoly as_poly(num_, 0);
  if (den_ == 1) {
    os << as_poly;
  } else {
    os << "(" << as_poly << ")/" << den_;
  }
  std::string s = os.str();
  std::replace(s.begin(), s.end(), 'q', 'z');
  return s;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& a) { return os << a.to_string(); }

CycNumber cyc_reduce(const ContextPtr& ctx, const LaurentPoly& a) {
  std::vector<Integer> acc(static_cast<std::size_t>(ctx->degree()), Integer(0));
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) ctx->add_monomial(acc, a.min_deg() + static_cast<long>(i), c[i]);
  }
  return CycNumber(ctx, std::move(acc));
}

// ---- PValuation -------------------------------------------------------------

const Rational& PValuation::value() const {
  if (!finite_) throw std::domain_error("PValuation: value of +infinity");
  return value_;
}

PValuation operator+(const PValuation& a, const PValuation& b) {
  if (!a.finite_ || !b.finite_) return PValuation::infinity();
  return PValuation(Rational(a.value_ + b.value_));
}

PValuation operator-(const PValuation& a, const Rational& b) {
  if (!a.finite_) return a;
  return PValuation(Rational(a.value_ - b));
}

bool operator==(const PValuation& a, const PValuation& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const PValuation& a, const PValuation& b) {
  if (!a.finite_ || !b.finite_) {
    return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
  }
  const int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string PValuation::to_string() const { return finite_ ? to_fraction_string(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, const PValuation& v) { return os << v.to_string(); }

PValuation min(const PValuation& a, const PValuation& b) { return b < a ? b : a; }

PValuation cyc_valuation(const CycNumber& a) {
  if (a.is_zero()) return PValuation::infinity();
  const auto& ctx = *a.context();
  const long p = ctx.p();
  const long e = ctx.degree();
  const auto& num = a.num();
  // Horner: b(t) = num(1 + t)
  std::vector<Integer> b(num.size(), Integer(0));
  long deg = -1;
  for (long i = static_cast<long>(num.size()) - 1; i >= 0; --i) {
    if (deg < 0 && num[static_cast<std::size_t>(i)] == 0) continue;
    for (long j = deg + 1; j >= 1; --j) {
      b[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(j - 1)];
    }
    ++deg;
    b[0] += num[static_cast<std::size_t>(i)];
  }
  long best = -1;
  bool found = false;
  for (long i = 0; i <= deg; ++i) {
    const Integer& c = b[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const long scaled = p_adic_order(c, p) * e + i;
    if (!found || scaled < best) {
      best = scaled;
      found = true;
    }
  }
  Rational v(best, e);
  v.canonicalize();
  v -= p_adic_order(a.den(), p);
  return PValuation(v);
}

Rational cyc_norm(const CycNumber& a) {
  if (a.is_zero()) return 0;
  const long e = a.context()->degree();
  // Res(Phi, g) with Phi monic; Euclid on the pair, tracking the sign and
  // leading-coefficient factors of each remainder step.
  RatPoly f = to_rat_poly(a.context()->phi_coeffs());
  RatPoly g = to_rat_poly(a.num());
  Rational res = 1;
  while (true) {
    const long df = degree_of(f);
    const long dg = degree_of(g);
    if (dg == 0) {
      res *= rpow(g[0], df);
      break;
    }
    // Res(f, g) = (-1)^(df dg) Res(g, f) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    RatPoly r = poly_rem(f, g);
    if (r.empty()) return 0;
    if ((df * dg) % 2 != 0) res = -res;
    res *= rpow(g.back(), df - degree_of(r));
    f = std::move(g);
    g = std::move(r);
  }
  Integer den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(e));
  return res / Rational(den_pow);
}

}  // namespace padicft
