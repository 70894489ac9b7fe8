#include "padicft/integer.hpp"

#include <limits>
#include <stdexcept>

namespace padicft {

long p_adic_order(const Integer& x, long p) {
  if (x == 0) {
    throw std::domain_error("p_adic_order: zero has infinite order");
  }
  mpz_class rest;
  mpz_class prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

long p_adic_order(const Rational& x, long p) {
  return p_adic_order(Integer(x.get_num()), p) - p_adic_order(Integer(x.get_den()), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

long ipow(long p, int k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  long out = 1;
  for (int i = 0; i < k; ++i) {
    if (out > (std::numeric_limits<long>::max() >> 1) / p) {
      throw std::overflow_error("ipow: result does not fit in a machine integer");
    }
    out *= p;
  }
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty fraction");
  auto valid_int = [](const std::string& part) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw std::invalid_argument("malformed fraction: " + s);
  }
  Integer n(strip_plus(num));
  Integer d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational out(n, d);
  out.canonicalize();
  return out;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace padicft
