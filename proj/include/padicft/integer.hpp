#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace padicft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest k with p^k | x. Undefined for x == 0, so callers must test first.
long p_adic_order(const Integer& x, long p);

/// v_p of a nonzero rational.
long p_adic_order(const Rational& x, long p);

bool is_prime(long n);

/// p^k for k >= 0 as a machine integer; throws std::overflow_error past 2^62.
long ipow(long p, int k);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" with den > 0; integers are written with an explicit "/1".
std::string to_fraction_string(const Rational& x);

/// Accepts "a", "a/b" (b != 0) with optional sign. Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

}  // namespace padicft
