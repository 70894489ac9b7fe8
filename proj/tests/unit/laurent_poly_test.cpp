#include <gtest/gtest.h>

#include "generators.hpp"
#include "padicft/laurent_poly.hpp"

using namespace padicft;
using padicft::testing::one;
using padicft::testing::q;

TEST(LaurentPoly, CanonicalFormStripsZeros) {
  LaurentPoly a({0, 0, 3, 0, 0}, -1);
  EXPECT_EQ(a.min_deg(), 1);
  EXPECT_EQ(a.max_deg(), 1);
  EXPECT_EQ(a, LaurentPoly::monomial(3, 1));
  EXPECT_TRUE(LaurentPoly({0, 0}, 7).is_zero());
  EXPECT_EQ(LaurentPoly({0, 0}, 7), LaurentPoly());
}

TEST(LaurentPoly, MultiplicationExamples) {
  EXPECT_EQ((one() + q()) * (one() - q()), one() - q(2));
  EXPECT_EQ((q(-1) + one()) * q(), one() + q());
  EXPECT_TRUE((LaurentPoly() * (q(5) - LaurentPoly::constant(3))).is_zero());
}

TEST(LaurentPoly, CoefficientAccess) {
  LaurentPoly a({1, -2, 5}, -1);
  EXPECT_EQ(a.coeff(-1), 1);
  EXPECT_EQ(a.coeff(0), -2);
  EXPECT_EQ(a.coeff(1), 5);
  EXPECT_EQ(a.coeff(2), 0);
  EXPECT_EQ(a.coeff(-5), 0);
  EXPECT_EQ(a.eval_at_one(), 4);
  EXPECT_EQ(a.shifted(3), LaurentPoly({1, -2, 5}, 2));
}

TEST(LaurentPoly, DivexactExamples) {
  auto a = laurent_divexact(one() + q(-1), one() + q());
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, q(-1));
  EXPECT_EQ(*a * (one() + q()), one() + q(-1));

  auto b = laurent_divexact(one() - q(2), one() - q());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*b, one() + q());

  EXPECT_FALSE(laurent_divexact(one() + q(), one() + q(2)).has_value());
  EXPECT_THROW(laurent_divexact(one(), LaurentPoly()), std::invalid_argument);
}

TEST(LaurentPoly, DivexactFailureAgreesWithExhaustiveSearch) {
  // No Laurent polynomial with small coefficients times (1 + q^2) gives 1 + q.
  const LaurentPoly target = one() + q();
  const LaurentPoly divisor = one() + q(2);
  for (long lo = -3; lo <= 1; ++lo) {
    for (long c0 = -3; c0 <= 3; ++c0) {
      for (long c1 = -3; c1 <= 3; ++c1) {
        for (long c2 = -3; c2 <= 3; ++c2) {
          const LaurentPoly cand({c0, c1, c2}, lo);
          EXPECT_NE(cand * divisor, target) << cand;
        }
      }
    }
  }
}

TEST(LaurentPoly, DivexactRecoversRandomFactors) {
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = padicft::testing::random_laurent();
    LaurentPoly b = padicft::testing::random_laurent();
    if (b.is_zero()) continue;
    auto quotient = laurent_divexact(a * b, b);
    ASSERT_TRUE(quotient.has_value()) << a << " / " << b;
    EXPECT_EQ(*quotient, a);
  }
}

TEST(LaurentPoly, RingAxiomsOnRandomInputs) {
  for (int i = 0; i < 300; ++i) {
    const auto a = padicft::testing::random_laurent();
    const auto b = padicft::testing::random_laurent();
    const auto c = padicft::testing::random_laurent();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
  }
}

TEST(LaurentPoly, PrimePowerCyclotomics) {
  EXPECT_EQ(phi_prime_power(2, 1), one() + q());
  EXPECT_EQ(phi_prime_power(2, 2), one() + q(2));
  EXPECT_EQ(phi_prime_power(3, 2), one() + q(3) + q(6));
  // q^(p^j) - 1 = (q^(p^(j-1)) - 1) Phi_{p^j}
  for (long p : {2L, 3L, 5L}) {
    for (int j = 1; j <= 3; ++j) {
      const long big = ipow(p, j);
      const long small = ipow(p, j - 1);
      EXPECT_EQ((q(small) - one()) * phi_prime_power(p, j), q(big) - one());
    }
  }
}

TEST(LaurentPoly, PowerMatchesRepeatedProduct) {
  const LaurentPoly a({1, -1}, -1);
  LaurentPoly acc = one();
  for (long k = 0; k <= 6; ++k) {
    EXPECT_EQ(pow(a, k), acc);
    acc = acc * a;
  }
}

TEST(LaurentPoly, ToString) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_FALSE((one() - q(-2)).to_string().empty());
}
