#include <gtest/gtest.h>

#include "generators.hpp"
#include "padicft/qcalc.hpp"

using namespace padicft;
using padicft::testing::one;
using padicft::testing::q;

namespace {

// [n k]_q by division of q-factorials.
LaurentPoly binomial_by_division(long n, long k) {
  const LaurentPoly top = pochhammer(n, q());
  const LaurentPoly bottom = pochhammer(k, q()) * pochhammer(n - k, q());
  auto quotient = laurent_divexact(top, bottom);
  EXPECT_TRUE(quotient.has_value());
  return quotient.value_or(LaurentPoly());
}

// prod_{k=1}^n (1 - X q^k) expanded naively over coefficient vectors.
std::vector<LaurentPoly> expand_product(long n) {
  std::vector<LaurentPoly> poly{one()};
  for (long k = 1; k <= n; ++k) {
    std::vector<LaurentPoly> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= poly[j] * q(k);
    }
    poly = std::move(next);
  }
  return poly;
}

Integer classical_binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(2, 1), one() + q());
  EXPECT_EQ(q_binomial(4, 2), LaurentPoly({1, 1, 2, 1, 1}));
  EXPECT_TRUE(q_binomial(3, 5).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  EXPECT_EQ(q_binomial(0, 0), one());
}

TEST(QBinomial, FactorialRatioOracle) {
  for (long n = 0; n <= 18; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k), binomial_by_division(n, k)) << n << " " << k;
  }
}

TEST(QBinomial, PascalSymmetryDegreeAndPositivity) {
  const QBinomTable table(65);
  for (long n = 0; n <= 64; ++n) {
    for (long k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(table(n, k) + table(n, k - 1).shifted(n + 1 - k), table(n + 1, k));
    }
    for (long k = 0; k <= n; ++k) {
      const LaurentPoly& b = table(n, k);
      EXPECT_EQ(b, table(n, n - k));
      EXPECT_EQ(b.min_deg(), 0);
      EXPECT_EQ(b.max_deg(), k * (n - k));
      for (const auto& c : b.coeffs()) EXPECT_GT(c, 0);
      EXPECT_EQ(b.eval_at_one(), classical_binomial(n, k));
    }
  }
  EXPECT_THROW(table(66, 0), std::out_of_range);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(0, q()), one());
  EXPECT_EQ(pochhammer(2, q()), (one() - q()) * (one() - q(2)));
  const auto coeffs = pochhammer_in_x(2, one());
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[0], one());
  EXPECT_EQ(coeffs[1], -(one() + q()));
  EXPECT_EQ(coeffs[2], q());
}

TEST(QBinomialTheorem, Examples) {
  EXPECT_EQ(q_binomial_theorem_coeffs(0), (std::vector<LaurentPoly>{one()}));
  EXPECT_EQ(q_binomial_theorem_coeffs(1), (std::vector<LaurentPoly>{one(), -q()}));
  EXPECT_EQ(q_binomial_theorem_coeffs(2), (std::vector<LaurentPoly>{one(), -(q() + q(2)), q(3)}));
}

TEST(QBinomialTheorem, MatchesDirectExpansion) {
  for (long n = 0; n <= 32; ++n) EXPECT_EQ(q_binomial_theorem_coeffs(n), expand_product(n)) << n;
}

TEST(LacunarySum, Examples) {
  EXPECT_EQ(omega_poly(2, 1, 0), one());
  EXPECT_EQ(omega_poly(2, 1, 1), one());
  EXPECT_EQ(omega_poly(2, 1, 2), one() + q(-1));
  EXPECT_THROW(omega_poly(2, 1, 4), std::invalid_argument);
}

TEST(LacunarySum, DirectSumOracle) {
  // straight from the definition with factorial-ratio binomials
  for (auto [p, r] : {std::pair{2L, 1}, std::pair{2L, 2}, std::pair{3L, 1}}) {
    const long block = ipow(p, r);
    for (long n = 0; n < block * block; ++n) {
      LaurentPoly sum;
      for (long k = 0; k * block <= n; ++k) {
        const long kb = k * block;
        LaurentPoly term = binomial_by_division(n, kb).shifted(kb * (kb + 1) / 2 - n * kb);
        sum += (kb % 2 == 0) ? term : -term;
      }
      EXPECT_EQ(omega_poly(p, r, n), sum) << p << " " << r << " " << n;
    }
  }
}

TEST(LacunarySum, RootAverageExamples) {
  auto ctx = CyclotomicContext::make(2, 2);
  const CycNumber one_c = CycNumber::one(ctx);
  const auto at2 = omega_roots_check(ctx, 2);
  EXPECT_EQ(at2.from_polynomial, one_c - CycNumber::zeta_power(ctx, 1));
  EXPECT_EQ(at2.from_roots_average, at2.from_polynomial);
  const auto at3 = omega_roots_check(ctx, 3);
  EXPECT_TRUE(at3.from_polynomial.is_zero());
  EXPECT_TRUE(at3.from_roots_average.is_zero());
  const auto at0 = omega_roots_check(ctx, 0);
  EXPECT_EQ(at0.from_polynomial, one_c);
  EXPECT_EQ(at0.from_roots_average, one_c);
}

TEST(LacunarySum, RootAverageAgreesEverywhere) {
  for (auto [p, r] : {std::pair{2L, 1}, std::pair{2L, 2}, std::pair{3L, 1}, std::pair{3L, 2}}) {
    auto ctx = CyclotomicContext::make(p, 2 * r);
    const long d = ctx->order();
    const QBinomTable table(d - 1);
    const auto averages = omega_roots_average_all(ctx);
    ASSERT_EQ(static_cast<long>(averages.size()), d);
    for (long n = 0; n < d; ++n) {
      const auto ev = omega_roots_check(ctx, n, table);
      EXPECT_TRUE(ev.agree()) << p << " " << r << " " << n;
      EXPECT_EQ(ev.from_roots_average, averages[static_cast<std::size_t>(n)]);
      EXPECT_TRUE(ev.from_polynomial.is_integral());
    }
  }
}

TEST(CyclotomicDivisibility, Examples) {
  const auto a = check_cyclotomic_divisibility(2, 1, 2);
  EXPECT_TRUE(a.divides);
  EXPECT_EQ(a.divisor, one() + q());
  EXPECT_EQ(a.quotient, q(-1));

  const auto b = check_cyclotomic_divisibility(2, 1, 1);
  EXPECT_TRUE(b.divides);
  EXPECT_EQ(b.divisor, one());

  const auto c = check_cyclotomic_divisibility(3, 1, 8);
  EXPECT_TRUE(c.divides);
  EXPECT_EQ(c.divisor, pow(phi_prime_power(3, 1), 2));
  EXPECT_EQ(c.divisor * c.quotient, c.dividend);
}

TEST(CyclotomicDivisibility, HoldsForAllIndices) {
  for (auto [p, r] : {std::pair{2L, 1}, std::pair{2L, 2}, std::pair{3L, 1}, std::pair{3L, 2}}) {
    const long d = ipow(p, 2 * r);
    const QBinomTable table(d - 1);
    for (long n = 0; n < d; ++n) {
      const auto rep = check_cyclotomic_divisibility(p, r, n, table);
      EXPECT_TRUE(rep.divides) << p << " " << r << " " << n;
      EXPECT_EQ(rep.divisor * rep.quotient, rep.dividend);
      EXPECT_EQ(rep.dividend, omega_poly(p, r, n, table));
    }
  }
}

TEST(ZetaBinomials, MatchSymbolicReduction) {
  for (auto [p, m] : {std::pair{2L, 2}, std::pair{2L, 4}, std::pair{3L, 2}}) {
    auto ctx = CyclotomicContext::make(p, m);
    const long top = ctx->order() + 3;
    const QBinomTable table(top);
    const ZetaBinomialTable zt(ctx, top);
    long rows_seen = 0;
    for_each_zeta_binomial_row(ctx, top, [&](long n, const std::vector<CycNumber>& row) {
      EXPECT_EQ(n, rows_seen++);
      for (long k = 0; k <= n; ++k) {
        const CycNumber expect = cyc_reduce(ctx, table(n, k));
        EXPECT_EQ(row[static_cast<std::size_t>(k)], expect);
        EXPECT_EQ(zt(n, k), expect);
      }
    });
    EXPECT_EQ(rows_seen, top + 1);
    EXPECT_TRUE(zt(3, 7).is_zero());
    const auto poch = zeta_pochhammers(ctx, top);
    for (long n = 0; n <= top; ++n) {
      EXPECT_EQ(poch[static_cast<std::size_t>(n)], cyc_reduce(ctx, pochhammer(n, q())));
    }
  }
}
