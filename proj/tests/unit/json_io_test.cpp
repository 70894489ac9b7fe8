#include <gtest/gtest.h>

#include "generators.hpp"
#include "padicft/attainability.hpp"
#include "padicft/json_io.hpp"

using namespace padicft;

TEST(JsonIo, Integers) {
  EXPECT_EQ(integer_to_json(Integer(-42)), nlohmann::json(-42));
  const Integer big("123456789012345678901234567890");
  const auto j = integer_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j), big);
  EXPECT_EQ(integer_from_json(nlohmann::json(7)), 7);
}

TEST(JsonIo, CycNumberRoundTrip) {
  auto ctx = CyclotomicContext::make(3, 2);
  for (int i = 0; i < 50; ++i) {
    const auto a = padicft::testing::random_cyc(ctx);
    const auto j = to_json(a);
    EXPECT_TRUE(j.contains("num"));
    EXPECT_TRUE(j.contains("den"));
    EXPECT_EQ(cyc_from_json(ctx, j), a);
  }
  const auto half = to_json(CycNumber::rational(ctx, Rational(1, 2)));
  EXPECT_EQ(half["den"], 2);
  EXPECT_EQ(half["num"].size(), 6u);
}

TEST(JsonIo, Valuations) {
  EXPECT_EQ(valuation_from_string("inf"), PValuation::infinity());
  EXPECT_EQ(valuation_from_string("3/6"), PValuation(Rational(1, 2)));
  EXPECT_THROW(valuation_from_string("x"), std::invalid_argument);
}

TEST(JsonIo, WitnessRoundTrip) {
  auto ctx = CyclotomicContext::make(2, 2);
  auto built = build_witness(ctx, Rational(1, 2));
  ASSERT_TRUE(std::holds_alternative<WitnessRecord>(built));
  const auto& w = std::get<WitnessRecord>(built);
  const auto j = to_json(w);
  EXPECT_EQ(j["e"], "1/2");
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["phi"].size(), 4u);
  EXPECT_EQ(j["checks"]["dist_to_phi0_exponent"], w.checks.dist_to_phi0_exponent.to_string());
  const WitnessRecord back = witness_from_json(j);
  EXPECT_EQ(back.phi, w.phi);
  EXPECT_EQ(back.y.size(), w.y.size());
  EXPECT_EQ(back.checks, w.checks);
  EXPECT_EQ(back.e, w.e);
  EXPECT_TRUE(verify_witness(back).passed());
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(JsonIo, ReportUsesExactStrings) {
  const auto report = gamma_r(CyclotomicContext::make(2, 2));
  const auto j = to_json(report);
  EXPECT_EQ(j["gamma_exponent"], "1/2");
  EXPECT_EQ(j["per_n"].size(), 4u);
  EXPECT_EQ(j["per_n"][3]["min_eps_exponent"], "inf");
}
