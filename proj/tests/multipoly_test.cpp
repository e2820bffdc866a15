#include "laguerre/multipoly.hpp"

#include <gtest/gtest.h>

#include <random>

namespace laguerre {
namespace {

const MultiPoly x = MultiPoly::variable(Var::x);
const MultiPoly y = MultiPoly::variable(Var::y);
const MultiPoly z = MultiPoly::variable(Var::z);

MultiPoly random_poly(std::mt19937& rng) {
  MultiPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (auto& k : e) k = rng() % 3 == 0 ? static_cast<unsigned>(rng() % 3) : 0u;
    p.add_term(e, static_cast<std::int64_t>(rng() % 11) - 5);
  }
  return p;
}

TEST(MultiPoly, ZeroAndConstants) {
  EXPECT_TRUE(MultiPoly().is_zero());
  EXPECT_TRUE(MultiPoly(0).is_zero());
  EXPECT_FALSE(MultiPoly(3).is_zero());
  EXPECT_EQ(MultiPoly(2) + MultiPoly(3), MultiPoly(5));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x * MultiPoly(0)).is_zero());
}

TEST(MultiPoly, BinomialSquare) {
  const MultiPoly sq = (x + y) * (x + y);
  EXPECT_EQ(sq.coefficient({2, 0, 0, 0, 0, 0}), 1);
  EXPECT_EQ(sq.coefficient({1, 1, 0, 0, 0, 0}), 2);
  EXPECT_EQ(sq.coefficient({0, 2, 0, 0, 0, 0}), 1);
  EXPECT_EQ(sq.terms().size(), 3u);
  EXPECT_EQ(sq.coefficient_sum(), 4);
}

TEST(MultiPoly, SwapAndEvaluateAtZero) {
  const MultiPoly p = x * x * y + MultiPoly(3) * z;
  EXPECT_EQ(p.swapped(Var::x, Var::y), y * y * x + MultiPoly(3) * z);
  EXPECT_EQ(p.at_zero(Var::z), x * x * y);
  EXPECT_EQ(p.at_zero(Var::x), MultiPoly(3) * z);
  EXPECT_EQ(p.swapped(Var::x, Var::x), p);
}

TEST(MultiPoly, Format) {
  EXPECT_EQ(format_poly(MultiPoly()), "0\n");
  EXPECT_EQ(format_poly(MultiPoly(-4)), "-4\n");
  EXPECT_EQ(format_poly(MultiPoly(2) * x * x * y + MultiPoly(1)), "2 * x^2 y^1\n1\n");
  EXPECT_EQ(format_poly(MultiPoly::variable(Var::w0)), "1 * w0^1\n");
}

TEST(MultiPoly, GradedOrderPutsHigherDegreeFirst) {
  const MultiPoly p = MultiPoly(1) + y + x + x * y;
  std::vector<Exponents> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  ASSERT_EQ(order.size(), 4u);
  EXPECT_EQ(order[0], (Exponents{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(order[1], (Exponents{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(order[2], (Exponents{0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(order[3], (Exponents{}));
}

TEST(MultiPoly, RingLaws) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(-(-a), a);
    ASSERT_EQ(a * MultiPoly(1), a);
    ASSERT_EQ((a * b).coefficient_sum(), a.coefficient_sum() * b.coefficient_sum());
    ASSERT_EQ((a * b).swapped(Var::x, Var::u), a.swapped(Var::x, Var::u) * b.swapped(Var::x, Var::u));
  }
}

TEST(MultiPoly, NoZeroTermsStored) {
  MultiPoly p = x + y;
  p -= x;
  EXPECT_EQ(p.terms().size(), 1u);
  p.add_term({0, 1, 0, 0, 0, 0}, -1);
  EXPECT_TRUE(p.is_zero());
}

}  // namespace
}  // namespace laguerre
