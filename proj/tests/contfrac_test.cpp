#include "laguerre/contfrac.hpp"

#include <gtest/gtest.h>

namespace laguerre {
namespace {

const MultiPoly x = MultiPoly::variable(Var::x);
const MultiPoly y = MultiPoly::variable(Var::y);
const MultiPoly u = MultiPoly::variable(Var::u);
const MultiPoly v = MultiPoly::variable(Var::v);
const MultiPoly z = MultiPoly::variable(Var::z);
const MultiPoly w = MultiPoly::variable(Var::w0);

MultiPoly pow(const MultiPoly& p, int k) {
  MultiPoly r(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

MultiPoly c(std::int64_t k) { return MultiPoly(k); }

// Series expansions of the two fractions, computed independently by
// symbolic division and frozen here.
const std::vector<MultiPoly> kStieltjes{
    c(1),
    x,
    x * x + x * y,
    u * x * y + pow(x, 3) + c(3) * x * x * y + x * y * y,
    u * u * x * y + u * v * x * y + c(4) * u * x * x * y + c(3) * u * x * y * y + v * x * x * y + pow(x, 4) +
        c(6) * pow(x, 3) * y + c(6) * x * x * y * y + x * pow(y, 3),
};

const std::vector<MultiPoly> kJacobi{
    c(1),
    w * x * y,
    w * w * x * x * y * y + x * y * z,
    pow(w * x * y, 3) + c(2) * w * x * x * y * y * z + x * x * y * z + x * y * y * z + x * y * z * z,
    pow(w * x * y, 4) + c(3) * w * w * pow(x * y, 3) * z + c(2) * w * pow(x, 3) * y * y * z +
        c(2) * w * x * x * pow(y, 3) * z + c(2) * w * x * x * y * y * z * z + pow(x, 3) * y * z +
        c(2) * x * x * y * y * z * z + c(2) * x * x * y * y * z + c(3) * x * x * y * z * z + x * pow(y, 3) * z +
        c(3) * x * y * y * z * z + x * y * pow(z, 3) + x * y * z * z,
};

TEST(Stieltjes, FrozenExpansion) {
  const MomentSequence mu = stieltjes_moments(permutation_stieltjes_schedule(), 4);
  ASSERT_EQ(mu.size(), 5u);
  for (std::size_t n = 0; n < mu.size(); ++n) EXPECT_EQ(mu[n], kStieltjes[n]) << "n=" << n << '\n' << mu[n];
}

TEST(Jacobi, FrozenExpansion) {
  const MomentSequence mu = jacobi_moments(permutation_jacobi_schedule(), 4);
  ASSERT_EQ(mu.size(), 5u);
  for (std::size_t n = 0; n < mu.size(); ++n) EXPECT_EQ(mu[n], kJacobi[n]) << "n=" << n << '\n' << mu[n];
}

TEST(Moments, OrderZeroAndErrors) {
  EXPECT_EQ(stieltjes_moments(permutation_stieltjes_schedule(), 0), MomentSequence{c(1)});
  EXPECT_EQ(jacobi_moments(permutation_jacobi_schedule(), 0), MomentSequence{c(1)});
  EXPECT_THROW(stieltjes_moments(permutation_stieltjes_schedule(), -1), std::invalid_argument);
  EXPECT_THROW(jacobi_moments(permutation_jacobi_schedule(), -1), std::invalid_argument);
}

TEST(Moments, CatalanAndMotzkinSpecialisations) {
  // All weights 1: Catalan numbers and Motzkin numbers.
  const StieltjesSchedule ones{[](int) { return MultiPoly(1); }};
  const std::vector<std::int64_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  const MomentSequence s = stieltjes_moments(ones, 7);
  for (std::size_t n = 0; n < catalan.size(); ++n) EXPECT_EQ(s[n], c(catalan[n]));

  const JacobiSchedule motz{[](int) { return MultiPoly(1); }, [](int) { return MultiPoly(1); }};
  const std::vector<std::int64_t> motzkin{1, 1, 2, 4, 9, 21, 51, 127};
  const MomentSequence j = jacobi_moments(motz, 7);
  for (std::size_t n = 0; n < motzkin.size(); ++n) EXPECT_EQ(j[n], c(motzkin[n]));
}

TEST(Moments, CoefficientSumsAreFactorials) {
  const MomentSequence s = stieltjes_moments(permutation_stieltjes_schedule(), 7);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(s[static_cast<std::size_t>(n)].coefficient_sum(), static_cast<std::int64_t>(factorial(n)));
}

TEST(BruteForce, MatchesFractionsUpToSix) {
  const MomentSequence s = stieltjes_moments(permutation_stieltjes_schedule(), 6);
  const MomentSequence j = jacobi_moments(permutation_jacobi_schedule(), 6);
  for (int n = 0; n <= 6; ++n) {
    const auto k = static_cast<std::size_t>(n);
    EXPECT_EQ(brute_force_mu(n, FirstStatistic::Arec), s[k]) << "n=" << n;
    EXPECT_EQ(brute_force_mu(n, FirstStatistic::Cyc), s[k]) << "n=" << n;
    const MultiPoly b = brute_force_jacobi(n);
    EXPECT_EQ(b, j[k]) << "n=" << n;
    EXPECT_EQ(b.swapped(Var::x, Var::y), b) << "n=" << n;
  }
}

TEST(BruteForce, SmallValues) {
  EXPECT_EQ(brute_force_mu(0, FirstStatistic::Arec), c(1));
  EXPECT_EQ(brute_force_mu(1, FirstStatistic::Cyc), x);
  EXPECT_EQ(brute_force_jacobi(1), w * x * y);
}

}  // namespace
}  // namespace laguerre
