#include "hnpoly/coupling.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hnpoly {
namespace {

bool lex_ge(const Composition& a, const Composition& b) { return a >= b; }

TEST(Coupling, FactorialBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(8, 3), 56);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_THROW(factorial(-1), ValidationError);
}

TEST(Coupling, EnumerateDelta) {
  EXPECT_EQ(enumerate_delta(2, 2),
            (std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(enumerate_delta(7, 1), (std::vector<Composition>{{7}}));
  EXPECT_EQ(enumerate_delta(0, 3), (std::vector<Composition>{{0, 0, 0}}));
  EXPECT_THROW(enumerate_delta(2, 0), ValidationError);

  for (long n : {0L, 1L, 3L, 5L})
    for (long d : {1L, 2L, 3L, 4L}) {
      auto all = enumerate_delta(n, d);
      EXPECT_EQ(Int(static_cast<long>(all.size())), binomial(n + d - 1, d - 1));
      for (std::size_t i = 0; i + 1 < all.size(); ++i)
        EXPECT_TRUE(all[i] > all[i + 1]);  // strictly decreasing lex
      for (const auto& alpha : all) {
        long sum = 0;
        for (long v : alpha) {
          EXPECT_GE(v, 0);
          sum += v;
        }
        EXPECT_EQ(sum, n);
      }
    }
}

TEST(Coupling, GammaDeltaBijection) {
  EXPECT_EQ(gamma_of({1, 1}), (std::vector<long>{1}));
  EXPECT_EQ(delta_of({1}, 2, 2), (Composition{1, 1}));
  EXPECT_THROW(delta_of({3}, 2, 2), ValidationError);
  for (const auto& alpha : enumerate_delta(4, 3))
    EXPECT_EQ(delta_of(gamma_of(alpha), 4, 3), alpha);
}

TEST(Coupling, RhoWeightsSmallestCase) {
  CouplingMeasure rho = build_rho({1, 1}, 2);
  ASSERT_EQ(rho.weights.size(), 4u);
  EXPECT_EQ(rho.weights.at({0, 1, 0, 1}), rat(1, 3));  // gammas (0,0)
  EXPECT_EQ(rho.weights.at({1, 0, 0, 1}), rat(1, 6));  // gammas (1,0)
  EXPECT_EQ(rho.weights.at({0, 1, 1, 0}), rat(1, 6));  // gammas (0,1)
  EXPECT_EQ(rho.weights.at({1, 0, 1, 0}), rat(1, 3));  // gammas (1,1)
}

TEST(Coupling, DimensionOneIsTrivial) {
  CouplingMeasure rho = build_rho({3, 4, 2}, 1);
  ASSERT_EQ(rho.weights.size(), 1u);
  EXPECT_EQ(rho.weights.begin()->second, 1);
  EXPECT_EQ(rho.weights.begin()->first, (std::vector<long>{3, 4, 2}));
  for (long i = 1; i <= 3; ++i) EXPECT_EQ(marginal(rho, i).size(), 1u);
  EXPECT_EQ(sum_pushforward(rho).begin()->first, (Composition{9}));
}

TEST(Coupling, TotalMassOne) {
  CouplingMeasure rho = build_rho({2, 1}, 2);
  Rat total(0);
  for (const auto& [k, w] : rho.weights) {
    EXPECT_GT(w, 0);
    total += w;
  }
  EXPECT_EQ(total, 1);
}

TEST(Coupling, MarginalAndSumExample) {
  CouplingMeasure rho = build_rho({1, 1}, 2);
  auto m1 = marginal(rho, 1);
  ASSERT_EQ(m1.size(), 2u);
  EXPECT_EQ(m1.at({1, 0}), rat(1, 2));
  EXPECT_EQ(m1.at({0, 1}), rat(1, 2));
  auto s = sum_pushforward(rho);
  ASSERT_EQ(s.size(), 3u);
  for (const auto& [alpha, w] : s) EXPECT_EQ(w, rat(1, 3));
  EXPECT_TRUE(uniform_on_delta(s, 2, 2));
  EXPECT_THROW(marginal(rho, 0), ValidationError);
  EXPECT_THROW(marginal(rho, 3), ValidationError);
}

TEST(Coupling, UniformitySweep) {
  for (long d = 1; d <= 3; ++d)
    for (long n1 = 0; n1 <= 3; ++n1)
      for (long n2 = 0; n2 <= 3; ++n2) {
        CouplingMeasure rho = build_rho({n1, n2}, d);
        Rat total(0);
        for (const auto& [k, w] : rho.weights) total += w;
        ASSERT_EQ(total, 1) << "d=" << d << " n=(" << n1 << "," << n2 << ")";
        EXPECT_TRUE(uniform_on_delta(marginal(rho, 1), n1, d));
        EXPECT_TRUE(uniform_on_delta(marginal(rho, 2), n2, d));
        EXPECT_TRUE(uniform_on_delta(sum_pushforward(rho), n1 + n2, d));
      }
}

TEST(Coupling, ThreeFactorUniformity) {
  CouplingMeasure rho = build_rho({2, 1, 2}, 3);
  for (long i = 1; i <= 3; ++i)
    EXPECT_TRUE(uniform_on_delta(marginal(rho, i), rho.n_vec[static_cast<std::size_t>(i - 1)], 3));
  EXPECT_TRUE(uniform_on_delta(sum_pushforward(rho), 5, 3));
}

TEST(Coupling, BudgetGuard) {
  try {
    build_rho({5, 5}, 4, 10);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.required_budget, 56u * 56u);
  }
}

TEST(Coupling, SumIsLexMonotone) {
  std::mt19937_64 rng(51);
  auto all = enumerate_delta(4, 3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int fired = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Composition &a1 = all[pick(rng)], &b1 = all[pick(rng)];
    const Composition &a2 = all[pick(rng)], &b2 = all[pick(rng)];
    if (!lex_ge(a1, b1) || !lex_ge(a2, b2)) continue;
    ++fired;
    Composition sa(a1), sb(b1);
    for (std::size_t j = 0; j < sa.size(); ++j) {
      sa[j] += a2[j];
      sb[j] += b2[j];
    }
    EXPECT_TRUE(lex_ge(sa, sb));
  }
  EXPECT_GT(fired, 0);
}

TEST(Coupling, TruncatedGeneratingIdentity) {
  // sum_b (a+b)!/(a!b!) t^b against the series of (1-t)^{-a-1}, whose
  // coefficients satisfy c_0 = 1, c_b = c_{b-1} (a+b)/b.
  for (long a = 0; a <= 6; ++a) {
    Rat c(1);
    for (long b = 0; b <= 8; ++b) {
      if (b > 0) c = Rat(c * (a + b)) / b;
      EXPECT_EQ(c, rat(factorial(a + b), factorial(a) * factorial(b)));
    }
  }
}

}  // namespace
}  // namespace hnpoly
