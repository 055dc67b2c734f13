#include "hnpoly/bundles.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hnpoly/coupling.hpp"
#include "testing.hpp"

namespace hnpoly {
namespace {

SplitBundle mk(std::vector<BundleSummand> s) { return SplitBundle(std::move(s), true); }

// worst gap between the degree-n polygon and the closed-form limit over the
// polygon's knots
Rat knot_gap(const DiracMeasure& nu, const TwoLineLimit& limit) {
  Polygon p = polygon_of(nu);
  Rat worst(0);
  for (const auto& t : p.knots())
    worst = rat_max(worst, rat_abs(Rat(eval(p, t) - limit.eval(t))));
  return worst;
}

TEST(Curve, Arithmetic) {
  EXPECT_EQ(CurveData(0, 1).a(), 1);
  EXPECT_EQ(CurveData(3, 2).a(), 5);
  EXPECT_THROW(CurveData(-1, 1), ValidationError);
  EXPECT_THROW(CurveData(0, 0), ValidationError);
}

TEST(Bundle, CanonicalForm) {
  SplitBundle e = mk({{Rat(1), 1}, {Rat(1), 2}});
  EXPECT_EQ(e.summands(), (std::vector<BundleSummand>{{Rat(1), 3}}));
  EXPECT_EQ(e.total_rank(), 3);
  EXPECT_EQ(e.degree(), 3);

  SplitBundle sorted = mk({{Rat(0), 1}, {Rat(2), 3}});
  EXPECT_EQ(sorted.summands().front().mu, 2);
  EXPECT_EQ(sorted.summands().back().mu, 0);

  EXPECT_THROW(mk({}), ValidationError);
  EXPECT_THROW(mk({{Rat(1), 0}}), ValidationError);
}

TEST(Bundle, SlopeStats) {
  SlopeStats s = slope_stats(mk({{Rat(2), 3}, {Rat(0), 1}}));
  EXPECT_EQ(s.mu, rat(3, 2));
  EXPECT_EQ(s.mu_max, 2);
  EXPECT_EQ(s.mu_min, 0);

  SlopeStats single = slope_stats(mk({{rat(-5, 3), 4}}));
  EXPECT_EQ(single.mu, rat(-5, 3));
  EXPECT_EQ(single.mu_max, single.mu);
  EXPECT_EQ(single.mu_min, single.mu);

  SlopeStats merged = slope_stats(mk({{Rat(1), 1}, {Rat(1), 2}}));
  EXPECT_EQ(merged.mu, 1);
  EXPECT_EQ(merged.mu_max, 1);
  EXPECT_EQ(merged.mu_min, 1);
}

TEST(Bundle, HnDataKnownValues) {
  HnData h = hn_data(mk({{Rat(2), 3}, {Rat(0), 1}}));
  EXPECT_EQ(h.jumps, (std::vector<Rat>{Rat(2), Rat(0)}));
  EXPECT_EQ(h.dims, (std::vector<long>{3, 4}));
  EXPECT_EQ(h.measure, DiracMeasure({{Rat(2), rat(3, 4)}, {Rat(0), rat(1, 4)}}));
  EXPECT_EQ(eval(h.polygon, Rat(1)), rat(3, 2));
  EXPECT_EQ(associated_measure(h.space), h.measure);
}

TEST(Bundle, SemistablePolygonIsLinear) {
  HnData h = hn_data(mk({{rat(7, 2), 5}}));
  EXPECT_EQ(h.polygon.slopes(), (std::vector<Rat>{rat(7, 2)}));
  EXPECT_EQ(eval(h.polygon, rat(1, 2)), rat(7, 4));
}

TEST(Bundle, ThreeSegmentPolygon) {
  HnData h = hn_data(mk({{Rat(1), 1}, {Rat(0), 1}, {Rat(-1), 1}}));
  EXPECT_EQ(h.polygon.slopes(), (std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}));
  EXPECT_EQ(h.polygon.knots(),
            (std::vector<Rat>{Rat(0), rat(1, 3), rat(2, 3), Rat(1)}));
}

TEST(Bundle, PolygonEndpointIsSlope) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BundleSummand> s;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i)
      s.push_back({testing::rnd_rat(rng, -4, 4), 1 + static_cast<long>(rng() % 3)});
    SplitBundle e = mk(std::move(s));
    EXPECT_EQ(eval(hn_data(e).polygon, Rat(1)), slope_stats(e).mu);
  }
}

TEST(Tensor, LineBundles) {
  TensorResult r = tensor(mk({{Rat(1), 1}}), mk({{Rat(2), 1}}), CurveData(0, 1));
  EXPECT_EQ(r.bundle.summands(), (std::vector<BundleSummand>{{Rat(3), 1}}));
  EXPECT_TRUE(r.report.upper_strict);
  EXPECT_TRUE(r.report.lower_strict);
  EXPECT_EQ(r.report.mu_max_bound, 4);
}

TEST(Tensor, SlopeAdditionRankProduct) {
  TensorResult r = tensor(mk({{Rat(2), 3}, {Rat(0), 1}}), mk({{Rat(1), 2}}),
                          CurveData(1, 1));
  EXPECT_EQ(r.bundle.summands(),
            (std::vector<BundleSummand>{{Rat(3), 6}, {Rat(1), 2}}));
  EXPECT_TRUE(r.report.max_additive);
  EXPECT_TRUE(r.report.min_additive);
}

TEST(Tensor, MarginEqualsCurveConstant) {
  TensorResult r = tensor(mk({{Rat(2), 3}, {Rat(0), 1}}), mk({{Rat(1), 2}, {rat(-1, 2), 1}}),
                          CurveData(0, 1));
  EXPECT_EQ(r.report.margin, 1);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BundleSummand> s1{{testing::rnd_rat(rng, -3, 3), 1 + static_cast<long>(rng() % 2)},
                                  {testing::rnd_rat(rng, -3, 3), 1}};
    std::vector<BundleSummand> s2{{testing::rnd_rat(rng, -3, 3), 1 + static_cast<long>(rng() % 2)}};
    CurveData c(static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 2));
    TensorResult t = tensor(mk(std::move(s1)), mk(std::move(s2)), c);
    EXPECT_EQ(t.report.margin, t.report.a);
    EXPECT_TRUE(t.report.upper_strict);
    EXPECT_TRUE(t.report.lower_strict);
  }
}

TEST(Tensor, NeedsCharZeroFlag) {
  SplitBundle bad({{Rat(1), 1}}, false);
  EXPECT_THROW(tensor(bad, mk({{Rat(0), 1}}), CurveData(0, 1)), ValidationError);
  EXPECT_THROW(tensor(mk({{Rat(0), 1}}), bad, CurveData(0, 1)), ValidationError);
}

TEST(SymPower, TwoLineBundles) {
  SplitBundle s = sym_power_decomposition({{Rat(0), 1}, {Rat(1), 1}}, 2);
  EXPECT_EQ(s.summands(),
            (std::vector<BundleSummand>{{Rat(2), 1}, {Rat(1), 1}, {Rat(0), 1}}));
}

TEST(SymPower, DegreeZeroIsTrivial) {
  SplitBundle s = sym_power_decomposition({{Rat(3), 2}, {Rat(1), 1}}, 0);
  EXPECT_EQ(s.summands(), (std::vector<BundleSummand>{{Rat(0), 1}}));
}

TEST(SymPower, RankTwoCube) {
  SplitBundle s = sym_power_decomposition({{Rat(1), 2}}, 3);
  EXPECT_EQ(s.summands(), (std::vector<BundleSummand>{{Rat(3), 4}}));
}

TEST(SymPower, TotalRankIdentity) {
  const std::vector<std::vector<BundleSummand>> inputs{
      {{Rat(0), 1}, {Rat(1), 1}},
      {{Rat(2), 2}, {rat(1, 2), 3}},
      {{Rat(1), 1}, {Rat(0), 2}, {Rat(-1), 1}},
  };
  for (const auto& in : inputs) {
    long R = 0;
    for (const auto& s : in) R += s.rank;
    for (long n = 0; n <= 6; ++n) {
      SplitBundle d = sym_power_decomposition(in, n);
      EXPECT_EQ(Int(d.total_rank()), binomial(n + R - 1, R - 1));
    }
  }
}

TEST(SymPower, BudgetGuard) {
  std::vector<BundleSummand> many(6, BundleSummand{Rat(1), 1});
  try {
    sym_power_decomposition(many, 50, 100);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_EQ(Int(static_cast<unsigned long>(e.required_budget)),
              binomial(55, 5));
  }
}

TEST(SymMeasure, UniformForZeroOneSlopes) {
  for (long n : {1L, 4L, 9L}) {
    DiracMeasure nu = sym_measure({{Rat(0), 1}, {Rat(1), 1}}, n);
    ASSERT_EQ(nu.atoms().size(), static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(nu.atoms()[static_cast<std::size_t>(k)].first, rat(k, n));
      EXPECT_EQ(nu.atoms()[static_cast<std::size_t>(k)].second, rat(1, n + 1));
    }
  }
}

TEST(SymMeasure, DegenerateCases) {
  EXPECT_EQ(sym_measure({{rat(5, 4), 3}}, 7), DiracMeasure::dirac(rat(5, 4)));
  EXPECT_EQ(sym_measure({{Rat(0), 1}, {Rat(0), 2}}, 5), DiracMeasure::dirac(Rat(0)));
  EXPECT_EQ(sym_measure({{Rat(2), 1}, {Rat(-1), 1}}, 0), DiracMeasure::dirac(Rat(0)));
}

TEST(SymMeasure, MatchesScaledDecomposition) {
  const std::vector<BundleSummand> in{{Rat(2), 2}, {rat(-1, 2), 1}};
  for (long n : {1L, 3L, 6L}) {
    SplitBundle d = sym_power_decomposition(in, n);
    EXPECT_EQ(sym_measure(in, n),
              dilate(associated_measure(hn_data(d).space), rat(1, n)));
  }
}

TEST(LimitCdf, ClosedFormUniform) {
  const std::vector<BundleSummand> in{{Rat(0), 1}, {Rat(1), 1}};
  EXPECT_EQ(limit_cdf(in, rat(1, 4)), rat(1, 4));
  EXPECT_EQ(limit_cdf(in, Rat(-2)), 0);
  EXPECT_EQ(limit_cdf(in, Rat(3)), 1);

  const std::vector<BundleSummand> shifted{{Rat(2), 1}, {Rat(3), 1}};
  EXPECT_EQ(limit_cdf(shifted, rat(5, 2)), rat(1, 2));
}

TEST(LimitCdf, ClosedFormGuards) {
  EXPECT_THROW(limit_cdf({{Rat(0), 1}}, Rat(0)), ValidationError);
  EXPECT_THROW(limit_cdf({{Rat(0), 2}, {Rat(1), 1}}, Rat(0)), ValidationError);
  EXPECT_THROW(limit_cdf({{Rat(1), 1}, {Rat(1), 1}}, Rat(1)), ValidationError);
}

TEST(LimitCdf, MonteCarloMatchesClosedForm) {
  const std::vector<BundleSummand> in{{Rat(0), 1}, {Rat(1), 1}};
  McParams p{0x1234, 200000};
  EXPECT_NEAR(limit_cdf(in, 0.25, p), 0.25, 0.005);
  EXPECT_NEAR(limit_cdf(in, 0.9, p), 0.9, 0.005);
}

TEST(LimitCdf, MonteCarloBetaMarginal) {
  // one slope-1 coordinate out of three: marginal Beta(1,2), CDF 2x - x^2
  McParams p{0x9876, 200000};
  EXPECT_NEAR(limit_cdf({{Rat(0), 1}, {Rat(0), 1}, {Rat(1), 1}}, 0.5, p), 0.75,
              0.005);
  // two coordinates out of three: Beta(2,1), CDF x^2
  EXPECT_NEAR(limit_cdf({{Rat(0), 1}, {Rat(1), 2}}, 0.5, p), 0.25, 0.005);
}

TEST(LimitCdf, MonteCarloDeterministic) {
  const std::vector<BundleSummand> in{{Rat(0), 2}, {Rat(1), 1}};
  McParams p{42, 5000};
  EXPECT_EQ(limit_cdf(in, 0.3, p), limit_cdf(in, 0.3, p));
  McParams q{43, 5000};
  EXPECT_NE(limit_cdf(in, 0.3, p), limit_cdf(in, 0.3, q));
}

TEST(TwoLine, ClosedFormCoefficients) {
  TwoLineLimit u = two_line_limit_polygon(Rat(0), Rat(1));
  EXPECT_EQ(u.linear, 1);
  EXPECT_EQ(u.quadratic, rat(-1, 2));
  EXPECT_EQ(u.eval(Rat(1)), rat(1, 2));

  TwoLineLimit s = two_line_limit_polygon(Rat(-1), Rat(1));
  EXPECT_EQ(s.eval(Rat(1)), 0);
  EXPECT_EQ(s.eval(rat(1, 2)), rat(1, 4));

  TwoLineLimit t = two_line_limit_polygon(Rat(2), Rat(3));
  EXPECT_EQ(t.linear, 3);
  EXPECT_EQ(t.quadratic, rat(-1, 2));
  EXPECT_EQ(t.eval(Rat(1)), rat(5, 2));

  EXPECT_THROW(two_line_limit_polygon(Rat(1), Rat(1)), ValidationError);
  EXPECT_THROW(two_line_limit_polygon(Rat(2), Rat(1)), ValidationError);
}

TEST(TwoLine, SymPolygonsApproachLimit) {
  TwoLineLimit unit = two_line_limit_polygon(Rat(0), Rat(1));
  for (long n : {8L, 32L, 128L}) {
    Rat gap = knot_gap(sym_measure({{Rat(0), 1}, {Rat(1), 1}}, n), unit);
    EXPECT_LE(gap, rat(2, n)) << "n=" << n;
  }
  TwoLineLimit wide = two_line_limit_polygon(Rat(-1), Rat(1));
  for (long n : {8L, 64L}) {
    Rat gap = knot_gap(sym_measure({{Rat(-1), 1}, {Rat(1), 1}}, n), wide);
    EXPECT_LE(gap, Rat(rat(2, n) * 2)) << "n=" << n;
  }
}

}  // namespace
}  // namespace hnpoly
