#include "hnpoly/graded.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hnpoly/filtration.hpp"
#include "hnpoly/rng.hpp"
#include "testing.hpp"

namespace hnpoly {
namespace {

ErrorFn exact_const(long c) { return ErrorFn::constant(Rat(c)); }

long isqrt(long n) {
  long s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

TEST(Criterion, LinearWeightsSatisfyExactAdditivity) {
  MonomialModel m = MonomialModel::linear({Rat(2), rat(1, 2)});
  CriterionReport r = check_quasi_filtered(m, exact_const(0), 8, 3);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.cases_checked, 0u);
}

TEST(Criterion, BoundedPerturbationPassesWithAllowanceTwo) {
  for (long d : {1L, 2L, 3L}) {
    std::vector<Rat> w(static_cast<std::size_t>(d), Rat(1));
    MonomialModel m = MonomialModel::perturbed(w, Rat(1), 0xFEEDULL + static_cast<std::uint64_t>(d));
    CriterionReport r = check_quasi_filtered(m, exact_const(2), d == 3 ? 8 : 10, 3);
    EXPECT_TRUE(r.passed) << "d=" << d;
  }
}

TEST(Criterion, PerturbationWithoutAllowanceFails) {
  MonomialModel m = MonomialModel::perturbed({Rat(1), Rat(1)}, Rat(1), 0xFEED2ULL);
  CriterionReport r = check_quasi_filtered(m, exact_const(0), 6, 2);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  // the witness must reproduce the violated inequality
  Composition sum(2, 0);
  Rat parts_weight(0);
  for (const auto& alpha : r.witness->parts) {
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += alpha[j];
    parts_weight += m.weight(alpha);
  }
  EXPECT_EQ(r.witness->lhs, m.weight(sum));
  EXPECT_EQ(r.witness->rhs, parts_weight);  // f == 0
  EXPECT_LT(r.witness->lhs, r.witness->rhs);
}

TEST(Criterion, PairwisePassesWhereTripleFails) {
  std::map<Composition, Rat> table{
      {{0}, Rat(0)}, {{1}, Rat(1)}, {{2}, Rat(0)}, {{3}, rat(-1, 2)}};
  MonomialModel m = MonomialModel::from_table(1, std::move(table));
  EXPECT_TRUE(check_pseudo_filtered(m, exact_const(1), 3).passed);
  CriterionReport quasi = check_quasi_filtered(m, exact_const(1), 3, 3);
  ASSERT_FALSE(quasi.passed);
  EXPECT_EQ(quasi.witness->parts.size(), 3u);  // the (1,1,1) split
}

TEST(Criterion, BudgetAndValidation) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(1), Rat(1)});
  EXPECT_THROW(check_quasi_filtered(m, exact_const(0), 40, 3, 1000), BudgetError);
  ErrorFn no_exact{[](long) { return 0.0; }, nullptr, true};
  EXPECT_THROW(check_quasi_filtered(m, no_exact, 6, 2), ValidationError);
}

TEST(ModelMeasure, KnownValues) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(0)});
  EXPECT_EQ(model_measure(m, 2),
            DiracMeasure({{Rat(0), rat(1, 3)}, {Rat(1), rat(1, 3)}, {Rat(2), rat(1, 3)}}));

  MonomialModel one = MonomialModel::linear({rat(5, 2)});
  EXPECT_EQ(model_measure(one, 3), DiracMeasure::dirac(rat(15, 2)));

  MonomialModel zero = MonomialModel::linear({Rat(0), Rat(0)});
  EXPECT_EQ(model_measure(zero, 4), DiracMeasure::dirac(Rat(0)));
}

TEST(ModelMeasure, MonomialBasisIsMaximalForCoordinateFiltration) {
  // Realize the degree-n filtration concretely: coordinates sorted by weight,
  // stages spanned by leading coordinates. The monomial basis measure then
  // matches the associated measure, and the index of any element is the
  // minimum weight over its support.
  MonomialModel m = MonomialModel::perturbed({Rat(1), Rat(0)}, Rat(1), 0xABCDULL);
  const long n = 3;
  auto monomials = enumerate_delta(n, m.d);
  std::vector<std::pair<Rat, std::size_t>> order;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    order.emplace_back(m.weight(monomials[i]), i);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  const std::size_t dim = monomials.size();
  std::vector<Mat> flag;
  std::vector<Rat> jumps;
  Mat stage(0, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Mat next(i + 1, dim);
    for (std::size_t rr = 0; rr < i; ++rr)
      for (std::size_t cc = 0; cc < dim; ++cc) next.at(rr, cc) = stage.at(rr, cc);
    next.at(i, order[i].second) = 1;
    stage = next;
    if (i + 1 == dim || order[i + 1].first != order[i].first) {
      flag.push_back(stage);
      jumps.push_back(order[i].first);
    }
  }
  FilteredSpace space(dim, flag, jumps);
  EXPECT_EQ(associated_measure(space), model_measure(m, n));
  EXPECT_EQ(basis_measure(space, Mat::identity(dim)), model_measure(m, n));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> v(dim, Rat(0));
    ExtendedRat expected = ExtendedRat::pos_inf();
    for (std::size_t i = 0; i < dim; ++i) {
      if (rng() % 2 == 0) continue;
      v[i] = testing::rnd_rat(rng, 1, 5);
      expected = std::min(expected, ExtendedRat::finite(m.weight(monomials[i])));
    }
    EXPECT_EQ(index_of(space, v), expected);
  }
}

TEST(IntegralI, UniformWeightGivesHalf) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(0)});
  for (long n = 1; n <= 5; ++n)
    EXPECT_EQ(integral_I(m, ConcaveTestFn::identity(), n), rat(1, 2));
  EXPECT_EQ(integral_I(m, ConcaveTestFn::constant(rat(7, 3)), 4), rat(7, 3));

  MonomialModel one = MonomialModel::linear({rat(3, 4)});
  for (long n = 1; n <= 4; ++n)
    EXPECT_EQ(integral_I(one, ConcaveTestFn::identity(), n), rat(3, 4));
}

TEST(ConcaveFn, ValidationAndEval) {
  ConcaveTestFn g({Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(2), Rat(3)}, Rat(2));
  EXPECT_EQ(g.eval(rat(1, 2)), Rat(1));
  EXPECT_EQ(g.eval(rat(3, 2)), rat(5, 2));
  EXPECT_EQ(g.eval(Rat(3)), Rat(4));    // affine extension right
  EXPECT_EQ(g.eval(Rat(-1)), Rat(-2));  // affine extension left
  EXPECT_THROW(ConcaveTestFn({Rat(0), Rat(1)}, {Rat(1), Rat(0)}, Rat(1)),
               ValidationError);  // decreasing
  EXPECT_THROW(ConcaveTestFn({Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(1), Rat(3)}, Rat(2)),
               ValidationError);  // convex corner
  EXPECT_THROW(ConcaveTestFn({Rat(0), Rat(1)}, {Rat(0), Rat(2)}, Rat(1)),
               ValidationError);  // slope above c
}

TEST(Superadditivity, LinearModelGivesEquality) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(0)});
  SuperadditivityReport r = superadditivity_check(
      m, ConcaveTestFn::identity(), partitions_of(9, 3), exact_const(0));
  EXPECT_TRUE(r.all_hold);
  for (const auto& c : r.cases) EXPECT_EQ(c.lhs, c.rhs);
}

TEST(Superadditivity, PerturbedModelHolds) {
  MonomialModel m = MonomialModel::perturbed({Rat(1), rat(1, 2)}, Rat(1), 0x5EEDULL);
  ConcaveTestFn g({Rat(0), Rat(1)}, {Rat(0), Rat(2)}, Rat(2));
  std::vector<std::vector<long>> parts;
  for (long N = 2; N <= 12; ++N)
    for (auto& p : partitions_of(N, 3)) parts.push_back(p);
  SuperadditivityReport r = superadditivity_check(m, g, parts, exact_const(2));
  EXPECT_TRUE(r.all_hold);
}

TEST(Superadditivity, SinglePartIsSlackOnly) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(0)});
  SuperadditivityReport r = superadditivity_check(
      m, ConcaveTestFn::identity(), {{7}}, exact_const(2));
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_TRUE(r.cases[0].holds);
  EXPECT_EQ(r.cases[0].lhs, r.cases[0].rhs + 2);  // c * f(7) = 2
}

TEST(Partitions, Enumeration) {
  EXPECT_EQ(partitions_of(4, 2),
            (std::vector<std::vector<long>>{{4}, {3, 1}, {2, 2}}));
  EXPECT_EQ(partitions_of(5, 5, 2).size(), 2u);  // (5), (3,2)
  EXPECT_THROW(partitions_of(0, 2), ValidationError);
}

TEST(Convergence, SingleVariableLinearIsExactFixedPoint) {
  MonomialModel m = MonomialModel::linear({rat(2, 3)});
  ConvergenceReport r = convergence_run(m, 64);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.oscillation, 0);
  for (const auto& p : r.probes)
    EXPECT_EQ(p.measure, DiracMeasure::dirac(rat(2, 3)));
}

TEST(Convergence, TwoVariableLinearConverges) {
  MonomialModel m = MonomialModel::linear({Rat(1), Rat(0)});
  ConvergenceReport r = convergence_run(m, 64);
  EXPECT_TRUE(r.converged);
  for (const auto& p : r.probes)
    EXPECT_EQ(p.measure, dilate(model_measure(m, p.n), rat(1, p.n)));
  // successive dyadic polygons approach each other
  ASSERT_GE(r.probes.size(), 3u);
  EXPECT_LT(r.probes.back().dist_prev, r.probes[1].dist_prev);
}

TEST(Convergence, SqrtScalePerturbationConverges) {
  MonomialModel m;
  m.d = 2;
  m.slope_cap = Rat(2);
  m.weight = [](const Composition& alpha) {
    const long n = alpha[0] + alpha[1];
    const long k = static_cast<long>(mix_tuple(0x51BEULL, alpha) % 33) - 16;
    return Rat(Rat(alpha[0]) + rat(k * isqrt(n), 16));
  };
  ConvergenceReport r = convergence_run(m, 256);
  EXPECT_TRUE(r.converged);
  // dyadic distances stay on a downward trend at the tail
  const auto& p = r.probes;
  ASSERT_GE(p.size(), 4u);
  EXPECT_LT(p.back().dist_prev, p[1].dist_prev);
}

TEST(Convergence, PowerOfTwoPlateauFlagged) {
  MonomialModel m;
  m.d = 1;
  m.slope_cap = Rat(1);
  m.weight = [](const Composition& alpha) {
    long v = 1;
    while (2 * v <= alpha[0]) v *= 2;
    return Rat(alpha[0] >= 1 ? v : 0);
  };
  ConvergenceReport r = convergence_run(m, 1024);
  EXPECT_FALSE(r.converged);
  EXPECT_GE(r.oscillation, rat(1, 4));
  bool witness = false;
  for (const auto& probe : r.probes)
    if (probe.n <= 1024 && probe.dist_pair >= rat(1, 4)) witness = true;
  EXPECT_TRUE(witness);
}

TEST(Convergence, SlopeCapViolationCaught) {
  MonomialModel m;
  m.d = 1;
  m.slope_cap = Rat(1);
  m.weight = [](const Composition& alpha) { return Rat(alpha[0] * alpha[0]); };
  EXPECT_THROW(convergence_run(m, 64), ValidationError);
}

TEST(Dominance, WeightGapGivesTranslation) {
  MonomialModel lin = MonomialModel::linear({Rat(1), rat(1, 3)});
  MonomialModel pert = MonomialModel::perturbed({Rat(1), rat(1, 3)}, rat(1, 2), 0xC0DEULL);
  for (long n : {2L, 3L, 5L}) {
    DiracMeasure a = model_measure(lin, n);
    DiracMeasure b = model_measure(pert, n);
    EXPECT_TRUE(dominates(translate(b, rat(1, 2)), a));
    EXPECT_TRUE(dominates(translate(a, rat(1, 2)), b));
  }
}

TEST(Dominance, ShiftCovariance) {
  const Rat c = rat(3, 2);
  MonomialModel base = MonomialModel::linear({Rat(1), Rat(0)});
  MonomialModel shifted = MonomialModel::linear({Rat(1) + c, Rat(0) + c});
  for (long n : {2L, 4L, 7L}) {
    DiracMeasure nu = model_measure(base, n);
    EXPECT_EQ(model_measure(shifted, n), translate(nu, Rat(c * n)));
    EXPECT_EQ(dilate(model_measure(shifted, n), rat(1, n)),
              translate(dilate(nu, rat(1, n)), c));
  }
}

}  // namespace
}  // namespace hnpoly
