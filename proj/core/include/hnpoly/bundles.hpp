#pragma once

#include <cstdint>
#include <vector>

#include "hnpoly/filtration.hpp"
#include "hnpoly/measure.hpp"
#include "hnpoly/polygon.hpp"
#include "hnpoly/rational.hpp"
#include "hnpoly/rng.hpp"

namespace hnpoly {

// Numerical curve data. a = b + g drives the tensor slope bounds.
struct CurveData {
  long g = 0;  // genus, >= 0
  long b = 1;  // minimal positive line-bundle degree, >= 1

  CurveData(long genus, long min_degree);
  long a() const { return b + g; }
};

struct BundleSummand {
  Rat mu;     // slope of the semistable summand
  long rank;  // >= 1

  friend bool operator==(const BundleSummand&, const BundleSummand&) = default;
};

// Direct sum of semistable summands, kept in canonical form: equal slopes
// merged, sorted by strictly decreasing slope. The char0 flag asserts that
// tensor products of semistable summands stay semistable; operations that
// need this refuse to run without it.
class SplitBundle {
 public:
  SplitBundle(std::vector<BundleSummand> summands, bool char0);

  const std::vector<BundleSummand>& summands() const { return summands_; }
  bool char0() const { return char0_; }
  long total_rank() const { return total_rank_; }
  Rat degree() const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<BundleSummand> summands_;
  bool char0_ = false;
  long total_rank_ = 0;
};

struct SlopeStats {
  Rat mu;      // degree / rank
  Rat mu_max;  // largest summand slope
  Rat mu_min;  // smallest summand slope
};

SlopeStats slope_stats(const SplitBundle& e);

// Destabilizing flag of a split bundle realized on coordinates: stage k is
// spanned by the summands of the k largest slopes. The polygon ends at the
// slope of the whole bundle: polygon.eval(1) == slope_stats(e).mu.
struct HnData {
  std::vector<Rat> jumps;  // distinct slopes, descending
  std::vector<long> dims;  // cumulative ranks along the flag
  DiracMeasure measure;    // sum of (rank_i / rank) at each slope
  Polygon polygon;
  FilteredSpace space;  // coordinate realization, dim = total rank
};

HnData hn_data(const SplitBundle& e);

// Tensor of split semistable bundles: slopes add, ranks multiply. In this
// model the extreme slopes are exactly additive, so both strict bounds
// (upper at mu_max sums + a, lower at mu_min sums - a) hold with margin a.
struct TensorBoundReport {
  Rat a;
  Rat mu_max_actual;
  Rat mu_min_actual;
  Rat mu_max_bound;  // mu_max(E1) + mu_max(E2) + a
  Rat mu_min_bound;  // mu_min(E1) + mu_min(E2) - a
  bool upper_strict = false;
  bool lower_strict = false;
  bool max_additive = false;
  bool min_additive = false;
  Rat margin;  // min distance to either bound
};

struct TensorResult {
  SplitBundle bundle;
  TensorBoundReport report;
};

TensorResult tensor(const SplitBundle& e1, const SplitBundle& e2,
                    const CurveData& c);

// S^n of a direct sum, one summand per way of splitting the degree n across
// the factors: slope = sum of d_i * mu_i, rank = product of the symmetric
// power ranks C(d_i + r_i - 1, r_i - 1). Total rank is C(n + R - 1, R - 1)
// with R the input rank. Throws BudgetError when the number of degree
// splittings exceeds the budget.
SplitBundle sym_power_decomposition(const std::vector<BundleSummand>& summands,
                                    long n, std::uint64_t budget = 5000000);

// The degree-n measure already scaled by 1/n: mass rank_k / total at each
// slope_k / n. For n = 0 this is a unit mass at 0.
DiracMeasure sym_measure(const std::vector<BundleSummand>& summands, long n,
                         std::uint64_t budget = 5000000);

// Limit of sym_measure as n grows: the pushforward of the uniform measure on
// the standard simplex of dimension R - 1 under x -> sum_i mu_i (mass of
// group i). Closed form exists for two rank-1 summands (uniform on
// [mu_min, mu_max]); elsewhere use the Monte-Carlo overload.
Rat limit_cdf(const std::vector<BundleSummand>& summands, const Rat& x);

// Simplex points drawn via normalized exponential spacings from a single
// seeded stream; the result is deterministic given (seed, samples).
double limit_cdf(const std::vector<BundleSummand>& summands, double x,
                 const McParams& params);

// Closed-form limit polygon for two rank-1 summands of slopes mu1 < mu2:
// t -> linear * t + quadratic * t^2 with linear = mu2 and
// quadratic = -(mu2 - mu1) / 2. Its value at 1 is the average slope.
struct TwoLineLimit {
  Rat linear;
  Rat quadratic;

  Rat eval(const Rat& t) const;
};

TwoLineLimit two_line_limit_polygon(const Rat& mu1, const Rat& mu2);

}  // namespace hnpoly
