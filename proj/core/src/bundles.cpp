#include "hnpoly/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "hnpoly/coupling.hpp"
#include "hnpoly/errors.hpp"
#include "hnpoly/rng.hpp"

namespace hnpoly {

namespace {

void require_summands(const std::vector<BundleSummand>& summands) {
  if (summands.empty()) throw ValidationError("bundle needs at least one summand");
  for (const auto& s : summands)
    if (s.rank < 1) throw ValidationError("summand ranks must be positive");
}

long rank_to_long(const Int& r) {
  if (!r.fits_slong_p())
    throw ValidationError("summand rank exceeds the machine integer range");
  return r.get_si();
}

}  // namespace

CurveData::CurveData(long genus, long min_degree) : g(genus), b(min_degree) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  if (b < 1) throw ValidationError("minimal line-bundle degree must be positive");
}

SplitBundle::SplitBundle(std::vector<BundleSummand> summands, bool char0)
    : char0_(char0) {
  require_summands(summands);
  std::map<Rat, long, std::greater<Rat>> merged;
  for (const auto& s : summands) merged[s.mu] += s.rank;
  for (const auto& [mu, rank] : merged) {
    summands_.push_back({mu, rank});
    total_rank_ += rank;
  }
}

Rat SplitBundle::degree() const {
  Rat d(0);
  for (const auto& s : summands_) d += s.mu * s.rank;
  return d;
}

SlopeStats slope_stats(const SplitBundle& e) {
  SlopeStats stats;
  stats.mu = Rat(e.degree() / e.total_rank());
  stats.mu_max = e.summands().front().mu;
  stats.mu_min = e.summands().back().mu;
  return stats;
}

HnData hn_data(const SplitBundle& e) {
  const std::size_t dim = static_cast<std::size_t>(e.total_rank());
  std::vector<Rat> jumps;
  std::vector<long> dims;
  std::vector<Mat> flag;
  long cumulative = 0;
  std::vector<std::pair<Rat, Rat>> atoms;
  for (const auto& s : e.summands()) {
    cumulative += s.rank;
    jumps.push_back(s.mu);
    dims.push_back(cumulative);
    Mat stage(static_cast<std::size_t>(cumulative), dim);
    for (std::size_t i = 0; i < stage.rows; ++i) stage.at(i, i) = 1;
    flag.push_back(std::move(stage));
    atoms.emplace_back(s.mu, rat(s.rank, e.total_rank()));
  }
  DiracMeasure measure(atoms);
  Polygon polygon = polygon_of(measure);
  FilteredSpace space(dim, std::move(flag), jumps);
  return HnData{std::move(jumps), std::move(dims), std::move(measure),
                std::move(polygon), std::move(space)};
}

TensorResult tensor(const SplitBundle& e1, const SplitBundle& e2,
                    const CurveData& c) {
  if (!e1.char0() || !e2.char0())
    throw ValidationError("tensor model needs the char-0 semistability flag on both factors");
  std::vector<BundleSummand> product;
  for (const auto& s : e1.summands())
    for (const auto& t : e2.summands())
      product.push_back({Rat(s.mu + t.mu), s.rank * t.rank});
  SplitBundle bundle(std::move(product), true);

  const SlopeStats s1 = slope_stats(e1);
  const SlopeStats s2 = slope_stats(e2);
  const SlopeStats sp = slope_stats(bundle);
  TensorBoundReport report;
  report.a = Rat(c.a());
  report.mu_max_actual = sp.mu_max;
  report.mu_min_actual = sp.mu_min;
  report.mu_max_bound = Rat(s1.mu_max + s2.mu_max + report.a);
  report.mu_min_bound = Rat(s1.mu_min + s2.mu_min - report.a);
  report.upper_strict = sp.mu_max < report.mu_max_bound;
  report.lower_strict = sp.mu_min > report.mu_min_bound;
  report.max_additive = sp.mu_max == s1.mu_max + s2.mu_max;
  report.min_additive = sp.mu_min == s1.mu_min + s2.mu_min;
  report.margin = rat_min(Rat(report.mu_max_bound - sp.mu_max),
                          Rat(sp.mu_min - report.mu_min_bound));
  return TensorResult{std::move(bundle), std::move(report)};
}

SplitBundle sym_power_decomposition(const std::vector<BundleSummand>& summands,
                                    long n, std::uint64_t budget) {
  require_summands(summands);
  if (n < 0) throw ValidationError("symmetric power degree must be nonnegative");
  const long m = static_cast<long>(summands.size());
  const Int splits = binomial(n + m - 1, m - 1);
  if (splits > budget)
    throw BudgetError("degree splittings exceed the budget",
                      splits.fits_ulong_p() ? splits.get_ui() : ~0ULL);

  std::vector<BundleSummand> parts;
  for (const Composition& d : enumerate_delta(n, m)) {
    Rat slope(0);
    Int rank(1);
    for (long i = 0; i < m; ++i) {
      slope += d[static_cast<std::size_t>(i)] * summands[static_cast<std::size_t>(i)].mu;
      rank *= binomial(d[static_cast<std::size_t>(i)] + summands[static_cast<std::size_t>(i)].rank - 1,
                       summands[static_cast<std::size_t>(i)].rank - 1);
    }
    parts.push_back({std::move(slope), rank_to_long(rank)});
  }
  return SplitBundle(std::move(parts), true);
}

DiracMeasure sym_measure(const std::vector<BundleSummand>& summands, long n,
                         std::uint64_t budget) {
  if (n == 0) {
    require_summands(summands);
    return DiracMeasure::dirac(Rat(0));
  }
  SplitBundle bundle = sym_power_decomposition(summands, n, budget);
  std::vector<std::pair<Rat, Rat>> atoms;
  for (const auto& s : bundle.summands())
    atoms.emplace_back(Rat(s.mu / n), rat(s.rank, bundle.total_rank()));
  return DiracMeasure(atoms);
}

Rat limit_cdf(const std::vector<BundleSummand>& summands, const Rat& x) {
  require_summands(summands);
  if (summands.size() != 2 || summands[0].rank != 1 || summands[1].rank != 1)
    throw ValidationError("closed-form limit needs exactly two rank-1 summands");
  const Rat lo = rat_min(summands[0].mu, summands[1].mu);
  const Rat hi = rat_max(summands[0].mu, summands[1].mu);
  if (lo == hi)
    throw ValidationError("closed-form limit needs two distinct slopes");
  if (x <= lo) return Rat(0);
  if (x >= hi) return Rat(1);
  return Rat((x - lo) / (hi - lo));
}

double limit_cdf(const std::vector<BundleSummand>& summands, double x,
                 const McParams& params) {
  require_summands(summands);
  if (params.samples < 1) throw ValidationError("sample count must be positive");
  std::vector<double> mu;
  std::vector<long> ranks;
  for (const auto& s : summands) {
    mu.push_back(to_double(s.mu));
    ranks.push_back(s.rank);
  }
  std::mt19937_64 rng(params.seed);
  long hits = 0;
  std::vector<double> group(mu.size());
  for (long s = 0; s < params.samples; ++s) {
    double total = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      double g = 0.0;
      for (long j = 0; j < ranks[i]; ++j) g += -std::log(1.0 - u64_to_unit(rng()));
      group[i] = g;
      total += g;
    }
    double phi = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) phi += mu[i] * group[i] / total;
    if (phi <= x) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(params.samples);
}

Rat TwoLineLimit::eval(const Rat& t) const {
  return Rat(linear * t + quadratic * t * t);
}

TwoLineLimit two_line_limit_polygon(const Rat& mu1, const Rat& mu2) {
  if (!(mu1 < mu2)) throw ValidationError("limit polygon needs mu1 < mu2");
  return TwoLineLimit{mu2, Rat((mu1 - mu2) / 2)};
}

}  // namespace hnpoly
