#include "hnpoly/graded.hpp"

#include <algorithm>
#include <numeric>

#include "hnpoly/rng.hpp"

namespace hnpoly {

namespace {

void require_model(const MonomialModel& m) {
  if (m.d < 1) throw ValidationError("model needs at least one variable");
  if (!m.weight) throw ValidationError("model has no weight oracle");
  if (m.n0 < 1) throw ValidationError("degree threshold must be at least 1");
}

Rat linear_weight(const std::vector<Rat>& w, const Composition& alpha) {
  if (alpha.size() != w.size())
    throw ValidationError("composition length differs from variable count");
  Rat s(0);
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * alpha[i];
  return s;
}

void check_budget(const Int& required, std::uint64_t budget, const char* what) {
  if (required > Int(static_cast<unsigned long>(budget)))
    throw BudgetError(what, required.fits_ulong_p()
                                ? required.get_ui()
                                : static_cast<std::uint64_t>(-1));
}

}  // namespace

MonomialModel MonomialModel::linear(std::vector<Rat> base_weights) {
  if (base_weights.empty()) throw ValidationError("empty base weight list");
  MonomialModel m;
  m.d = static_cast<long>(base_weights.size());
  Rat cap = base_weights.front();
  for (const Rat& w : base_weights) cap = rat_max(cap, w);
  m.slope_cap = rat_max(cap, Rat(0));
  m.description = "linear";
  m.weight = [w = std::move(base_weights)](const Composition& alpha) {
    return linear_weight(w, alpha);
  };
  return m;
}

MonomialModel MonomialModel::perturbed(std::vector<Rat> base_weights, Rat bound,
                                       std::uint64_t seed) {
  if (base_weights.empty()) throw ValidationError("empty base weight list");
  if (bound < 0) throw ValidationError("perturbation bound must be nonnegative");
  MonomialModel m;
  m.d = static_cast<long>(base_weights.size());
  Rat cap = base_weights.front();
  for (const Rat& w : base_weights) cap = rat_max(cap, w);
  m.slope_cap = rat_max(Rat(cap + bound), Rat(0));
  m.description = "perturbed seed=" + std::to_string(seed);
  m.weight = [w = std::move(base_weights), bound,
              seed](const Composition& alpha) {
    const long k =
        static_cast<long>(mix_tuple(seed, alpha) % 33) - 16;  // -16..16
    return Rat(linear_weight(w, alpha) + bound * k / 16);
  };
  return m;
}

MonomialModel MonomialModel::from_table(long d, std::map<Composition, Rat> table) {
  if (d < 1) throw ValidationError("model needs at least one variable");
  MonomialModel m;
  m.d = d;
  m.description = "table";
  m.weight = [t = std::move(table)](const Composition& alpha) {
    auto it = t.find(alpha);
    if (it == t.end()) throw ValidationError("weight table has no entry for composition");
    return it->second;
  };
  return m;
}

ConcaveTestFn::ConcaveTestFn(std::vector<Rat> xs, std::vector<Rat> ys,
                             Rat lipschitz)
    : xs_(std::move(xs)), ys_(std::move(ys)), lipschitz_(std::move(lipschitz)) {
  if (xs_.empty() || xs_.size() != ys_.size())
    throw ValidationError("test function needs matching nonempty knot lists");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (xs_[i] >= xs_[i + 1])
      throw ValidationError("test function knots not strictly increasing");
  if (lipschitz_ < 0) throw ValidationError("Lipschitz constant must be nonnegative");
  Rat prev_slope = lipschitz_;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    const Rat slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    if (slope < 0) throw ValidationError("test function must be increasing");
    if (slope > prev_slope)
      throw ValidationError("test function slopes must be concave and c-bounded");
    prev_slope = slope;
  }
}

Rat ConcaveTestFn::eval(const Rat& x) const {
  if (xs_.size() == 1) return ys_.front();
  if (x <= xs_.front()) {
    const Rat slope = (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
    return ys_.front() + slope * (x - xs_.front());
  }
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (x <= xs_[i + 1]) {
      const Rat slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
      return ys_[i] + slope * (x - xs_[i]);
    }
  const std::size_t k = xs_.size() - 1;
  const Rat slope = (ys_[k] - ys_[k - 1]) / (xs_[k] - xs_[k - 1]);
  return ys_[k] + slope * (x - xs_[k]);
}

ConcaveTestFn ConcaveTestFn::identity() {
  return ConcaveTestFn({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, Rat(1));
}

ConcaveTestFn ConcaveTestFn::constant(const Rat& v) {
  return ConcaveTestFn({Rat(0)}, {v}, Rat(0));
}

std::vector<std::vector<long>> partitions_of(long N, long max_parts,
                                             long min_part) {
  if (N < 1 || max_parts < 1 || min_part < 1)
    throw ValidationError("partition parameters must be positive");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  // non-increasing parts, largest first
  std::function<void(long, long, long)> rec = [&](long rest, long parts_left,
                                                  long max_val) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (parts_left == 0) return;
    for (long v = std::min(rest, max_val); v >= min_part; --v) {
      cur.push_back(v);
      rec(rest - v, parts_left - 1, v);
      cur.pop_back();
    }
  };
  rec(N, max_parts, N);
  return out;
}

namespace {

// Shared engine: iterate the product of Delta_{n_i}^{(d)} for every
// qualifying part list and test the weight inequality.
CriterionReport run_criterion(const MonomialModel& m, const ErrorFn& f, long N,
                              long r_min, long r_max, std::uint64_t budget) {
  require_model(m);
  if (N < 2) throw ValidationError("degree bound must be at least 2");
  if (r_max < 2) throw ValidationError("r_max must be at least 2");
  if (!f.exact) throw ValidationError("criterion checking needs an exact error function");

  // Count tuples first so the budget error fires before any work.
  Int total(0);
  std::vector<std::vector<long>> part_lists;
  for (long r = r_min; r <= r_max; ++r)
    for (long total_deg = r * m.n0; total_deg <= N; ++total_deg)
      for (auto& p : partitions_of(total_deg, r, m.n0))
        if (static_cast<long>(p.size()) == r) part_lists.push_back(p);
  for (const auto& p : part_lists) {
    Int prod(1);
    for (long n : p) prod *= binomial(n + m.d - 1, m.d - 1);
    total += prod;
  }
  check_budget(total, budget, "criterion case count exceeds budget");

  CriterionReport report;
  report.passed = true;
  for (const auto& parts : part_lists) {
    const long r = static_cast<long>(parts.size());
    std::vector<std::vector<Composition>> lists;
    for (long n : parts) lists.push_back(enumerate_delta(n, m.d));
    Rat allowance(0);
    for (long n : parts) allowance += f.exact(n);

    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    for (;;) {
      Composition sum(static_cast<std::size_t>(m.d), 0);
      Rat part_weights(0);
      for (long i = 0; i < r; ++i) {
        const Composition& alpha =
            lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        for (long j = 0; j < m.d; ++j) sum[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(j)];
        part_weights += m.weight(alpha);
      }
      ++report.cases_checked;
      const Rat lhs = m.weight(sum);
      const Rat rhs = part_weights - allowance;
      if (lhs < rhs) {
        report.passed = false;
        CriterionWitness w;
        for (long i = 0; i < r; ++i)
          w.parts.push_back(
              lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
        w.lhs = lhs;
        w.rhs = rhs;
        report.witness = std::move(w);
        return report;
      }

      long carry = r - 1;
      while (carry >= 0) {
        std::size_t& p = idx[static_cast<std::size_t>(carry)];
        if (++p < lists[static_cast<std::size_t>(carry)].size()) break;
        p = 0;
        --carry;
      }
      if (carry < 0) break;
    }
  }
  return report;
}

}  // namespace

CriterionReport check_quasi_filtered(const MonomialModel& m, const ErrorFn& f,
                                     long N, long r_max, std::uint64_t budget) {
  return run_criterion(m, f, N, 2, r_max, budget);
}

CriterionReport check_pseudo_filtered(const MonomialModel& m, const ErrorFn& f,
                                      long N, std::uint64_t budget) {
  return run_criterion(m, f, N, 2, 2, budget);
}

DiracMeasure model_measure(const MonomialModel& m, long n, std::uint64_t budget) {
  require_model(m);
  if (n < 0) throw ValidationError("degree must be nonnegative");
  check_budget(binomial(n + m.d - 1, m.d - 1), budget,
               "degree slice exceeds budget");
  const auto monomials = enumerate_delta(n, m.d);
  const Rat share = rat(Int(1), Int(static_cast<long>(monomials.size())));
  std::vector<DiracMeasure::Atom> atoms;
  atoms.reserve(monomials.size());
  for (const auto& alpha : monomials) atoms.emplace_back(m.weight(alpha), share);
  return DiracMeasure(std::move(atoms));
}

Rat integral_I(const MonomialModel& m, const ConcaveTestFn& g, long n,
               std::uint64_t budget) {
  if (n < 1) throw ValidationError("integral needs degree >= 1");
  DiracMeasure nu = model_measure(m, n, budget);
  Rat sum(0);
  for (const auto& [pos, mass] : nu.atoms()) sum += mass * g.eval(Rat(pos / n));
  return sum;
}

SuperadditivityReport superadditivity_check(
    const MonomialModel& m, const ConcaveTestFn& g,
    const std::vector<std::vector<long>>& partitions, const ErrorFn& f) {
  require_model(m);
  if (!f.exact) throw ValidationError("superadditivity check needs an exact error function");
  SuperadditivityReport report;
  report.all_hold = true;
  std::map<long, Rat> cache;
  auto I = [&](long n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, integral_I(m, g, n)).first;
    return it->second;
  };
  for (const auto& parts : partitions) {
    if (parts.empty()) throw ValidationError("empty partition");
    const long N = std::accumulate(parts.begin(), parts.end(), 0L);
    SuperadditivityCase c;
    c.parts = parts;
    c.lhs = Rat(N * I(N));
    c.rhs = Rat(0);
    for (long n : parts) {
      if (n < 1) throw ValidationError("partition parts must be positive");
      c.rhs += n * I(n) - g.lipschitz() * f.exact(n);
    }
    c.holds = c.lhs >= c.rhs;
    report.all_hold = report.all_hold && c.holds;
    report.cases.push_back(std::move(c));
  }
  return report;
}

ConvergenceReport convergence_probe_sequence(
    const std::function<DiracMeasure(long)>& normalized_measure, long n_max,
    const Rat& tol) {
  if (!normalized_measure) throw ValidationError("no measure sequence supplied");
  if (n_max < 2) throw ValidationError("n_max must be at least 2");
  if (tol <= 0) throw ValidationError("tolerance must be positive");

  ConvergenceReport report;
  report.tol = tol;
  report.oscillation = Rat(0);
  report.tail_oscillation = Rat(0);
  for (long n = 2; n <= n_max; n *= 2) {
    DiracMeasure nu = normalized_measure(n);
    Polygon poly = polygon_of(nu);
    ConvergenceProbe probe{n, std::move(nu), std::move(poly), Rat(0), Rat(0)};
    probe.dist_pair = n >= 3
                          ? sup_distance(probe.polygon, polygon_of(normalized_measure(n - 1)))
                          : Rat(0);
    probe.dist_prev = report.probes.empty()
                          ? Rat(0)
                          : sup_distance(probe.polygon, report.probes.back().polygon);
    report.probes.push_back(std::move(probe));
  }
  const std::size_t tail_from = report.probes.size() / 2;
  for (std::size_t i = 0; i < report.probes.size(); ++i) {
    Rat g = report.probes[i].dist_pair;
    if (i > 0) g = rat_max(g, report.probes[i].dist_prev);
    report.oscillation = rat_max(report.oscillation, g);
    if (i >= tail_from)
      report.tail_oscillation = rat_max(report.tail_oscillation, g);
  }
  report.converged = report.tail_oscillation <= tol;
  return report;
}

ConvergenceReport convergence_run(const MonomialModel& m, long n_max,
                                  const Rat& tol, std::uint64_t budget) {
  require_model(m);
  if (!m.slope_cap)
    throw ValidationError("convergence run needs a declared linear weight bound");
  auto scaled = [&m, budget](long n) {
    DiracMeasure nu = model_measure(m, n, budget);
    if (!nu.empty() && nu.atoms().back().first > *m.slope_cap * n)
      throw ValidationError("weights exceed the declared linear bound at degree " +
                            std::to_string(n));
    return dilate(nu, rat(1, n));
  };
  return convergence_probe_sequence(scaled, n_max, tol);
}

}  // namespace hnpoly
