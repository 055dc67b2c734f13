#include "hnpoly/limits.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hnpoly {

namespace {

void require_oracle(const SequenceOracle& a, long n_max) {
  if (!a.value) throw ValidationError("sequence oracle has no evaluator");
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (a.n_max > 0 && n_max > a.n_max)
    throw ValidationError("n_max exceeds the oracle's declared range");
}

double error_value(const ErrorFn& f, long n) {
  if (!f.value) throw ValidationError("error function has no evaluator");
  const double v = f.value(n);
  if (v < 0) throw ValidationError("error function must be nonnegative");
  return v;
}

// Relative slack shielding the float-path hypothesis checks from roundoff;
// the exact path compares rationals strictly.
double pair_slack(double scale) {
  return 1e-9 * std::max(1.0, std::fabs(scale));
}

}  // namespace

ErrorFn ErrorFn::zero() {
  return ErrorFn{[](long) { return 0.0; }, [](long) { return Rat(0); }, true};
}

ErrorFn ErrorFn::constant(const Rat& c) {
  if (c < 0) throw ValidationError("error constant must be nonnegative");
  const double cd = to_double(c);
  return ErrorFn{[cd](long) { return cd; }, [c](long) { return c; }, true};
}

FeketeResult fekete_bracket(const SequenceOracle& a, const ErrorFn& f,
                            FeketeMode mode, long n_max) {
  require_oracle(a, n_max);
  FeketeResult out;
  const bool exact = a.exact && f.exact;
  std::optional<Rat> bound_exact;
  double bound = 0;
  for (long n = 1; n <= n_max; ++n) {
    const double fn = error_value(f, n);
    const double cand = (mode == FeketeMode::subadditive)
                            ? (a.value(n) + fn) / static_cast<double>(n)
                            : (a.value(n) - fn) / static_cast<double>(n);
    if (n == 1)
      bound = cand;
    else
      bound = (mode == FeketeMode::subadditive) ? std::min(bound, cand)
                                                : std::max(bound, cand);
    if (exact) {
      Rat cand_exact;
      if (mode == FeketeMode::subadditive)
        cand_exact = (a.exact(n) + f.exact(n)) / n;
      else
        cand_exact = (a.exact(n) - f.exact(n)) / n;
      if (!bound_exact)
        bound_exact = cand_exact;
      else
        bound_exact = (mode == FeketeMode::subadditive)
                          ? rat_min(*bound_exact, cand_exact)
                          : rat_max(*bound_exact, cand_exact);
    }
  }
  out.bound = bound;
  out.estimate = a.value(n_max) / static_cast<double>(n_max);
  if (exact) {
    out.bound_exact = bound_exact;
    out.estimate_exact = a.exact(n_max) / n_max;
  }
  return out;
}

ConstantErrorResult constant_error_limit(const SequenceOracle& a, const Rat& c1,
                                         const Rat& c2, long n_max,
                                         long pair_budget) {
  require_oracle(a, n_max);
  if (c1 < 0) throw ValidationError("c1 must be nonnegative");
  if (c2 <= 0) throw ValidationError("c2 must be positive");
  const double c1d = to_double(c1);
  const double c2d = to_double(c2);
  const bool exact = static_cast<bool>(a.exact);

  std::vector<PairViolation> violations;
  auto note = [&violations](const char* kind, long m, long n, double lhs, double rhs) {
    if (violations.size() < 16)
      violations.push_back(PairViolation{kind, m, n, lhs, rhs});
  };

  ConstantErrorResult out;
  // Linear upper bound a_n <= c2*n, plus the certified lower bound scan.
  for (long n = 1; n <= n_max; ++n) {
    const double an = a.value(n);
    if (exact) {
      const Rat ar = a.exact(n);
      if (ar > c2 * n) note("upper_bound", 0, n, to_double(ar), c2d * n);
      const Rat cand = (ar - c1) / n;
      if (n == 1 || cand > *out.lower_bound_exact) out.lower_bound_exact = cand;
    } else if (an > c2d * n + pair_slack(c2d * n)) {
      note("upper_bound", 0, n, an, c2d * n);
    }
    const double cand = (an - c1d) / static_cast<double>(n);
    if (n == 1 || cand > out.lower_bound) out.lower_bound = cand;
  }

  auto check_pair = [&](long m, long n) {
    ++out.pairs_checked;
    if (exact) {
      if (a.exact(m + n) < a.exact(m) + a.exact(n) - c1)
        note("pair", m, n, to_double(a.exact(m + n)),
             to_double(a.exact(m) + a.exact(n) - c1));
      return;
    }
    const double lhs = a.value(m + n);
    const double rhs = a.value(m) + a.value(n) - c1d;
    if (lhs < rhs - pair_slack(rhs)) note("pair", m, n, lhs, rhs);
  };

  const long budget = pair_budget < 0 ? 20000 : pair_budget;
  // Exhaustive pair count for m <= n, m+n <= n_max.
  long total = 0;
  for (long m = 1; 2 * m <= n_max; ++m) total += n_max - 2 * m + 1;
  if (total <= budget) {
    out.pairs_exhaustive = true;
    for (long m = 1; 2 * m <= n_max; ++m)
      for (long n = m; m + n <= n_max; ++n) check_pair(m, n);
  } else if (budget > 0) {
    std::mt19937_64 rng(0x70616972ULL);  // fixed seed: deterministic reports
    std::uniform_int_distribution<long> pick(1, n_max - 1);
    for (long t = 0; t < budget; ++t) {
      const long m = pick(rng);
      if (m + 1 > n_max - 1) continue;
      std::uniform_int_distribution<long> pick2(1, n_max - m);
      check_pair(m, pick2(rng));
    }
  }
  if (!violations.empty())
    throw HypothesisViolationError("constant-error hypothesis violated",
                                   std::move(violations));

  out.estimate = a.value(n_max) / static_cast<double>(n_max);
  if (exact) {
    out.estimate_exact = a.exact(n_max) / n_max;
    out.lower_bound = to_double(*out.lower_bound_exact);
  }
  return out;
}

LogSummableResult log_summable_check(const ErrorFn& f, int alpha_max) {
  if (!f.monotone) throw ValidationError("log-summable check needs a monotone error function");
  if (alpha_max < 0) throw ValidationError("alpha_max must be nonnegative");
  LogSummableResult out;
  const bool exact = static_cast<bool>(f.exact);
  Rat partial(0), tail_sum(0);
  double sum = 0;
  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    const long n = 1L << alpha;
    const double v = error_value(f, n);
    out.partial_sum += v / static_cast<double>(n);
    sum += v;
    if (exact) {
      partial += f.exact(n) / n;
      tail_sum += f.exact(n);
    }
  }
  out.cesaro = sum / static_cast<double>(1L << alpha_max);
  if (exact) {
    out.partial_sum_exact = partial;
    out.cesaro_exact = tail_sum / Rat(1L << alpha_max);
  }
  return out;
}

PseudoLimitResult pseudo_limit(const SequenceOracle& a, const ErrorFn& f,
                               long n_max, double osc_tol, long pair_samples) {
  require_oracle(a, n_max);
  if (n_max < 4) throw ValidationError("pseudo_limit needs n_max >= 4");

  if (pair_samples > 0) {
    std::vector<PairViolation> violations;
    std::mt19937_64 rng(0x70736575ULL);
    std::uniform_int_distribution<long> pick(1, n_max - 1);
    for (long t = 0; t < pair_samples && violations.size() < 16; ++t) {
      const long m = pick(rng);
      if (m + 1 > n_max) continue;
      std::uniform_int_distribution<long> pick2(1, n_max - m);
      const long n = pick2(rng);
      const double lhs = a.value(m + n);
      const double rhs = a.value(m) + a.value(n) + error_value(f, m) + error_value(f, n);
      if (lhs > rhs + pair_slack(rhs))
        violations.push_back(PairViolation{"pair", m, n, lhs, rhs});
    }
    if (!violations.empty())
      throw HypothesisViolationError("almost-subadditivity violated",
                                     std::move(violations));
  }

  PseudoLimitResult out;
  out.pairs_checked = pair_samples;
  std::vector<double> pair_gap, step_gap;
  int k_lo = 2, k_hi = 2;
  for (int k = 2; (1L << k) <= n_max; ++k) {
    k_hi = k;
    const long n = 1L << k;
    const double dk = a.value(n) / static_cast<double>(n);
    const double mk = a.value(n - 1) / static_cast<double>(n - 1);
    if (!out.dyadic.empty()) step_gap.push_back(std::fabs(dk - out.dyadic.back()));
    out.dyadic.push_back(dk);
    pair_gap.push_back(std::fabs(dk - mk));
  }
  const int window_lo = (k_lo + k_hi + 1) / 2;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double g = std::max(pair_gap[static_cast<std::size_t>(k - k_lo)],
                              k > k_lo ? step_gap[static_cast<std::size_t>(k - k_lo - 1)] : 0.0);
    out.oscillation = std::max(out.oscillation, g);
    if (k >= window_lo) out.tail_oscillation = std::max(out.tail_oscillation, g);
  }
  out.converged = out.tail_oscillation <= osc_tol;
  out.estimate = a.value(n_max) / static_cast<double>(n_max);
  return out;
}

}  // namespace hnpoly
