#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hnpoly/errors.hpp"
#include "hnpoly/rational.hpp"

namespace hnpoly {

// Deterministic sequence a_1, a_2, ... evaluated on demand. `exact` is
// optional; when present the certified quantities are also computed in
// rational arithmetic.
struct SequenceOracle {
  std::function<double(long)> value;
  std::function<Rat(long)> exact;
  long n_max = 0;
};

// Nonnegative error allowance f(n). `monotone` promises weak increase,
// required by the log-summable machinery.
struct ErrorFn {
  std::function<double(long)> value;
  std::function<Rat(long)> exact;
  bool monotone = false;

  static ErrorFn zero();
  static ErrorFn constant(const Rat& c);
};

enum class FeketeMode { subadditive, superadditive };

struct FeketeResult {
  // subadditive: certified upper bound min_n (a_n + f(n))/n;
  // superadditive: certified lower bound max_n (a_n - f(n))/n.
  // Certified modulo the caller-asserted sub/super-additivity hypothesis.
  double bound = 0;
  double estimate = 0;  // a(n_max)/n_max
  std::optional<Rat> bound_exact;
  std::optional<Rat> estimate_exact;
};

FeketeResult fekete_bracket(const SequenceOracle& a, const ErrorFn& f,
                            FeketeMode mode, long n_max);

struct ConstantErrorResult {
  double estimate = 0;     // a(n_max)/n_max
  double lower_bound = 0;  // max_n (a_n - c1)/n
  std::optional<Rat> estimate_exact;
  std::optional<Rat> lower_bound_exact;
  long pairs_checked = 0;
  bool pairs_exhaustive = false;
};

// Limit of a_n/n for sequences with a_{m+n} >= a_m + a_n - c1 and
// a_n <= c2*n. Both hypotheses are verified: the linear bound for every
// n <= n_max, the pair inequality exhaustively when the pair count fits the
// budget and on a seeded sample otherwise. Violations raise
// HypothesisViolationError listing the offending pairs.
ConstantErrorResult constant_error_limit(const SequenceOracle& a, const Rat& c1,
                                         const Rat& c2, long n_max,
                                         long pair_budget = -1);

struct LogSummableResult {
  double partial_sum = 0;  // sum_{alpha <= alpha_max} f(2^alpha)/2^alpha
  double cesaro = 0;       // 2^{-alpha_max} sum_{i <= alpha_max} f(2^i)
  std::optional<Rat> partial_sum_exact;
  std::optional<Rat> cesaro_exact;
};

// Dyadic summability report for a monotone error function; for log-summable
// f the cesaro value vanishes along growing alpha_max.
LogSummableResult log_summable_check(const ErrorFn& f, int alpha_max);

struct PseudoLimitResult {
  double estimate = 0;          // a(n_max)/n_max
  std::vector<double> dyadic;   // a(2^k)/2^k for 4 <= 2^k <= n_max
  double oscillation = 0;       // worst gap over all probes
  double tail_oscillation = 0;  // worst gap over the upper half of k
  bool converged = false;       // tail_oscillation <= osc_tol
  long pairs_checked = 0;
};

// Estimate of lim a_n/n under the almost-subadditive hypothesis
// a_{m+n} <= a_m + a_n + f(m) + f(n), with a divergence diagnostic that
// compares estimates at n = 2^k against n = 2^k - 1. pair_samples > 0 turns
// on the seeded spot-check of the hypothesis.
PseudoLimitResult pseudo_limit(const SequenceOracle& a, const ErrorFn& f,
                               long n_max, double osc_tol = 0.05,
                               long pair_samples = 0);

}  // namespace hnpoly
