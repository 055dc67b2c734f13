#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnpoly/coupling.hpp"
#include "hnpoly/limits.hpp"
#include "hnpoly/measure.hpp"
#include "hnpoly/polygon.hpp"

namespace hnpoly {

// Graded algebra model where degree n is spanned by the monomials of
// Delta_n^(d) and the filtration index of a monomial is `weight`. The index
// of a general element is the minimum weight over its support, so all
// criteria reduce to weight inequalities.
struct MonomialModel {
  long d = 0;
  std::function<Rat(const Composition&)> weight;
  long n0 = 1;                   // smallest degree the criteria quantify over
  std::optional<Rat> slope_cap;  // declared bound on weight(alpha)/|alpha|
  std::string description;

  // weight(alpha) = sum alpha_i w_i
  static MonomialModel linear(std::vector<Rat> base_weights);
  // linear weights plus a seeded perturbation with values in
  // {bound*k/16 : k = -16..16}, a pure function of (seed, alpha)
  static MonomialModel perturbed(std::vector<Rat> base_weights, Rat bound,
                                 std::uint64_t seed);
  // explicit weight table; evaluating an unlisted composition throws
  static MonomialModel from_table(long d, std::map<Composition, Rat> table);
};

// Piecewise-linear concave increasing test function with declared Lipschitz
// constant c >= every slope; extended affinely beyond the outer knots.
class ConcaveTestFn {
public:
  ConcaveTestFn(std::vector<Rat> xs, std::vector<Rat> ys, Rat lipschitz);

  Rat eval(const Rat& x) const;
  const Rat& lipschitz() const { return lipschitz_; }

  static ConcaveTestFn identity();  // g(x) = x, c = 1
  static ConcaveTestFn constant(const Rat& v);

private:
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
  Rat lipschitz_;
};

struct CriterionWitness {
  std::vector<Composition> parts;
  Rat lhs;  // weight of the product monomial
  Rat rhs;  // sum of part weights minus error allowances
};

struct CriterionReport {
  bool passed = false;
  std::uint64_t cases_checked = 0;
  std::optional<CriterionWitness> witness;
};

// weight(alpha_1+...+alpha_r) >= sum_i (weight(alpha_i) - f(n_i)) for every
// factorization with r in 2..r_max, parts n_i >= m.n0, sum n_i <= N.
// Needs an exact error function; the case count is guarded by `budget`.
CriterionReport check_quasi_filtered(const MonomialModel& m, const ErrorFn& f,
                                     long N, long r_max,
                                     std::uint64_t budget = 50000000);

// Pairwise products only (r = 2).
CriterionReport check_pseudo_filtered(const MonomialModel& m, const ErrorFn& f,
                                      long N, std::uint64_t budget = 50000000);

// Equal-mass measure of the degree-n weights:
// (1/C(n+d-1,d-1)) sum over Delta_n^(d) of the Dirac mass at weight(alpha).
DiracMeasure model_measure(const MonomialModel& m, long n,
                           std::uint64_t budget = 2000000);

// Exact integral of g against the 1/n-dilated degree-n measure.
Rat integral_I(const MonomialModel& m, const ConcaveTestFn& g, long n,
               std::uint64_t budget = 2000000);

struct SuperadditivityCase {
  std::vector<long> parts;
  Rat lhs;  // N * I_N
  Rat rhs;  // sum_i (n_i I_{n_i} - c f(n_i))
  bool holds = false;
};

struct SuperadditivityReport {
  bool all_hold = false;
  std::vector<SuperadditivityCase> cases;
};

// N I_N >= sum_i (n_i I_{n_i} - c f(n_i)) for each listed partition
// (n_1,...,n_r) of some N; exact arithmetic throughout.
SuperadditivityReport superadditivity_check(
    const MonomialModel& m, const ConcaveTestFn& g,
    const std::vector<std::vector<long>>& partitions, const ErrorFn& f);

// All partitions of N into at most max_parts parts, each >= min_part,
// non-increasing within a partition.
std::vector<std::vector<long>> partitions_of(long N, long max_parts,
                                             long min_part = 1);

struct ConvergenceProbe {
  long n = 0;            // dyadic probe point 2^k
  DiracMeasure measure;  // 1/n-dilated measure at n
  Polygon polygon;
  Rat dist_prev;  // sup distance to the previous dyadic polygon
  Rat dist_pair;  // sup distance between the polygons at n and n-1
};

struct ConvergenceReport {
  std::vector<ConvergenceProbe> probes;
  Rat oscillation;       // worst distance over all probes
  Rat tail_oscillation;  // worst distance over the upper half of the probes
  bool converged = false;
  Rat tol;
};

// Convergence diagnostic for any normalized measure sequence: polygons at
// n = 2^k are compared with each other and with n = 2^k - 1; the sequence
// passes when the tail oscillation stays within tol.
ConvergenceReport convergence_probe_sequence(
    const std::function<DiracMeasure(long)>& normalized_measure, long n_max,
    const Rat& tol = rat(1, 8));

// The same diagnostic on T_{1/n} of the model's degree-n measures, after
// verifying the declared linear weight bound at every probed degree.
ConvergenceReport convergence_run(const MonomialModel& m, long n_max,
                                  const Rat& tol = rat(1, 8),
                                  std::uint64_t budget = 2000000);

}  // namespace hnpoly
