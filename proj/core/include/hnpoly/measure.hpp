#pragma once

#include <utility>
#include <vector>

#include "hnpoly/rational.hpp"

namespace hnpoly {

// Finite nonnegative combination of Dirac masses on the line, kept canonical:
// positions strictly increasing, masses > 0, cached total. The empty atom
// list is the zero measure.
class DiracMeasure {
public:
  using Atom = std::pair<Rat, Rat>;  // (position, mass)

  DiracMeasure() : total_(0) {}
  // Merges coincident positions, drops zero masses, rejects negative ones.
  explicit DiracMeasure(std::vector<Atom> atoms);

  static DiracMeasure dirac(const Rat& position) {
    return DiracMeasure({{position, Rat(1)}});
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const Rat& total() const { return total_; }
  bool empty() const { return atoms_.empty(); }
  bool is_probability() const { return total_ == 1; }

  friend bool operator==(const DiracMeasure&, const DiracMeasure&) = default;

private:
  std::vector<Atom> atoms_;
  Rat total_;
};

enum class TailKind { closed, open };

// Mass of [x, +inf) or (x, +inf).
Rat tail_mass(const DiracMeasure& nu, const Rat& x, TailKind kind);

// nu1 dominates nu2 iff every closed upper tail of nu1 is >= the same tail of
// nu2. Requires equal totals; decided exactly at the atom positions.
bool dominates(const DiracMeasure& nu1, const DiracMeasure& nu2);

DiracMeasure translate(const DiracMeasure& nu, const Rat& c);

// Pushforward by x -> eps*x, eps > 0.
DiracMeasure dilate(const DiracMeasure& nu, const Rat& eps);

// Weighted sum; weights must be >= 0.
DiracMeasure combine(const std::vector<std::pair<Rat, DiracMeasure>>& parts);

// max over the grid of |closed-tail difference|.
Rat cdf_sup_distance(const DiracMeasure& nu1, const DiracMeasure& nu2,
                     const std::vector<Rat>& grid);

Rat mean(const DiracMeasure& nu);

// Mass of (-inf, x].
Rat cdf_value(const DiracMeasure& nu, const Rat& x);

// The function x -> nu(]x, +inf[) of a probability measure: a decreasing
// right-continuous step with limits 1 and 0. values[i] holds on
// [breakpoints[i], breakpoints[i+1]); the value before the first breakpoint
// is 1, and the last value is 0.
struct SurvivalFn {
  std::vector<Rat> breakpoints;
  std::vector<Rat> values;
};

SurvivalFn survival(const DiracMeasure& nu);

}  // namespace hnpoly
