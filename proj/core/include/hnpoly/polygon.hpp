#pragma once

#include <vector>

#include "hnpoly/measure.hpp"

namespace hnpoly {

// Decreasing right-continuous step function on (0,1): the quasi-inverse
// t -> sup{ x : f(x) > t } of a survival function. values[i] holds on
// [cuts[i-1], cuts[i]) intersected with (0,1), with cuts[-1] = 0 and
// cuts[size] = 1 implied.
struct StepFn {
  std::vector<Rat> cuts;    // strictly increasing, inside (0,1)
  std::vector<Rat> values;  // strictly decreasing, size == cuts.size() + 1

  Rat eval(const Rat& t) const;
};

StepFn quasi_inverse(const SurvivalFn& f);

// Concave piecewise-linear function P on [0,1] with P(0) = 0, stored as
// knots 0 = t_0 < ... < t_n = 1 and strictly decreasing segment slopes.
class Polygon {
public:
  Polygon(std::vector<Rat> knots, std::vector<Rat> slopes);

  const std::vector<Rat>& knots() const { return knots_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  // P(t_j) for every knot.
  std::vector<Rat> values() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

private:
  std::vector<Rat> knots_;
  std::vector<Rat> slopes_;
};

// Integral of the quasi-inverse of the survival function of nu: knots at the
// cumulative masses counted from the top atom down, slopes the atom
// positions in decreasing order. Requires a probability measure.
Polygon polygon_of(const DiracMeasure& nu);

Rat eval(const Polygon& p, const Rat& t);

// Exact sup |P1 - P2| over [0,1]; the difference is piecewise linear, so the
// sup is attained on the union of the knot sets.
Rat sup_distance(const Polygon& p1, const Polygon& p2);

Polygon scale_polygon(const Polygon& p, const Rat& eps);  // eps > 0
Polygon shear_polygon(const Polygon& p, const Rat& a);

// Round trip: the probability measure whose polygon is p.
DiracMeasure measure_of(const Polygon& p);

}  // namespace hnpoly
