#pragma once

#include <string>

#include "hnpoly/measure.hpp"
#include "hnpoly/polygon.hpp"

namespace hnpoly {

// "position,mass" rows, exact "p/q" strings.
std::string measure_to_csv(const DiracMeasure& nu);

// "t,P(t)" rows at the knots, exact strings. dense_samples > 0 appends
// float rows at t = k / dense_samples for plotting.
std::string polygon_to_csv(const Polygon& p, long dense_samples = 0);

}  // namespace hnpoly
