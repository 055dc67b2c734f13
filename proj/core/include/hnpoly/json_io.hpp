#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hnpoly/bigraded.hpp"
#include "hnpoly/bundles.hpp"
#include "hnpoly/filtration.hpp"
#include "hnpoly/graded.hpp"
#include "hnpoly/measure.hpp"
#include "hnpoly/polygon.hpp"

// JSON forms used by the CLI and report files. Rationals travel as exact
// "p/q" strings and round-trip bit for bit; doubles appear only in
// Monte-Carlo fields and are printed through fmt_double.

namespace hnpoly {

using Json = nlohmann::json;

// 12 significant digits, the only float format reports use
std::string fmt_double(double x);

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// {"dim": N, "flag": [matrix...], "jumps": ["p/q"...]}
Json space_to_json(const FilteredSpace& v);
FilteredSpace space_from_json(const Json& j);

// [["position","mass"], ...]
Json measure_to_json(const DiracMeasure& nu);
DiracMeasure measure_from_json(const Json& j);

// {"knots": [...], "slopes": [...]}
Json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

// {"d": N, "base_weights": ["p/q"...], "perturbation": {"bound": "p/q",
//  "seed": N}, "n0": N, "slope_cap": "p/q"} — perturbation may instead be
// "table": [{"alpha": [...], "weight": "p/q"}...]; n0 and slope_cap optional
MonomialModel model_from_json(const Json& j);

// {"curve": {"g": N, "b": N}, "summands": [{"mu": "p/q", "rank": N}...],
//  "char0": bool}
struct BundleInput {
  CurveData curve;
  std::vector<BundleSummand> summands;
  bool char0 = true;
};

BundleInput bundle_from_json(const Json& j);

// {"numerator": [{"n": N, "d": N, "coeff": N}...], "denominators": [...]}
BiSeries series_from_json(const Json& j);

Json parse_json_text(const std::string& text);  // ValidationError on bad syntax

}  // namespace hnpoly
