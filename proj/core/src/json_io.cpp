#include "hnpoly/json_io.hpp"

#include <cstdio>

#include "hnpoly/errors.hpp"

namespace hnpoly {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    throw ValidationError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array())
    throw ValidationError(std::string("field '") + key + "' must be an array");
  return v;
}

}  // namespace

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw ValidationError("rational values must be \"p/q\" strings");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(std::string("bad rational: ") + e.what());
  }
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of arrays");
  const std::size_t rows = j.size();
  if (rows == 0) return Mat(0, 0);
  if (!j[0].is_array()) throw ValidationError("matrix must be an array of arrays");
  const std::size_t cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j[i][c]);
  }
  return m;
}

Json space_to_json(const FilteredSpace& v) {
  Json j;
  j["dim"] = v.dim();
  Json flag = Json::array();
  for (const Mat& stage : v.flag()) flag.push_back(mat_to_json(stage));
  j["flag"] = std::move(flag);
  Json jumps = Json::array();
  for (const Rat& r : v.jumps()) jumps.push_back(rat_to_json(r));
  j["jumps"] = std::move(jumps);
  return j;
}

FilteredSpace space_from_json(const Json& j) {
  const long dim = need_int(j, "dim");
  if (dim < 0) throw ValidationError("dim must be nonnegative");
  std::vector<Mat> flag;
  for (const Json& stage : need_array(j, "flag")) flag.push_back(mat_from_json(stage));
  std::vector<Rat> jumps;
  for (const Json& r : need_array(j, "jumps")) jumps.push_back(rat_from_json(r));
  return FilteredSpace(static_cast<std::size_t>(dim), std::move(flag), std::move(jumps));
}

Json measure_to_json(const DiracMeasure& nu) {
  Json j = Json::array();
  for (const auto& [pos, mass] : nu.atoms())
    j.push_back(Json::array({rat_to_json(pos), rat_to_json(mass)}));
  return j;
}

DiracMeasure measure_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("measure must be an array of atom pairs");
  std::vector<DiracMeasure::Atom> atoms;
  for (const Json& atom : j) {
    if (!atom.is_array() || atom.size() != 2)
      throw ValidationError("each atom must be a [position, mass] pair");
    atoms.emplace_back(rat_from_json(atom[0]), rat_from_json(atom[1]));
  }
  return DiracMeasure(std::move(atoms));
}

Json polygon_to_json(const Polygon& p) {
  Json j;
  Json knots = Json::array();
  for (const Rat& t : p.knots()) knots.push_back(rat_to_json(t));
  Json slopes = Json::array();
  for (const Rat& s : p.slopes()) slopes.push_back(rat_to_json(s));
  j["knots"] = std::move(knots);
  j["slopes"] = std::move(slopes);
  return j;
}

Polygon polygon_from_json(const Json& j) {
  std::vector<Rat> knots;
  for (const Json& t : need_array(j, "knots")) knots.push_back(rat_from_json(t));
  std::vector<Rat> slopes;
  for (const Json& s : need_array(j, "slopes")) slopes.push_back(rat_from_json(s));
  return Polygon(std::move(knots), std::move(slopes));
}

MonomialModel model_from_json(const Json& j) {
  const long d = need_int(j, "d");
  MonomialModel m;
  if (j.contains("table")) {
    std::map<Composition, Rat> table;
    for (const Json& entry : need_array(j, "table")) {
      Composition alpha;
      for (const Json& a : need_array(entry, "alpha")) {
        if (!a.is_number_integer())
          throw ValidationError("table compositions must hold integers");
        alpha.push_back(a.get<long>());
      }
      table[std::move(alpha)] = rat_from_json(need(entry, "weight"));
    }
    m = MonomialModel::from_table(d, std::move(table));
  } else {
    std::vector<Rat> weights;
    for (const Json& w : need_array(j, "base_weights"))
      weights.push_back(rat_from_json(w));
    if (static_cast<long>(weights.size()) != d)
      throw ValidationError("base_weights length must equal d");
    if (j.contains("perturbation")) {
      const Json& p = j.at("perturbation");
      const Rat bound = rat_from_json(need(p, "bound"));
      const long seed = need_int(p, "seed");
      m = MonomialModel::perturbed(std::move(weights), bound,
                                   static_cast<std::uint64_t>(seed));
    } else {
      m = MonomialModel::linear(std::move(weights));
    }
  }
  if (j.contains("n0")) m.n0 = need_int(j, "n0");
  if (j.contains("slope_cap")) m.slope_cap = rat_from_json(j.at("slope_cap"));
  return m;
}

BundleInput bundle_from_json(const Json& j) {
  const Json& curve = need(j, "curve");
  std::vector<BundleSummand> summands;
  for (const Json& s : need_array(j, "summands"))
    summands.push_back({rat_from_json(need(s, "mu")), need_int(s, "rank")});
  bool char0 = true;
  if (j.contains("char0")) {
    if (!j.at("char0").is_boolean())
      throw ValidationError("char0 must be a boolean");
    char0 = j.at("char0").get<bool>();
  }
  return BundleInput{CurveData(need_int(curve, "g"), need_int(curve, "b")),
                     std::move(summands), char0};
}

BiSeries series_from_json(const Json& j) {
  std::map<BiSeries::Term, Int> numerator;
  for (const Json& term : need_array(j, "numerator")) {
    const long n = need_int(term, "n");
    const long d = need_int(term, "d");
    const long coeff = need_int(term, "coeff");
    numerator[{n, d}] += coeff;
  }
  std::vector<long> denons;
  for (const Json& d : need_array(j, "denominators")) {
    if (!d.is_number_integer())
      throw ValidationError("denominators must hold integers");
    denons.push_back(d.get<long>());
  }
  return BiSeries(std::move(numerator), std::move(denons));
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON input");
  return j;
}

}  // namespace hnpoly
