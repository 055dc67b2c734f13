#include "hnpoly/polygon.hpp"

#include <algorithm>

namespace hnpoly {

Rat StepFn::eval(const Rat& t) const {
  if (t <= 0 || t >= 1) throw ValidationError("step function argument outside (0,1)");
  std::size_t i = 0;
  while (i < cuts.size() && t >= cuts[i]) ++i;
  return values[i];
}

StepFn quasi_inverse(const SurvivalFn& f) {
  if (f.breakpoints.size() != f.values.size() || f.breakpoints.empty())
    throw ValidationError("malformed survival step data");
  for (std::size_t i = 0; i + 1 < f.breakpoints.size(); ++i)
    if (f.breakpoints[i] >= f.breakpoints[i + 1])
      throw ValidationError("survival breakpoints not increasing");
  for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
    if (f.values[i] < f.values[i + 1])
      throw ValidationError("survival values not decreasing");
  if (f.values.back() != 0) throw ValidationError("survival function must end at 0");

  // f equals u_{i-1} on [x_{i-1}, x_i) with u_{-1} = 1; on the value interval
  // [u_i, u_{i-1}) the set {x : f(x) > t} is (-inf, x_i), so f* = x_i there.
  StepFn g;
  Rat prev(1);
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
    const Rat& u = f.values[i];
    if (u == prev) continue;  // plateau, no value interval
    if (!g.values.empty()) g.cuts.push_back(prev);
    g.values.push_back(f.breakpoints[i]);
    prev = u;
  }
  // The loop walks value intervals from t near 1 down to t near 0; reverse to
  // present the step on (0,1) left to right.
  std::reverse(g.values.begin(), g.values.end());
  std::reverse(g.cuts.begin(), g.cuts.end());
  return g;
}

Polygon::Polygon(std::vector<Rat> knots, std::vector<Rat> slopes)
    : knots_(std::move(knots)), slopes_(std::move(slopes)) {
  if (knots_.size() < 2 || slopes_.size() + 1 != knots_.size())
    throw ValidationError("polygon needs n+1 knots for n slopes");
  if (knots_.front() != 0 || knots_.back() != 1)
    throw ValidationError("polygon knots must span [0,1]");
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
    if (knots_[i] >= knots_[i + 1])
      throw ValidationError("polygon knots not strictly increasing");
  for (std::size_t i = 0; i + 1 < slopes_.size(); ++i)
    if (slopes_[i] <= slopes_[i + 1])
      throw ValidationError("polygon slopes not strictly decreasing");
}

std::vector<Rat> Polygon::values() const {
  std::vector<Rat> v;
  v.reserve(knots_.size());
  Rat acc(0);
  v.push_back(acc);
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    acc += slopes_[i] * (knots_[i + 1] - knots_[i]);
    v.push_back(acc);
  }
  return v;
}

Polygon polygon_of(const DiracMeasure& nu) {
  if (!nu.is_probability() || nu.empty())
    throw ValidationError("polygon requires a nonempty probability measure");
  const auto& atoms = nu.atoms();
  std::vector<Rat> knots{Rat(0)};
  std::vector<Rat> slopes;
  Rat acc(0);
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    acc += it->second;
    knots.push_back(acc);
    slopes.push_back(it->first);
  }
  return Polygon(std::move(knots), std::move(slopes));
}

Rat eval(const Polygon& p, const Rat& t) {
  if (t < 0 || t > 1) throw ValidationError("polygon argument outside [0,1]");
  const auto& k = p.knots();
  const auto& s = p.slopes();
  Rat acc(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (t <= k[i + 1]) return acc + s[i] * (t - k[i]);
    acc += s[i] * (k[i + 1] - k[i]);
  }
  return acc;
}

Rat sup_distance(const Polygon& p1, const Polygon& p2) {
  std::vector<Rat> pts = p1.knots();
  pts.insert(pts.end(), p2.knots().begin(), p2.knots().end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Rat best(0);
  for (const Rat& t : pts) {
    Rat d = rat_abs(eval(p1, t) - eval(p2, t));
    if (d > best) best = d;
  }
  return best;
}

Polygon scale_polygon(const Polygon& p, const Rat& eps) {
  if (eps <= 0) throw ValidationError("polygon scale factor must be positive");
  std::vector<Rat> slopes = p.slopes();
  for (Rat& s : slopes) s *= eps;
  return Polygon(p.knots(), std::move(slopes));
}

Polygon shear_polygon(const Polygon& p, const Rat& a) {
  std::vector<Rat> slopes = p.slopes();
  for (Rat& s : slopes) s += a;
  return Polygon(p.knots(), std::move(slopes));
}

DiracMeasure measure_of(const Polygon& p) {
  std::vector<DiracMeasure::Atom> atoms;
  const auto& k = p.knots();
  const auto& s = p.slopes();
  for (std::size_t i = 0; i < s.size(); ++i)
    atoms.emplace_back(s[i], k[i + 1] - k[i]);
  return DiracMeasure(std::move(atoms));
}

}  // namespace hnpoly
