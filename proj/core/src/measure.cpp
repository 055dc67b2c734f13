#include "hnpoly/measure.hpp"

#include <algorithm>
#include <map>

namespace hnpoly {

DiracMeasure::DiracMeasure(std::vector<Atom> atoms) : total_(0) {
  std::map<Rat, Rat> merged;
  for (auto& [pos, mass] : atoms) {
    if (mass < 0) throw ValidationError("negative atom mass");
    if (mass == 0) continue;
    merged[pos] += mass;
  }
  atoms_.reserve(merged.size());
  for (auto& [pos, mass] : merged) {
    total_ += mass;
    atoms_.emplace_back(pos, mass);
  }
}

Rat tail_mass(const DiracMeasure& nu, const Rat& x, TailKind kind) {
  Rat m(0);
  for (auto it = nu.atoms().rbegin(); it != nu.atoms().rend(); ++it) {
    const bool in = kind == TailKind::closed ? it->first >= x : it->first > x;
    if (!in) break;
    m += it->second;
  }
  return m;
}

bool dominates(const DiracMeasure& nu1, const DiracMeasure& nu2) {
  if (nu1.total() != nu2.total())
    throw ValidationError("dominance is only defined for equal total masses");
  // The closed-tail functions are left-continuous steps jumping only at
  // atoms, so comparing at every atom of either measure decides the order.
  for (const auto& [pos, mass] : nu1.atoms())
    if (tail_mass(nu1, pos, TailKind::closed) < tail_mass(nu2, pos, TailKind::closed))
      return false;
  for (const auto& [pos, mass] : nu2.atoms())
    if (tail_mass(nu1, pos, TailKind::closed) < tail_mass(nu2, pos, TailKind::closed))
      return false;
  return true;
}

DiracMeasure translate(const DiracMeasure& nu, const Rat& c) {
  std::vector<DiracMeasure::Atom> atoms = nu.atoms();
  for (auto& [pos, mass] : atoms) pos += c;
  return DiracMeasure(std::move(atoms));
}

DiracMeasure dilate(const DiracMeasure& nu, const Rat& eps) {
  if (eps <= 0) throw ValidationError("dilation factor must be positive");
  std::vector<DiracMeasure::Atom> atoms = nu.atoms();
  for (auto& [pos, mass] : atoms) pos *= eps;
  return DiracMeasure(std::move(atoms));
}

DiracMeasure combine(const std::vector<std::pair<Rat, DiracMeasure>>& parts) {
  std::vector<DiracMeasure::Atom> atoms;
  for (const auto& [w, nu] : parts) {
    if (w < 0) throw ValidationError("negative weight in convex combination");
    if (w == 0) continue;
    for (const auto& [pos, mass] : nu.atoms()) atoms.emplace_back(pos, w * mass);
  }
  return DiracMeasure(std::move(atoms));
}

Rat cdf_sup_distance(const DiracMeasure& nu1, const DiracMeasure& nu2,
                     const std::vector<Rat>& grid) {
  Rat best(0);
  for (const Rat& x : grid) {
    Rat d = rat_abs(tail_mass(nu1, x, TailKind::closed) -
                    tail_mass(nu2, x, TailKind::closed));
    if (d > best) best = d;
  }
  return best;
}

Rat mean(const DiracMeasure& nu) {
  Rat m(0);
  for (const auto& [pos, mass] : nu.atoms()) m += pos * mass;
  return m;
}

Rat cdf_value(const DiracMeasure& nu, const Rat& x) {
  return nu.total() - tail_mass(nu, x, TailKind::open);
}

SurvivalFn survival(const DiracMeasure& nu) {
  if (!nu.is_probability())
    throw ValidationError("survival function requires a probability measure");
  SurvivalFn f;
  const auto& atoms = nu.atoms();
  Rat tail = nu.total();
  for (const auto& [pos, mass] : atoms) {
    tail -= mass;  // value on [pos, next)
    f.breakpoints.push_back(pos);
    f.values.push_back(tail);
  }
  return f;
}

}  // namespace hnpoly
