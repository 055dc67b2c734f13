#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hnpoly/rational.hpp"

namespace hnpoly {

// Point of the discrete simplex: d nonnegative integers summing to n.
using Composition = std::vector<long>;

Int factorial(long n);
Int binomial(long n, long k);  // 0 outside 0 <= k <= n

// All compositions of n into d parts, in strictly decreasing lexicographic
// order: (n,0,...,0) first, (0,...,0,n) last.
std::vector<Composition> enumerate_delta(long n, long d);

// Drop the last coordinate (the remaining d-1 determine it).
std::vector<long> gamma_of(const Composition& alpha);
// Restore the last coordinate; requires |gamma| <= n.
Composition delta_of(const std::vector<long>& gamma, long n, long d);

// Probability measure on a product of r discrete simplices whose marginals
// and sum-pushforward are all uniform. Keys concatenate the r compositions.
struct CouplingMeasure {
  long r = 0;
  long d = 0;
  std::vector<long> n_vec;
  std::map<std::vector<long>, Rat> weights;
};

// Exact coupling weights; the support is the full product simplex, guarded
// by `budget` (throws BudgetError when the support would be larger).
CouplingMeasure build_rho(const std::vector<long>& n_vec, long d,
                          std::uint64_t budget = 2000000);

// Pushforward along the i-th projection, i in 1..r.
std::map<Composition, Rat> marginal(const CouplingMeasure& rho, long i);
// Pushforward along coordinate-wise summation, landing in the simplex of
// level n_1 + ... + n_r.
std::map<Composition, Rat> sum_pushforward(const CouplingMeasure& rho);

// Exactly uniform on the full simplex of level n in dimension d?
bool uniform_on_delta(const std::map<Composition, Rat>& m, long n, long d);

}  // namespace hnpoly
