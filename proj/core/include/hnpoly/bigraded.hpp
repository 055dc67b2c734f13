#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hnpoly/measure.hpp"
#include "hnpoly/rational.hpp"
#include "hnpoly/rng.hpp"

namespace hnpoly {

// Two-variable series Q(X,Y) / prod_i (1 - X Y^{d_i}) with a finitely
// supported Laurent numerator. Numerator coefficients must be nonnegative;
// the d_i are nonnegative, one per denominator factor.
class BiSeries {
 public:
  using Term = std::pair<long, long>;  // (X exponent, Y exponent)

  BiSeries(std::map<Term, Int> numerator, std::vector<long> denom_exps);
  static BiSeries one(std::vector<long> denom_exps);

  const std::map<Term, Int>& numerator() const { return numerator_; }
  const std::vector<long>& denom_exps() const { return denom_exps_; }

 private:
  std::map<Term, Int> numerator_;  // zero coefficients dropped
  std::vector<long> denom_exps_;
};

// Exact coefficients of X^n: coeffs[d] counts Y^d, total is their sum.
struct SliceResult {
  std::map<long, Int> coeffs;
  Int total;
};

SliceResult expand_slice(const BiSeries& p, long n);

// Probability measure with mass coeffs[d] / total at d / n; the zero measure
// when the slice is empty. Needs n >= 1.
DiracMeasure slice_measure(const BiSeries& p, long n);

// CDF at x of sum_i d_i U_i with U uniform on the (m-1)-simplex. The exact
// overload covers m <= 2 and all-equal d_vec and throws otherwise.
Rat limit_cdf_product(const std::vector<long>& d_vec, const Rat& x);
double limit_cdf_product(const std::vector<long>& d_vec, double x,
                         const McParams& params);

// Deterministic midpoint quadrature over the simplex, supported for
// m <= 4; error decays like 1 / resolution.
Rat limit_cdf_product_grid(const std::vector<long>& d_vec, const Rat& x,
                           long resolution = 256);

struct MixtureComponent {
  long weight = 1;  // positive
  std::vector<long> d_vec;
};

// Convex mixture of simplex-pushforward limits; all components share the
// same arity h.
struct MixtureSpec {
  std::vector<MixtureComponent> components;
};

Rat limit_measure_mixture(const MixtureSpec& spec, const Rat& x);
double limit_measure_mixture(const MixtureSpec& spec, double x,
                             const McParams& params);

// Midpoints between distinct exponents plus one probe outside each end;
// a single distinct exponent d yields {d - 1, d + 1}. Avoids every atom the
// limit measure can carry.
std::vector<Rat> default_probe_grid(const std::vector<long>& d_vec);

struct CertificateRow {
  long n = 0;
  double deviation = 0.0;  // sup over the grid of |F_n - F_limit|
  std::optional<Rat> deviation_exact;  // set when the oracle is closed-form
};

struct Certificate {
  std::vector<Rat> grid;
  bool closed_form_oracle = false;
  std::vector<CertificateRow> rows;
};

// Compares slice CDFs against the limit CDF on a grid. An empty grid picks
// midpoints between the distinct denominator exponents plus outer probes;
// when the limit is a single atom the probes sit one unit on either side.
// The oracle is the closed form when available, otherwise Monte-Carlo with
// the supplied parameters.
Certificate convergence_certificate(const BiSeries& p,
                                    const std::vector<long>& n_list,
                                    std::vector<Rat> grid = {},
                                    const McParams& params = {});

// One-variable specialization Y = 1: h is the pole order of the series at
// X = 1 (denominator factors minus the numerator's root multiplicity there,
// floored at 0) and c the reduced numerator's value at 1. A zero series has
// no pole order; h is empty and c = 0.
struct SpecializeResult {
  std::optional<long> h;
  Int c;
};

SpecializeResult specialize_dimension_multiplicity(const BiSeries& p);

}  // namespace hnpoly
