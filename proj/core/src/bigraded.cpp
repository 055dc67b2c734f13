#include "hnpoly/bigraded.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "hnpoly/errors.hpp"

namespace hnpoly {

namespace {

void require_dvec(const std::vector<long>& d_vec) {
  if (d_vec.empty()) throw ValidationError("need at least one denominator exponent");
  for (long d : d_vec)
    if (d < 0) throw ValidationError("denominator exponents must be nonnegative");
}

bool all_equal(const std::vector<long>& d_vec) {
  return std::adjacent_find(d_vec.begin(), d_vec.end(),
                            std::not_equal_to<long>()) == d_vec.end();
}

// exact CDF for one or two summands; throws for anything richer
Rat small_case_cdf(const std::vector<long>& d_vec, const Rat& x) {
  if (all_equal(d_vec)) return x >= d_vec[0] ? Rat(1) : Rat(0);
  if (d_vec.size() != 2)
    throw ValidationError("closed-form limit covers only m <= 2 or equal exponents");
  const long lo = std::min(d_vec[0], d_vec[1]);
  const long hi = std::max(d_vec[0], d_vec[1]);
  if (x <= lo) return Rat(0);
  if (x >= hi) return Rat(1);
  return Rat((x - lo) / (hi - lo));
}

// midpoint rule on the stick-breaking representation: the first coordinate
// of a uniform simplex point has density (r-1)(1-t)^{r-2}
Rat grid_cdf(const std::vector<long>& d_vec, std::size_t from, const Rat& x,
             long resolution) {
  const std::size_t r = d_vec.size() - from;
  if (r == 1) return x >= d_vec[from] ? Rat(1) : Rat(0);
  if (r == 2) {
    const long lo = std::min(d_vec[from], d_vec[from + 1]);
    const long hi = std::max(d_vec[from], d_vec[from + 1]);
    if (lo == hi) return x >= lo ? Rat(1) : Rat(0);
    if (x <= lo) return Rat(0);
    if (x >= hi) return Rat(1);
    return Rat((x - lo) / (hi - lo));
  }
  Rat acc(0);
  Rat weight_sum(0);
  for (long g = 0; g < resolution; ++g) {
    const Rat t = rat(2 * g + 1, 2 * resolution);
    const Rat rest = Rat(1 - t);
    Rat w(1);
    for (std::size_t i = 0; i + 2 < r; ++i) w *= rest;
    weight_sum += w;
    const Rat inner = Rat((x - d_vec[from] * t) / rest);
    acc += w * grid_cdf(d_vec, from + 1, inner, resolution);
  }
  return Rat(acc / weight_sum);
}

bool closed_form_available(const std::vector<long>& d_vec) {
  return d_vec.size() <= 2 || all_equal(d_vec);
}

}  // namespace

BiSeries::BiSeries(std::map<Term, Int> numerator, std::vector<long> denom_exps)
    : denom_exps_(std::move(denom_exps)) {
  for (long d : denom_exps_)
    if (d < 0) throw ValidationError("denominator exponents must be nonnegative");
  for (auto& [term, coeff] : numerator) {
    if (coeff < 0) throw ValidationError("numerator coefficients must be nonnegative");
    if (coeff != 0) numerator_.emplace(term, std::move(coeff));
  }
}

BiSeries BiSeries::one(std::vector<long> denom_exps) {
  return BiSeries({{{0, 0}, Int(1)}}, std::move(denom_exps));
}

SliceResult expand_slice(const BiSeries& p, long n) {
  SliceResult out;
  out.total = 0;
  long k_max = -1;
  for (const auto& [term, coeff] : p.numerator())
    if (term.first <= n) k_max = std::max(k_max, n - term.first);
  if (k_max < 0) return out;

  // A[k] = Y-polynomial coefficient of X^k in the denominator expansion
  std::vector<std::map<long, Int>> A(static_cast<std::size_t>(k_max) + 1);
  A[0][0] = 1;
  for (long d : p.denom_exps()) {
    for (long k = 1; k <= k_max; ++k) {
      const auto& prev = A[static_cast<std::size_t>(k - 1)];
      auto& cur = A[static_cast<std::size_t>(k)];
      for (const auto& [e, v] : prev) cur[e + d] += v;
    }
  }

  for (const auto& [term, coeff] : p.numerator()) {
    if (term.first > n) continue;
    const auto& poly = A[static_cast<std::size_t>(n - term.first)];
    for (const auto& [e, v] : poly) {
      Int add = coeff * v;
      out.total += add;
      out.coeffs[term.second + e] += add;
    }
  }
  return out;
}

DiracMeasure slice_measure(const BiSeries& p, long n) {
  if (n < 1) throw ValidationError("slice measures need n >= 1");
  SliceResult slice = expand_slice(p, n);
  if (slice.total == 0) return DiracMeasure();
  std::vector<DiracMeasure::Atom> atoms;
  for (const auto& [d, c] : slice.coeffs)
    atoms.emplace_back(rat(d, n), Rat(Rat(c) / Rat(slice.total)));
  return DiracMeasure(std::move(atoms));
}

Rat limit_cdf_product(const std::vector<long>& d_vec, const Rat& x) {
  require_dvec(d_vec);
  return small_case_cdf(d_vec, x);
}

double limit_cdf_product(const std::vector<long>& d_vec, double x,
                         const McParams& params) {
  require_dvec(d_vec);
  if (params.samples < 1) throw ValidationError("sample count must be positive");
  const std::size_t m = d_vec.size();
  std::mt19937_64 rng(params.seed);
  std::vector<double> e(m);
  long hits = 0;
  for (long s = 0; s < params.samples; ++s) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      e[i] = -std::log(1.0 - u64_to_unit(rng()));
      total += e[i];
    }
    double phi = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      phi += static_cast<double>(d_vec[i]) * e[i] / total;
    if (phi <= x) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(params.samples);
}

Rat limit_cdf_product_grid(const std::vector<long>& d_vec, const Rat& x,
                           long resolution) {
  require_dvec(d_vec);
  if (d_vec.size() > 4)
    throw ValidationError("grid quadrature is limited to four exponents");
  if (resolution < 2) throw ValidationError("resolution must be at least 2");
  return grid_cdf(d_vec, 0, x, resolution);
}

namespace {

void require_mixture(const MixtureSpec& spec) {
  if (spec.components.empty()) throw ValidationError("mixture needs components");
  const std::size_t h = spec.components.front().d_vec.size();
  for (const auto& c : spec.components) {
    if (c.weight < 1) throw ValidationError("mixture weights must be positive");
    if (c.d_vec.size() != h)
      throw ValidationError("mixture components must share one arity");
    require_dvec(c.d_vec);
  }
}

}  // namespace

Rat limit_measure_mixture(const MixtureSpec& spec, const Rat& x) {
  require_mixture(spec);
  long total = 0;
  Rat acc(0);
  for (const auto& c : spec.components) {
    total += c.weight;
    acc += c.weight * limit_cdf_product(c.d_vec, x);
  }
  return Rat(acc / total);
}

double limit_measure_mixture(const MixtureSpec& spec, double x,
                             const McParams& params) {
  require_mixture(spec);
  long total = 0;
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& c = spec.components[i];
    total += c.weight;
    double f;
    if (closed_form_available(c.d_vec)) {
      f = to_double(limit_cdf_product(c.d_vec, Rat(x)));
    } else {
      McParams shard{splitmix64(params.seed + i), params.samples};
      f = limit_cdf_product(c.d_vec, x, shard);
    }
    acc += static_cast<double>(c.weight) * f;
  }
  return acc / static_cast<double>(total);
}

std::vector<Rat> default_probe_grid(const std::vector<long>& d_vec) {
  require_dvec(d_vec);
  std::set<long> distinct(d_vec.begin(), d_vec.end());
  std::vector<long> d(distinct.begin(), distinct.end());
  std::vector<Rat> grid;
  if (d.size() == 1) return {Rat(d[0] - 1), Rat(d[0] + 1)};
  grid.push_back(Rat(d.front() - 1));
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    grid.push_back(rat(d[i] + d[i + 1], 2));
  grid.push_back(Rat(d.back() + 1));
  return grid;
}

Certificate convergence_certificate(const BiSeries& p,
                                    const std::vector<long>& n_list,
                                    std::vector<Rat> grid,
                                    const McParams& params) {
  if (p.denom_exps().empty())
    throw ValidationError("certificate needs at least one denominator factor");
  if (n_list.empty()) throw ValidationError("certificate needs slice degrees");
  for (long n : n_list)
    if (n < 1) throw ValidationError("slice degrees must be >= 1");

  Certificate cert;
  cert.grid = grid.empty() ? default_probe_grid(p.denom_exps()) : std::move(grid);

  cert.closed_form_oracle = closed_form_available(p.denom_exps());
  std::vector<Rat> oracle_exact;
  std::vector<double> oracle;
  for (const Rat& x : cert.grid) {
    if (cert.closed_form_oracle) {
      Rat f = limit_cdf_product(p.denom_exps(), x);
      oracle.push_back(to_double(f));
      oracle_exact.push_back(std::move(f));
    } else {
      oracle.push_back(limit_cdf_product(p.denom_exps(), to_double(x), params));
    }
  }

  for (long n : n_list) {
    DiracMeasure nu = slice_measure(p, n);
    CertificateRow row;
    row.n = n;
    if (cert.closed_form_oracle) row.deviation_exact = Rat(0);
    for (std::size_t i = 0; i < cert.grid.size(); ++i) {
      const Rat fn = cdf_value(nu, cert.grid[i]);
      if (cert.closed_form_oracle) {
        row.deviation_exact =
            rat_max(*row.deviation_exact, rat_abs(Rat(fn - oracle_exact[i])));
      }
      row.deviation =
          std::max(row.deviation, std::fabs(to_double(fn) - oracle[i]));
    }
    if (cert.closed_form_oracle) row.deviation = to_double(*row.deviation_exact);
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

SpecializeResult specialize_dimension_multiplicity(const BiSeries& p) {
  std::map<long, Int> q;
  for (const auto& [term, coeff] : p.numerator()) q[term.first] += coeff;
  for (auto it = q.begin(); it != q.end();)
    it = it->second == 0 ? q.erase(it) : std::next(it);
  if (q.empty()) return SpecializeResult{std::nullopt, Int(0)};

  std::vector<Int> c;
  for (const auto& [e, v] : q) {
    // dense from the lowest exponent; the X^min unit does not affect X = 1
    const long offset = e - q.begin()->first;
    if (static_cast<std::size_t>(offset) >= c.size())
      c.resize(static_cast<std::size_t>(offset) + 1, Int(0));
    c[static_cast<std::size_t>(offset)] = v;
  }

  long mult = 0;
  auto value_at_one = [](const std::vector<Int>& poly) {
    Int s(0);
    for (const Int& v : poly) s += v;
    return s;
  };
  while (!c.empty() && value_at_one(c) == 0) {
    // divide by (1 - X) via prefix sums
    std::vector<Int> s(c.size() - 1);
    Int run(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      run += c[i];
      s[i] = run;
    }
    c = std::move(s);
    ++mult;
  }
  SpecializeResult out;
  out.h = std::max(0L, static_cast<long>(p.denom_exps().size()) - mult);
  out.c = value_at_one(c);
  return out;
}

}  // namespace hnpoly
