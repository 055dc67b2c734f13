#include "hnpoly/coupling.hpp"

#include <numeric>

namespace hnpoly {

Int factorial(long n) {
  if (n < 0) throw ValidationError("factorial of a negative integer");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return Int(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

namespace {

void enumerate_rec(long n, long d, Composition& prefix,
                   std::vector<Composition>& out) {
  if (d == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long k = n; k >= 0; --k) {
    prefix.push_back(k);
    enumerate_rec(n - k, d - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_delta(long n, long d) {
  if (d < 1) throw ValidationError("simplex dimension must be at least 1");
  if (n < 0) throw ValidationError("simplex level must be nonnegative");
  std::vector<Composition> out;
  Composition prefix;
  enumerate_rec(n, d, prefix, out);
  return out;
}

std::vector<long> gamma_of(const Composition& alpha) {
  if (alpha.empty()) throw ValidationError("empty composition");
  return std::vector<long>(alpha.begin(), alpha.end() - 1);
}

Composition delta_of(const std::vector<long>& gamma, long n, long d) {
  if (static_cast<long>(gamma.size()) != d - 1)
    throw ValidationError("gamma length must be d-1");
  long sum = 0;
  for (long g : gamma) {
    if (g < 0) throw ValidationError("negative gamma coordinate");
    sum += g;
  }
  if (sum > n) throw ValidationError("|gamma| exceeds the simplex level");
  Composition alpha(gamma);
  alpha.push_back(n - sum);
  return alpha;
}

CouplingMeasure build_rho(const std::vector<long>& n_vec, long d,
                          std::uint64_t budget) {
  const long r = static_cast<long>(n_vec.size());
  if (r < 2) throw ValidationError("coupling needs at least two factors");
  if (d < 1) throw ValidationError("simplex dimension must be at least 1");
  for (long n : n_vec)
    if (n < 0) throw ValidationError("negative simplex level");

  Int support(1);
  for (long n : n_vec) support *= binomial(n + d - 1, d - 1);
  if (support > Int(static_cast<unsigned long>(budget)))
    throw BudgetError("coupling support exceeds budget",
                      support.fits_ulong_p() ? support.get_ui()
                                             : static_cast<std::uint64_t>(-1));

  const long N = std::accumulate(n_vec.begin(), n_vec.end(), 0L);
  std::vector<Int> fact(static_cast<std::size_t>(N + d), Int(1));
  for (long i = 1; i < N + d; ++i)
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

  Int pre_num = fact[static_cast<std::size_t>(d - 1)];
  for (long n : n_vec) pre_num *= fact[static_cast<std::size_t>(n)];
  const Int& pre_den = fact[static_cast<std::size_t>(N + d - 1)];

  std::vector<std::vector<Composition>> lists;
  lists.reserve(static_cast<std::size_t>(r));
  for (long n : n_vec) lists.push_back(enumerate_delta(n, d));

  CouplingMeasure rho;
  rho.r = r;
  rho.d = d;
  rho.n_vec = n_vec;

  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  for (;;) {
    // weight = pre * prod_j multinomial(column j) * multinomial(last column),
    // where column j stacks the j-th coordinates of the r factors.
    Int num = pre_num;
    Int den = pre_den;
    std::vector<long> key;
    key.reserve(static_cast<std::size_t>(r * d));
    for (long j = 0; j < d; ++j) {
      long col = 0;
      for (long i = 0; i < r; ++i) {
        const long v = lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]
                            [static_cast<std::size_t>(j)];
        col += v;
        den *= fact[static_cast<std::size_t>(v)];
      }
      num *= fact[static_cast<std::size_t>(col)];
    }
    for (long i = 0; i < r; ++i) {
      const Composition& alpha = lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
      key.insert(key.end(), alpha.begin(), alpha.end());
    }
    rho.weights.emplace(std::move(key), rat(num, den));

    long carry = r - 1;
    while (carry >= 0) {
      std::size_t& p = idx[static_cast<std::size_t>(carry)];
      if (++p < lists[static_cast<std::size_t>(carry)].size()) break;
      p = 0;
      --carry;
    }
    if (carry < 0) break;
  }
  return rho;
}

std::map<Composition, Rat> marginal(const CouplingMeasure& rho, long i) {
  if (i < 1 || i > rho.r) throw ValidationError("marginal index out of range");
  std::map<Composition, Rat> out;
  const std::size_t off = static_cast<std::size_t>((i - 1) * rho.d);
  for (const auto& [key, w] : rho.weights) {
    Composition alpha(key.begin() + static_cast<std::ptrdiff_t>(off),
                      key.begin() + static_cast<std::ptrdiff_t>(off + rho.d));
    out[alpha] += w;
  }
  return out;
}

std::map<Composition, Rat> sum_pushforward(const CouplingMeasure& rho) {
  std::map<Composition, Rat> out;
  for (const auto& [key, w] : rho.weights) {
    Composition sum(static_cast<std::size_t>(rho.d), 0);
    for (long i = 0; i < rho.r; ++i)
      for (long j = 0; j < rho.d; ++j)
        sum[static_cast<std::size_t>(j)] +=
            key[static_cast<std::size_t>(i * rho.d + j)];
    out[sum] += w;
  }
  return out;
}

bool uniform_on_delta(const std::map<Composition, Rat>& m, long n, long d) {
  const Int card = binomial(n + d - 1, d - 1);
  if (Int(static_cast<long>(m.size())) != card) return false;
  const Rat share = rat(Int(1), card);
  for (const auto& [alpha, w] : m) {
    if (w != share) return false;
    long sum = 0;
    for (long v : alpha) {
      if (v < 0) return false;
      sum += v;
    }
    if (sum != n || static_cast<long>(alpha.size()) != d) return false;
  }
  return true;
}

}  // namespace hnpoly
