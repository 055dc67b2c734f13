#include "hnpoly/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "hnpoly/bigraded.hpp"
#include "hnpoly/bundles.hpp"
#include "hnpoly/coupling.hpp"
#include "hnpoly/csv_io.hpp"
#include "hnpoly/errors.hpp"
#include "hnpoly/graded.hpp"
#include "hnpoly/json_io.hpp"
#include "hnpoly/limits.hpp"

namespace hnpoly::cli {
namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::ostream& out,
                const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot open output file '" + path + "'");
  file << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (parts.empty()) throw ValidationError("empty list argument");
  return parts;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (const std::string& item : split_commas(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad integer '" + item + "' in list");
    }
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  for (const std::string& item : split_commas(s)) out.push_back(parse_rat(item));
  return out;
}

std::string finish(Json j) { return j.dump(2) + "\n"; }

Json num_or_exact(double value, const std::optional<Rat>& exact) {
  return exact ? Json(rat_str(*exact)) : Json(fmt_double(value));
}

Json violations_json(const std::vector<PairViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs)
    arr.push_back({{"kind", v.kind},
                   {"m", v.m},
                   {"n", v.n},
                   {"lhs", fmt_double(v.lhs)},
                   {"rhs", fmt_double(v.rhs)}});
  return arr;
}

// slope-sorted midpoints plus one probe outside each end, mirroring the
// bigraded default grid
std::vector<Rat> slope_probe_grid(const std::vector<Rat>& slopes) {
  std::vector<Rat> d(slopes);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.size() == 1) return {Rat(d[0] - 1), Rat(d[0] + 1)};
  std::vector<Rat> grid;
  grid.push_back(Rat(d.front() - 1));
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    grid.push_back(Rat((d[i] + d[i + 1]) / 2));
  grid.push_back(Rat(d.back() + 1));
  return grid;
}

// --- sequence and error-function builtins for the limits subcommand ---

long floor_log2(long n) {
  long k = 0;
  while ((2L << k) <= n) ++k;
  return k;
}

SequenceOracle builtin_sequence(const std::string& name) {
  SequenceOracle a;
  if (name == "3n-sqrtn") {
    a.value = [](long n) {
      return 3.0 * static_cast<double>(n) - std::sqrt(static_cast<double>(n));
    };
    return a;
  }
  if (name == "5n+2") {
    a.exact = [](long n) { return Rat(5 * n + 2); };
    a.value = [](long n) { return 5.0 * static_cast<double>(n) + 2.0; };
    return a;
  }
  if (name == "pow2-plateau") {
    a.exact = [](long n) { return Rat(1L << floor_log2(n)); };
    a.value = [](long n) { return static_cast<double>(1L << floor_log2(n)); };
    return a;
  }
  throw ValidationError("unknown sequence '" + name +
                        "' (builtins: 3n-sqrtn, 5n+2, pow2-plateau; or a file path)");
}

SequenceOracle file_sequence(const std::string& path) {
  std::istringstream in(read_text(path));
  auto values = std::make_shared<std::vector<Rat>>();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    values->push_back(parse_rat(line));
  }
  if (values->empty()) throw ValidationError("sequence file '" + path + "' is empty");
  SequenceOracle a;
  a.n_max = static_cast<long>(values->size());
  a.exact = [values](long n) { return (*values)[static_cast<std::size_t>(n - 1)]; };
  a.value = [values](long n) {
    return to_double((*values)[static_cast<std::size_t>(n - 1)]);
  };
  return a;
}

SequenceOracle make_sequence(const std::string& name) {
  if (name == "3n-sqrtn" || name == "5n+2" || name == "pow2-plateau")
    return builtin_sequence(name);
  return file_sequence(name);
}

ErrorFn make_error_fn(const std::string& name) {
  if (name == "zero") return ErrorFn::zero();
  if (name == "ceil-log2") {
    ErrorFn f;
    f.monotone = true;
    f.exact = [](long n) {
      long k = 0;
      while ((1L << k) < n + 1) ++k;
      return Rat(k);
    };
    f.value = [](long n) { return std::ceil(std::log2(static_cast<double>(n + 1))); };
    return f;
  }
  throw ValidationError("unknown error function '" + name +
                        "' (builtins: zero, ceil-log2)");
}

// --- subcommand handlers; each returns the report text ---

std::string run_filtration(const std::string& input, const std::string& format,
                           long dense) {
  FilteredSpace space = space_from_json(parse_json_text(read_text(input)));
  DiracMeasure nu = associated_measure(space);
  Polygon poly = polygon_of(nu);
  if (format == "csv") return polygon_to_csv(poly, dense);
  Json j;
  j["dim"] = space.dim();
  j["stage_dims"] = space.stage_dims();
  Json jumps = Json::array();
  for (const Rat& r : space.jumps()) jumps.push_back(rat_str(r));
  j["jumps"] = std::move(jumps);
  j["measure"] = measure_to_json(nu);
  j["polygon"] = polygon_to_json(poly);
  return finish(std::move(j));
}

std::string run_coupling_verify(long d, const std::string& n_str,
                                std::uint64_t budget) {
  const std::vector<long> n_vec = parse_long_list(n_str);
  CouplingMeasure rho =
      budget > 0 ? build_rho(n_vec, d, budget) : build_rho(n_vec, d);
  Rat total(0);
  for (const auto& [key, w] : rho.weights) total += w;
  Json marginals = Json::array();
  long level = 0;
  for (long i = 1; i <= rho.r; ++i) {
    marginals.push_back(
        uniform_on_delta(marginal(rho, i), rho.n_vec[static_cast<std::size_t>(i - 1)], d));
    level += rho.n_vec[static_cast<std::size_t>(i - 1)];
  }
  Json j;
  j["d"] = d;
  j["n"] = rho.n_vec;
  j["total_mass"] = rat_str(total);
  j["marginals_uniform"] = std::move(marginals);
  j["sum_uniform"] = uniform_on_delta(sum_pushforward(rho), level, d);
  j["support_size"] = rho.weights.size();
  return finish(std::move(j));
}

std::string run_graded_converge(const std::string& input, long n_max,
                                const std::string& tol_str,
                                std::uint64_t budget,
                                const std::string& format) {
  MonomialModel model = model_from_json(parse_json_text(read_text(input)));
  const Rat tol = parse_rat(tol_str);
  ConvergenceReport rep = budget > 0
                              ? convergence_run(model, n_max, tol, budget)
                              : convergence_run(model, n_max, tol);
  if (format == "csv") return polygon_to_csv(rep.probes.back().polygon);
  Json j;
  j["n_max"] = n_max;
  j["tol"] = rat_str(rep.tol);
  j["converged"] = rep.converged;
  j["oscillation"] = rat_str(rep.oscillation);
  j["tail_oscillation"] = rat_str(rep.tail_oscillation);
  Json probes = Json::array();
  for (const ConvergenceProbe& p : rep.probes) {
    Json pj;
    pj["n"] = p.n;
    pj["dist_prev"] = rat_str(p.dist_prev);
    pj["dist_pair"] = rat_str(p.dist_pair);
    pj["measure"] = measure_to_json(p.measure);
    pj["polygon"] = polygon_to_json(p.polygon);
    probes.push_back(std::move(pj));
  }
  j["probes"] = std::move(probes);
  return finish(std::move(j));
}

Json bundle_report(const SplitBundle& bundle) {
  HnData h = hn_data(bundle);
  SlopeStats stats = slope_stats(bundle);
  Json j;
  Json jumps = Json::array();
  for (const Rat& r : h.jumps) jumps.push_back(rat_str(r));
  j["jumps"] = std::move(jumps);
  j["dims"] = h.dims;
  j["mu"] = rat_str(stats.mu);
  j["mu_max"] = rat_str(stats.mu_max);
  j["mu_min"] = rat_str(stats.mu_min);
  j["measure"] = measure_to_json(h.measure);
  j["polygon"] = polygon_to_json(h.polygon);
  return j;
}

std::string run_bundles_polygon(const std::string& input,
                                const std::string& format, long dense) {
  BundleInput in = bundle_from_json(parse_json_text(read_text(input)));
  SplitBundle bundle(in.summands, in.char0);
  if (format == "csv") return polygon_to_csv(hn_data(bundle).polygon, dense);
  return finish(bundle_report(bundle));
}

std::string run_bundles_sym(const std::string& input, long n,
                            std::uint64_t budget, const std::string& format) {
  BundleInput in = bundle_from_json(parse_json_text(read_text(input)));
  DiracMeasure nu = budget > 0 ? sym_measure(in.summands, n, budget)
                               : sym_measure(in.summands, n);
  if (format == "csv") return measure_to_csv(nu);
  Json j;
  j["n"] = n;
  j["measure"] = measure_to_json(nu);
  j["polygon"] = polygon_to_json(polygon_of(nu));
  return finish(std::move(j));
}

std::string run_bundles_limit(const std::string& mu_str,
                              const std::string& input, long n,
                              std::uint64_t seed, long samples,
                              const std::string& format, long dense) {
  std::vector<BundleSummand> summands;
  if (!mu_str.empty()) {
    for (const Rat& mu : parse_rat_list(mu_str)) summands.push_back({mu, 1});
  } else if (!input.empty()) {
    summands = bundle_from_json(parse_json_text(read_text(input))).summands;
  } else {
    throw ValidationError("bundles limit needs --mu or --input");
  }
  DiracMeasure nu = sym_measure(summands, n);
  Polygon poly = polygon_of(nu);
  if (format == "csv") return polygon_to_csv(poly, dense);

  Json j;
  Json mus = Json::array();
  std::vector<Rat> slopes;
  for (const auto& s : summands) {
    mus.push_back(rat_str(s.mu));
    slopes.push_back(s.mu);
  }
  j["mu"] = std::move(mus);
  j["n"] = n;
  j["measure"] = measure_to_json(nu);
  j["polygon"] = polygon_to_json(poly);
  SplitBundle canonical(summands, true);
  const bool closed = canonical.summands().size() == 2 &&
                      canonical.summands()[0].rank == 1 &&
                      canonical.summands()[1].rank == 1;
  if (closed) {
    TwoLineLimit lim = two_line_limit_polygon(canonical.summands()[1].mu,
                                              canonical.summands()[0].mu);
    j["limit_quadratic"] = {{"linear", rat_str(lim.linear)},
                            {"quadratic", rat_str(lim.quadratic)}};
  }
  Json cdf;
  cdf["seed"] = seed;
  cdf["samples"] = samples;
  Json points = Json::array();
  for (const Rat& x : slope_probe_grid(slopes)) {
    Json point;
    point["x"] = rat_str(x);
    if (closed) {
      point["F"] = rat_str(limit_cdf(canonical.summands(), x));
    } else {
      point["F"] = fmt_double(
          limit_cdf(summands, to_double(x), McParams{seed, samples}));
    }
    points.push_back(std::move(point));
  }
  cdf["method"] = closed ? "closed_form" : "monte_carlo";
  cdf["points"] = std::move(points);
  j["limit_cdf"] = std::move(cdf);
  return finish(std::move(j));
}

std::string run_bigraded_slice(const std::string& input, long n,
                               const std::string& format) {
  BiSeries p = series_from_json(parse_json_text(read_text(input)));
  SliceResult s = expand_slice(p, n);
  DiracMeasure nu = slice_measure(p, n);
  if (format == "csv") return measure_to_csv(nu);
  Json j;
  j["n"] = n;
  j["total"] = s.total.get_str();
  Json coeffs = Json::array();
  for (const auto& [d, c] : s.coeffs)
    coeffs.push_back(Json::array({d, c.get_str()}));
  j["coeffs"] = std::move(coeffs);
  j["measure"] = measure_to_json(nu);
  if (!nu.empty()) j["polygon"] = polygon_to_json(polygon_of(nu));
  return finish(std::move(j));
}

std::string run_bigraded_limit(const std::string& input,
                               const std::string& grid_str, std::uint64_t seed,
                               long samples) {
  BiSeries p = series_from_json(parse_json_text(read_text(input)));
  const std::vector<Rat> grid = grid_str == "auto"
                                    ? default_probe_grid(p.denom_exps())
                                    : parse_rat_list(grid_str);
  bool closed = true;
  try {
    limit_cdf_product(p.denom_exps(), Rat(0));
  } catch (const ValidationError&) {
    closed = false;
  }
  Json j;
  Json grid_json = Json::array();
  Json values = Json::array();
  for (const Rat& x : grid) {
    grid_json.push_back(rat_str(x));
    if (closed) {
      values.push_back(rat_str(limit_cdf_product(p.denom_exps(), x)));
    } else {
      values.push_back(fmt_double(limit_cdf_product(
          p.denom_exps(), to_double(x), McParams{seed, samples})));
    }
  }
  j["grid"] = std::move(grid_json);
  j["method"] = closed ? "closed_form" : "monte_carlo";
  if (!closed) {
    j["seed"] = seed;
    j["samples"] = samples;
  }
  j["values"] = std::move(values);
  return finish(std::move(j));
}

std::string run_bigraded_certify(const std::string& input,
                                 const std::string& n_str,
                                 const std::string& grid_str,
                                 std::uint64_t seed, long samples) {
  BiSeries p = series_from_json(parse_json_text(read_text(input)));
  const std::vector<long> n_list = parse_long_list(n_str);
  std::vector<Rat> grid;
  if (grid_str != "auto") grid = parse_rat_list(grid_str);
  Certificate cert =
      convergence_certificate(p, n_list, std::move(grid), McParams{seed, samples});
  Json j;
  Json grid_json = Json::array();
  for (const Rat& x : cert.grid) grid_json.push_back(rat_str(x));
  j["grid"] = std::move(grid_json);
  j["closed_form_oracle"] = cert.closed_form_oracle;
  if (!cert.closed_form_oracle) {
    j["seed"] = seed;
    j["samples"] = samples;
  }
  Json rows = Json::array();
  for (const CertificateRow& row : cert.rows) {
    Json rj;
    rj["n"] = row.n;
    rj["deviation"] = fmt_double(row.deviation);
    if (row.deviation_exact) rj["deviation_exact"] = rat_str(*row.deviation_exact);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return finish(std::move(j));
}

std::string run_limits(const std::string& mode, const std::string& seq,
                       long n_max, long verify_pairs, const std::string& c1,
                       const std::string& c2, int alpha_max, double osc_tol,
                       int* rc) {
  Json j;
  j["mode"] = mode;
  j["seq"] = seq;
  j["violations"] = Json::array();
  try {
    if (mode == "sub" || mode == "super") {
      FeketeResult r = fekete_bracket(
          make_sequence(seq), ErrorFn::zero(),
          mode == "sub" ? FeketeMode::subadditive : FeketeMode::superadditive,
          n_max);
      j["n_max"] = n_max;
      j["bound"] = num_or_exact(r.bound, r.bound_exact);
      j["estimate"] = num_or_exact(r.estimate, r.estimate_exact);
    } else if (mode == "const") {
      ConstantErrorResult r =
          constant_error_limit(make_sequence(seq), parse_rat(c1), parse_rat(c2),
                               n_max, verify_pairs);
      j["n_max"] = n_max;
      j["bound"] = num_or_exact(r.lower_bound, r.lower_bound_exact);
      j["estimate"] = num_or_exact(r.estimate, r.estimate_exact);
      j["pairs_checked"] = r.pairs_checked;
      j["pairs_exhaustive"] = r.pairs_exhaustive;
    } else if (mode == "logsum") {
      LogSummableResult r = log_summable_check(make_error_fn(seq), alpha_max);
      j["alpha_max"] = alpha_max;
      j["bound"] = num_or_exact(r.partial_sum, r.partial_sum_exact);
      j["estimate"] = num_or_exact(r.cesaro, r.cesaro_exact);
      j["partial_sum"] = num_or_exact(r.partial_sum, r.partial_sum_exact);
      j["cesaro"] = num_or_exact(r.cesaro, r.cesaro_exact);
    } else if (mode == "pseudo") {
      PseudoLimitResult r =
          pseudo_limit(make_sequence(seq), ErrorFn::zero(), n_max, osc_tol,
                       verify_pairs > 0 ? verify_pairs : 0);
      j["n_max"] = n_max;
      j["bound"] = nullptr;  // no certified bracket without a growth hypothesis
      j["estimate"] = fmt_double(r.estimate);
      Json dyadic = Json::array();
      for (double v : r.dyadic) dyadic.push_back(fmt_double(v));
      j["dyadic"] = std::move(dyadic);
      j["oscillation"] = fmt_double(r.oscillation);
      j["tail_oscillation"] = fmt_double(r.tail_oscillation);
      j["converged"] = r.converged;
      j["pairs_checked"] = r.pairs_checked;
    } else {
      throw ValidationError("unknown mode '" + mode +
                            "' (sub, super, const, logsum, pseudo)");
    }
  } catch (const HypothesisViolationError& e) {
    j["error"] = e.what();
    j["violations"] = violations_json(e.violations);
    *rc = 2;
  }
  return finish(std::move(j));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact slope filtration polygon toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  long samples = 100000;
  long dense = 0;

  int rc = 0;
  std::string report;

  auto add_io = [&](CLI::App* sub, std::string& format) {
    sub->add_option("--input,-i", input, "input file or - for stdin");
    sub->add_option("--output,-o", output, "output file or - for stdout");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // filtration
  CLI::App* filtration = app.add_subcommand(
      "filtration", "measure and polygon of a filtered space");
  std::string filtration_format = "json";
  add_io(filtration, filtration_format);
  filtration->add_option("--dense", dense, "append dense float rows to csv");
  filtration->callback(
      [&] { report = run_filtration(input, filtration_format, dense); });

  // coupling verify
  CLI::App* coupling = app.add_subcommand("coupling", "simplex couplings");
  coupling->require_subcommand(1);
  CLI::App* verify =
      coupling->add_subcommand("verify", "exact marginal and sum checks");
  long coupling_d = 0;
  std::string coupling_n;
  verify->add_option("--d", coupling_d, "simplex dimension")->required();
  verify->add_option("--n", coupling_n, "comma list of levels")->required();
  verify->add_option("--budget", budget, "max support size");
  verify->add_option("--output,-o", output, "output file or - for stdout");
  verify->callback(
      [&] { report = run_coupling_verify(coupling_d, coupling_n, budget); });

  // graded converge
  CLI::App* graded = app.add_subcommand("graded", "monomial algebra models");
  graded->require_subcommand(1);
  CLI::App* converge =
      graded->add_subcommand("converge", "dyadic polygon convergence probe");
  long n_max = 64;
  std::string tol = "1/8";
  std::string converge_format = "json";
  add_io(converge, converge_format);
  converge->add_option("--n-max", n_max, "largest probed degree");
  converge->add_option("--tol", tol, "tail oscillation tolerance, p/q");
  converge->add_option("--budget", budget, "max compositions per degree");
  converge->callback([&] {
    report = run_graded_converge(input, n_max, tol, budget, converge_format);
  });

  // bundles polygon | sym | limit
  CLI::App* bundles = app.add_subcommand("bundles", "split semistable bundles");
  bundles->require_subcommand(1);

  CLI::App* bpoly = bundles->add_subcommand("polygon", "slope flag polygon");
  std::string bpoly_format = "csv";
  add_io(bpoly, bpoly_format);
  bpoly->add_option("--dense", dense, "append dense float rows to csv");
  bpoly->callback(
      [&] { report = run_bundles_polygon(input, bpoly_format, dense); });

  CLI::App* bsym = bundles->add_subcommand("sym", "symmetric power measure");
  long sym_n = 0;
  std::string bsym_format = "csv";
  add_io(bsym, bsym_format);
  bsym->add_option("--n", sym_n, "symmetric power degree")->required();
  bsym->add_option("--budget", budget, "max degree splittings");
  bsym->callback(
      [&] { report = run_bundles_sym(input, sym_n, budget, bsym_format); });

  CLI::App* blimit =
      bundles->add_subcommand("limit", "scaled measures against the limit");
  std::string mu_str;
  std::string blimit_input;
  long blimit_n = 64;
  blimit->add_option("--mu", mu_str, "comma list of rank-1 slopes");
  blimit->add_option("--input,-i", blimit_input, "bundle JSON file");
  blimit->add_option("--n", blimit_n, "symmetric power degree");
  blimit->add_option("--samples", samples, "Monte-Carlo sample count");
  blimit->add_option("--seed", seed, "Monte-Carlo seed");
  blimit->add_option("--output,-o", output, "output file or - for stdout");
  std::string blimit_format = "csv";
  blimit->add_option("--format", blimit_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  blimit->add_option("--dense", dense, "append dense float rows to csv");
  blimit->callback([&] {
    report = run_bundles_limit(mu_str, blimit_input, blimit_n, seed, samples,
                               blimit_format, dense);
  });

  // bigraded slice | limit | certify
  CLI::App* bigraded = app.add_subcommand("bigraded", "two-variable series");
  bigraded->require_subcommand(1);

  CLI::App* slice = bigraded->add_subcommand("slice", "exact slice measure");
  long slice_n = 1;
  std::string slice_format = "json";
  add_io(slice, slice_format);
  slice->add_option("--n", slice_n, "slice degree")->required();
  slice->callback(
      [&] { report = run_bigraded_slice(input, slice_n, slice_format); });

  CLI::App* glimit = bigraded->add_subcommand("limit", "limit CDF on a grid");
  std::string grid = "auto";
  glimit->add_option("--input,-i", input, "series JSON file");
  glimit->add_option("--output,-o", output, "output file or - for stdout");
  glimit->add_option("--grid", grid, "auto or comma list of p/q points");
  glimit->add_option("--samples", samples, "Monte-Carlo sample count");
  glimit->add_option("--seed", seed, "Monte-Carlo seed");
  glimit->callback(
      [&] { report = run_bigraded_limit(input, grid, seed, samples); });

  CLI::App* certify =
      bigraded->add_subcommand("certify", "slice-vs-limit deviation table");
  std::string certify_n;
  certify->add_option("--input,-i", input, "series JSON file");
  certify->add_option("--output,-o", output, "output file or - for stdout");
  certify->add_option("--n", certify_n, "comma list of slice degrees")
      ->required();
  certify->add_option("--grid", grid, "auto or comma list of p/q points");
  certify->add_option("--samples", samples, "Monte-Carlo sample count");
  certify->add_option("--seed", seed, "Monte-Carlo seed");
  certify->callback([&] {
    report = run_bigraded_certify(input, certify_n, grid, seed, samples);
  });

  // limits
  CLI::App* limits =
      app.add_subcommand("limits", "scaled limits of almost-additive sequences");
  std::string mode;
  std::string seq;
  long limits_n_max = 1000;
  long verify_pairs = -1;
  std::string c1 = "0";
  std::string c2 = "0";
  int alpha_max = 10;
  double osc_tol = 0.05;
  limits->add_option("--mode", mode, "sub, super, const, logsum or pseudo")
      ->required();
  limits->add_option("--seq", seq, "builtin sequence name or file path")
      ->required();
  limits->add_option("--n-max", limits_n_max, "largest index used");
  limits->add_option("--verify-pairs", verify_pairs,
                     "pair checks: budget (const) or sample count (pseudo)");
  limits->add_option("--c1", c1, "additive defect, p/q");
  limits->add_option("--c2", c2, "linear growth bound, p/q");
  limits->add_option("--alpha-max", alpha_max, "largest dyadic exponent");
  limits->add_option("--osc-tol", osc_tol, "tail oscillation tolerance");
  limits->add_option("--output,-o", output, "output file or - for stdout");
  limits->callback([&] {
    report = run_limits(mode, seq, limits_n_max, verify_pairs, c1, c2,
                        alpha_max, osc_tol, &rc);
  });

  std::vector<const char*> argv;
  argv.push_back("hnpoly");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    write_text(output, out, report);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace hnpoly::cli
