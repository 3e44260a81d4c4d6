// rggent: seeded, reproducible experiment runner for random-geometric-graph
// entropy estimates, bound formulas and the supporting stochastic-geometry
// checks. Every subcommand echoes its configuration into a manifest JSON
// written next to the output (the manifest carries wall time; result files
// themselves are byte-stable for a fixed seed, whatever --workers is).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rggent/acceptance.hpp"
#include "rggent/bounds.hpp"
#include "rggent/distribution.hpp"
#include "rggent/entropy.hpp"
#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/region.hpp"
#include "rggent/serialize.hpp"
#include "rggent/stochgeo.hpp"

namespace {

using nlohmann::json;
using namespace rggent;

constexpr const char* kVersion = "rggent 0.1.0";

struct CommonOpts {
  int m = 5;
  int d = 1;
  double r = 0.3;
  std::string domain = "cube";
  double samples = 1e6;
  double inner = 4000;
  double pairs = 2e5;
  double hits = 2000;
  std::uint64_t seed = 12345;
  int workers = 1;
  std::string out;
  std::string format = "json";

  Domain make_domain() const { return Domain{d, flavor_from_string(domain)}; }
  std::uint64_t samples_n() const { return static_cast<std::uint64_t>(samples); }
  std::uint64_t inner_n() const { return static_cast<std::uint64_t>(inner); }
  std::uint64_t pairs_n() const { return static_cast<std::uint64_t>(pairs); }
  std::uint64_t hits_n() const { return static_cast<std::uint64_t>(hits); }
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool geometry = true) {
  if (geometry) {
    cmd->add_option("--m", o.m, "vertex / anchor count");
    cmd->add_option("--d", o.d, "dimension");
    cmd->add_option("--r", o.r, "connection range");
    cmd->add_option("--domain", o.domain, "cube or torus")
        ->check(CLI::IsMember({"cube", "torus"}));
  }
  cmd->add_option("--samples", o.samples, "sample count (scientific notation ok)");
  cmd->add_option("--inner", o.inner, "inner hit-sampling size");
  cmd->add_option("--pairs", o.pairs, "pair samples for second-moment estimates");
  cmd->add_option("--hits", o.hits, "probe samples per repetition");
  cmd->add_option("--seed", o.seed, "64-bit root seed")->envname("RGGENT_SEED");
  cmd->add_option("--workers", o.workers, "worker threads");
  cmd->add_option("--out", o.out, "output path (stdout if omitted)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

// Experiment parameters only; --workers is an execution detail that would
// break byte-identical outputs across worker counts, so it lives in the
// manifest instead.
json config_echo(const std::string& command, const CommonOpts& o) {
  return json{{"command", command}, {"m", o.m},          {"d", o.d},
              {"r", o.r},           {"domain", o.domain}, {"samples", o.samples},
              {"inner", o.inner},   {"pairs", o.pairs},   {"hits", o.hits},
              {"seed", o.seed},     {"format", o.format}};
}

// Writes the result, then the manifest next to it (stderr when result goes
// to stdout). The manifest is emitted even when the run failed.
void emit(const CommonOpts& o, const std::string& command, const json& config,
          const std::string& content, const std::string& status,
          double wall_seconds) {
  std::vector<std::string> outputs;
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + o.out);
    file << content;
    outputs.push_back(o.out);
  } else {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  }
  json full_config = config;
  full_config["workers"] = o.workers;
  json manifest{{"command", command},
                {"config", full_config},
                {"version", kVersion},
                {"wall_time_s", wall_seconds},
                {"outputs", outputs},
                {"status", status}};
  if (!o.out.empty()) {
    std::ofstream mf(o.out + ".manifest.json");
    mf << manifest.dump(2) << '\n';
  } else {
    std::cerr << manifest.dump() << '\n';
  }
}

double edge_probability_hat(const EmpiricalDistribution& dist, int m) {
  const double pairs = static_cast<double>(m) * (m - 1) / 2.0;
  double sum_e = 0.0;
  for (const auto& [key, count] : dist.sorted_items()) {
    sum_e += static_cast<double>(count) *
             static_cast<double>(LabeledGraph::from_encoding(m, key).edge_total());
  }
  return sum_e / (static_cast<double>(dist.total()) * pairs);
}

EstimatorKind pick_backend(const std::string& name, const Domain& domain, double r) {
  if (name == "sweep") return EstimatorKind::Exact1DSweep;
  if (name == "volmc") return EstimatorKind::VolMC;
  if (name == "secondmoment") return EstimatorKind::SecondMomentTorus;
  // auto
  if (domain.flavor == Flavor::Cube && domain.dim == 1) return EstimatorKind::Exact1DSweep;
  if (domain.flavor == Flavor::Torus && r <= 0.25) return EstimatorKind::SecondMomentTorus;
  return EstimatorKind::VolMC;
}

std::string run_entropy(const CommonOpts& o, const std::string& backend_name) {
  Domain domain = o.make_domain();
  RandomStream root(o.seed);
  EmpiricalDistribution dist =
      sample_graph_distribution(o.m, domain, o.r, o.samples_n(), root.substream(0), o.workers);
  RandomStream boot_a = root.substream(1);
  RandomStream boot_b = root.substream(2);
  EntropyEstimate plug = plugin_entropy(dist, Correction::None, boot_a);
  EntropyEstimate mm = plugin_entropy(dist, Correction::MillerMadow, boot_b);

  EstimatorKind backend = pick_backend(backend_name, domain, o.r);
  LowerBoundParams params;
  params.workers = o.workers;
  params.profile_mc.inner_n = o.inner_n();
  params.pair_samples = o.pairs_n();
  EntropyEstimate lower =
      graph_entropy_lower_bound(o.m, domain, o.r, backend, params, root.substream(3));

  BetaParams beta_params;
  RandomStream beta_rng = root.substream(4);
  BoundReport upper = entropy_upper_bound(o.m, domain, o.r, beta_params, beta_rng);

  double p_hat = edge_probability_hat(dist, o.m);
  double pairwise = static_cast<double>(o.m) * (o.m - 1) / 2.0 * binary_entropy(p_hat);

  json out{{"config", config_echo("entropy", o)},
           {"support_size", dist.support_size()},
           {"plug_in", plug},
           {"miller_madow", mm},
           {"lower_bound", lower},
           {"upper_bound", upper},
           {"count_bound_bits", graph_count_bound_bits(o.m, o.d, domain.flavor)},
           {"edge_probability_hat", p_hat},
           {"pairwise_bound_bits", pairwise}};
  try {
    out["pair_entropy_exact_bits"] = pair_entropy_exact(domain, o.r);
  } catch (const unsupported_range_error&) {
    // no closed form for this (domain, r); Monte Carlo values above stand
  }
  return out.dump(2) + "\n";
}

std::string run_lowerbound(const CommonOpts& o, const std::string& backend_name, int redraws,
                           double outer) {
  Domain domain = o.make_domain();
  RandomStream root(o.seed);
  EstimatorKind backend = pick_backend(backend_name, domain, o.r);
  LowerBoundParams params;
  params.anchor_redraws = redraws;
  params.workers = o.workers;
  params.profile_mc.outer_n = static_cast<std::uint64_t>(outer);
  params.profile_mc.inner_n = o.inner_n();
  params.pair_samples = o.pairs_n();
  EntropyEstimate lower =
      graph_entropy_lower_bound(o.m, domain, o.r, backend, params, root.substream(0));
  json out{{"config", config_echo("lowerbound", o)},
           {"backend", to_string(backend)},
           {"lower_bound", lower}};
  return out.dump(2) + "\n";
}

std::string run_bounds(const CommonOpts& o) {
  Domain domain = o.make_domain();
  RandomStream root(o.seed);
  BetaParams beta_params;
  RandomStream beta_rng = root.substream(0);
  BoundReport report = entropy_upper_bound(o.m, domain, o.r, beta_params, beta_rng);
  json out{{"config", config_echo("bounds", o)},
           {"upper_bound", report},
           {"count_bound_bits", graph_count_bound_bits(o.m, o.d, domain.flavor)},
           {"warren_bits",
            warren_sign_pattern_bound(report.warren_u, report.warren_t, report.warren_k)},
           {"log2_factorial_m", log2_factorial(o.m)}};
  if (domain.flavor == Flavor::Cube && o.d == 1) {
    out["asymptotic_limit"] = asymptotic_curve_1d(o.r);
  }
  return out.dump(2) + "\n";
}

std::string run_census(const CommonOpts& o) {
  Domain domain = o.make_domain();
  RandomStream root(o.seed);
  CensusResult census =
      graph_census(o.m, domain, o.r, o.samples_n(), root.substream(0), o.workers);
  double bound = graph_count_bound_bits(o.m, o.d, domain.flavor);
  if (o.format == "csv") {
    EmpiricalDistribution dist =
        sample_graph_distribution(o.m, domain, o.r, o.samples_n(), root.substream(0), o.workers);
    std::string csv = "encoding,count\n";
    for (const auto& [key, count] : dist.sorted_items()) {
      csv += hex_encode(key) + "," + std::to_string(count) + "\n";
    }
    return csv;
  }
  json out{{"config", config_echo("census", o)},
           {"census", census},
           {"count_bound_bits", bound},
           {"log2_distinct_graphs",
            census.distinct_graphs > 0 ? std::log2(static_cast<double>(census.distinct_graphs))
                                       : 0.0},
           {"within_bound",
            std::log2(static_cast<double>(std::max<std::uint64_t>(census.distinct_graphs, 1))) <=
                bound}};
  return out.dump(2) + "\n";
}

std::string run_volumes(const CommonOpts& o, double s) {
  Domain domain = o.make_domain();
  RandomStream root(o.seed);
  json out{{"config", config_echo("volumes", o)},
           {"s", s},
           {"unit_ball_volume", unit_ball_volume(o.d)},
           {"ball_volume", ball_volume(o.d, o.r)},
           {"lens_volume", lens_volume(o.d, o.r, s)},
           {"crescent_volume", crescent_volume(o.d, o.r, s)},
           {"crescent_cone_lower_bound", crescent_cone_lower_bound(o.d, o.r, s)}};
  // Hit-sampling cross-check of the lens inside the unit cube.
  if (o.r <= 0.25) {
    RegionSpec spec;
    spec.radius = o.r;
    spec.domain = Domain::cube(o.d);
    Point a, b;
    a.x.assign(o.d, 0.5);
    b.x.assign(o.d, 0.5);
    a.x[0] = 0.5 - 0.5 * s;
    b.x[0] = 0.5 + 0.5 * s;
    spec.in_centers = {a, b};
    RandomStream mc_rng = root.substream(0);
    HitEstimate mc = region_volume_mc(spec, o.hits_n(), mc_rng);
    out["lens_mc"] = json{{"value", mc.value}, {"std_error", mc.std_error}, {"n", mc.n_samples}};
  }
  if (domain.flavor == Flavor::Torus && o.r <= 0.25) {
    Point origin{std::vector<double>(o.d, 0.0)};
    Point shifted{std::vector<double>(o.d, 0.0)};
    shifted.x[0] = s;
    out["toroidal_crescent_volume"] =
        toroidal_crescent_volume(domain, o.r, origin, canonical_point(domain, shifted));
  }
  return out.dump(2) + "\n";
}

std::string run_orderstats(const CommonOpts& o) {
  RandomStream root(o.seed);
  SpacingTails tails = spacing_tail_probs(o.m, o.r);
  RangeGapStats stats =
      expected_range_and_max_gap(o.m, o.samples_n(), root.substream(0), o.workers);
  std::vector<Verdict> verdicts;
  {
    Verdict v;
    v.check = "E[range] vs (m-1)/(m+1)";
    v.statistic = std::fabs(stats.mc_range_mean - stats.expected_range);
    v.sigma = stats.mc_range_se;
    v.bound = 4.0 * stats.mc_range_se;
    v.pass = v.statistic <= v.bound;
    verdicts.push_back(v);
  }
  {
    Verdict v;
    v.check = "E[max interior gap] <= (ln m + 1)/m";
    v.statistic = stats.mc_max_interior_gap;
    v.bound = stats.max_gap_bound_ln;
    v.sigma = stats.mc_max_interior_gap_se;
    v.pass = v.statistic <= v.bound + 4.0 * v.sigma;
    verdicts.push_back(v);
  }
  json out{{"config", config_echo("orderstats", o)},
           {"tails", tails},
           {"range_and_max_gap", stats},
           {"verdicts", verdicts}};
  return out.dump(2) + "\n";
}

std::string run_boolean(const CommonOpts& o) {
  RandomStream root(o.seed);
  IntersectionParams params;
  params.reps = o.samples_n() > 0 ? std::max<std::uint64_t>(o.samples_n() / 1000, 200) : 2000;
  params.hits_per_rep = o.hits_n();

  json grid = json::array();
  std::vector<double> log_l, log_v;
  const int ells[5] = {4, 8, 16, 32, 64};
  for (int i = 0; i < 5; ++i) {
    McValue v = intersection_volume(ells[i], o.d, o.r, CountMode::Fixed, params,
                                    root.substream(10 + i), o.workers);
    grid.push_back(json{{"ell", ells[i]}, {"volume", v}});
    log_l.push_back(std::log(static_cast<double>(ells[i])));
    log_v.push_back(std::log(v.value));
  }
  SlopeFit fit = ols_fit(log_l, log_v);

  DepoissonizationResult dp = depoissonization_check(16, o.d, o.r, params, root.substream(20),
                                                     o.workers);

  json mix = json::array();
  std::vector<double> log_k, log_b;
  const int ks[5] = {8, 16, 32, 64, 128};
  for (int i = 0; i < 5; ++i) {
    McValue v =
        binomial_mixture_volume(ks[i], o.d, o.r, params, root.substream(30 + i), o.workers);
    mix.push_back(json{{"k", ks[i]}, {"volume", v}});
    log_k.push_back(std::log(static_cast<double>(ks[i])));
    log_b.push_back(std::log(v.value));
  }
  SlopeFit mix_fit = ols_fit(log_k, log_b);

  auto slope_verdict = [&](const std::string& name, const SlopeFit& f) {
    Verdict v;
    v.check = name;
    v.statistic = f.slope;
    v.bound = -static_cast<double>(o.d);
    v.sigma = 0.3;
    v.pass = std::fabs(f.slope + o.d) <= 0.3;
    return v;
  };
  std::vector<Verdict> verdicts{slope_verdict("fixed-count log-log slope", fit),
                                slope_verdict("binomial-mixture log-log slope", mix_fit)};
  {
    Verdict v;
    v.check = "de-poissonization ratio <= 2(1+4sigma_rel)";
    v.statistic = dp.ratio;
    v.bound = 2.0 * (1.0 + 4.0 * dp.rel_sigma);
    v.sigma = dp.rel_sigma;
    v.pass = dp.pass;
    verdicts.push_back(v);
  }

  json out{{"config", config_echo("boolean", o)},
           {"fixed_grid", grid},
           {"fixed_slope", fit.slope},
           {"binomial_grid", mix},
           {"binomial_slope", mix_fit.slope},
           {"depoissonization", dp},
           {"verdicts", verdicts}};
  return out.dump(2) + "\n";
}

std::string run_gammacheck(const CommonOpts& o, double K, double s0, int sweep) {
  RandomStream rng = RandomStream(o.seed).substream(0);
  GammaIntegralCheck pinned = gamma_integral_check(K, s0, o.m, o.d);
  int violations = 0;
  json samples = json::array();
  for (int i = 0; i < sweep; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(3));
    double s = 0.01 + 0.48 * rng.next_double();
    double k = 0.05 + 0.95 * rng.next_double();  // bound valid for K <= 1
    int m = static_cast<int>(rng.next_below(1000)) + 1;
    GammaIntegralCheck chk = gamma_integral_check(k, s, m, d);
    if (!chk.holds) ++violations;
  }
  json out{{"config", config_echo("gammacheck", o)},
           {"K", K},
           {"s0", s0},
           {"pinned", pinned},
           {"sweep_size", sweep},
           {"sweep_violations", violations}};
  return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - hard random geometric graph entropy experiments"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string backend = "auto";
  int redraws = 64;
  double outer = 256;
  double s_value = 0.1;
  double gamma_K = 1.0, gamma_s0 = 0.25;
  int gamma_sweep = 100;
  double grid_step = 0.01;
  bool verbose = false;

  CLI::App* c_entropy = app.add_subcommand("entropy", "plug-in and bound estimates for H(G_m)");
  add_common_flags(c_entropy, o);
  c_entropy->add_option("--backend", backend, "auto|sweep|volmc|secondmoment")
      ->check(CLI::IsMember({"auto", "sweep", "volmc", "secondmoment"}));

  CLI::App* c_lower = app.add_subcommand("lowerbound", "recursive conditional-entropy lower bound");
  add_common_flags(c_lower, o);
  c_lower->add_option("--backend", backend, "auto|sweep|volmc|secondmoment")
      ->check(CLI::IsMember({"auto", "sweep", "volmc", "secondmoment"}));
  c_lower->add_option("--redraws", redraws, "anchor redraws per term");
  c_lower->add_option("--outer", outer, "probe draws per anchor set (volmc)");

  CLI::App* c_bounds = app.add_subcommand("bounds", "closed-form upper bounds");
  add_common_flags(c_bounds, o);

  CLI::App* c_census = app.add_subcommand("census", "distinct graph/structure counts");
  add_common_flags(c_census, o);

  CLI::App* c_fig = app.add_subcommand("figure1", "entropy-limit curve CSV");
  add_common_flags(c_fig, o, false);
  c_fig->add_option("--grid", grid_step, "r grid step");

  CLI::App* c_vol = app.add_subcommand("volumes", "ball/lens/crescent volumes + MC check");
  add_common_flags(c_vol, o);
  c_vol->add_option("--s", s_value, "center separation");

  CLI::App* c_ord = app.add_subcommand("orderstats", "uniform order-statistics checks");
  add_common_flags(c_ord, o);

  CLI::App* c_bool = app.add_subcommand("boolean", "Boolean-model intersection scaling");
  add_common_flags(c_bool, o);

  CLI::App* c_gamma = app.add_subcommand("gammacheck", "gamma-integral lemma check");
  add_common_flags(c_gamma, o);
  c_gamma->add_option("--K", gamma_K, "linear volume coefficient");
  c_gamma->add_option("--s0", gamma_s0, "integration cutoff (< 1/2)");
  c_gamma->add_option("--sweep", gamma_sweep, "random tuples to sweep");

  CLI::App* c_verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  add_common_flags(c_verify, o, false);
  c_verify->add_flag("--verbose", verbose, "print every verdict");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    std::string content;
    if (command == "entropy") {
      content = run_entropy(o, backend);
    } else if (command == "lowerbound") {
      content = run_lowerbound(o, backend, redraws, outer);
    } else if (command == "bounds") {
      content = run_bounds(o);
    } else if (command == "census") {
      content = run_census(o);
    } else if (command == "figure1") {
      content = figure1_csv(grid_step);
    } else if (command == "volumes") {
      content = run_volumes(o, s_value);
    } else if (command == "orderstats") {
      content = run_orderstats(o);
    } else if (command == "boolean") {
      content = run_boolean(o);
    } else if (command == "gammacheck") {
      content = run_gammacheck(o, gamma_K, gamma_s0, gamma_sweep);
    } else if (command == "verify-all") {
      acceptance::Options opts;
      opts.seed = o.seed;
      opts.workers = o.workers;
      opts.cli_path = argv[0];
      opts.verbose = verbose;
      acceptance::Report report = acceptance::run_all(opts, std::cerr);
      json criteria = json::array();
      for (const auto& c : report.criteria) {
        criteria.push_back(json{{"number", c.number},
                                {"name", c.name},
                                {"pass", c.pass},
                                {"seconds", c.seconds},
                                {"verdicts", c.verdicts}});
      }
      json out{{"config", config_echo("verify-all", o)},
               {"criteria", criteria},
               {"all_pass", report.all_pass()}};
      content = out.dump(2) + "\n";
      emit(o, command, config_echo(command, o), content,
           report.all_pass() ? "ok" : "failed", elapsed());
      return report.failures() == 0 ? 0 : 1;
    }
    emit(o, command, config_echo(command, o), content, "ok", elapsed());
    return 0;
  } catch (const std::exception& err) {
    json diagnostic{{"pass", false}, {"error", err.what()}};
    try {
      emit(o, command, config_echo(command, o), diagnostic.dump(2) + "\n", "error", elapsed());
    } catch (...) {
      std::cerr << diagnostic.dump() << '\n';
    }
    return 1;
  }
}
