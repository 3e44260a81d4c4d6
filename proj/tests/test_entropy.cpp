#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "rggent/distribution.hpp"
#include "rggent/entropy.hpp"
#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/region.hpp"

using namespace rggent;

namespace {

EmpiricalDistribution dist_from_counts(const std::vector<std::uint64_t>& counts) {
  EmpiricalDistribution dist;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    dist.add(std::string(1, static_cast<char>('a' + i)), counts[i]);
  }
  return dist;
}

}  // namespace

TEST_SUITE_BEGIN("entropy");

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.75) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(1.5), std::invalid_argument);
}

TEST_CASE("plug-in entropy on pinned distributions") {
  RandomStream rng(71);
  EntropyEstimate uniform4 = plugin_entropy(dist_from_counts({5, 5, 5, 5}), Correction::None, rng);
  CHECK(uniform4.bits == doctest::Approx(2.0).epsilon(1e-12));

  EntropyEstimate single = plugin_entropy(dist_from_counts({17}), Correction::None, rng);
  CHECK(single.bits == 0.0);
  CHECK(single.std_error == 0.0);

  EntropyEstimate skew = plugin_entropy(dist_from_counts({3, 1}), Correction::None, rng);
  CHECK(skew.bits == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
  CHECK(skew.std_error > 0.0);

  // Miller-Madow adds (K-1)/(2N ln 2) bits.
  EntropyEstimate mm = plugin_entropy(dist_from_counts({3, 1}), Correction::MillerMadow, rng);
  CHECK(mm.bits - skew.bits == doctest::Approx(1.0 / (8.0 * std::log(2.0))).epsilon(1e-12));
  CHECK(mm.kind == EstimatorKind::MillerMadow);

  EmpiricalDistribution empty;
  CHECK_THROWS_AS(plugin_entropy(empty, Correction::None, rng), std::invalid_argument);
}

TEST_CASE("pair entropy closed forms") {
  CHECK(pair_entropy_exact(Domain::cube(1), 0.5) ==
        doctest::Approx(binary_entropy(0.75)).epsilon(1e-15));
  CHECK(pair_entropy_exact(Domain::torus(1), 0.25) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pair_entropy_exact(Domain::torus(2), 0.25) ==
        doctest::Approx(binary_entropy(M_PI / 16.0)).epsilon(1e-15));
  CHECK_THROWS_AS(pair_entropy_exact(Domain::cube(2), 0.4), unsupported_range_error);
  CHECK_THROWS_AS(pair_entropy_exact(Domain::torus(2), 0.6), unsupported_range_error);
  CHECK_THROWS_AS(pair_entropy_exact(Domain::cube(1), 1.5), std::invalid_argument);
}

TEST_CASE("exact 1-D profile entropy") {
  std::vector<double> one{0.5};
  CHECK(profile_entropy_exact_1d(one, 0.2) ==
        doctest::Approx(binary_entropy(0.4)).epsilon(1e-12));
  CHECK(profile_entropy_exact_1d(std::vector<double>{}, 0.2) == 0.0);

  // Profile distribution oracle: empirical probe draws vs the sweep.
  std::vector<double> anchors{0.3, 0.4};
  double exact = profile_entropy_exact_1d(anchors, 0.2);
  RandomStream rng(72);
  EmpiricalDistribution profiles;
  const int n = 1'000'000;
  Domain c1 = Domain::cube(1);
  std::vector<Point> anchor_points{Point{{0.3}}, Point{{0.4}}};
  for (int i = 0; i < n; ++i) {
    Point x0 = sample_point(c1, rng);
    profiles.add(edge_profile(x0, anchor_points, 0.2, c1).encoding());
  }
  RandomStream boot(73);
  EntropyEstimate plug = plugin_entropy(profiles, Correction::None, boot);
  CHECK(std::fabs(plug.bits - exact) <= 4.0 * std::max(plug.std_error, 1e-4));
}

TEST_CASE("volume-MC profile entropy") {
  Domain t1 = Domain::torus(1);
  ProfileMcParams params;
  params.outer_n = 400;
  params.inner_n = 2000;
  RandomStream rng(74);
  EntropyEstimate empty = profile_entropy_mc({}, 0.25, t1, params, rng);
  CHECK(empty.bits == 0.0);

  // One anchor on the unit torus: profile is Bernoulli(1/2), Vol(A) = 1/2.
  EntropyEstimate single =
      profile_entropy_mc({Point{{0.4}}}, 0.25, t1, params, rng.substream(1));
  CHECK(std::fabs(single.bits - 1.0) <= 4.0 * std::max(single.std_error, 5e-3));

  // Agreement with the exact sweep on random d=1 cube instances.
  Domain c1 = Domain::cube(1);
  RandomStream inst(75);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 1 + static_cast<int>(inst.next_below(6));
    double r = trial % 2 == 0 ? 0.15 : 0.45;
    std::vector<double> xs(n);
    std::vector<Point> pts;
    for (double& x : xs) {
      x = inst.next_double();
      pts.push_back(Point{{x}});
    }
    double exact = profile_entropy_exact_1d(xs, r);
    EntropyEstimate mc = profile_entropy_mc(pts, r, c1, params, inst.substream(trial));
    CHECK(std::fabs(mc.bits - exact) <= 4.0 * std::max(mc.std_error, 5e-3));
  }
}

TEST_CASE("second-moment volume and the Jensen bound") {
  RandomStream rng(76);
  McValue trivial = second_moment_volume_torus(0, 1, 0.2, 1000, rng);
  CHECK(trivial.value == 1.0);

  McValue v = second_moment_volume_torus(1, 1, 0.25, 400'000, rng.substream(0));
  CHECK(std::fabs(v.value - 0.5) <= 4.0 * v.std_error);

  McValue jensen = jensen_profile_lower_bound(1, 1, 0.25, 400'000, rng.substream(1));
  CHECK(std::fabs(jensen.value - 1.0) <= 4.0 * jensen.std_error);
  CHECK(jensen_profile_lower_bound(0, 2, 0.2, 1000, rng.substream(2)).value == 0.0);

  CHECK_THROWS_AS(second_moment_volume_torus(4, 1, 0.3, 1000, rng), unsupported_range_error);

  // E[Vol(A)] * n stays bounded and the log-log slope is about -1 (d=1).
  std::vector<double> xs, ys;
  for (int n : {16, 32, 64, 128, 256}) {
    McValue vol = second_moment_volume_torus(n, 1, 0.2, 200'000, rng.substream(10 + n));
    CHECK(vol.value * n < 1.5);
    xs.push_back(std::log2(static_cast<double>(n)));
    ys.push_back(-std::log2(vol.value));
  }
  SlopeFit fit = ols_fit(xs, ys);
  CHECK(std::fabs(fit.slope - 1.0) <= 0.3);
}

TEST_CASE("Jensen bound undercuts the direct estimate on matched instances") {
  Domain t1 = Domain::torus(1);
  RandomStream rng(77);
  const int n = 3;
  const double r = 0.2;
  McValue jensen = jensen_profile_lower_bound(n, 1, r, 400'000, rng.substream(0));

  // Average the per-anchor-set estimator over fresh draws; Jensen bounds
  // that average from below.
  ProfileMcParams params;
  params.outer_n = 64;
  params.inner_n = 2000;
  std::vector<double> values;
  for (int a = 0; a < 48; ++a) {
    RandomStream draw = rng.substream(100 + a);
    std::vector<Point> anchors = sample_points(n, t1, draw);
    values.push_back(profile_entropy_mc(anchors, r, t1, params, draw.substream(0)).bits);
  }
  MeanStats stats = mean_and_std_error(values);
  CHECK(jensen.value <= stats.mean + 4.0 * (stats.std_error + jensen.std_error));
}

TEST_CASE("recursive lower bound") {
  RandomStream rng(78);
  LowerBoundParams params;

  EntropyEstimate trivial = graph_entropy_lower_bound(1, Domain::cube(1), 0.3,
                                                      EstimatorKind::Exact1DSweep, params, rng);
  CHECK(trivial.bits == 0.0);

  params.pair_samples = 400'000;
  EntropyEstimate pair = graph_entropy_lower_bound(
      2, Domain::torus(1), 0.25, EstimatorKind::SecondMomentTorus, params, rng.substream(1));
  CHECK(std::fabs(pair.bits - 1.0) <= 4.0 * pair.std_error);

  CHECK_THROWS_AS(graph_entropy_lower_bound(3, Domain::torus(1), 0.2,
                                            EstimatorKind::Exact1DSweep, params, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_entropy_lower_bound(3, Domain::cube(2), 0.2,
                                            EstimatorKind::SecondMomentTorus, params, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_entropy_lower_bound(3, Domain::cube(1), 0.3, EstimatorKind::PlugIn,
                                            params, rng),
                  std::invalid_argument);

  // Mini sandwich: the bound sits below the plug-in estimate.
  Domain c1 = Domain::cube(1);
  for (int m : {3, 5}) {
    RandomStream sub = rng.substream(200 + m);
    EmpiricalDistribution dist =
        sample_graph_distribution(m, c1, 0.3, 1'000'000, sub.substream(0), 1);
    RandomStream boot = sub.substream(1);
    EntropyEstimate plug = plugin_entropy(dist, Correction::None, boot);
    LowerBoundParams lb_params;
    lb_params.anchor_redraws = 256;
    EntropyEstimate lb = graph_entropy_lower_bound(m, c1, 0.3, EstimatorKind::Exact1DSweep,
                                                   lb_params, sub.substream(2));
    CHECK(lb.bits - 4.0 * lb.std_error <= plug.bits);
    CHECK(lb.bits > 0.0);
  }

  // The volume-MC backend agrees with the exact sweep at m=3.
  LowerBoundParams mc_params;
  mc_params.anchor_redraws = 48;
  mc_params.profile_mc.outer_n = 64;
  mc_params.profile_mc.inner_n = 2000;
  EntropyEstimate sweep = graph_entropy_lower_bound(3, c1, 0.3, EstimatorKind::Exact1DSweep,
                                                    mc_params, rng.substream(300));
  EntropyEstimate volmc = graph_entropy_lower_bound(3, c1, 0.3, EstimatorKind::VolMC, mc_params,
                                                    rng.substream(301));
  CHECK(std::fabs(sweep.bits - volmc.bits) <=
        4.0 * (sweep.std_error + volmc.std_error) + 0.05);
}

TEST_CASE("restricted-event bound for wide 1-D ranges") {
  RandomStream rng(79);
  RestrictedEventBound b = restricted_event_bound_1d(10, 0.75, 4000, rng);
  CHECK(b.event_prob_floor == doctest::Approx(0.20555478876287292).epsilon(1e-9));
  CHECK(b.bound_bits > 0.0);

  RestrictedEventBound degenerate = restricted_event_bound_1d(10, 0.995, 500, rng.substream(1));
  CHECK(degenerate.event_prob_floor == 0.0);

  CHECK_THROWS_AS(restricted_event_bound_1d(10, 0.4, 100, rng), std::invalid_argument);

  // Desk-scale trend: bound / log2(m) lands within [0.6, 1.0] of 2(1-r).
  RestrictedEventBound trend = restricted_event_bound_1d(256, 0.6, 3000, rng.substream(2));
  double normalized = trend.bound_bits / std::log2(256.0);
  CHECK(normalized >= 0.6 * 0.8);
  CHECK(normalized <= 1.0 * 0.8 + 1e-9);
}

TEST_CASE("plug-in chain identity and structural floor") {
  Domain t2 = Domain::torus(2);
  RandomStream root(80);
  EmpiricalDistribution dist =
      sample_graph_distribution(4, t2, 0.25, 200'000, root.substream(0), 1);
  RandomStream decomp_rng = root.substream(1);
  StructureDecomposition decomp = structure_decomposition(dist, 4, decomp_rng);
  CHECK(decomp.graph.bits ==
        doctest::Approx(decomp.structure.bits + decomp.conditional_bits).epsilon(1e-11));
  CHECK(decomp.structure.bits <= decomp.graph.bits + 1e-12);
  CHECK(decomp.conditional_bits <= std::log2(24.0) + 1e-12);  // log2 4!
}

TEST_SUITE_END();
