#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rggent/bounds.hpp"
#include "rggent/distribution.hpp"
#include "rggent/entropy.hpp"
#include "rggent/geometry.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/region.hpp"
#include "rggent/stochgeo.hpp"

namespace py = pybind11;
using namespace rggent;

namespace {

Domain make_domain(int d, const std::string& flavor) {
  return Domain{d, flavor_from_string(flavor)};
}

std::vector<Point> to_points(const std::vector<std::vector<double>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) pts.push_back(Point{c});
  return pts;
}

py::dict estimate_dict(const EntropyEstimate& e) {
  py::dict d;
  d["kind"] = to_string(e.kind);
  d["bits"] = e.bits;
  d["std_error"] = e.std_error;
  d["n_samples"] = e.n_samples;
  d["dropped_draws"] = e.dropped_draws;
  return d;
}

EstimatorKind backend_from_string(const std::string& name) {
  if (name == "sweep") return EstimatorKind::Exact1DSweep;
  if (name == "volmc") return EstimatorKind::VolMC;
  if (name == "secondmoment") return EstimatorKind::SecondMomentTorus;
  throw std::invalid_argument("backend must be sweep, volmc or secondmoment");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hard random geometric graph entropy toolkit";

  m.def("distance",
        [](int d, const std::string& flavor, const std::vector<double>& a,
           const std::vector<double>& b) {
          return distance(make_domain(d, flavor), Point{a}, Point{b});
        },
        py::arg("d"), py::arg("domain"), py::arg("x"), py::arg("y"));

  m.def("unit_ball_volume", &unit_ball_volume, py::arg("d"));
  m.def("ball_volume", &ball_volume, py::arg("d"), py::arg("r"));
  m.def("lens_volume", &lens_volume, py::arg("d"), py::arg("r"), py::arg("s"));
  m.def("crescent_volume", &crescent_volume, py::arg("d"), py::arg("r"), py::arg("s"));
  m.def("crescent_cone_lower_bound", &crescent_cone_lower_bound, py::arg("d"), py::arg("r"),
        py::arg("s"));

  m.def("region_volume_mc",
        [](int d, const std::string& flavor, double r,
           const std::vector<std::vector<double>>& in_centers,
           const std::vector<std::vector<double>>& out_centers, std::uint64_t n,
           std::uint64_t seed) {
          RegionSpec spec;
          spec.radius = r;
          spec.domain = make_domain(d, flavor);
          spec.in_centers = to_points(in_centers);
          spec.out_centers = to_points(out_centers);
          RandomStream rng(seed);
          HitEstimate est = region_volume_mc(spec, n, rng);
          return py::make_tuple(est.value, est.std_error);
        },
        py::arg("d"), py::arg("domain"), py::arg("r"), py::arg("in_centers"),
        py::arg("out_centers"), py::arg("n_samples"), py::arg("seed") = 0);

  m.def("profile_region_volume_1d",
        [](const std::vector<double>& points, double r, const std::vector<int>& profile) {
          std::vector<std::uint8_t> bits(profile.begin(), profile.end());
          return profile_region_volume_1d(points, r, bits);
        },
        py::arg("points"), py::arg("r"), py::arg("profile"));

  m.def("sample_points",
        [](int m, int d, const std::string& flavor, std::uint64_t seed) {
          RandomStream rng(seed);
          std::vector<std::vector<double>> out;
          for (const Point& p : sample_points(m, make_domain(d, flavor), rng)) out.push_back(p.x);
          return out;
        },
        py::arg("m"), py::arg("d"), py::arg("domain"), py::arg("seed") = 0);

  m.def("build_graph_hex",
        [](const std::vector<std::vector<double>>& points, double r, int d,
           const std::string& flavor) {
          return build_graph(to_points(points), r, make_domain(d, flavor)).hex();
        },
        py::arg("points"), py::arg("r"), py::arg("d"), py::arg("domain"));

  m.def("graph_edges",
        [](const std::vector<std::vector<double>>& points, double r, int d,
           const std::string& flavor) {
          LabeledGraph g = build_graph(to_points(points), r, make_domain(d, flavor));
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < g.vertex_count(); ++i) {
            for (int j = i + 1; j < g.vertex_count(); ++j) {
              if (g.edge(i, j)) edges.emplace_back(i, j);
            }
          }
          return edges;
        },
        py::arg("points"), py::arg("r"), py::arg("d"), py::arg("domain"));

  m.def("edge_profile",
        [](const std::vector<double>& x0, const std::vector<std::vector<double>>& anchors,
           double r, int d, const std::string& flavor) {
          EdgeProfile p = edge_profile(Point{x0}, to_points(anchors), r, make_domain(d, flavor));
          return std::vector<int>(p.bits.begin(), p.bits.end());
        },
        py::arg("x0"), py::arg("anchors"), py::arg("r"), py::arg("d"), py::arg("domain"));

  m.def("canonical_form_hex",
        [](const std::vector<std::vector<double>>& points, double r, int d,
           const std::string& flavor) {
          return canonical_form(build_graph(to_points(points), r, make_domain(d, flavor))).hex();
        },
        py::arg("points"), py::arg("r"), py::arg("d"), py::arg("domain"));

  m.def("graph_distribution",
        [](int m, int d, const std::string& flavor, double r, std::uint64_t n,
           std::uint64_t seed, int workers) {
          EmpiricalDistribution dist = sample_graph_distribution(
              m, make_domain(d, flavor), r, n, RandomStream(seed), workers);
          py::dict out;
          for (const auto& [key, count] : dist.sorted_items()) {
            out[py::str(hex_encode(key))] = count;
          }
          return out;
        },
        py::arg("m"), py::arg("d"), py::arg("domain"), py::arg("r"), py::arg("n_samples"),
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def("pair_entropy_exact",
        [](int d, const std::string& flavor, double r) {
          return pair_entropy_exact(make_domain(d, flavor), r);
        },
        py::arg("d"), py::arg("domain"), py::arg("r"));

  m.def("plugin_entropy",
        [](const std::map<std::string, std::uint64_t>& counts, bool miller_madow,
           std::uint64_t seed) {
          EmpiricalDistribution dist;
          for (const auto& [key, count] : counts) dist.add(key, count);
          RandomStream rng(seed);
          return estimate_dict(plugin_entropy(
              dist, miller_madow ? Correction::MillerMadow : Correction::None, rng));
        },
        py::arg("counts"), py::arg("miller_madow") = false, py::arg("seed") = 0);

  m.def("profile_entropy_exact_1d",
        [](const std::vector<double>& anchors, double r) {
          return profile_entropy_exact_1d(anchors, r);
        },
        py::arg("anchors"), py::arg("r"));

  m.def("profile_entropy_mc",
        [](const std::vector<std::vector<double>>& anchors, double r, int d,
           const std::string& flavor, std::uint64_t outer_n, std::uint64_t inner_n,
           std::uint64_t seed, int workers) {
          ProfileMcParams params;
          params.outer_n = outer_n;
          params.inner_n = inner_n;
          return estimate_dict(profile_entropy_mc(to_points(anchors), r, make_domain(d, flavor),
                                                  params, RandomStream(seed), workers));
        },
        py::arg("anchors"), py::arg("r"), py::arg("d"), py::arg("domain"),
        py::arg("outer_n") = 256, py::arg("inner_n") = 4000, py::arg("seed") = 0,
        py::arg("workers") = 1);

  m.def("second_moment_volume_torus",
        [](int n, int d, double r, std::uint64_t pair_samples, std::uint64_t seed, int workers) {
          McValue v = second_moment_volume_torus(n, d, r, pair_samples, RandomStream(seed),
                                                 workers);
          return py::make_tuple(v.value, v.std_error);
        },
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("pair_samples") = 200000,
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("jensen_profile_lower_bound",
        [](int n, int d, double r, std::uint64_t pair_samples, std::uint64_t seed, int workers) {
          McValue v =
              jensen_profile_lower_bound(n, d, r, pair_samples, RandomStream(seed), workers);
          return py::make_tuple(v.value, v.std_error);
        },
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("pair_samples") = 200000,
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("graph_entropy_lower_bound",
        [](int m, int d, const std::string& flavor, double r, const std::string& backend,
           int anchor_redraws, std::uint64_t pair_samples, std::uint64_t seed, int workers) {
          LowerBoundParams params;
          params.anchor_redraws = anchor_redraws;
          params.pair_samples = pair_samples;
          params.workers = workers;
          return estimate_dict(graph_entropy_lower_bound(m, make_domain(d, flavor), r,
                                                         backend_from_string(backend), params,
                                                         RandomStream(seed)));
        },
        py::arg("m"), py::arg("d"), py::arg("domain"), py::arg("r"), py::arg("backend"),
        py::arg("anchor_redraws") = 64, py::arg("pair_samples") = 200000, py::arg("seed") = 0,
        py::arg("workers") = 1);

  m.def("restricted_event_bound_1d",
        [](int m, double r, std::uint64_t anchor_draws, std::uint64_t seed) {
          RestrictedEventBound b =
              restricted_event_bound_1d(m, r, anchor_draws, RandomStream(seed));
          py::dict out;
          out["bound_bits"] = b.bound_bits;
          out["event_prob_floor"] = b.event_prob_floor;
          out["restricted_volume_mean"] = b.restricted_volume_mean;
          out["restricted_volume_se"] = b.restricted_volume_se;
          return out;
        },
        py::arg("m"), py::arg("r"), py::arg("anchor_draws") = 4000, py::arg("seed") = 0);

  m.def("warren_sign_pattern_bound", &warren_sign_pattern_bound, py::arg("u"), py::arg("t"),
        py::arg("k"));
  m.def("graph_count_bound_bits",
        [](int m, int d, const std::string& flavor) {
          return graph_count_bound_bits(m, d, flavor_from_string(flavor));
        },
        py::arg("m"), py::arg("d"), py::arg("domain"));
  m.def("asymptotic_curve_1d", &asymptotic_curve_1d, py::arg("r"));
  m.def("figure1_csv", &figure1_csv, py::arg("grid_step") = 0.01);
  m.def("structural_entropy_floor", &structural_entropy_floor, py::arg("h_graph_bits"),
        py::arg("m"));
  m.def("log2_factorial", &log2_factorial, py::arg("m"));

  m.def("core_ball_volume",
        [](int d, double r, std::uint64_t mc_hits, std::uint64_t seed) {
          BetaParams params;
          params.mc_hits = mc_hits;
          RandomStream rng(seed);
          BetaResult b = core_ball_volume(d, r, params, rng);
          return py::make_tuple(b.value, b.std_error, b.exact);
        },
        py::arg("d"), py::arg("r"), py::arg("mc_hits") = 10000000, py::arg("seed") = 0);

  m.def("graph_census",
        [](int m, int d, const std::string& flavor, double r, std::uint64_t n,
           std::uint64_t seed, int workers) {
          CensusResult c =
              graph_census(m, make_domain(d, flavor), r, n, RandomStream(seed), workers);
          return py::make_tuple(c.distinct_graphs, c.distinct_structures);
        },
        py::arg("m"), py::arg("d"), py::arg("domain"), py::arg("r"), py::arg("n_samples"),
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("spacing_tail_probs",
        [](int m, double r) {
          SpacingTails t = spacing_tail_probs(m, r);
          py::dict out;
          out["gap_ge_r"] = t.gap_ge_r;
          out["range_le_2r"] = t.range_le_2r;
          out["max_below_r"] = t.max_below_r;
          out["min_above_1mr"] = t.min_above_1mr;
          return out;
        },
        py::arg("m"), py::arg("r"));

  m.def("expected_range_and_max_gap",
        [](int m, std::uint64_t n_samples, std::uint64_t seed) {
          RangeGapStats s = expected_range_and_max_gap(m, n_samples, RandomStream(seed));
          py::dict out;
          out["expected_range"] = s.expected_range;
          out["max_gap_formula"] = s.max_gap_formula;
          out["max_gap_bound_ln"] = s.max_gap_bound_ln;
          out["max_gap_bound_log2"] = s.max_gap_bound_log2;
          out["mc_range_mean"] = s.mc_range_mean;
          out["mc_max_interior_gap"] = s.mc_max_interior_gap;
          return out;
        },
        py::arg("m"), py::arg("n_samples") = 100000, py::arg("seed") = 0);

  m.def("torus_distance_cdf", &torus_distance_cdf, py::arg("d"), py::arg("s"));

  m.def("gamma_integral_check",
        [](double K, double s0, int m, int d) {
          GammaIntegralCheck g = gamma_integral_check(K, s0, m, d);
          return py::make_tuple(g.lhs, g.rhs, g.holds);
        },
        py::arg("K"), py::arg("s0"), py::arg("m"), py::arg("d"));

  m.def("intersection_volume",
        [](double count, int d, double r, const std::string& mode, std::uint64_t reps,
           std::uint64_t hits, std::uint64_t seed, int workers) {
          IntersectionParams params;
          params.reps = reps;
          params.hits_per_rep = hits;
          CountMode cm = mode == "poisson" ? CountMode::Poisson : CountMode::Fixed;
          McValue v = intersection_volume(count, d, r, cm, params, RandomStream(seed), workers);
          return py::make_tuple(v.value, v.std_error);
        },
        py::arg("count"), py::arg("d"), py::arg("r"), py::arg("mode") = "fixed",
        py::arg("reps") = 2000, py::arg("hits") = 2000, py::arg("seed") = 0,
        py::arg("workers") = 1);

  m.def("binomial_mixture_volume",
        [](int k, int d, double r, std::uint64_t reps, std::uint64_t hits, std::uint64_t seed,
           int workers) {
          IntersectionParams params;
          params.reps = reps;
          params.hits_per_rep = hits;
          McValue v = binomial_mixture_volume(k, d, r, params, RandomStream(seed), workers);
          return py::make_tuple(v.value, v.std_error);
        },
        py::arg("k"), py::arg("d"), py::arg("r"), py::arg("reps") = 2000,
        py::arg("hits") = 2000, py::arg("seed") = 0, py::arg("workers") = 1);

  m.attr("__version__") = "0.1.0";
}
