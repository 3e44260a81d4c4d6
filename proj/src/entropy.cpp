#include "rggent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/parallel.hpp"
#include "rggent/region.hpp"

namespace rggent {
namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

double plugin_bits(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  // H = log2 N - (1/N) sum c log2 c
  double acc = 0.0;
  for (std::uint64_t c : counts) {
    if (c > 0) acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
  }
  double n = static_cast<double>(total);
  double h = std::log2(n) - acc / n;
  return h < 0.0 ? 0.0 : h;
}

double miller_madow_bits(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  std::uint64_t support = 0;
  for (std::uint64_t c : counts) {
    if (c > 0) ++support;
  }
  double correction = support == 0 ? 0.0
                                   : static_cast<double>(support - 1) /
                                         (2.0 * static_cast<double>(total) * kLn2);
  return plugin_bits(counts, total) + correction;
}

}  // namespace

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::PlugIn: return "plug_in";
    case EstimatorKind::MillerMadow: return "miller_madow";
    case EstimatorKind::Exact1DSweep: return "exact_1d_sweep";
    case EstimatorKind::VolMC: return "vol_mc";
    case EstimatorKind::SecondMomentTorus: return "second_moment_torus";
  }
  return "unknown";
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

EntropyEstimate plugin_entropy(const EmpiricalDistribution& dist, Correction correction,
                               RandomStream& rng, int bootstrap_resamples) {
  const std::uint64_t total = dist.total();
  if (total == 0) throw std::invalid_argument("plugin_entropy: empty distribution");

  std::vector<std::uint64_t> counts;
  counts.reserve(dist.support_size());
  for (const auto& [key, c] : dist.sorted_items()) counts.push_back(c);

  EntropyEstimate est;
  est.kind = correction == Correction::MillerMadow ? EstimatorKind::MillerMadow
                                                   : EstimatorKind::PlugIn;
  est.n_samples = total;
  est.bits = correction == Correction::MillerMadow ? miller_madow_bits(counts, total)
                                                   : plugin_bits(counts, total);

  if (bootstrap_resamples >= 2 && counts.size() > 1) {
    std::vector<double> resampled(bootstrap_resamples);
    std::vector<std::uint64_t> boot(counts.size());
    for (int b = 0; b < bootstrap_resamples; ++b) {
      RandomStream boot_rng = rng.substream(static_cast<std::uint64_t>(b));
      std::uint64_t remaining = total;
      double prob_remaining = 1.0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (remaining == 0) {
          boot[i] = 0;
          continue;
        }
        if (i + 1 == counts.size()) {
          boot[i] = remaining;
          remaining = 0;
          continue;
        }
        double p = static_cast<double>(counts[i]) / static_cast<double>(total);
        double q = prob_remaining > 0.0 ? std::min(1.0, p / prob_remaining) : 1.0;
        boot[i] = sample_binomial(boot_rng, remaining, q);
        remaining -= boot[i];
        prob_remaining -= p;
      }
      resampled[b] = correction == Correction::MillerMadow ? miller_madow_bits(boot, total)
                                                           : plugin_bits(boot, total);
    }
    MeanStats stats = mean_and_std_error(resampled);
    double var = 0.0;
    for (double v : resampled) {
      double d = v - stats.mean;
      var += d * d;
    }
    est.std_error = std::sqrt(var / static_cast<double>(bootstrap_resamples - 1));
  }
  return est;
}

double pair_entropy_exact(const Domain& domain, double r) {
  domain.require_range(r);
  if (domain.flavor == Flavor::Cube) {
    if (domain.dim != 1) {
      throw unsupported_range_error("pair_entropy_exact: no closed-form p_r for cube d > 1");
    }
    return binary_entropy(2.0 * r - r * r);
  }
  if (r > 0.5) {
    throw unsupported_range_error("pair_entropy_exact: torus closed form needs r <= 1/2");
  }
  return binary_entropy(ball_volume(domain.dim, r));
}

double profile_entropy_exact_1d(std::span<const double> anchors, double r) {
  auto volumes = profile_volumes_1d(anchors, r);
  double h = 0.0;
  for (const auto& [key, v] : volumes) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h < 0.0 ? 0.0 : h;
}

EntropyEstimate profile_entropy_mc(const std::vector<Point>& anchors, double r,
                                   const Domain& domain, const ProfileMcParams& params,
                                   const RandomStream& rng, int workers) {
  domain.require_range(r);
  if (params.outer_n < 1 || params.inner_n < 1) {
    throw std::invalid_argument("profile_entropy_mc: outer_n and inner_n must be >= 1");
  }
  EntropyEstimate est;
  est.kind = EstimatorKind::VolMC;
  if (anchors.empty()) {
    est.n_samples = 0;
    return est;
  }

  std::vector<double> values(params.outer_n, 0.0);
  std::vector<std::uint8_t> kept(params.outer_n, 0);

  parallel_for_indexed(params.outer_n, workers, [&](std::uint64_t i) {
    RandomStream draw = rng.substream(i);
    Point x0 = sample_point(domain, draw);
    EdgeProfile profile = edge_profile(x0, anchors, r, domain);
    RegionSpec spec;
    spec.radius = r;
    spec.domain = domain;
    for (int a = 0; a < profile.size(); ++a) {
      (profile.bits[a] ? spec.in_centers : spec.out_centers).push_back(anchors[a]);
    }
    // Grow the hit-sampling budget x4 (up to 64x) until >= 50 hits.
    std::uint64_t hits = 0, drawn = 0, batch = params.inner_n;
    RandomStream vol_rng = draw.substream(0);
    while (true) {
      HitEstimate he = region_volume_mc(spec, batch, vol_rng);
      hits += he.hits;
      drawn += batch;
      if (hits >= 50 || drawn >= 64 * params.inner_n) break;
      batch = 3 * drawn;  // quadruples the running total
    }
    if (hits == 0) return;
    values[i] = std::log2(static_cast<double>(drawn) / static_cast<double>(hits));
    kept[i] = 1;
  });

  std::vector<double> used;
  used.reserve(params.outer_n);
  for (std::uint64_t i = 0; i < params.outer_n; ++i) {
    if (kept[i]) used.push_back(values[i]);
    else ++est.dropped_draws;
  }
  if (used.empty()) throw std::runtime_error("profile_entropy_mc: every outer draw had zero hits");
  MeanStats stats = mean_and_std_error(used);
  est.bits = std::max(0.0, stats.mean);
  est.std_error = stats.std_error;
  est.n_samples = used.size();
  return est;
}

McValue second_moment_volume_torus(int n, int d, double r, std::uint64_t pair_samples,
                                   const RandomStream& rng, int workers) {
  if (n < 0 || d < 1) throw std::invalid_argument("second_moment_volume_torus: bad n or d");
  if (r <= 0.0 || r > 0.25) {
    throw unsupported_range_error("second_moment_volume_torus: requires 0 < r <= 1/4");
  }
  McValue out;
  if (n == 0) {
    out.value = 1.0;
    return out;
  }
  if (pair_samples < 2) throw std::invalid_argument("second_moment_volume_torus: too few pairs");

  const Domain domain = Domain::torus(d);
  ChunkPlan plan = plan_chunks(pair_samples);
  std::vector<double> sums(plan.n_chunks, 0.0), sq_sums(plan.n_chunks, 0.0);
  parallel_for_indexed(plan.n_chunks, workers, [&](std::uint64_t c) {
    double sum = 0.0, sq = 0.0;
    std::vector<double> a(d), b(d);
    const std::uint64_t begin = plan.offset(c), end = begin + plan.size(c);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream draw = rng.substream(i);
      for (int k = 0; k < d; ++k) a[k] = draw.next_double();
      for (int k = 0; k < d; ++k) b[k] = draw.next_double();
      double s = std::sqrt(squared_distance_raw(domain, a.data(), b.data()));
      double z = std::pow(1.0 - crescent_volume(d, r, s), n);
      sum += z;
      sq += z * z;
    }
    sums[c] = sum;
    sq_sums[c] = sq;
  });
  double sum = 0.0, sq = 0.0;
  for (std::uint64_t c = 0; c < plan.n_chunks; ++c) {
    sum += sums[c];
    sq += sq_sums[c];
  }
  const double N = static_cast<double>(pair_samples);
  out.value = sum / N;
  double var = std::max(0.0, (sq - N * out.value * out.value) / (N - 1.0));
  out.std_error = std::sqrt(var / N);
  out.n_samples = pair_samples;
  return out;
}

McValue jensen_profile_lower_bound(int n, int d, double r, std::uint64_t pair_samples,
                                   const RandomStream& rng, int workers) {
  McValue vol = second_moment_volume_torus(n, d, r, pair_samples, rng, workers);
  McValue out;
  out.n_samples = vol.n_samples;
  if (n == 0) return out;  // -log2(1) = 0
  if (vol.value <= 0.0) {
    out.value = std::numeric_limits<double>::infinity();
    out.std_error = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = -std::log2(vol.value);
  out.std_error = vol.std_error / (vol.value * kLn2);
  return out;
}

EntropyEstimate graph_entropy_lower_bound(int m, const Domain& domain, double r,
                                          EstimatorKind backend,
                                          const LowerBoundParams& params,
                                          const RandomStream& rng) {
  if (m < 1) throw std::invalid_argument("graph_entropy_lower_bound: m < 1");
  domain.require_range(r);
  switch (backend) {
    case EstimatorKind::Exact1DSweep:
      if (domain.flavor != Flavor::Cube || domain.dim != 1) {
        throw std::invalid_argument("Exact1DSweep backend requires the d=1 cube");
      }
      break;
    case EstimatorKind::VolMC:
      break;
    case EstimatorKind::SecondMomentTorus:
      if (domain.flavor != Flavor::Torus || r > 0.25) {
        throw std::invalid_argument("SecondMomentTorus backend requires a torus with r <= 1/4");
      }
      break;
    default:
      throw std::invalid_argument("graph_entropy_lower_bound: not a per-term backend");
  }

  EntropyEstimate est;
  est.kind = backend;
  if (m == 1) return est;

  double total_bits = 0.0, total_var = 0.0;
  std::uint64_t total_draws = 0, dropped = 0;

  for (int n = 1; n <= m - 1; ++n) {
    RandomStream term_rng = rng.substream(static_cast<std::uint64_t>(n));
    if (backend == EstimatorKind::SecondMomentTorus) {
      McValue term = jensen_profile_lower_bound(n, domain.dim, r, params.pair_samples,
                                                term_rng, params.workers);
      total_bits += term.value;
      total_var += term.std_error * term.std_error;
      total_draws += term.n_samples;
      continue;
    }
    const std::uint64_t draws = static_cast<std::uint64_t>(params.anchor_redraws);
    std::vector<double> per_draw(draws, 0.0);
    std::vector<std::uint64_t> per_draw_dropped(draws, 0);
    parallel_for_indexed(draws, params.workers, [&](std::uint64_t a) {
      RandomStream draw_rng = term_rng.substream(a);
      if (backend == EstimatorKind::Exact1DSweep) {
        std::vector<double> anchors(n);
        for (double& x : anchors) x = draw_rng.next_double();
        per_draw[a] = profile_entropy_exact_1d(anchors, r);
      } else {
        std::vector<Point> anchors = sample_points(n, domain, draw_rng);
        EntropyEstimate inner = profile_entropy_mc(anchors, r, domain, params.profile_mc,
                                                   draw_rng.substream(0), 1);
        per_draw[a] = inner.bits;
        per_draw_dropped[a] = inner.dropped_draws;
      }
    });
    MeanStats stats = mean_and_std_error(per_draw);
    total_bits += stats.mean;
    total_var += stats.std_error * stats.std_error;
    total_draws += draws;
    for (std::uint64_t d : per_draw_dropped) dropped += d;
  }

  est.bits = std::max(0.0, total_bits);
  est.std_error = std::sqrt(total_var);
  est.n_samples = total_draws;
  est.dropped_draws = dropped;
  return est;
}

RestrictedEventBound restricted_event_bound_1d(int m, double r, std::uint64_t anchor_draws,
                                               const RandomStream& rng, int workers) {
  if (m < 1) throw std::invalid_argument("restricted_event_bound_1d: m < 1");
  if (r < 0.5 || r >= 1.0) {
    throw std::invalid_argument("restricted_event_bound_1d: requires 1/2 <= r < 1");
  }
  if (anchor_draws < 2) throw std::invalid_argument("restricted_event_bound_1d: too few draws");

  RestrictedEventBound out;
  out.n_draws = anchor_draws;
  const double mm = static_cast<double>(m);
  double floor = 1.0 - (2.0 * r - (mm - 1.0) / (mm + 1.0) + 2.0 * std::pow(r, m));
  out.event_prob_floor = std::max(0.0, floor);

  std::vector<std::uint8_t> ones(m, 1);
  const std::string all_ones = pack_bits(ones);

  std::vector<double> per_draw(anchor_draws, 0.0);
  parallel_for_indexed(anchor_draws, workers, [&](std::uint64_t i) {
    RandomStream draw = rng.substream(i);
    std::vector<double> anchors(m);
    for (double& x : anchors) x = draw.next_double();
    double restricted = 0.0;
    for (const auto& [key, v] : profile_volumes_1d(anchors, r)) {
      if (key != all_ones) restricted += v * v;  // E[Vol 1{E}] given anchors
    }
    per_draw[i] = restricted;
  });
  MeanStats stats = mean_and_std_error(per_draw);
  out.restricted_volume_mean = stats.mean;
  out.restricted_volume_se = stats.std_error;

  const double first_term = -std::log2(std::exp(1.0)) / std::exp(1.0);  // (1/e) log2(1/e)
  if (stats.mean <= 0.0) {
    out.bound_bits = out.event_prob_floor == 0.0
                         ? first_term
                         : std::numeric_limits<double>::infinity();
  } else {
    out.bound_bits = first_term + out.event_prob_floor * std::log2(1.0 / stats.mean);
  }
  return out;
}

StructureDecomposition structure_decomposition(const EmpiricalDistribution& graphs, int m,
                                               RandomStream& rng) {
  if (graphs.total() == 0) throw std::invalid_argument("structure_decomposition: empty sample");
  StructureDecomposition out;
  RandomStream graph_rng = rng.substream(0);
  out.graph = plugin_entropy(graphs, Correction::None, graph_rng);

  EmpiricalDistribution structures;
  std::vector<std::pair<std::string, std::uint64_t>> items = graphs.sorted_items();
  std::vector<std::string> structure_of(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    LabeledGraph g = LabeledGraph::from_encoding(m, items[i].first);
    structure_of[i] = canonical_form(g).bytes;
    structures.add(structure_of[i], items[i].second);
  }
  RandomStream struct_rng = rng.substream(1);
  out.structure = plugin_entropy(structures, Correction::None, struct_rng);

  // H(G|S) = (1/N) sum_g c_g log2(c_{S(g)} / c_g)
  const double N = static_cast<double>(graphs.total());
  double cond = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    double cg = static_cast<double>(items[i].second);
    double cs = static_cast<double>(structures.count(structure_of[i]));
    cond += cg * std::log2(cs / cg);
  }
  out.conditional_bits = std::max(0.0, cond / N);
  return out;
}

}  // namespace rggent
