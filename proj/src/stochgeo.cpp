#include "rggent/stochgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/numerics.hpp"
#include "rggent/parallel.hpp"

namespace rggent {
namespace {

// Uniform point in the ball of radius `radius` around the origin.
void sample_in_ball(int d, double radius, RandomStream& rng, double* out) {
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i) {
    out[i] = rng.next_normal();
    norm2 += out[i] * out[i];
  }
  while (norm2 == 0.0) {  // vanishing direction vector; redraw
    norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      out[i] = rng.next_normal();
      norm2 += out[i] * out[i];
    }
  }
  double scale = radius * std::pow(rng.next_double(), 1.0 / d) / std::sqrt(norm2);
  for (int i = 0; i < d; ++i) out[i] *= scale;
}

// One repetition of the ball-intersection experiment: draws `count` centers
// in B(r) and hit-samples the intersection from B(2r). count = 0 gives 1.
double intersection_rep(std::uint64_t count, int d, double r, std::uint64_t hits_per_rep,
                        RandomStream& rng) {
  if (count == 0) return 1.0;
  std::vector<double> centers(count * d);
  for (std::uint64_t c = 0; c < count; ++c) {
    sample_in_ball(d, r, rng, &centers[c * d]);
  }
  const double r2 = r * r;
  const double proposal_volume = ball_volume(d, 2.0 * r);
  std::uint64_t hits = 0;
  std::vector<double> probe(d);
  for (std::uint64_t h = 0; h < hits_per_rep; ++h) {
    sample_in_ball(d, 2.0 * r, rng, probe.data());
    bool inside = true;
    for (std::uint64_t c = 0; c < count && inside; ++c) {
      double dist2 = 0.0;
      const double* ctr = &centers[c * d];
      for (int i = 0; i < d; ++i) {
        double diff = probe[i] - ctr[i];
        dist2 += diff * diff;
      }
      inside = dist2 <= r2;
    }
    if (inside) ++hits;
  }
  return proposal_volume * static_cast<double>(hits) / static_cast<double>(hits_per_rep);
}

McValue reduce_reps(const std::vector<double>& per_rep) {
  MeanStats stats = mean_and_std_error(per_rep);
  McValue out;
  out.value = stats.mean;
  out.std_error = stats.std_error;
  out.n_samples = stats.n;
  return out;
}

void require_quarter_range(int d, double r, const char* who) {
  if (d < 1) throw std::invalid_argument(std::string(who) + ": d < 1");
  if (r <= 0.0 || r > 0.25) {
    throw unsupported_range_error(std::string(who) + ": requires 0 < r <= 1/4");
  }
}

}  // namespace

McValue intersection_volume(double count, int d, double r, CountMode mode,
                            const IntersectionParams& params, const RandomStream& rng,
                            int workers) {
  require_quarter_range(d, r, "intersection_volume");
  if (count < 0.0) throw std::invalid_argument("intersection_volume: negative count");
  if (mode == CountMode::Fixed) {
    if (count != std::floor(count)) {
      throw std::invalid_argument("intersection_volume: fixed mode needs an integer count");
    }
    if (count == 0.0) return McValue{1.0, 0.0, 0};
  }
  if (params.reps < 2 || params.hits_per_rep < 1) {
    throw std::invalid_argument("intersection_volume: too few reps/hits");
  }

  std::vector<double> per_rep(params.reps, 0.0);
  parallel_for_indexed(params.reps, workers, [&](std::uint64_t i) {
    RandomStream rep_rng = rng.substream(i);
    std::uint64_t n_balls = mode == CountMode::Fixed
                                ? static_cast<std::uint64_t>(count)
                                : sample_poisson(rep_rng, count);
    per_rep[i] = intersection_rep(n_balls, d, r, params.hits_per_rep, rep_rng);
  });
  return reduce_reps(per_rep);
}

DepoissonizationResult depoissonization_check(int ell, int d, double r,
                                              const IntersectionParams& params,
                                              const RandomStream& rng, int workers) {
  if (ell < 1) throw std::invalid_argument("depoissonization_check: ell < 1");
  DepoissonizationResult out;
  out.fixed = intersection_volume(ell, d, r, CountMode::Fixed, params, rng.substream(0), workers);
  out.poisson =
      intersection_volume(ell, d, r, CountMode::Poisson, params, rng.substream(1), workers);
  if (out.poisson.value <= 0.0) {
    out.ratio = std::numeric_limits<double>::infinity();
    out.rel_sigma = std::numeric_limits<double>::infinity();
    return out;
  }
  out.ratio = out.fixed.value / out.poisson.value;
  double rf = out.fixed.value > 0.0 ? out.fixed.std_error / out.fixed.value : 0.0;
  double rp = out.poisson.std_error / out.poisson.value;
  out.rel_sigma = std::sqrt(rf * rf + rp * rp);
  out.pass = out.ratio <= 2.0 * (1.0 + 4.0 * out.rel_sigma);
  return out;
}

McValue binomial_mixture_volume(int k, int d, double r, const IntersectionParams& params,
                                const RandomStream& rng, int workers) {
  require_quarter_range(d, r, "binomial_mixture_volume");
  if (k < 1) throw std::invalid_argument("binomial_mixture_volume: k < 1");
  if (k == 1) return McValue{1.0, 0.0, 0};  // L = 0 always
  const double q = ball_volume(d, r);  // exact pair-connection probability, wrap-free

  std::vector<double> per_rep(params.reps, 0.0);
  parallel_for_indexed(params.reps, workers, [&](std::uint64_t i) {
    RandomStream rep_rng = rng.substream(i);
    std::uint64_t L = sample_binomial(rep_rng, static_cast<std::uint64_t>(k - 1), q);
    per_rep[i] = intersection_rep(L, d, r, params.hits_per_rep, rep_rng);
  });
  return reduce_reps(per_rep);
}

SpacingTails spacing_tail_probs(int m, double r) {
  if (m < 1) throw std::invalid_argument("spacing_tail_probs: m < 1");
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("spacing_tail_probs: r outside (0,1)");
  SpacingTails out;
  out.gap_ge_r = std::pow(1.0 - r, m);
  const double s = 2.0 * r;
  if (s >= 1.0) {
    out.range_le_2r = 1.0;
  } else {
    out.range_le_2r = (m * (1.0 - s) + s) * std::pow(s, m - 1);
  }
  out.max_below_r = std::pow(r, m);
  out.min_above_1mr = std::pow(r, m);
  return out;
}

RangeGapStats expected_range_and_max_gap(int m, std::uint64_t n_samples,
                                         const RandomStream& rng, int workers) {
  if (m < 2) throw std::invalid_argument("expected_range_and_max_gap: m < 2");
  RangeGapStats out;
  const double mm = static_cast<double>(m);
  out.expected_range = (mm - 1.0) / (mm + 1.0);
  double harmonic = 0.0;
  for (int i = 0; i < m; ++i) harmonic += 1.0 / static_cast<double>(m - i);
  out.max_gap_formula = harmonic / mm;
  out.max_gap_bound_ln = (std::log(mm) + 1.0) / mm;
  out.max_gap_bound_log2 = (std::log2(mm) + 1.0) / mm;
  out.n_samples = n_samples;
  if (n_samples < 2) return out;

  ChunkPlan plan = plan_chunks(n_samples);
  struct Partial {
    double range_sum = 0, range_sq = 0, gap_sum = 0, gap_sq = 0;
  };
  std::vector<Partial> partials(plan.n_chunks);
  parallel_for_indexed(plan.n_chunks, workers, [&](std::uint64_t c) {
    Partial p;
    std::vector<double> xs(m);
    const std::uint64_t begin = plan.offset(c), end = begin + plan.size(c);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream draw = rng.substream(i);
      for (double& x : xs) x = draw.next_double();
      std::sort(xs.begin(), xs.end());
      double range = xs[m - 1] - xs[0];
      double max_gap = 0.0;
      for (int j = 1; j < m; ++j) max_gap = std::max(max_gap, xs[j] - xs[j - 1]);
      p.range_sum += range;
      p.range_sq += range * range;
      p.gap_sum += max_gap;
      p.gap_sq += max_gap * max_gap;
    }
    partials[c] = p;
  });
  Partial total;
  for (const Partial& p : partials) {
    total.range_sum += p.range_sum;
    total.range_sq += p.range_sq;
    total.gap_sum += p.gap_sum;
    total.gap_sq += p.gap_sq;
  }
  const double N = static_cast<double>(n_samples);
  out.mc_range_mean = total.range_sum / N;
  out.mc_max_interior_gap = total.gap_sum / N;
  double var_range =
      std::max(0.0, (total.range_sq - N * out.mc_range_mean * out.mc_range_mean) / (N - 1.0));
  double var_gap = std::max(
      0.0, (total.gap_sq - N * out.mc_max_interior_gap * out.mc_max_interior_gap) / (N - 1.0));
  out.mc_range_se = std::sqrt(var_range / N);
  out.mc_max_interior_gap_se = std::sqrt(var_gap / N);
  return out;
}

double torus_distance_cdf(int d, double s) {
  if (d < 1) throw std::invalid_argument("torus_distance_cdf: d < 1");
  if (s < 0.0) throw std::invalid_argument("torus_distance_cdf: s < 0");
  if (s > 0.5) {
    throw unsupported_range_error("torus_distance_cdf: closed form c_d s^d needs s <= 1/2");
  }
  return ball_volume(d, s);
}

GammaIntegralCheck gamma_integral_check(double K, double s0, int m, int d) {
  if (d < 1) throw std::invalid_argument("gamma_integral_check: d < 1");
  if (m < 0) throw std::invalid_argument("gamma_integral_check: m < 0");
  if (s0 < 0.0 || s0 >= 0.5) {
    throw std::invalid_argument("gamma_integral_check: s0 must lie in [0, 1/2)");
  }
  if (K < 0.0 || K * s0 > 1.0) {
    throw std::invalid_argument("gamma_integral_check: need (1-Ks)^m in [0,1] on [0,s0]");
  }

  const double cd = unit_ball_volume(d);
  GammaIntegralCheck out;
  out.lhs = adaptive_simpson(
      [&](double s) {
        return std::pow(1.0 - K * s, m) * d * cd * std::pow(s, d - 1);
      },
      0.0, s0, 1e-10);

  if (m == 0 || K == 0.0) {
    out.rhs = std::numeric_limits<double>::infinity();
  } else {
    double factorial = 1.0;
    for (int i = 2; i <= d; ++i) factorial *= i;
    out.rhs = std::pow(1.0 - K * s0, m) +
              cd * factorial / std::pow(K, d + 1) / std::pow(static_cast<double>(m), d);
  }
  out.holds = out.lhs <= out.rhs + 1e-9;  // quadrature tolerance allowance
  return out;
}

}  // namespace rggent
