#pragma once

#include <cstdint>

#include "rggent/entropy.hpp"
#include "rggent/rng.hpp"

namespace rggent {

enum class CountMode { Fixed, Poisson };

struct IntersectionParams {
  std::uint64_t reps = 2000;          // center-set redraws
  std::uint64_t hits_per_rep = 2000;  // probe samples per redraw
};

// E[Vol of the intersection of `count` radius-r balls] with centers i.i.d.
// uniform in B_c(r) around the torus center; Poisson mode draws the ball
// count afresh each repetition with intensity `count`. Probes are sampled
// in B_c(2r), which always contains the intersection (every ball holds c).
// The empty intersection is the whole torus, so count = 0 gives exactly 1.
// Requires r <= 1/4 (wrap-free, so the geometry is Euclidean).
McValue intersection_volume(double count, int d, double r, CountMode mode,
                            const IntersectionParams& params, const RandomStream& rng,
                            int workers = 1);

struct DepoissonizationResult {
  McValue fixed;
  McValue poisson;
  double ratio = 0.0;
  double rel_sigma = 0.0;
  bool pass = false;  // ratio <= 2 (1 + 4 rel_sigma)
};

DepoissonizationResult depoissonization_check(int ell, int d, double r,
                                              const IntersectionParams& params,
                                              const RandomStream& rng, int workers = 1);

// E[v(L)] with L ~ Bin(k-1, q), q = c_d r^d: each repetition draws L, a
// fresh center set and probes it.
McValue binomial_mixture_volume(int k, int d, double r, const IntersectionParams& params,
                                const RandomStream& rng, int workers = 1);

struct SpacingTails {
  double gap_ge_r = 0.0;       // P(single spacing >= r) = (1-r)^m
  double range_le_2r = 0.0;    // P(X^(m) - X^(1) <= 2r), clamped to 1 when 2r >= 1
  double max_below_r = 0.0;    // P(X^(m) < r) = r^m
  double min_above_1mr = 0.0;  // P(X^(1) >= 1-r) = r^m
};

SpacingTails spacing_tail_probs(int m, double r);

struct RangeGapStats {
  double expected_range = 0.0;       // (m-1)/(m+1)
  double max_gap_formula = 0.0;      // (1/m) sum_{i=0}^{m-1} 1/(m-i)
  double max_gap_bound_ln = 0.0;     // (ln m + 1)/m
  double max_gap_bound_log2 = 0.0;   // (log2 m + 1)/m
  double mc_range_mean = 0.0;
  double mc_range_se = 0.0;
  double mc_max_interior_gap = 0.0;  // max over the m-1 interior spacings
  double mc_max_interior_gap_se = 0.0;
  std::uint64_t n_samples = 0;
};

// Closed forms plus a Monte Carlo cross-check of the range and of the
// maximum interior gap. The closed-form max-gap expression actually matches
// the maximum spacing of m-1 points, so only the (ln m + 1)/m bound is used
// downstream; both are reported.
RangeGapStats expected_range_and_max_gap(int m, std::uint64_t n_samples,
                                         const RandomStream& rng, int workers = 1);

// CDF of the toroidal distance between two uniform points: c_d s^d, valid
// for s <= 1/2 only.
double torus_distance_cdf(int d, double s);

struct GammaIntegralCheck {
  double lhs = 0.0;  // integral of (1-Ks)^m f(s) over [0, s0]
  double rhs = 0.0;  // (1-K s0)^m + c_d d! / K^{d+1} / m^d
  bool holds = false;
};

GammaIntegralCheck gamma_integral_check(double K, double s0, int m, int d);

}  // namespace rggent
