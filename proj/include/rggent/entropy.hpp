#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rggent/distribution.hpp"
#include "rggent/domain.hpp"
#include "rggent/rng.hpp"

namespace rggent {

enum class EstimatorKind { PlugIn, MillerMadow, Exact1DSweep, VolMC, SecondMomentTorus };

std::string to_string(EstimatorKind kind);

struct EntropyEstimate {
  double bits = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  EstimatorKind kind = EstimatorKind::PlugIn;
  std::uint64_t dropped_draws = 0;  // zero-hit outer draws discarded (VolMC)
};

struct McValue {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
};

enum class Correction { None, MillerMadow };

double binary_entropy(double p);

// -sum p log2 p over empirical frequencies, optionally with the
// Miller-Madow correction (K-1)/(2N ln 2). Standard error from 200
// bootstrap resamples of the counts.
EntropyEstimate plugin_entropy(const EmpiricalDistribution& dist, Correction correction,
                               RandomStream& rng, int bootstrap_resamples = 200);

// h2(p_r) where a closed form for p_r exists: cube d=1 (2r - r^2) and any
// torus with r <= 1/2 (c_d r^d). Throws unsupported_range_error otherwise.
double pair_entropy_exact(const Domain& domain, double r);

// Exact H(profile | anchors) for d=1 on [0,1] via the interval sweep.
double profile_entropy_exact_1d(std::span<const double> anchors, double r);

struct ProfileMcParams {
  std::uint64_t outer_n = 256;  // probe draws
  std::uint64_t inner_n = 4000; // hit samples per volume estimate
};

// Nested Monte Carlo estimate of H(profile | anchors): draw the probe, read
// off its profile, hit-sample Vol(A) and average log2(1/Vol). Zero-hit
// volumes grow the inner sample x4 up to a 64x budget (targeting >= 50
// hits); draws still at zero hits afterwards are dropped and counted in
// dropped_draws.
EntropyEstimate profile_entropy_mc(const std::vector<Point>& anchors, double r,
                                   const Domain& domain, const ProfileMcParams& params,
                                   const RandomStream& rng, int workers = 1);

// E[Vol(A)] for n anchors on the torus via the second-moment identity
// E[(1 - Vol(crescent(X,X')))^n] over independent uniform pairs; only the
// pair average is stochastic (crescent volumes are exact). Requires r <= 1/4.
McValue second_moment_volume_torus(int n, int d, double r, std::uint64_t pair_samples,
                                   const RandomStream& rng, int workers = 1);

// -log2 of the second-moment volume: a lower bound on H(profile | anchors).
McValue jensen_profile_lower_bound(int n, int d, double r, std::uint64_t pair_samples,
                                   const RandomStream& rng, int workers = 1);

struct LowerBoundParams {
  int anchor_redraws = 64;            // fresh anchor draws per term
  ProfileMcParams profile_mc;         // VolMC backend
  std::uint64_t pair_samples = 200000;  // SecondMomentTorus backend
  int workers = 1;
};

// H(G_m) >= sum_{n=1}^{m-1} H(profile_n | anchors_n): sums the chosen
// per-term estimator; per-term variances add up into the standard error.
EntropyEstimate graph_entropy_lower_bound(int m, const Domain& domain, double r,
                                          EstimatorKind backend,
                                          const LowerBoundParams& params,
                                          const RandomStream& rng);

struct RestrictedEventBound {
  double bound_bits = 0.0;
  double event_prob_floor = 0.0;       // closed-form floor for P(not all ones)
  double restricted_volume_mean = 0.0; // E-hat[Vol(A) 1{not all ones}]
  double restricted_volume_se = 0.0;
  std::uint64_t n_draws = 0;
};

// Conditional-entropy lower bound for d=1 cube with 1/2 <= r < 1, built
// from the restricted event "profile is not all-ones": (1/e)log2(1/e) +
// P_floor * log2(1 / E[Vol * indicator]), with the expectation evaluated by
// the exact sweep over fresh anchor draws.
RestrictedEventBound restricted_event_bound_1d(int m, double r, std::uint64_t anchor_draws,
                                               const RandomStream& rng, int workers = 1);

struct StructureDecomposition {
  EntropyEstimate graph;      // H-hat(G)
  EntropyEstimate structure;  // H-hat(S)
  double conditional_bits = 0.0;  // H-hat(G|S) from the same sample
};

// Plug-in chain H(G) = H(S) + H(G|S) evaluated on one graph sample.
StructureDecomposition structure_decomposition(const EmpiricalDistribution& graphs, int m,
                                               RandomStream& rng);

}  // namespace rggent
