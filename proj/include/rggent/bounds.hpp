#pragma once

#include <cstdint>
#include <optional>

#include "rggent/domain.hpp"
#include "rggent/rng.hpp"

namespace rggent {

// log2 of the sign-pattern count (4eku/t)^t for u polynomials of degree at
// most k in t variables.
double warren_sign_pattern_bound(std::uint64_t u, std::uint64_t t, std::uint64_t k);

// log2 of the realizable-graph count bound: dm log2 m + dm log2 C with
// C = 4e/d on the cube and C = 4e 3^d / d on the torus.
double graph_count_bound_bits(int m, int d, Flavor flavor);

struct BetaParams {
  std::uint64_t mc_hits = 10'000'000;
};

struct BetaResult {
  double value = 0.0;
  double std_error = 0.0;  // zero on the exact path
  bool exact = true;
};

// Volume of the all-connected core ball B(center; r - sqrt(d)/2) within the
// cube: exact c_d rho^d while the ball is inscribed (rho <= 1/2), otherwise
// Monte Carlo hit-sampling. Zero by convention for r < sqrt(d)/2.
BetaResult core_ball_volume(int d, double r, const BetaParams& params, RandomStream& rng);

struct BoundReport {
  int m = 0;
  int d = 1;
  double r = 0.0;
  Flavor flavor = Flavor::Cube;
  double leading_term_bits = 0.0;  // the headline coefficient times m log2 m
  double full_rhs_bits = 0.0;      // the explicit finite-m right-hand side
  double beta_value = 0.0;
  double beta_std_error = 0.0;
  double log2_C = 0.0;
  std::uint64_t warren_u = 0, warren_t = 0, warren_k = 0;
};

// Entropy upper bound for (m, domain, r): the count bound everywhere, and
// for the cube with r > sqrt(d)/2 the refined form
// m + (1-beta) m log2 m + (1-beta) m log2((4e/d)^d).
// The leading term carries the asymptotic coefficient ((1-beta) d m log2 m
// in the refined regime; d m log2 m otherwise).
BoundReport entropy_upper_bound(int m, const Domain& domain, double r,
                                const BetaParams& beta_params, RandomStream& rng);

// Limit of H(G_m)/(m log m) for the 1-D cube: 1 for r <= 1/2, 2(1-r) after.
double asymptotic_curve_1d(double r);

// CSV table of the curve on the grid r = step, 2*step, ... < 1:
// header "r,limit", six decimal places.
std::string figure1_csv(double grid_step);

struct CensusResult {
  std::uint64_t distinct_graphs = 0;
  std::uint64_t distinct_structures = 0;
  std::uint64_t n_samples = 0;
};

// Distinct graph/structure encodings over n sampled graphs (a certified
// lower bound on the ensemble size). Sample i uses rng.substream(i), so the
// census is monotone in n_samples for a fixed seed.
CensusResult graph_census(int m, const Domain& domain, double r, std::uint64_t n_samples,
                          const RandomStream& rng, int workers = 1);

// max(0, H - log2 m!): the structural-entropy floor implied by an entropy
// value, with log2 m! computed by exact summation.
double structural_entropy_floor(double h_graph_bits, int m);

}  // namespace rggent
