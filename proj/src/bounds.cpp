#include "rggent/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/parallel.hpp"

namespace rggent {
namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

}  // namespace

double warren_sign_pattern_bound(std::uint64_t u, std::uint64_t t, std::uint64_t k) {
  if (u < 1 || t < 1 || k < 1) throw std::invalid_argument("warren bound: u, t, k must be >= 1");
  double ratio = 4.0 * kE * static_cast<double>(k) * static_cast<double>(u) /
                 static_cast<double>(t);
  return static_cast<double>(t) * std::log2(ratio);
}

double graph_count_bound_bits(int m, int d, Flavor flavor) {
  if (m < 2) throw std::invalid_argument("graph_count_bound_bits: m must be >= 2");
  if (d < 1) throw std::invalid_argument("graph_count_bound_bits: d must be >= 1");
  double C = 4.0 * kE / static_cast<double>(d);
  if (flavor == Flavor::Torus) C *= std::pow(3.0, d);
  double dm = static_cast<double>(d) * static_cast<double>(m);
  return dm * std::log2(static_cast<double>(m)) + dm * std::log2(C);
}

BetaResult core_ball_volume(int d, double r, const BetaParams& params, RandomStream& rng) {
  if (d < 1) throw std::invalid_argument("core_ball_volume: d < 1");
  const double half_diag = 0.5 * std::sqrt(static_cast<double>(d));
  if (r >= 2.0 * half_diag) {
    throw std::invalid_argument("core_ball_volume: r must be < sqrt(d)");
  }
  BetaResult out;
  if (r < half_diag) return out;  // empty ball by convention
  const double rho = r - half_diag;
  if (rho <= 0.5) {
    out.value = ball_volume(d, rho);
    return out;
  }
  // Ball pokes out of the cube: hit-sample the cube against the ball.
  out.exact = false;
  const double rho2 = rho * rho;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < params.mc_hits; ++i) {
    double dist2 = 0.0;
    for (int k = 0; k < d; ++k) {
      double c = rng.next_double() - 0.5;
      dist2 += c * c;
    }
    if (dist2 <= rho2) ++hits;
  }
  const double n = static_cast<double>(params.mc_hits);
  out.value = static_cast<double>(hits) / n;
  out.std_error = std::sqrt(out.value * (1.0 - out.value) / n);
  return out;
}

BoundReport entropy_upper_bound(int m, const Domain& domain, double r,
                                const BetaParams& beta_params, RandomStream& rng) {
  if (m < 2) throw std::invalid_argument("entropy_upper_bound: m must be >= 2");
  domain.require_range(r);
  const int d = domain.dim;
  const double dm = static_cast<double>(d) * m;
  const double log2_m = std::log2(static_cast<double>(m));

  BoundReport report;
  report.m = m;
  report.d = d;
  report.r = r;
  report.flavor = domain.flavor;
  report.warren_t = static_cast<std::uint64_t>(d) * m;
  report.warren_k = 2;
  report.warren_u = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  if (domain.flavor == Flavor::Torus) {
    std::uint64_t shifts = 1;
    for (int i = 0; i < d; ++i) shifts *= 3;
    report.warren_u *= shifts;
  }

  double C = 4.0 * kE / static_cast<double>(d);
  if (domain.flavor == Flavor::Torus) C *= std::pow(3.0, d);
  report.log2_C = std::log2(C);

  const double half_diag = 0.5 * std::sqrt(static_cast<double>(d));
  if (domain.flavor == Flavor::Cube && r > half_diag) {
    BetaResult beta = core_ball_volume(d, r, beta_params, rng);
    report.beta_value = beta.value;
    report.beta_std_error = beta.std_error;
    const double keep = 1.0 - beta.value;
    report.leading_term_bits = keep * dm * log2_m;
    report.full_rhs_bits = m + keep * m * log2_m + keep * m * (d * std::log2(4.0 * kE / d));
  } else {
    report.leading_term_bits = dm * log2_m;
    report.full_rhs_bits = graph_count_bound_bits(m, d, domain.flavor);
  }
  return report;
}

double asymptotic_curve_1d(double r) {
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("asymptotic_curve_1d: r outside (0,1)");
  return r <= 0.5 ? 1.0 : 2.0 * (1.0 - r);
}

std::string figure1_csv(double grid_step) {
  if (grid_step <= 0.0 || grid_step >= 1.0) {
    throw std::invalid_argument("figure1_csv: grid step outside (0,1)");
  }
  std::string out = "r,limit\n";
  char row[64];
  for (int i = 1;; ++i) {
    double r = i * grid_step;
    if (r >= 1.0 - 1e-9) break;
    std::snprintf(row, sizeof(row), "%.6f,%.6f\n", r, asymptotic_curve_1d(r));
    out += row;
  }
  return out;
}

CensusResult graph_census(int m, const Domain& domain, double r, std::uint64_t n_samples,
                          const RandomStream& rng, int workers) {
  if (m < 1) throw std::invalid_argument("graph_census: m < 1");
  if (m > kStructureLimit) {
    throw capacity_error("graph_census: m exceeds the canonicalization limit");
  }
  domain.require_range(r);

  ChunkPlan plan = plan_chunks(n_samples);
  std::vector<std::unordered_set<std::uint64_t>> shards(plan.n_chunks);
  parallel_for_indexed(plan.n_chunks, workers, [&](std::uint64_t c) {
    auto& local = shards[c];
    const std::uint64_t begin = plan.offset(c), end = begin + plan.size(c);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream draw = rng.substream(i);
      local.insert(sample_graph_key64(m, domain, r, draw));
    }
  });
  std::unordered_set<std::uint64_t> distinct;
  for (auto& shard : shards) distinct.insert(shard.begin(), shard.end());

  std::unordered_set<std::string> structures;
  for (std::uint64_t key : distinct) {
    structures.insert(canonical_form(LabeledGraph::from_key64(m, key)).bytes);
  }

  CensusResult out;
  out.distinct_graphs = distinct.size();
  out.distinct_structures = structures.size();
  out.n_samples = n_samples;
  return out;
}

double structural_entropy_floor(double h_graph_bits, int m) {
  if (h_graph_bits < 0.0) throw std::invalid_argument("structural_entropy_floor: H < 0");
  if (m < 1) throw std::invalid_argument("structural_entropy_floor: m < 1");
  return std::max(0.0, h_graph_bits - log2_factorial(m));
}

}  // namespace rggent
