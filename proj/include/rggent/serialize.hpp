#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rggent/bounds.hpp"
#include "rggent/entropy.hpp"
#include "rggent/stochgeo.hpp"

namespace rggent {

// One check record: {"check", "statistic", "bound", "sigma", "pass"}.
struct Verdict {
  std::string check;
  double statistic = 0.0;
  double bound = 0.0;
  double sigma = 0.0;
  bool pass = false;
};

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"check", v.check},
                     {"statistic", v.statistic},
                     {"bound", v.bound},
                     {"sigma", v.sigma},
                     {"pass", v.pass}};
}

inline void to_json(nlohmann::json& j, const EntropyEstimate& e) {
  std::vector<std::string> flags;
  if (e.dropped_draws > 0) {
    flags.push_back("dropped_draws=" + std::to_string(e.dropped_draws));
  }
  j = nlohmann::json{{"kind", to_string(e.kind)},
                     {"bits", e.bits},
                     {"std_error", e.std_error},
                     {"n_samples", e.n_samples},
                     {"flags", flags}};
}

inline void to_json(nlohmann::json& j, const McValue& v) {
  j = nlohmann::json{{"value", v.value}, {"std_error", v.std_error}, {"n_samples", v.n_samples}};
}

inline void to_json(nlohmann::json& j, const BoundReport& b) {
  j = nlohmann::json{{"m", b.m},
                     {"d", b.d},
                     {"r", b.r},
                     {"domain", to_string(b.flavor)},
                     {"leading_term_bits", b.leading_term_bits},
                     {"full_rhs_bits", b.full_rhs_bits},
                     {"beta", b.beta_value},
                     {"beta_std_error", b.beta_std_error},
                     {"log2_C", b.log2_C},
                     {"warren", {{"u", b.warren_u}, {"t", b.warren_t}, {"k", b.warren_k}}}};
}

inline void to_json(nlohmann::json& j, const CensusResult& c) {
  j = nlohmann::json{{"distinct_graphs", c.distinct_graphs},
                     {"distinct_structures", c.distinct_structures},
                     {"n_samples", c.n_samples}};
}

inline void to_json(nlohmann::json& j, const SpacingTails& t) {
  j = nlohmann::json{{"gap_ge_r", t.gap_ge_r},
                     {"range_le_2r", t.range_le_2r},
                     {"max_below_r", t.max_below_r},
                     {"min_above_1mr", t.min_above_1mr}};
}

inline void to_json(nlohmann::json& j, const RangeGapStats& s) {
  j = nlohmann::json{{"expected_range", s.expected_range},
                     {"max_gap_formula", s.max_gap_formula},
                     {"max_gap_bound_ln", s.max_gap_bound_ln},
                     {"max_gap_bound_log2", s.max_gap_bound_log2},
                     {"mc_range_mean", s.mc_range_mean},
                     {"mc_range_se", s.mc_range_se},
                     {"mc_max_interior_gap", s.mc_max_interior_gap},
                     {"mc_max_interior_gap_se", s.mc_max_interior_gap_se},
                     {"n_samples", s.n_samples}};
}

inline void to_json(nlohmann::json& j, const GammaIntegralCheck& g) {
  j = nlohmann::json{{"lhs", g.lhs}, {"rhs", g.rhs}, {"holds", g.holds}};
}

inline void to_json(nlohmann::json& j, const DepoissonizationResult& r) {
  j = nlohmann::json{{"fixed", r.fixed},
                     {"poisson", r.poisson},
                     {"ratio", r.ratio},
                     {"rel_sigma", r.rel_sigma},
                     {"pass", r.pass}};
}

inline void to_json(nlohmann::json& j, const RestrictedEventBound& b) {
  j = nlohmann::json{{"bound_bits", b.bound_bits},
                     {"event_prob_floor", b.event_prob_floor},
                     {"restricted_volume_mean", b.restricted_volume_mean},
                     {"restricted_volume_se", b.restricted_volume_se},
                     {"n_draws", b.n_draws}};
}

}  // namespace rggent
