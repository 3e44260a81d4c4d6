#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rggent/domain.hpp"
#include "rggent/rng.hpp"

namespace rggent {

// Exact counts over opaque byte encodings (graphs, structures, profiles).
// Merge is count-additive and order-independent; iteration for output and
// entropy sums is over sorted keys so results never depend on hash order.
class EmpiricalDistribution {
 public:
  void add(const std::string& encoding, std::uint64_t count = 1);
  void merge(const EmpiricalDistribution& other);

  std::uint64_t total() const { return total_; }
  std::uint64_t support_size() const { return counts_.size(); }
  std::uint64_t count(const std::string& encoding) const;

  // (encoding, count) pairs sorted by encoding.
  std::vector<std::pair<std::string, std::uint64_t>> sorted_items() const;

  template <typename Range>
  static EmpiricalDistribution from_samples(const Range& encodings) {
    EmpiricalDistribution dist;
    for (const auto& e : encodings) dist.add(e);
    return dist;
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Samples n graphs (sample i drawn from rng.substream(i)) and accumulates
// their encodings. Requires m*(m-1)/2 <= 64; parallel shards merge in index
// order, so the result is identical for any worker count.
EmpiricalDistribution sample_graph_distribution(int m, const Domain& domain, double r,
                                                std::uint64_t n_samples,
                                                const RandomStream& rng, int workers = 1);

}  // namespace rggent
