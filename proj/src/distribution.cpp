#include "rggent/distribution.hpp"

#include <algorithm>

#include "rggent/graph.hpp"
#include "rggent/parallel.hpp"

namespace rggent {

void EmpiricalDistribution::add(const std::string& encoding, std::uint64_t count) {
  if (count == 0) return;
  counts_[encoding] += count;
  total_ += count;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  for (const auto& [key, count] : other.counts_) {
    counts_[key] += count;
  }
  total_ += other.total_;
}

std::uint64_t EmpiricalDistribution::count(const std::string& encoding) const {
  auto it = counts_.find(encoding);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, std::uint64_t>> EmpiricalDistribution::sorted_items() const {
  std::vector<std::pair<std::string, std::uint64_t>> items(counts_.begin(), counts_.end());
  std::sort(items.begin(), items.end());
  return items;
}

EmpiricalDistribution sample_graph_distribution(int m, const Domain& domain, double r,
                                                std::uint64_t n_samples,
                                                const RandomStream& rng, int workers) {
  const int n_bytes = (m * (m - 1) / 2 + 7) / 8;
  ChunkPlan plan = plan_chunks(n_samples);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> shards(plan.n_chunks);
  parallel_for_indexed(plan.n_chunks, workers, [&](std::uint64_t c) {
    auto& local = shards[c];
    const std::uint64_t begin = plan.offset(c), end = begin + plan.size(c);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream draw = rng.substream(i);
      local[sample_graph_key64(m, domain, r, draw)] += 1;
    }
  });
  EmpiricalDistribution dist;
  std::string bytes(static_cast<std::size_t>(n_bytes), '\0');
  for (auto& shard : shards) {
    for (const auto& [key, count] : shard) {
      for (int b = 0; b < n_bytes; ++b) {
        bytes[b] = static_cast<char>((key >> (8 * b)) & 0xffu);
      }
      dist.add(bytes, count);
    }
  }
  return dist;
}

}  // namespace rggent
