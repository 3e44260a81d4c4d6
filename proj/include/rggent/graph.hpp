#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rggent/domain.hpp"
#include "rggent/rng.hpp"

namespace rggent {

// Brute-force canonicalization cap (10! permutations).
inline constexpr int kStructureLimit = 10;

// Bit-packed upper-triangular adjacency over m vertices. Bit order is
// row-major: (0,1),(0,2),...,(0,m-1),(1,2),...; bit k sits in byte k/8 at
// position k%8, so equal graphs always have equal byte encodings.
class LabeledGraph {
 public:
  explicit LabeledGraph(int m);

  int vertex_count() const { return m_; }
  int pair_count() const { return m_ * (m_ - 1) / 2; }

  static int pair_index(int i, int j, int m);

  bool edge(int i, int j) const;
  void set_edge(int i, int j, bool value);

  std::uint64_t edge_total() const;

  const std::string& encoding() const { return bytes_; }
  std::string hex() const;

  // Packed bits as one word; requires pair_count() <= 64.
  std::uint64_t key64() const;
  static LabeledGraph from_key64(int m, std::uint64_t key);
  static LabeledGraph from_encoding(int m, const std::string& bytes);

  bool operator==(const LabeledGraph& other) const {
    return m_ == other.m_ && bytes_ == other.bytes_;
  }

 private:
  int m_;
  std::string bytes_;
};

// Incidence vector of a probe vertex against n anchors.
struct EdgeProfile {
  std::vector<std::uint8_t> bits;

  int size() const { return static_cast<int>(bits.size()); }
  std::vector<int> in_set() const;
  std::string encoding() const;
};

// Unlabeled isomorphism class: the adjacency encoding of the canonical
// relabeling, minimal over all vertex permutations.
struct CanonicalStructure {
  int m = 0;
  std::string bytes;

  std::string hex() const;
  bool operator==(const CanonicalStructure& o) const { return m == o.m && bytes == o.bytes; }
  bool operator<(const CanonicalStructure& o) const {
    return m != o.m ? m < o.m : bytes < o.bytes;
  }
};

std::vector<Point> sample_points(int m, const Domain& domain, RandomStream& rng);

// edge(u,v) iff distance(x_u, x_v) <= r (ties count as edges).
LabeledGraph build_graph(const std::vector<Point>& points, double r, const Domain& domain);

EdgeProfile edge_profile(const Point& x0, const std::vector<Point>& anchors, double r,
                         const Domain& domain);

LabeledGraph permute_graph(const LabeledGraph& g, std::span<const int> perm);

CanonicalStructure canonical_form(const LabeledGraph& g);

// Fast sampling kernel: draws m points and returns the packed adjacency as
// one word. Requires m*(m-1)/2 <= 64. Sample i of a larger experiment should
// use rng.substream(i) so results are independent of batching.
std::uint64_t sample_graph_key64(int m, const Domain& domain, double r, RandomStream& rng);

std::string hex_encode(const std::string& bytes);

}  // namespace rggent
