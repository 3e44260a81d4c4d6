#include "rggent/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "rggent/errors.hpp"

namespace rggent {

LabeledGraph::LabeledGraph(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("LabeledGraph: m < 0");
  bytes_.assign((static_cast<std::size_t>(pair_count()) + 7) / 8, '\0');
}

int LabeledGraph::pair_index(int i, int j, int m) {
  if (i == j || i < 0 || j < 0 || i >= m || j >= m) {
    throw std::invalid_argument("pair_index: bad vertex pair");
  }
  if (i > j) std::swap(i, j);
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

bool LabeledGraph::edge(int i, int j) const {
  int k = pair_index(i, j, m_);
  return (static_cast<unsigned char>(bytes_[k / 8]) >> (k % 8)) & 1u;
}

void LabeledGraph::set_edge(int i, int j, bool value) {
  int k = pair_index(i, j, m_);
  unsigned char mask = static_cast<unsigned char>(1u << (k % 8));
  if (value) {
    bytes_[k / 8] = static_cast<char>(static_cast<unsigned char>(bytes_[k / 8]) | mask);
  } else {
    bytes_[k / 8] = static_cast<char>(static_cast<unsigned char>(bytes_[k / 8]) & ~mask);
  }
}

std::uint64_t LabeledGraph::edge_total() const {
  std::uint64_t total = 0;
  for (char b : bytes_) total += __builtin_popcount(static_cast<unsigned char>(b));
  return total;
}

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (char c : bytes) {
    unsigned char b = static_cast<unsigned char>(c);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::string LabeledGraph::hex() const { return hex_encode(bytes_); }

std::uint64_t LabeledGraph::key64() const {
  if (pair_count() > 64) throw capacity_error("key64: more than 64 edge bits");
  std::uint64_t key = 0;
  for (std::size_t b = 0; b < bytes_.size(); ++b) {
    key |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[b])) << (8 * b);
  }
  return key;
}

LabeledGraph LabeledGraph::from_key64(int m, std::uint64_t key) {
  LabeledGraph g(m);
  if (g.pair_count() > 64) throw capacity_error("from_key64: more than 64 edge bits");
  for (std::size_t b = 0; b < g.bytes_.size(); ++b) {
    g.bytes_[b] = static_cast<char>((key >> (8 * b)) & 0xffu);
  }
  return g;
}

LabeledGraph LabeledGraph::from_encoding(int m, const std::string& bytes) {
  LabeledGraph g(m);
  if (bytes.size() != g.bytes_.size()) {
    throw std::invalid_argument("from_encoding: byte length mismatch");
  }
  g.bytes_ = bytes;
  return g;
}

std::vector<int> EdgeProfile::in_set() const {
  std::vector<int> in;
  for (int i = 0; i < size(); ++i) {
    if (bits[i]) in.push_back(i);
  }
  return in;
}

std::string EdgeProfile::encoding() const {
  std::string bytes((bits.size() + 7) / 8, '\0');
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) bytes[k / 8] |= static_cast<char>(1u << (k % 8));
  }
  return bytes;
}

std::string CanonicalStructure::hex() const { return hex_encode(bytes); }

std::vector<Point> sample_points(int m, const Domain& domain, RandomStream& rng) {
  if (m < 0) throw std::invalid_argument("sample_points: m < 0");
  std::vector<Point> pts;
  pts.reserve(m);
  for (int i = 0; i < m; ++i) pts.push_back(sample_point(domain, rng));
  return pts;
}

LabeledGraph build_graph(const std::vector<Point>& points, double r, const Domain& domain) {
  domain.require_range(r);
  const int m = static_cast<int>(points.size());
  const double r2 = r * r;
  LabeledGraph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (squared_distance(domain, points[i], points[j]) <= r2) g.set_edge(i, j, true);
    }
  }
  return g;
}

EdgeProfile edge_profile(const Point& x0, const std::vector<Point>& anchors, double r,
                         const Domain& domain) {
  domain.require_range(r);
  const double r2 = r * r;
  EdgeProfile profile;
  profile.bits.reserve(anchors.size());
  for (const auto& a : anchors) {
    profile.bits.push_back(squared_distance(domain, x0, a) <= r2 ? 1 : 0);
  }
  return profile;
}

LabeledGraph permute_graph(const LabeledGraph& g, std::span<const int> perm) {
  const int m = g.vertex_count();
  if (static_cast<int>(perm.size()) != m) {
    throw std::invalid_argument("permute_graph: permutation size mismatch");
  }
  LabeledGraph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.edge(perm[i], perm[j])) out.set_edge(i, j, true);
    }
  }
  return out;
}

namespace {

// Canonical search: depth-first assignment of new labels to old vertices,
// comparing adjacency bits in (max,min) pair order so each assigned vertex
// appends its bits against all earlier ones. Prunes any branch whose next
// bit chunk exceeds the best known chunk; strict improvements overwrite the
// suffix of the best string with a sentinel that loses every comparison.
struct CanonicalSearch {
  int m;
  std::array<std::array<std::uint8_t, kStructureLimit>, kStructureLimit> adj{};
  std::vector<std::uint8_t> best;       // bit values in (max,min) order; 0xff = unset
  std::vector<int> assigned;            // position -> old vertex
  std::vector<int> best_perm;
  std::array<bool, kStructureLimit> used{};

  explicit CanonicalSearch(const LabeledGraph& g) : m(g.vertex_count()) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        adj[i][j] = adj[j][i] = g.edge(i, j) ? 1 : 0;
      }
    }
    best.assign(static_cast<std::size_t>(m) * (m - 1) / 2, 0xff);
    assigned.resize(m);
    best_perm.resize(m);
  }

  void run() {
    if (m == 0) return;
    dfs(0, 0);
  }

  void dfs(int pos, int offset) {
    if (pos == m) {
      best_perm.assign(assigned.begin(), assigned.end());
      return;
    }
    for (int u = 0; u < m; ++u) {
      if (used[u]) continue;
      int cmp = 0;
      for (int a = 0; a < pos && cmp == 0; ++a) {
        std::uint8_t bit = adj[assigned[a]][u];
        std::uint8_t bb = best[offset + a];
        cmp = (bit < bb) ? -1 : (bit > bb ? 1 : 0);
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        for (int a = 0; a < pos; ++a) best[offset + a] = adj[assigned[a]][u];
        std::fill(best.begin() + offset + pos, best.end(), 0xff);
      }
      assigned[pos] = u;
      used[u] = true;
      dfs(pos + 1, offset + pos);
      used[u] = false;
    }
  }
};

}  // namespace

CanonicalStructure canonical_form(const LabeledGraph& g) {
  const int m = g.vertex_count();
  if (m > kStructureLimit) {
    throw capacity_error("canonical_form: m exceeds the brute-force limit " +
                         std::to_string(kStructureLimit));
  }
  CanonicalStructure s;
  s.m = m;
  if (m <= 1) {
    s.bytes = LabeledGraph(m).encoding();
    return s;
  }
  CanonicalSearch search(g);
  search.run();
  s.bytes = permute_graph(g, search.best_perm).encoding();
  return s;
}

std::uint64_t sample_graph_key64(int m, const Domain& domain, double r, RandomStream& rng) {
  domain.require_range(r);
  if (m * (m - 1) / 2 > 64) throw capacity_error("sample_graph_key64: more than 64 edge bits");
  const int d = domain.dim;
  std::array<double, 16 * 3> coords;
  if (m > 16 || d > 3) throw capacity_error("sample_graph_key64: kernel supports m <= 16, d <= 3");
  for (int i = 0; i < m * d; ++i) coords[i] = rng.next_double();
  const double r2 = r * r;
  std::uint64_t key = 0;
  int k = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j, ++k) {
      if (squared_distance_raw(domain, &coords[i * d], &coords[j * d]) <= r2) {
        key |= 1ULL << k;
      }
    }
  }
  return key;
}

}  // namespace rggent
