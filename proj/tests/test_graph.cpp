#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "rggent/distribution.hpp"
#include "rggent/errors.hpp"
#include "rggent/graph.hpp"
#include "rggent/numerics.hpp"
#include "rggent/rng.hpp"

using namespace rggent;

namespace {

LabeledGraph graph_from_edges(int m, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g(m);
  for (auto [i, j] : edges) g.set_edge(i, j, true);
  return g;
}

// Full-permutation canonicalization oracle: minimizes the adjacency bits in
// (max,min) pair order over all m! relabelings, independently of the
// pruned search in canonical_form.
std::string canonical_oracle(const LabeledGraph& g) {
  const int m = g.vertex_count();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<int> best_perm(perm);
  do {
    std::vector<std::uint8_t> bits;
    for (int j = 1; j < m; ++j) {
      for (int i = 0; i < j; ++i) bits.push_back(g.edge(perm[i], perm[j]) ? 1 : 0);
    }
    if (best.empty() || bits < best) {
      best = bits;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return permute_graph(g, best_perm).encoding();
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("pair indexing and encodings") {
  LabeledGraph g(4);
  CHECK(g.pair_count() == 6);
  CHECK(LabeledGraph::pair_index(0, 1, 4) == 0);
  CHECK(LabeledGraph::pair_index(0, 3, 4) == 2);
  CHECK(LabeledGraph::pair_index(1, 2, 4) == 3);
  CHECK(LabeledGraph::pair_index(2, 3, 4) == 5);
  g.set_edge(0, 1, true);
  g.set_edge(2, 3, true);
  CHECK(g.edge(1, 0));
  CHECK(g.edge_total() == 2);
  CHECK(g.hex() == "21");  // bits 0 and 5
  CHECK(LabeledGraph::from_key64(4, g.key64()) == g);
  CHECK(LabeledGraph::from_encoding(4, g.encoding()) == g);
}

TEST_CASE("build_graph spec examples") {
  Domain t1 = Domain::torus(1);
  LabeledGraph g = build_graph({Point{{0.0}}, Point{{0.3}}, Point{{0.9}}}, 0.25, t1);
  CHECK(g.edge_total() == 1);
  CHECK(g.edge(0, 2));  // wrap-around neighbours

  Domain c1 = Domain::cube(1);
  LabeledGraph empty = build_graph({Point{{0.1}}, Point{{0.4}}, Point{{0.8}}}, 1e-9, c1);
  CHECK(empty.edge_total() == 0);

  // Every pair within range makes the complete graph.
  LabeledGraph complete = build_graph({Point{{0.2}}, Point{{0.35}}, Point{{0.6}}}, 0.5, c1);
  CHECK(complete.edge_total() == 3);

  CHECK_THROWS_AS(build_graph({Point{{0.1}}}, 1.0, c1), std::invalid_argument);
}

TEST_CASE("ties at distance exactly r are edges") {
  Domain c1 = Domain::cube(1);
  LabeledGraph g = build_graph({Point{{0.25}}, Point{{0.5}}}, 0.25, c1);
  CHECK(g.edge(0, 1));
}

TEST_CASE("edge_profile spec examples") {
  Domain t1 = Domain::torus(1);
  EdgeProfile p = edge_profile(Point{{0.05}}, {Point{{0.9}}, Point{{0.5}}}, 0.25, t1);
  CHECK(p.bits == std::vector<std::uint8_t>{1, 0});
  CHECK(p.in_set() == std::vector<int>{0});

  EdgeProfile empty = edge_profile(Point{{0.05}}, {}, 0.25, t1);
  CHECK(empty.size() == 0);

  Domain c2 = Domain::cube(2);
  std::vector<Point> anchors(3, Point{{0.4, 0.4}});
  EdgeProfile ones = edge_profile(Point{{0.4, 0.4}}, anchors, 0.3, c2);
  CHECK(ones.bits == std::vector<std::uint8_t>{1, 1, 1});
}

TEST_CASE("canonical_form identifies relabelings and separates structures") {
  LabeledGraph path_a = graph_from_edges(3, {{0, 1}, {1, 2}});
  LabeledGraph path_b = graph_from_edges(3, {{1, 0}, {0, 2}});  // center relabeled
  LabeledGraph triangle = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_form(path_a) == canonical_form(path_b));
  CHECK_FALSE(canonical_form(path_a) == canonical_form(triangle));

  LabeledGraph empty(5);
  CHECK(canonical_form(empty).bytes == std::string(2, '\0'));

  LabeledGraph big(kStructureLimit + 1);
  CHECK_THROWS_AS(canonical_form(big), capacity_error);
}

TEST_CASE("canonical_form is permutation-invariant (exhaustive m=4)") {
  std::vector<int> perm(4);
  for (std::uint64_t key = 0; key < 64; ++key) {
    LabeledGraph g = LabeledGraph::from_key64(4, key);
    CanonicalStructure canon = canonical_form(g);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      REQUIRE(canonical_form(permute_graph(g, perm)) == canon);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("canonical_form matches the brute-force oracle (m=5)") {
  RandomStream rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    LabeledGraph g = LabeledGraph::from_key64(5, rng.next_below(1024));
    CHECK(canonical_form(g).bytes == canonical_oracle(g));
  }
}

TEST_CASE("canonical_form invariance on random m=6 graphs") {
  RandomStream rng(62);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledGraph g = LabeledGraph::from_key64(6, rng.next_below(1ULL << 15));
    CanonicalStructure canon = canonical_form(g);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);
      REQUIRE(canonical_form(permute_graph(g, perm)) == canon);
    }
  }
}

TEST_CASE("permuting points permutes the graph consistently") {
  Domain c2 = Domain::cube(2);
  RandomStream rng(63);
  std::vector<Point> points = sample_points(6, c2, rng);
  LabeledGraph g = build_graph(points, 0.4, c2);

  std::vector<int> perm{3, 0, 5, 1, 4, 2};
  std::vector<Point> shuffled;
  for (int p : perm) shuffled.push_back(points[p]);
  LabeledGraph h = build_graph(shuffled, 0.4, c2);
  CHECK(h == permute_graph(g, perm));
  CHECK(canonical_form(h) == canonical_form(g));
}

TEST_CASE("sample_points basics") {
  Domain c1 = Domain::cube(1);
  RandomStream rng(64);
  CHECK(sample_points(0, c1, rng).empty());

  RandomStream a(99), b(99);
  auto pa = sample_points(5, c1, a);
  auto pb = sample_points(5, c1, b);
  for (int i = 0; i < 5; ++i) CHECK(pa[i].x == pb[i].x);

  double sum = 0.0;
  const int n = 1'000'000;
  RandomStream big(65);
  for (int i = 0; i < n; ++i) sum += sample_point(c1, big).x[0];
  CHECK(std::fabs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("sample_graph_key64 matches build_graph on the same stream") {
  for (auto [d, flavor] : std::vector<std::pair<int, Flavor>>{{1, Flavor::Cube},
                                                              {2, Flavor::Torus}}) {
    Domain domain{d, flavor};
    double r = 0.3 * domain.max_range();
    for (std::uint64_t i = 0; i < 50; ++i) {
      RandomStream a = RandomStream(1234).substream(i);
      RandomStream b = RandomStream(1234).substream(i);
      std::uint64_t key = sample_graph_key64(6, domain, r, a);
      LabeledGraph g = build_graph(sample_points(6, domain, b), r, domain);
      REQUIRE(g.key64() == key);
    }
  }
}

TEST_CASE("empirical distribution counts, merges and edge frequency") {
  EmpiricalDistribution empty;
  CHECK(empty.total() == 0);
  CHECK(empty.support_size() == 0);

  std::vector<std::string> encodings{"b", "a", "b", "c", "b"};
  EmpiricalDistribution from_range = EmpiricalDistribution::from_samples(encodings);
  CHECK(from_range.total() == 5);
  CHECK(from_range.count("b") == 3);
  CHECK(from_range.support_size() == 3);

  // Merging two halves equals the distribution of the whole sample.
  Domain c1 = Domain::cube(1);
  RandomStream root(66);
  EmpiricalDistribution whole =
      sample_graph_distribution(3, c1, 0.3, 50'000, root.substream(0), 1);
  EmpiricalDistribution first, second;
  for (std::uint64_t i = 0; i < 50'000; ++i) {
    RandomStream draw = root.substream(0).substream(i);
    LabeledGraph g = LabeledGraph::from_key64(3, sample_graph_key64(3, c1, 0.3, draw));
    (i < 25'000 ? first : second).add(g.encoding());
  }
  first.merge(second);
  CHECK(first.total() == whole.total());
  CHECK(first.sorted_items() == whole.sorted_items());

  // m=2 edge frequency vs p_r = 2r - r^2, itself cross-checked by
  // integrating the window length over the anchor position.
  double r = 0.5;
  double p_closed = 2.0 * r - r * r;
  double p_quad = adaptive_simpson(
      [&](double x) { return std::min(x + r, 1.0) - std::max(x - r, 0.0); }, 0.0, 1.0, 1e-12);
  CHECK(p_quad == doctest::Approx(p_closed).epsilon(1e-10));

  EmpiricalDistribution pairs =
      sample_graph_distribution(2, c1, r, 1'000'000, root.substream(1), 1);
  std::string edge_key(1, '\x01');
  double p_hat = static_cast<double>(pairs.count(edge_key)) / pairs.total();
  double sigma = std::sqrt(p_closed * (1.0 - p_closed) / 1e6);
  CHECK(std::fabs(p_hat - p_closed) < 4.0 * sigma);

  // Torus pair probability c_d r^d for d=2.
  Domain t2 = Domain::torus(2);
  EmpiricalDistribution tpairs =
      sample_graph_distribution(2, t2, 0.25, 1'000'000, root.substream(2), 1);
  double q = M_PI * 0.0625;
  double q_hat = static_cast<double>(tpairs.count(edge_key)) / tpairs.total();
  CHECK(std::fabs(q_hat - q) < 4.0 * std::sqrt(q * (1.0 - q) / 1e6));
}

TEST_CASE("distribution sampling is independent of the worker count") {
  Domain c1 = Domain::cube(1);
  RandomStream root(67);
  EmpiricalDistribution one = sample_graph_distribution(4, c1, 0.3, 30'000, root, 1);
  EmpiricalDistribution four = sample_graph_distribution(4, c1, 0.3, 30'000, root, 4);
  CHECK(one.sorted_items() == four.sorted_items());
}

TEST_SUITE_END();
