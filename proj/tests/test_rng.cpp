#include <doctest.h>

#include <cmath>
#include <vector>

#include "rggent/parallel.hpp"
#include "rggent/rng.hpp"

using namespace rggent;

TEST_SUITE_BEGIN("rng");

TEST_CASE("fixed seed reproduces the same draws") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  RandomStream c(43);
  CHECK(RandomStream(42).next_u64() != c.next_u64());
}

TEST_CASE("substreams depend only on (key, index)") {
  RandomStream parent(7);
  RandomStream before = parent.substream(3);
  for (int i = 0; i < 100; ++i) parent.next_double();
  RandomStream after = parent.substream(3);
  for (int i = 0; i < 100; ++i) CHECK(before.next_u64() == after.next_u64());

  CHECK(parent.substream(0).next_u64() != parent.substream(1).next_u64());
  CHECK(parent.substream(0).next_u64() != RandomStream(7).next_u64());
}

TEST_CASE("uniform doubles live in [0,1) with the right mean") {
  RandomStream rng(11);
  const int n = 1'000'000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  double sigma = 1.0 / std::sqrt(12.0 * n);
  CHECK(std::fabs(sum / n - 0.5) < 4.0 * sigma);
}

TEST_CASE("next_below stays in range and covers small supports") {
  RandomStream rng(13);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t v = rng.next_below(5);
    REQUIRE(v < 5);
    ++seen[v];
  }
  for (int count : seen) CHECK(count > 1600);  // ~2000 expected
}

TEST_CASE("normal draws have unit moments") {
  RandomStream rng(17);
  const int n = 400'000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double z = rng.next_normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::fabs(sum / n) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(sq / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("poisson sampler matches its mean and variance") {
  RandomStream rng(19);
  const double lambda = 6.5;
  const int n = 200'000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double k = static_cast<double>(sample_poisson(rng, lambda));
    sum += k;
    sq += k * k;
  }
  double mean = sum / n;
  CHECK(std::fabs(mean - lambda) < 4.0 * std::sqrt(lambda / n));
  CHECK(std::fabs(sq / n - mean * mean - lambda) < 4.0 * lambda / std::sqrt(n));
}

TEST_CASE("binomial sampler is calibrated in all three regimes") {
  RandomStream rng(23);
  struct Case {
    std::uint64_t n;
    double p;
  };
  for (const Case c : {Case{40, 0.3}, Case{100'000, 0.0001}, Case{50'000, 0.4}}) {
    const int reps = 20'000;
    double sum = 0.0;
    for (int i = 0; i < reps; ++i) {
      sum += static_cast<double>(sample_binomial(rng, c.n, c.p));
    }
    double mean = sum / reps;
    double expect = static_cast<double>(c.n) * c.p;
    double se = std::sqrt(expect * (1.0 - c.p) / reps);
    CHECK(std::fabs(mean - expect) < 4.0 * se);
  }
  CHECK(sample_binomial(rng, 100, 0.0) == 0);
  CHECK(sample_binomial(rng, 100, 1.0) == 100);
}

TEST_CASE("chunk plans partition the range for any total") {
  for (std::uint64_t total : {0ULL, 1ULL, 7ULL, 255ULL, 256ULL, 1000ULL, 123457ULL}) {
    ChunkPlan plan = plan_chunks(total);
    std::uint64_t covered = 0;
    for (std::uint64_t c = 0; c < plan.n_chunks; ++c) {
      CHECK(plan.offset(c) == covered);
      covered += plan.size(c);
    }
    CHECK(covered == total);
  }
}

TEST_CASE("parallel_for_indexed fills every slot once, any worker count") {
  for (int workers : {1, 4}) {
    std::vector<int> hits(1000, 0);
    parallel_for_indexed(1000, workers, [&](std::uint64_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_SUITE_END();
