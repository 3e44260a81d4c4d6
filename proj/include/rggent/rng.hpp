#pragma once

#include <cstdint>
#include <cmath>

namespace rggent {

// Counter-based random stream built on the splitmix64 mixing function.
//
// Substream scheme: a stream is identified by a 64-bit key k. Drawing the
// n-th value returns mix64(k + n*GAMMA); substream(i) of a stream with key
// k is the stream with key mix64(mix64(k ^ STREAM_SALT) + (i+1)*GAMMA2).
// Substreams depend only on (key, i), never on how many values the parent
// has produced, so a fixed root seed yields the same draws for any
// partitioning of work across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound);

  // Standard normal (Marsaglia polar, one spare cached).
  double next_normal();

  // Child stream derived from (key, index); independent of draw position.
  RandomStream substream(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }

 private:
  RandomStream(std::uint64_t key, int);  // raw-key constructor

  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_normal_;
  bool has_spare_;
};

// Poisson(lambda) by Knuth's product method; valid for lambda up to ~500.
std::uint64_t sample_poisson(RandomStream& rng, double lambda);

// Binomial(n, p). Exact Bernoulli summation for small n, waiting-time
// (geometric jump) method for small n*p, normal approximation otherwise
// (used only at scales where the approximation error is negligible,
// e.g. bootstrap resampling).
std::uint64_t sample_binomial(RandomStream& rng, std::uint64_t n, double p);

}  // namespace rggent
