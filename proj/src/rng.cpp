#include "rggent/rng.hpp"

#include <stdexcept>

namespace rggent {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kGamma2 = 0xbf58476d1ce4e5b9ULL;
constexpr std::uint64_t kStreamSalt = 0x94d049bb133111ebULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : key_(mix64(seed + kGamma)), counter_(0), spare_normal_(0.0), has_spare_(false) {}

RandomStream::RandomStream(std::uint64_t key, int)
    : key_(key), counter_(0), spare_normal_(0.0), has_spare_(false) {}

std::uint64_t RandomStream::next_u64() {
  counter_ += 1;
  return mix64(key_ + counter_ * kGamma);
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  // Lemire's multiply-shift with rejection of the biased band.
  while (true) {
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo >= bound || lo >= (0ULL - bound) % bound) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

double RandomStream::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  has_spare_ = true;
  return u * f;
}

RandomStream RandomStream::substream(std::uint64_t index) const {
  std::uint64_t child = mix64(mix64(key_ ^ kStreamSalt) + (index + 1) * kGamma2);
  return RandomStream(child, 0);
}

std::uint64_t sample_poisson(RandomStream& rng, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("sample_poisson: lambda < 0");
  if (lambda == 0.0) return 0;
  if (lambda > 500.0) throw std::invalid_argument("sample_poisson: lambda too large for product method");
  const double l = std::exp(-lambda);
  std::uint64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.next_double();
  } while (p > l);
  return k - 1;
}

std::uint64_t sample_binomial(RandomStream& rng, std::uint64_t n, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_binomial: p outside [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - sample_binomial(rng, n, 1.0 - p);

  if (n <= 256) {
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (rng.next_double() < p) ++k;
    }
    return k;
  }

  const double np = static_cast<double>(n) * p;
  if (np <= 30.0) {
    // Waiting-time method: count geometric jumps until past n.
    const double log_q = std::log1p(-p);
    std::uint64_t k = 0;
    double sum = 0.0;
    while (true) {
      double u = rng.next_double();
      if (u <= 0.0) u = 0x1.0p-53;
      sum += std::floor(std::log(u) / log_q) + 1.0;
      if (sum > static_cast<double>(n)) return k;
      ++k;
    }
  }

  // Normal approximation with continuity correction.
  const double sd = std::sqrt(np * (1.0 - p));
  double x = std::round(np + sd * rng.next_normal());
  if (x < 0.0) x = 0.0;
  if (x > static_cast<double>(n)) x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x);
}

}  // namespace rggent
