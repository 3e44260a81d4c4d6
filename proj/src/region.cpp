#include "rggent/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rggent {

void RegionSpec::validate() const {
  domain.require_range(radius);
  for (const auto& p : in_centers) {
    if (p.dim() != domain.dim) throw std::invalid_argument("RegionSpec: in-center dimension mismatch");
  }
  for (const auto& p : out_centers) {
    if (p.dim() != domain.dim) throw std::invalid_argument("RegionSpec: out-center dimension mismatch");
  }
}

HitEstimate region_volume_mc(const RegionSpec& spec, std::uint64_t n_samples,
                             RandomStream& rng) {
  spec.validate();
  if (n_samples < 1) throw std::invalid_argument("region_volume_mc: n_samples < 1");
  const double r2 = spec.radius * spec.radius;
  const int d = spec.domain.dim;
  std::vector<double> probe(d);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    for (int i = 0; i < d; ++i) probe[i] = rng.next_double();
    bool ok = true;
    for (const auto& c : spec.in_centers) {
      if (squared_distance_raw(spec.domain, probe.data(), c.x.data()) > r2) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& c : spec.out_centers) {
        if (squared_distance_raw(spec.domain, probe.data(), c.x.data()) <= r2) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++hits;
  }
  HitEstimate est;
  est.hits = hits;
  est.n_samples = n_samples;
  est.value = static_cast<double>(hits) / static_cast<double>(n_samples);
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(n_samples));
  return est;
}

std::string pack_bits(std::span<const std::uint8_t> bits) {
  std::string bytes((bits.size() + 7) / 8, '\0');
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) bytes[k / 8] |= static_cast<char>(1u << (k % 8));
  }
  return bytes;
}

std::vector<std::uint8_t> unpack_bits(const std::string& bytes, std::size_t n_bits) {
  std::vector<std::uint8_t> bits(n_bits, 0);
  for (std::size_t k = 0; k < n_bits; ++k) {
    bits[k] = (static_cast<unsigned char>(bytes[k / 8]) >> (k % 8)) & 1u;
  }
  return bits;
}

std::map<std::string, double> profile_volumes_1d(std::span<const double> anchors,
                                                 double r) {
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("profile_volumes_1d: r outside (0,1)");
  const std::size_t n = anchors.size();
  for (double a : anchors) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("profile_volumes_1d: anchor outside [0,1]");
  }
  std::map<std::string, double> volumes;
  if (n == 0) {
    volumes[std::string()] = 1.0;
    return volumes;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return anchors[a] < anchors[b]; });

  // Events: sorted-anchor bit i turns on at x_i - r and off just past x_i + r.
  struct Event {
    double pos;
    std::size_t bit;
    bool on;
  };
  std::vector<Event> events;
  events.reserve(2 * n);
  std::vector<std::uint8_t> state(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double xi = anchors[order[i]];
    double lo = xi - r, hi = xi + r;
    if (lo <= 0.0) {
      state[i] = 1;
    } else {
      events.push_back({lo, i, true});
    }
    if (hi < 1.0) events.push_back({hi, i, false});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.pos < b.pos; });

  double prev = 0.0;
  std::size_t e = 0;
  while (true) {
    double next = (e < events.size()) ? events[e].pos : 1.0;
    double len = next - prev;
    if (len > 0.0) {
      volumes[pack_bits(state)] += len;
    }
    if (e >= events.size()) break;
    while (e < events.size() && events[e].pos == next) {
      state[events[e].bit] = events[e].on ? 1 : 0;
      ++e;
    }
    prev = next;
  }
  return volumes;
}

double profile_region_volume_1d(std::span<const double> points, double r,
                                std::span<const std::uint8_t> bits) {
  if (points.size() != bits.size()) {
    throw std::invalid_argument("profile_region_volume_1d: profile length mismatch");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] < points[i - 1]) {
      throw std::invalid_argument("profile_region_volume_1d: points must be sorted ascending");
    }
  }
  // Sweep the elementary intervals of the breakpoint arrangement and keep
  // those whose midpoint realizes the requested profile.
  std::vector<double> cuts{0.0, 1.0};
  for (double p : points) {
    double lo = p - r, hi = p + r;
    if (lo > 0.0 && lo < 1.0) cuts.push_back(lo);
    if (hi > 0.0 && hi < 1.0) cuts.push_back(hi);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    double len = cuts[c + 1] - cuts[c];
    if (len <= 0.0) continue;
    double mid = 0.5 * (cuts[c] + cuts[c + 1]);
    bool match = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      bool inside = std::fabs(mid - points[i]) <= r;
      if (inside != (bits[i] != 0)) {
        match = false;
        break;
      }
    }
    if (match) total += len;
  }
  return total;
}

}  // namespace rggent
