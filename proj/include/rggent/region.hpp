#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rggent/domain.hpp"
#include "rggent/rng.hpp"

namespace rggent {

// Description of the region of probe locations realizing an edge profile:
// inside every in-ball, outside every out-ball, radius r, over the domain.
struct RegionSpec {
  double radius = 0.0;
  Domain domain;
  std::vector<Point> in_centers;
  std::vector<Point> out_centers;

  void validate() const;  // throws std::invalid_argument
};

struct HitEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t n_samples = 0;
};

// Plain uniform hit-sampling estimate of the region volume over the unit
// domain. Unbiased; std_error = sqrt(p(1-p)/n).
HitEstimate region_volume_mc(const RegionSpec& spec, std::uint64_t n_samples,
                             RandomStream& rng);

// Exact per-profile volumes for d=1 on [0,1]: partitions the interval at
// the points {x_i +- r}, maps every cell to its profile and aggregates cell
// lengths. Keys are the byte-packed profile bits (bit i = sorted anchor i);
// only profiles with positive volume appear.
std::map<std::string, double> profile_volumes_1d(std::span<const double> anchors,
                                                 double r);

// Exact Lebesgue measure of the region for one given profile over sorted
// 1-D points (cube domain). bits[i] pairs with points[i].
double profile_region_volume_1d(std::span<const double> points, double r,
                                std::span<const std::uint8_t> bits);

// Byte-packed bit helpers shared by profiles and graph encodings
// (bit k -> byte k/8, bit k%8 within the byte).
std::string pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(const std::string& bytes, std::size_t n_bits);

}  // namespace rggent
