#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rggent/rng.hpp"

namespace rggent {

enum class Flavor { Cube, Torus };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

// Spatial setting: dimension plus cube/torus flavor. Owns the metric and
// the valid connection-range interval (0, sqrt(d)) for the cube and
// (0, sqrt(d)/2) for the torus -- no two torus points are farther apart
// than sqrt(d)/2.
struct Domain {
  int dim = 1;
  Flavor flavor = Flavor::Cube;

  static Domain cube(int d);
  static Domain torus(int d);

  double max_range() const;
  bool valid_range(double r) const;
  void require_range(double r) const;  // throws std::invalid_argument
};

struct Point {
  std::vector<double> x;

  Point() = default;
  explicit Point(std::vector<double> coords) : x(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : x(coords) {}
  int dim() const { return static_cast<int>(x.size()); }
};

// Wraps coordinates into the canonical representative [0,1)^d (torus);
// cube points are validated to lie in [0,1]^d.
Point canonical_point(const Domain& domain, Point p);

// Euclidean distance on the cube; min over shifts z in {-1,0,1}^d on the
// torus (computed per axis, which is equivalent).
double distance(const Domain& domain, const Point& a, const Point& b);
double squared_distance(const Domain& domain, const Point& a, const Point& b);

// Low-level kernel on raw coordinate arrays, used by samplers.
double squared_distance_raw(const Domain& domain, const double* a, const double* b);

Point sample_point(const Domain& domain, RandomStream& rng);

}  // namespace rggent
