#include "rggent/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace rggent {

std::string to_string(Flavor f) { return f == Flavor::Cube ? "cube" : "torus"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "cube") return Flavor::Cube;
  if (s == "torus") return Flavor::Torus;
  throw std::invalid_argument("unknown domain flavor: " + s);
}

Domain Domain::cube(int d) {
  if (d < 1) throw std::invalid_argument("Domain: dimension must be >= 1");
  return Domain{d, Flavor::Cube};
}

Domain Domain::torus(int d) {
  if (d < 1) throw std::invalid_argument("Domain: dimension must be >= 1");
  return Domain{d, Flavor::Torus};
}

double Domain::max_range() const {
  double root_d = std::sqrt(static_cast<double>(dim));
  return flavor == Flavor::Cube ? root_d : 0.5 * root_d;
}

bool Domain::valid_range(double r) const { return r > 0.0 && r < max_range(); }

void Domain::require_range(double r) const {
  if (!valid_range(r)) {
    throw std::invalid_argument("connection range " + std::to_string(r) +
                                " outside (0, " + std::to_string(max_range()) + ") for " +
                                to_string(flavor) + " d=" + std::to_string(dim));
  }
}

Point canonical_point(const Domain& domain, Point p) {
  if (p.dim() != domain.dim) throw std::invalid_argument("point dimension mismatch");
  for (double& c : p.x) {
    if (domain.flavor == Flavor::Torus) {
      c -= std::floor(c);
      if (c >= 1.0) c = 0.0;  // guard against floor rounding at tiny negatives
    } else if (c < 0.0 || c > 1.0) {
      throw std::invalid_argument("cube point coordinate outside [0,1]");
    }
  }
  return p;
}

double squared_distance_raw(const Domain& domain, const double* a, const double* b) {
  double sum = 0.0;
  if (domain.flavor == Flavor::Cube) {
    for (int i = 0; i < domain.dim; ++i) {
      double d = a[i] - b[i];
      sum += d * d;
    }
  } else {
    for (int i = 0; i < domain.dim; ++i) {
      double d = std::fabs(a[i] - b[i]);
      if (d > 0.5) d = 1.0 - d;
      sum += d * d;
    }
  }
  return sum;
}

double squared_distance(const Domain& domain, const Point& a, const Point& b) {
  if (a.dim() != domain.dim || b.dim() != domain.dim) {
    throw std::invalid_argument("distance: point dimension mismatch");
  }
  return squared_distance_raw(domain, a.x.data(), b.x.data());
}

double distance(const Domain& domain, const Point& a, const Point& b) {
  return std::sqrt(squared_distance(domain, a, b));
}

Point sample_point(const Domain& domain, RandomStream& rng) {
  Point p;
  p.x.resize(domain.dim);
  for (double& c : p.x) c = rng.next_double();
  return p;
}

}  // namespace rggent
