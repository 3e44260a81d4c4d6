#include "rggent/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "rggent/errors.hpp"

namespace rggent {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double unit_ball_volume(int d) {
  if (d < 0) throw std::invalid_argument("unit_ball_volume: d < 0");
  double v = (d % 2 == 0) ? 1.0 : 2.0;
  for (int k = (d % 2 == 0) ? 2 : 3; k <= d; k += 2) {
    v *= 2.0 * kPi / static_cast<double>(k);
  }
  return v;
}

double ball_volume(int d, double r) {
  if (r < 0.0) throw std::invalid_argument("ball_volume: r < 0");
  return unit_ball_volume(d) * std::pow(r, d);
}

double cap_volume(int d, double r, double h) {
  if (d < 1 || r <= 0.0) throw std::invalid_argument("cap_volume: need d >= 1, r > 0");
  if (h < 0.0 || h > 2.0 * r) throw std::invalid_argument("cap_volume: h outside [0, 2r]");
  if (h == 0.0) return 0.0;
  if (h > r) return ball_volume(d, r) - cap_volume(d, r, 2.0 * r - h);
  if (d == 1) return h;
  double x = (2.0 * r * h - h * h) / (r * r);
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;
  double reg = boost::math::ibeta(0.5 * (d + 1), 0.5, x);
  return 0.5 * ball_volume(d, r) * reg;
}

double lens_volume(int d, double r, double s) {
  if (r <= 0.0 || s < 0.0) throw std::invalid_argument("lens_volume: need r > 0, s >= 0");
  if (s >= 2.0 * r) return 0.0;
  if (d == 1) return 2.0 * r - s;  // interval overlap, exact
  if (s == 0.0) return ball_volume(d, r);
  return 2.0 * cap_volume(d, r, r - 0.5 * s);
}

double crescent_volume(int d, double r, double s) {
  if (r <= 0.0 || s < 0.0) throw std::invalid_argument("crescent_volume: need r > 0, s >= 0");
  // d=1 reduces to symmetric-difference of intervals; the direct form keeps
  // the cone bound (which is an equality here) exact in floating point.
  if (d == 1) return 2.0 * std::min(s, 2.0 * r);
  return 2.0 * ball_volume(d, r) - 2.0 * lens_volume(d, r, s);
}

double crescent_cone_lower_bound(int d, double r, double s) {
  if (d < 1 || r <= 0.0 || s < 0.0) {
    throw std::invalid_argument("crescent_cone_lower_bound: bad input");
  }
  return 2.0 * unit_ball_volume(d - 1) * std::pow(r, d - 1) / static_cast<double>(d) * s;
}

double toroidal_crescent_volume(const Domain& domain, double r, const Point& a,
                                const Point& b) {
  if (domain.flavor != Flavor::Torus) {
    throw std::invalid_argument("toroidal_crescent_volume: domain must be a torus");
  }
  if (r <= 0.0) throw std::invalid_argument("toroidal_crescent_volume: r <= 0");
  if (r > 0.25) {
    throw unsupported_range_error(
        "toroidal_crescent_volume: Euclidean reduction requires r <= 1/4");
  }
  return crescent_volume(domain.dim, r, distance(domain, a, b));
}

}  // namespace rggent
