#pragma once

#include "rggent/domain.hpp"

namespace rggent {

// Volume c_d of the d-dimensional Euclidean unit ball, pi^{d/2}/Gamma(d/2+1),
// evaluated by the exact recurrence c_d = c_{d-2} * 2*pi/d.
double unit_ball_volume(int d);

// c_d * r^d.
double ball_volume(int d, double r);

// Volume of the spherical cap of height h cut from a radius-r ball in d
// dimensions (regularized incomplete beta form). 0 <= h <= 2r.
double cap_volume(int d, double r, double h);

// Volume of the intersection of two radius-r balls with centers s apart:
// two caps of height r - s/2. Zero for s >= 2r, c_d r^d for s = 0.
double lens_volume(int d, double r, double s);

// Volume of the symmetric difference of two radius-r balls with centers s
// apart: 2 c_d r^d - 2 lens. Equals 2 c_d r^d once the balls are disjoint.
double crescent_volume(int d, double r, double s);

// Cone bound underneath the crescent volume: 2 (c_{d-1} r^{d-1} / d) s.
double crescent_cone_lower_bound(int d, double r, double s);

// Crescent volume on the torus via the Euclidean reduction, valid for
// r <= 1/4 only (throws unsupported_range_error beyond).
double toroidal_crescent_volume(const Domain& domain, double r, const Point& a,
                                const Point& b);

}  // namespace rggent
