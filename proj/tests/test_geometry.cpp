#include <doctest.h>

#include <cmath>
#include <vector>

#include "rggent/errors.hpp"
#include "rggent/geometry.hpp"
#include "rggent/region.hpp"
#include "rggent/rng.hpp"

using namespace rggent;

namespace {

// Toroidal distance by explicit minimization over all 3^d shifts (the
// definition; the production code uses the per-axis reduction).
double torus_distance_shifts(const Point& a, const Point& b) {
  const int d = a.dim();
  std::vector<int> shift(d, -1);
  double best = 1e300;
  while (true) {
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
      double diff = a.x[i] + shift[i] - b.x[i];
      sum += diff * diff;
    }
    best = std::min(best, sum);
    int i = 0;
    while (i < d && shift[i] == 1) shift[i++] = -1;
    if (i == d) break;
    ++shift[i];
  }
  return std::sqrt(best);
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(0) == 1.0);
  CHECK(unit_ball_volume(1) == 2.0);
  CHECK(unit_ball_volume(2) == doctest::Approx(3.141592653589793).epsilon(1e-15));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.188790204786391).epsilon(1e-15));
}

TEST_CASE("distance examples") {
  CHECK(distance(Domain::torus(1), Point{{0.9}}, Point{{0.1}}) == doctest::Approx(0.2));
  CHECK(distance(Domain::cube(2), Point{{0.0, 0.0}}, Point{{0.3, 0.4}}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(distance(Domain::torus(2), Point{{0.9, 0.1}}, Point{{0.1, 0.9}}) ==
        doctest::Approx(std::sqrt(0.08)).epsilon(1e-12));
  CHECK_THROWS_AS(distance(Domain::cube(2), Point{{0.1}}, Point{{0.1, 0.2}}),
                  std::invalid_argument);
}

TEST_CASE("distance symmetry, triangle inequality and torus cap") {
  for (int d : {1, 2, 3}) {
    for (Flavor flavor : {Flavor::Cube, Flavor::Torus}) {
      Domain domain{d, flavor};
      RandomStream rng(100 + d + (flavor == Flavor::Torus ? 10 : 0));
      for (int i = 0; i < 10'000; ++i) {
        Point a = sample_point(domain, rng);
        Point b = sample_point(domain, rng);
        Point c = sample_point(domain, rng);
        double ab = distance(domain, a, b);
        double ba = distance(domain, b, a);
        double ac = distance(domain, a, c);
        double cb = distance(domain, c, b);
        REQUIRE(ab == ba);
        REQUIRE(ab <= ac + cb + 1e-12);
        if (flavor == Flavor::Torus) {
          REQUIRE(ab <= 0.5 * std::sqrt(static_cast<double>(d)) + 1e-12);
          REQUIRE(ab == doctest::Approx(torus_distance_shifts(a, b)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("lens volume examples and cap cross-checks") {
  CHECK(lens_volume(1, 0.2, 0.1) == doctest::Approx(0.3).epsilon(1e-15));
  for (int d : {1, 2, 3}) CHECK(lens_volume(d, 0.3, 0.6) == 0.0);
  CHECK(lens_volume(2, 1.0, 1.0) == doctest::Approx(1.228369698608757).epsilon(1e-12));
  CHECK(lens_volume(2, 1.0, 0.0) == doctest::Approx(3.141592653589793).epsilon(1e-12));

  // d=3 cap has the elementary form pi h^2 (3r - h) / 3.
  for (double h : {0.05, 0.1, 0.2, 0.3}) {
    double r = 0.3;
    double expect = M_PI * h * h * (3.0 * r - h) / 3.0;
    CHECK(cap_volume(3, r, h) == doctest::Approx(expect).epsilon(1e-11));
  }
  CHECK_THROWS_AS(lens_volume(2, -0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(lens_volume(2, 0.1, -0.1), std::invalid_argument);
}

TEST_CASE("lens closed form agrees with hit sampling") {
  RandomStream rng(5113);
  for (int i = 0; i < 8; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(3));
    double r = 0.05 + 0.2 * rng.next_double();
    double s = 2.0 * r * rng.next_double();
    double closed = lens_volume(d, r, s);

    RegionSpec spec;
    spec.radius = r;
    spec.domain = Domain::cube(d);
    Point a{std::vector<double>(d, 0.5)}, b{std::vector<double>(d, 0.5)};
    a.x[0] -= 0.5 * s;
    b.x[0] += 0.5 * s;
    spec.in_centers = {a, b};
    const std::uint64_t n = 400'000;
    RandomStream mc_rng = rng.substream(i);
    HitEstimate mc = region_volume_mc(spec, n, mc_rng);
    double sigma = std::sqrt(closed * (1.0 - closed) / n);
    CHECK(std::fabs(mc.value - closed) <= 4.0 * std::max(sigma, 1e-9));
  }
}

TEST_CASE("crescent volume examples") {
  CHECK(crescent_volume(1, 0.2, 0.1) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(crescent_volume(2, 0.25, 0.5) == doctest::Approx(2.0 * M_PI * 0.0625).epsilon(1e-12));
  CHECK(crescent_volume(2, 0.25, 0.7) == doctest::Approx(2.0 * M_PI * 0.0625).epsilon(1e-12));
  double v = crescent_volume(2, 0.25, 0.2);
  CHECK(v == doctest::Approx(0.19453072541598881).epsilon(1e-10));
  CHECK(v > crescent_cone_lower_bound(2, 0.25, 0.2));
  CHECK(crescent_cone_lower_bound(2, 0.25, 0.2) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("crescent dominates the cone bound (equality at d=1)") {
  RandomStream rng(777);
  for (int i = 0; i < 2000; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(3));
    double r = 0.01 + 0.24 * rng.next_double();
    double s = 2.0 * r * rng.next_double();
    REQUIRE(crescent_volume(d, r, s) >= crescent_cone_lower_bound(d, r, s));
  }
  // d=1 the bound is exactly tight.
  CHECK(crescent_volume(1, 0.23, 0.11) == crescent_cone_lower_bound(1, 0.23, 0.11));
}

TEST_CASE("crescent is nondecreasing in s and flat past 2r") {
  for (int d : {1, 2, 3}) {
    double r = 0.22;
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      double s = 2.0 * r * i / 100.0;
      double v = crescent_volume(d, r, s);
      REQUIRE(v >= prev - 1e-12);
      prev = v;
    }
    CHECK(crescent_volume(d, r, 2.0 * r) == doctest::Approx(2.0 * ball_volume(d, r)));
    CHECK(crescent_volume(d, r, 3.0 * r) == doctest::Approx(2.0 * ball_volume(d, r)));
  }
}

TEST_CASE("toroidal crescent reduces to the Euclidean form") {
  Domain t1 = Domain::torus(1);
  CHECK(toroidal_crescent_volume(t1, 0.25, Point{{0.0}}, Point{{0.5}}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(toroidal_crescent_volume(t1, 0.2, Point{{0.4}}, Point{{0.4}}) == 0.0);

  Domain t2 = Domain::torus(2);
  Point a{{0.95, 0.5}}, b{{0.05, 0.5}};  // wraps to distance 0.1
  CHECK(toroidal_crescent_volume(t2, 0.2, a, b) ==
        doctest::Approx(crescent_volume(2, 0.2, 0.1)).epsilon(1e-12));
  CHECK_THROWS_AS(toroidal_crescent_volume(t2, 0.3, a, b), unsupported_range_error);
  CHECK_THROWS_AS(toroidal_crescent_volume(Domain::cube(2), 0.2, a, b), std::invalid_argument);
}

TEST_CASE("domain range validation") {
  CHECK(Domain::cube(2).valid_range(1.2));
  CHECK_FALSE(Domain::cube(2).valid_range(std::sqrt(2.0)));
  CHECK_FALSE(Domain::torus(1).valid_range(0.5));  // strict at sqrt(d)/2
  CHECK(Domain::torus(1).valid_range(0.499));
  CHECK_THROWS_AS(Domain::torus(2).require_range(0.8), std::invalid_argument);
  CHECK_THROWS_AS(Domain::cube(0), std::invalid_argument);
}

TEST_CASE("torus points wrap to canonical representatives") {
  Domain t2 = Domain::torus(2);
  Point p = canonical_point(t2, Point{{1.25, -0.25}});
  CHECK(p.x[0] == doctest::Approx(0.25));
  CHECK(p.x[1] == doctest::Approx(0.75));
  CHECK_THROWS_AS(canonical_point(Domain::cube(1), Point{{1.5}}), std::invalid_argument);
}

TEST_SUITE_END();
