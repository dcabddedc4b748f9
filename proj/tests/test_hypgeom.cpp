#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgft/hypgeom.hpp"
#include "hgft/quadrature.hpp"

using namespace hgft;

TEST_CASE("disk points reject the boundary and beyond") {
  CHECK_THROWS_AS(DiskPointd(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(DiskPointd(0.8, 0.8), std::domain_error);
  CHECK_NOTHROW(DiskPointd(0.6, -0.7));
  const auto p = DiskPointd::clamped({2.0, 0.0});
  CHECK(p.abs() < 1.0);
}

TEST_CASE("polar coordinates round trip") {
  const auto p = polar_to_disk(1.7, 2.3);
  CHECK(p.radius() == doctest::Approx(1.7).epsilon(1e-13));
  CHECK(p.angle() == doctest::Approx(2.3).epsilon(1e-13));
  CHECK_THROWS_AS(polar_to_disk(-0.1, 0.0), std::domain_error);
  CHECK(BoundaryPointd(-std::numbers::pi / 2).theta() == doctest::Approx(1.5 * std::numbers::pi));
}

TEST_CASE("distance is symmetric and invariant under isometries") {
  const auto x = polar_to_disk(0.9, 0.4);
  const auto y = polar_to_disk(1.6, 2.9);
  CHECK(distance(x, y) == doctest::Approx(distance(y, x)).epsilon(1e-13));
  CHECK(distance(DiskPointd(0.0, 0.0), x) == doctest::Approx(0.9).epsilon(1e-13));
  const Isometryd g{polar_to_disk(1.1, -0.7), 0.8};
  CHECK(distance(g(x), g(y)) == doctest::Approx(distance(x, y)).epsilon(1e-12));
}

TEST_CASE("busemann function") {
  const BoundaryPointd b(0.0);
  CHECK(busemann(DiskPointd(0.0, 0.0), b) == doctest::Approx(0.0).epsilon(1e-15));
  // Along the geodesic toward b the Busemann function is the distance travelled.
  for (double r : {0.3, 1.0, 2.5}) CHECK(busemann(polar_to_disk(r, 0.0), b) == doctest::Approx(r).epsilon(1e-12));
  CHECK(busemann(polar_to_disk(1.0, std::numbers::pi), b) == doctest::Approx(-1.0).epsilon(1e-12));
  // Rotations act diagonally.
  const auto x = polar_to_disk(0.8, 1.1);
  const auto rx = Isometryd{DiskPointd(0.0, 0.0), 0.5}(x);
  CHECK(busemann(rx, BoundaryPointd(0.5 + 0.3)) == doctest::Approx(busemann(x, BoundaryPointd(0.3))).epsilon(1e-12));
}

TEST_CASE("circle points lie on the geodesic circle") {
  const auto x = polar_to_disk(1.2, 0.6);
  const auto pts = circle_points(x, 0.9, 17, 0.25);
  CHECK(pts.size() == 17);
  for (const auto& p : pts) CHECK(distance(x, p) == doctest::Approx(0.9).epsilon(1e-11));
  CHECK_THROWS_AS(circle_points(x, -1.0, 4), std::domain_error);
  CHECK_THROWS_AS(circle_points(x, 1.0, 0), std::domain_error);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre<double>(6, 0.0, 2.0);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  for (int deg = 0; deg <= 11; ++deg) {
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], deg);
    CHECK(sum == doctest::Approx(std::pow(2.0, deg + 1) / (deg + 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre<double>(0), std::invalid_argument);
}
