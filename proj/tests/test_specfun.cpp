#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hgft/errors.hpp"
#include "hgft/hypgeom.hpp"
#include "hgft/oracle.hpp"
#include "hgft/specfun.hpp"

using namespace hgft;

TEST_CASE("plancherel density") {
  CHECK(plancherel_density(0.0) == 0.0);
  CHECK(plancherel_density(1.0) == doctest::Approx(std::tanh(std::numbers::pi) / (2 * std::numbers::pi)));
  CHECK(plancherel_density(-2.0) == doctest::Approx(plancherel_density(2.0)));
}

TEST_CASE("spherical function is one at the origin") {
  for (double l : {0.0, 0.5, 3.0, 20.0}) CHECK(std::abs(spherical_function(l, 0.0) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(spherical_function(1.0, -0.5), std::domain_error);
}

TEST_CASE("spherical function matches the Mehler-Dirichlet integral") {
  for (double l : {0.0, 0.7, 4.0, 13.0}) {
    for (double r : {0.2, 1.0, 3.5, 6.0}) {
      CHECK(std::abs(spherical_function(l, r) - oracle::conical_legendre(l, r)) <= 1e-9);
    }
  }
}

TEST_CASE("phi_0 is positive and decreasing") {
  double last = 1.0;
  for (double r = 0.5; r <= 6.0; r += 0.5) {
    const double v = spherical_function(0.0, r);
    CHECK(v > 0);
    CHECK(v < last);
    last = v;
  }
}

TEST_CASE("kernel modes resum to the boundary kernel") {
  const std::vector<double> lambdas = {0.5, 2.0, 7.5};
  const double r = 0.8;
  const int max_mode = 96;
  const Eigen::MatrixXcd modes = boundary_kernel_modes(lambdas, r, max_mode);
  REQUIRE(modes.rows() == 3);
  REQUIRE(modes.cols() == max_mode + 1);
  const DiskPointd x = polar_to_disk(r, 0.0);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(modes(k, 0) - spherical_function(lambdas[static_cast<std::size_t>(k)], r)) <= 1e-10);
    for (double psi : {0.0, 0.9, 2.4}) {
      std::complex<double> sum = modes(k, 0);
      for (int n = 1; n <= max_mode; ++n) sum += 2.0 * modes(k, n) * std::cos(n * psi);
      const double a = busemann(x, BoundaryPointd(psi));
      const std::complex<double> expected =
          std::exp(std::complex<double>(0.5, -lambdas[static_cast<std::size_t>(k)]) * a);
      CHECK(std::abs(sum - expected) <= 1e-10);
    }
  }
}

TEST_CASE("kernel modes agree with and without a uniform lambda ladder") {
  std::vector<double> uniform;
  for (int k = 0; k < 200; ++k) uniform.push_back(0.1 * (k + 0.5));
  const std::vector<double> irregular = {uniform[3], uniform[150], uniform[199]};
  const Eigen::MatrixXcd a = boundary_kernel_modes(uniform, 2.0, 16);
  const Eigen::MatrixXcd b = boundary_kernel_modes(irregular, 2.0, 16);
  CHECK((a.row(3) - b.row(0)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((a.row(150) - b.row(1)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((a.row(199) - b.row(2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("kernel modes reject bad arguments") {
  const std::vector<double> l = {1.0};
  CHECK_THROWS_AS(boundary_kernel_modes(l, -1.0, 4), std::domain_error);
  CHECK_THROWS_AS(boundary_kernel_modes(l, 1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(boundary_kernel_modes(l, 60.0, 4), NumericalError);
  CHECK(boundary_kernel_modes({}, 1.0, 4).rows() == 0);
}
