#include <doctest.h>

#include <cmath>

#include "hgft/errors.hpp"
#include "hgft/helgason.hpp"
#include "hgft/specfun.hpp"
#include "support.hpp"

using namespace hgft;

namespace {
const test::Grids& grids() {
  static const test::Grids g = test::make_grids();
  return g;
}
}  // namespace

TEST_CASE("plancherel ratio is one for well-resolved bumps") {
  const auto& g = grids();
  CHECK(std::abs(plancherel_ratio(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.6), g.spectral) - 1) <= 1e-6);
  CHECK(std::abs(plancherel_ratio(make_bump(g.disk, polar_to_disk(1.0, 0.7), 0.6), g.spectral) - 1) <= 1e-6);
  CHECK_THROWS_AS(plancherel_ratio(SampledFunction::zero(g.disk), g.spectral), std::invalid_argument);
}

TEST_CASE("inverse undoes forward") {
  const auto& g = grids();
  CHECK(round_trip_error(make_bump(g.disk, polar_to_disk(1.2, 2.0), 0.5), g.spectral) <= 1e-5);
}

TEST_CASE("radial functions have boundary-independent transforms") {
  const auto& g = grids();
  const SpectralFunction F = forward(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.6), g.spectral);
  CHECK(boundary_spread(F) <= 1e-12);
  const SpectralFunction H = forward(make_bump(g.disk, polar_to_disk(1.0, 0.0), 0.6), g.spectral);
  CHECK(boundary_spread(H) > 1e-2);
}

TEST_CASE("forward is linear and reflection conjugates real input") {
  const auto& g = grids();
  const auto t = HelgasonTransform::cached(g.disk, g.spectral);
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.8, 1.0), 0.5);
  const SampledFunction h = make_bump(g.disk, polar_to_disk(0.4, 4.0), 0.7);
  const Complex c(0.5, 2.0);
  const Eigen::MatrixXcd lhs = t->forward(c * f + h).values();
  const Eigen::MatrixXcd rhs = c * t->forward(f).values() + t->forward(h).values();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * rhs.cwiseAbs().maxCoeff());
  const Eigen::MatrixXcd reflected = t->forward_reflected(f).values();
  CHECK((reflected - t->forward(f).values().conjugate()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("transform instances are cached per grid pair") {
  const auto& g = grids();
  CHECK(HelgasonTransform::cached(g.disk, g.spectral) == HelgasonTransform::cached(g.disk, g.spectral));
  const auto other = std::make_shared<const SpectralGrid>(8, 4.0, g.disk->n_theta());
  CHECK(HelgasonTransform::cached(g.disk, other) != HelgasonTransform::cached(g.disk, g.spectral));
}

TEST_CASE("kernel mode zero is the spherical function") {
  const auto& g = grids();
  const auto t = HelgasonTransform::cached(g.disk, g.spectral);
  const Eigen::MatrixXcd& k0 = t->kernel_modes(0);
  for (int k : {0, 10, 47}) {
    for (int i : {0, 20, 39}) {
      CHECK(std::abs(k0(k, i) - spherical_function(g.spectral->lambdas()[static_cast<std::size_t>(k)],
                                                   g.disk->radii()[static_cast<std::size_t>(i)])) <= 1e-10);
    }
  }
}

TEST_CASE("multiplier identity") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.5, 1.0), 0.6);
  CHECK(multiplier_check(f, 0.0, g.spectral) <= 1e-12);
  CHECK(multiplier_check(f, 1.0, g.spectral) <= 1e-4);
  CHECK_THROWS_AS(multiplier_check(f, -1.0, g.spectral), std::domain_error);
}

TEST_CASE("grid mismatches are rejected") {
  const auto& g = grids();
  const auto wrong_b = std::make_shared<const SpectralGrid>(16, 8.0, g.disk->n_theta() / 2);
  CHECK_THROWS_AS(HelgasonTransform(g.disk, wrong_b), GridMismatch);
  const auto other_disk = std::make_shared<const DiskGrid>(20, g.disk->n_theta(), 5.0);
  const auto t = HelgasonTransform::cached(g.disk, g.spectral);
  CHECK_THROWS_AS(t->forward(SampledFunction::zero(other_disk)), GridMismatch);
}
