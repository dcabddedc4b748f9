#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hgft/errors.hpp"
#include "support.hpp"

using namespace hgft;

TEST_CASE("disk grid weights integrate the hyperbolic area") {
  const auto g = make_disk_grid(test::small_config());
  CHECK(g->weights().sum() == doctest::Approx(2 * std::numbers::pi * (std::cosh(6.0) - 1)).epsilon(1e-12));
  CHECK(g->radii().front() > 0);
  CHECK(g->radii().back() < 6.0);
  CHECK(g->theta(8) == doctest::Approx(std::numbers::pi / 2));
  CHECK(g->node(3, 0).radius() == doctest::Approx(g->radii()[3]).epsilon(1e-12));
  CHECK(g->circle_samples(0.1) >= 32);
  CHECK(g->circle_samples(3.0) > g->circle_samples(1.0));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(DiskGrid(8, 7, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid(0, 8, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid(8, 8, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SpectralGrid(0, 8.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(TranslationGrid(1, 2.0), std::invalid_argument);
}

TEST_CASE("spectral grid uses midpoints and the Plancherel density") {
  const SpectralGrid g(4, 8.0, 16);
  CHECK(g.lambdas()[0] == doctest::Approx(1.0));
  CHECK(g.lambdas()[3] == doctest::Approx(7.0));
  CHECK(g.lambda_weights()[2] == doctest::Approx(2.0 * 5.0 * std::tanh(5 * std::numbers::pi) / (2 * std::numbers::pi)));
  CHECK(g.boundary_weight() == doctest::Approx(1.0 / 16));
  CHECK(g.boundary(4) == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("translation grid weights integrate 2 pi sinh t") {
  const TranslationGrid g(9, 2.0);
  CHECK(g.nodes().front() == 0.0);
  CHECK(g.nodes().back() == doctest::Approx(2.0));
  double sum = 0;
  for (double w : g.weights()) sum += w;
  CHECK(sum == doctest::Approx(2 * std::numbers::pi * (std::cosh(2.0) - 1)).epsilon(1e-12));
}

TEST_CASE("refined and probe configurations") {
  const GridConfig c;
  const GridConfig r = c.refined();
  CHECK(r.n_r == 2 * c.n_r);
  CHECK(r.n_theta == 2 * c.n_theta);
  CHECK(r.n_lambda == 2 * c.n_lambda);
  CHECK(r.n_t == 2 * c.n_t);
  CHECK(r.r_max == c.r_max);
  const GridConfig p = GridConfig::probe();
  CHECK(p.n_r * p.n_theta == 64);
  CHECK(p.n_lambda * p.n_theta * p.n_t <= 4096);
}

TEST_CASE("containers check shape and finiteness") {
  const auto g = make_disk_grid(test::small_config());
  CHECK_THROWS_AS(SampledFunction(g, Eigen::MatrixXcd::Zero(3, 3)), GridMismatch);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(g->n_r(), g->n_theta());
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SampledFunction(g, bad), std::invalid_argument);
  const auto other = std::make_shared<const DiskGrid>(g->n_r(), g->n_theta(), 5.0);
  CHECK_THROWS_AS(inner_product(SampledFunction::zero(g), SampledFunction::zero(other)), GridMismatch);
}

TEST_CASE("inner products and arithmetic") {
  const auto g = make_disk_grid(test::small_config());
  const SampledFunction one = make_constant(g, 1.0);
  CHECK(norm2(one) == doctest::Approx(g->weights().sum()));
  const SampledFunction f = make_bump(g, polar_to_disk(0.7, 1.0), 0.5);
  const SampledFunction h = make_bump(g, DiskPointd(0.0, 0.0), 0.6);
  const Complex c(0.3, -1.2);
  CHECK(std::abs(inner_product(c * f, h) - c * inner_product(f, h)) <= 1e-12);
  CHECK(norm2(f + h) == doctest::Approx(norm2(f) + norm2(h) + 2 * inner_product(f, h).real()));
  CHECK(norm2(f - f) == 0.0);
  CHECK(h.is_radial());
  CHECK_FALSE(f.is_radial());
}

TEST_CASE("bumps and signals") {
  const auto g = make_disk_grid(test::small_config());
  const auto center = polar_to_disk(1.0, 0.0);
  const SampledFunction c = make_compact_bump(g, center, 0.8);
  for (int i = 0; i < g->n_r(); ++i) {
    for (int j = 0; j < g->n_theta(); ++j) {
      if (distance(g->node(i, j), center) >= 0.8) CHECK(c.values()(i, j) == Complex(0.0));
    }
  }
  CHECK(c.values().cwiseAbs().maxCoeff() <= 1.0);
  const SampledFunction ind = make_disk_indicator(g, 2.0);
  CHECK(ind.values()(0, 0) == Complex(1.0));
  CHECK(ind.values()(g->n_r() - 1, 0) == Complex(0.0));
  CHECK(edge_energy_fraction(make_bump(g, DiskPointd(0.0, 0.0), 0.5), 0.5) < 1e-12);
  const double shell = (std::cosh(6.0) - std::cosh(5.5)) / (std::cosh(6.0) - 1);
  CHECK(edge_energy_fraction(make_constant(g, 1.0), 0.5) == doctest::Approx(shell).epsilon(0.05));
  CHECK_THROWS_AS(make_bump(g, center, 0.0), std::invalid_argument);
}

TEST_CASE("gabor field layout") {
  const auto grids = test::make_grids();
  const auto& sg = *grids.spectral;
  const auto& tg = *grids.translations;
  std::vector<Eigen::MatrixXcd> slices(static_cast<std::size_t>(tg.n_t()),
                                       Eigen::MatrixXcd::Zero(sg.n_lambda(), sg.n_b()));
  slices[2](5, 7) = Complex(2.0, 1.0);
  const GaborField G(grids.spectral, grids.translations, slices);
  CHECK(G.cell_count() == static_cast<std::size_t>(sg.n_lambda() * sg.n_b() * tg.n_t()));
  const auto idx = G.cell_index(5, 7, 2);
  CHECK(G.flatten()(static_cast<Eigen::Index>(idx)) == Complex(2.0, 1.0));
  CHECK(G.max_abs() == doctest::Approx(std::sqrt(5.0)));
  CHECK(gabor_norm2(G) == doctest::Approx(5.0 * G.cell_weight(5, 2)));
  slices.pop_back();
  CHECK_THROWS_AS(GaborField(grids.spectral, grids.translations, slices), GridMismatch);
}
