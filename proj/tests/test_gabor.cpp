#include <doctest.h>

#include <cmath>

#include "hgft/errors.hpp"
#include "hgft/gabor.hpp"
#include "hgft/helgason.hpp"
#include "hgft/parallel.hpp"
#include "support.hpp"

using namespace hgft;

namespace {
const test::Grids& grids() {
  static const test::Grids g = test::make_grids();
  return g;
}

SampledFunction rotate(const SampledFunction& f, int steps) {
  const int n = f.grid()->n_theta();
  Eigen::MatrixXcd out(f.values().rows(), n);
  for (int j = 0; j < n; ++j) out.col((j + steps) % n) = f.values().col(j);
  return {f.grid(), out};
}
}  // namespace

TEST_CASE("translation by zero is the identity") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.6, 2.0), 0.5);
  const Translation t = translate(f, 0.0);
  CHECK(t.values.values() == f.values());
  CHECK(t.leaked == 0);
}

TEST_CASE("translation preserves constants away from the edge") {
  const auto& g = grids();
  const Translation t = translate(make_constant(g.disk, 2.0), 1.5);
  for (int i = 0; i < g.disk->n_r(); ++i) {
    if (g.disk->radii()[static_cast<std::size_t>(i)] + 1.5 > g.disk->r_max()) continue;
    CHECK(std::abs(t.values.values()(i, 3) - 2.0) <= 1e-10);
  }
  CHECK(t.leaked > 0);
}

TEST_CASE("translation commutes with rotations") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.9, 0.3), 0.5);
  const Eigen::MatrixXcd a = translate(rotate(f, 5), 0.8).values.values();
  const Eigen::MatrixXcd b = rotate(translate(f, 0.8).values, 5).values();
  CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("translation contracts the L2 norm") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.5, 1.0), 0.6);
  double last = norm2(f);
  for (double t : {0.5, 1.0, 2.0}) {
    const double n2 = norm2(translate(f, t).values);
    CHECK(n2 < last);
    last = n2;
  }
}

TEST_CASE("translation arguments") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, DiskPointd(0.0, 0.0), 0.5);
  CHECK_THROWS_AS(translate(f, -0.1), std::domain_error);
  CHECK_THROWS_AS(translate(f, 1.0, 4), std::invalid_argument);
  const Translation coarse = translate(f, 1.0, 256);
  const Translation fine = translate(f, 1.0, 1024);
  // The circle integrand is a piecewise cubic, so extra samples converge algebraically.
  CHECK((coarse.values.values() - fine.values.values()).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("windows must not vanish") {
  const auto& g = grids();
  CHECK_THROWS_AS(Window(SampledFunction::zero(g.disk)), std::invalid_argument);
  const Window w(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.4));
  CHECK(w.norm2() == doctest::Approx(norm2(w.values())));
}

TEST_CASE("gabor slices factor through the Helgason transform") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.7, 4.0), 0.6);
  const Window phi(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.3));
  const GaborField G = gabor_forward(f, phi, g.spectral, g.translations);
  const double scale = G.max_abs();
  for (int m = 0; m < g.translations->n_t(); ++m) {
    const double t = g.translations->nodes()[static_cast<std::size_t>(m)];
    const SpectralFunction direct = forward(times_conj(f, translate(phi.values(), t).values), g.spectral);
    CHECK((G.slices()[static_cast<std::size_t>(m)] - direct.values()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
  }
}

TEST_CASE("gabor transform is independent of the worker count") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(1.0, 1.0), 0.5);
  const Window phi(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.4));
  const unsigned saved = thread_count();
  set_thread_count(1);
  const Eigen::VectorXcd a = gabor_forward(f, phi, g.spectral, g.translations).flatten();
  set_thread_count(4);
  const Eigen::VectorXcd b = gabor_forward(f, phi, g.spectral, g.translations).flatten();
  set_thread_count(saved);
  CHECK(a == b);
}

TEST_CASE("energy ratio, parseval pairing and reconstruction") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, polar_to_disk(0.8, 2.0), 0.6);
  const SampledFunction h = make_bump(g.disk, polar_to_disk(0.3, 5.0), 0.5);
  const Window phi(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.3));
  const double ratio = gabor_energy_ratio(f, phi, g.spectral, g.translations);
  CHECK(ratio > 0);
  CHECK(ratio <= 1 + 2e-3);
  CHECK_THROWS_AS(gabor_energy_ratio(SampledFunction::zero(g.disk), phi, g.spectral, g.translations),
                  std::invalid_argument);

  const GaborField G = gabor_forward(f, phi, g.spectral, g.translations);
  const auto [self, self_rhs] = gabor_parseval(f, f, phi, g.spectral, g.translations);
  CHECK(std::abs(self - gabor_norm2(G)) <= 1e-12 * gabor_norm2(G));
  CHECK(std::abs(self_rhs - phi.norm2() * norm2(f)) <= 1e-12 * std::abs(self_rhs));
  const auto [cross, cross_rhs] = gabor_parseval(f, h, phi, g.spectral, g.translations);
  const auto [swapped, swapped_rhs] = gabor_parseval(h, f, phi, g.spectral, g.translations);
  CHECK(std::abs(cross - std::conj(swapped)) <= 1e-12 * std::abs(cross));
  CHECK(std::abs(cross_rhs - std::conj(swapped_rhs)) <= 1e-12 * std::abs(cross_rhs));

  const Reconstruction rec = gabor_reconstruct(G, phi, g.disk, f);
  CHECK(std::isfinite(rec.residual));
  CHECK(rec.values.grid() == g.disk);
}

TEST_CASE("gabor grid checks") {
  const auto& g = grids();
  const SampledFunction f = make_bump(g.disk, DiskPointd(0.0, 0.0), 0.6);
  const auto other = std::make_shared<const TranslationGrid>(3, 1.0);
  const Window phi(make_bump(g.disk, DiskPointd(0.0, 0.0), 0.3));
  const auto windows = translated_windows(phi, *g.translations);
  CHECK(windows.size() == static_cast<std::size_t>(g.translations->n_t()));
  CHECK_THROWS_AS(gabor_forward(f, windows, g.spectral, other), GridMismatch);
}
