#include <doctest.h>

#include <cmath>
#include <vector>

#include "hgft/errors.hpp"
#include "hgft/gabor.hpp"
#include "hgft/helgason.hpp"
#include "hgft/oracle.hpp"
#include "hgft/specfun.hpp"
#include "support.hpp"

using namespace hgft;

TEST_CASE("conical legendre function") {
  CHECK(oracle::conical_legendre(3.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // P_{-1/2}(cosh r) = (2 / pi) sech(r / 2) K(tanh(r / 2)); at small r it is 1 - r^2 / 16 + O(r^4).
  CHECK(oracle::conical_legendre(0.0, 1e-3) == doctest::Approx(1 - 1e-6 / 16).epsilon(1e-12));
  CHECK_THROWS_AS(oracle::conical_legendre(1.0, -1.0), std::domain_error);
  const std::vector<double> l = {0.5, 4.0};
  const std::vector<double> r = {0.5, 3.0, 5.0};
  const Eigen::MatrixXd t = oracle::conical_legendre_table(l, r);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(t(a, b) == doctest::Approx(oracle::conical_legendre(l[static_cast<std::size_t>(a)],
                                                                r[static_cast<std::size_t>(b)]))
                           .epsilon(1e-12));
    }
  }
}

TEST_CASE("mehler-fock pair round trips a radial bump") {
  const auto g = test::make_grids();
  const SampledFunction f = make_bump(g.disk, DiskPointd(0.0, 0.0), 0.6);
  const Eigen::VectorXcd profile = f.values().col(0);
  const Eigen::VectorXcd back = oracle::mehler_fock_inverse(oracle::mehler_fock_forward(profile, *g.disk, *g.spectral),
                                                            *g.spectral, *g.disk);
  CHECK((back - profile).cwiseAbs().maxCoeff() <= 1e-5);
  CHECK_THROWS_AS(oracle::mehler_fock_forward(Eigen::VectorXcd::Zero(3), *g.disk, *g.spectral), GridMismatch);
}

TEST_CASE("dense transform matrix agrees with the modal transform") {
  const auto p = test::make_grids(GridConfig::probe());
  const Eigen::MatrixXcd a = oracle::dense_transform_matrix(*p.disk, *p.spectral);
  CHECK(a.rows() == p.spectral->n_lambda() * p.spectral->n_b());
  CHECK(a.cols() == p.disk->n_r() * p.disk->n_theta());
  const SampledFunction f = make_bump(p.disk, polar_to_disk(0.6, 1.0), 0.5);
  const Eigen::VectorXcd dense = a * oracle::vectorize(f.values());
  const Eigen::VectorXcd fast = oracle::vectorize(forward(f, p.spectral).values());
  CHECK((dense - fast).cwiseAbs().maxCoeff() <= 1e-10 * dense.cwiseAbs().maxCoeff());
}

TEST_CASE("dense adjoint reproduces the inverse transform pairing") {
  const auto p = test::make_grids(GridConfig::probe());
  const Eigen::MatrixXcd a = oracle::dense_transform_matrix(*p.disk, *p.spectral);
  const Eigen::VectorXd win = oracle::disk_weights(*p.disk);
  const Eigen::VectorXd wout = oracle::spectral_weights(*p.spectral);
  const Eigen::MatrixXcd adj = oracle::dense_adjoint(a, win, wout);
  const SampledFunction f = make_bump(p.disk, polar_to_disk(0.4, 2.0), 0.6);
  const SpectralFunction F = forward(make_bump(p.disk, polar_to_disk(1.0, 0.5), 0.5), p.spectral);
  const Eigen::VectorXcd vf = oracle::vectorize(f.values());
  const Eigen::VectorXcd vF = oracle::vectorize(F.values());
  const Complex lhs = (wout.cast<Complex>().asDiagonal() * (a * vf)).dot(vF);
  const Complex rhs = (win.cast<Complex>().asDiagonal() * vf).dot(adj * vF);
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  // The inverse transform is the adjoint of the forward one.
  const Eigen::VectorXcd inv = oracle::vectorize(inverse(F, p.disk).values());
  CHECK((adj * vF - inv).cwiseAbs().maxCoeff() <= 1e-10 * inv.cwiseAbs().maxCoeff());
  CHECK_THROWS_AS(oracle::dense_adjoint(a, win.head(3), wout), std::invalid_argument);
}

TEST_CASE("dense gabor matrix agrees with the fast path") {
  const auto p = test::make_grids(GridConfig::probe());
  const SampledFunction phi = make_bump(p.disk, DiskPointd(0.0, 0.0), 0.4);
  const Eigen::MatrixXcd g = oracle::dense_gabor_matrix(*p.disk, *p.spectral, *p.translations, phi);
  const SampledFunction f = make_bump(p.disk, polar_to_disk(0.5, 3.0), 0.5);
  const Eigen::VectorXcd dense = g * oracle::vectorize(f.values());
  const Eigen::VectorXcd fast = gabor_forward(f, Window(phi), p.spectral, p.translations).flatten();
  CHECK((dense - fast).cwiseAbs().maxCoeff() <= 1e-10 * dense.cwiseAbs().maxCoeff());
}

TEST_CASE("dense builders refuse oversized grids") {
  const auto g = test::make_grids(GridConfig{}.refined());
  CHECK_THROWS_AS(oracle::dense_transform_matrix(*g.disk, *g.spectral), std::invalid_argument);
}

TEST_CASE("vectorize is row-major and invertible") {
  Eigen::MatrixXcd m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const Eigen::VectorXcd v = oracle::vectorize(m);
  CHECK(v(1) == Complex(2.0));
  CHECK(v(3) == Complex(4.0));
  CHECK(oracle::unvectorize(v, 2, 3) == m);
  CHECK_THROWS_AS(oracle::unvectorize(v, 4, 2), std::invalid_argument);
}
