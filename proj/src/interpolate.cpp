#include "hgft/interpolate.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "hgft/quadrature.hpp"

namespace hgft {
namespace {

constexpr double kPi = std::numbers::pi;

// Weights of the cubic Lagrange interpolant on nodes 0, 1, 2, 3 at x.
void cubic_weights(double x, double w[4]) {
  w[0] = -(x - 1) * (x - 2) * (x - 3) / 6;
  w[1] = x * (x - 2) * (x - 3) / 2;
  w[2] = -x * (x - 1) * (x - 3) / 2;
  w[3] = x * (x - 1) * (x - 2) / 6;
}

}  // namespace

std::vector<double> legendre_barycentric_weights(std::size_t n) {
  const auto rule = gauss_legendre<double>(n);
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = rule.nodes[j];
    w[j] = ((j % 2 == 0) ? 1.0 : -1.0) * std::sqrt((1 - x * x) * rule.weights[j]);
  }
  return w;
}

Eigen::MatrixXd barycentric_matrix(const std::vector<double>& nodes, const std::vector<double>& node_weights,
                                   const std::vector<double>& targets) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(targets.size()), n);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    double total = 0;
    bool exact = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = targets[k] - nodes[static_cast<std::size_t>(j)];
      if (d == 0) {
        out.row(row).setZero();
        out(row, j) = 1;
        exact = true;
        break;
      }
      out(row, j) = node_weights[static_cast<std::size_t>(j)] / d;
      total += out(row, j);
    }
    if (!exact) out.row(row) /= total;
  }
  return out;
}

PolarInterpolant::PolarInterpolant(const SampledFunction& f, int radial_upsampling, int angular_upsampling) {
  const DiskGrid& grid = *f.grid();
  if (radial_upsampling < 1 || angular_upsampling < 1) {
    throw std::invalid_argument("PolarInterpolant: upsampling factors must be positive");
  }
  const int n_theta = grid.n_theta();
  r_max_ = grid.r_max();
  n_radial_ = radial_upsampling * grid.n_r();
  n_angular_ = angular_upsampling * n_theta;
  dr_ = r_max_ / n_radial_;
  dtheta_ = 2 * kPi / n_angular_;

  // Angular zero-padding, ring by ring. The Nyquist bin is split evenly.
  Eigen::FFT<double> fft;
  Eigen::MatrixXcd rings(grid.n_r(), n_angular_);
  std::vector<std::complex<double>> ring(static_cast<std::size_t>(n_theta));
  std::vector<std::complex<double>> spectrum;
  std::vector<std::complex<double>> padded(static_cast<std::size_t>(n_angular_));
  std::vector<std::complex<double>> fine;
  const auto big = static_cast<std::size_t>(n_angular_);
  const auto small = static_cast<std::size_t>(n_theta);
  for (int i = 0; i < grid.n_r(); ++i) {
    for (int j = 0; j < n_theta; ++j) ring[static_cast<std::size_t>(j)] = f.values()(i, j);
    fft.fwd(spectrum, ring);
    std::fill(padded.begin(), padded.end(), std::complex<double>(0, 0));
    for (std::size_t q = 0; q < small / 2; ++q) padded[q] = spectrum[q];
    for (std::size_t q = small / 2 + 1; q < small; ++q) padded[big - (small - q)] = spectrum[q];
    padded[small / 2] += 0.5 * spectrum[small / 2];
    padded[big - small / 2] += 0.5 * spectrum[small / 2];
    fft.inv(fine, padded);
    const double scale = static_cast<double>(n_angular_) / n_theta;
    for (int j = 0; j < n_angular_; ++j) rings(i, j) = scale * fine[static_cast<std::size_t>(j)];
  }

  // Radial resampling from the Gauss-Legendre radii onto equispaced radii.
  std::vector<double> targets(static_cast<std::size_t>(n_radial_ + 1));
  for (int a = 0; a <= n_radial_; ++a) targets[static_cast<std::size_t>(a)] = a * dr_;
  const Eigen::MatrixXd carry =
      barycentric_matrix(grid.radii(), legendre_barycentric_weights(static_cast<std::size_t>(grid.n_r())), targets);
  lattice_ = carry.cast<std::complex<double>>() * rings;
}

std::complex<double> PolarInterpolant::at_polar(double r, double theta, bool* inside) const {
  if (r > r_max_) {
    if (inside) *inside = false;
    return {0, 0};
  }
  if (inside) *inside = true;
  if (r < 0) {
    r = -r;
    theta += kPi;
  }
  const double u = r / dr_;
  int base = static_cast<int>(std::floor(u)) - 1;
  if (base > n_radial_ - 3) base = n_radial_ - 3;
  double wr[4];
  cubic_weights(u - base, wr);

  double v = std::fmod(theta, 2 * kPi);
  if (v < 0) v += 2 * kPi;
  v /= dtheta_;
  const int vbase = static_cast<int>(std::floor(v)) - 1;
  double wt[4];
  cubic_weights(v - vbase, wt);

  std::complex<double> acc = 0;
  for (int a = 0; a < 4; ++a) {
    int row = base + a;
    int shift = 0;
    if (row < 0) {
      row = -row;
      shift = n_angular_ / 2;
    }
    std::complex<double> line = 0;
    for (int b = 0; b < 4; ++b) {
      int col = (vbase + b + shift) % n_angular_;
      if (col < 0) col += n_angular_;
      line += wt[b] * lattice_(row, col);
    }
    acc += wr[a] * line;
  }
  return acc;
}

std::complex<double> PolarInterpolant::operator()(const DiskPointd& z, bool* inside) const {
  return at_polar(z.radius(), z.angle(), inside);
}

}  // namespace hgft
