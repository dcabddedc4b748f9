#pragma once

#include <complex>

#include <Eigen/Dense>

#include "hgft/grids.hpp"

namespace hgft {

/// Off-grid evaluation of a SampledFunction.
///
/// The samples are first resampled onto a uniform (r, theta) lattice: each ring
/// is zero-padded in Fourier space, and each angular column is carried from the
/// Gauss-Legendre radii to equispaced radii by the barycentric form of the
/// Legendre interpolant. Points are then evaluated by 4x4 Lagrange
/// interpolation on that lattice. Negative radii are reflected through the
/// origin; points beyond r_max evaluate to zero.
class PolarInterpolant {
 public:
  explicit PolarInterpolant(const SampledFunction& f, int radial_upsampling = 4, int angular_upsampling = 8);

  /// Value at z; sets *inside to false when z lies beyond r_max.
  std::complex<double> operator()(const DiskPointd& z, bool* inside = nullptr) const;
  std::complex<double> at_polar(double r, double theta, bool* inside = nullptr) const;

  double r_max() const { return r_max_; }
  const Eigen::MatrixXcd& lattice() const { return lattice_; }

 private:
  double r_max_;
  double dr_;
  double dtheta_;
  int n_radial_;
  int n_angular_;
  Eigen::MatrixXcd lattice_;  // (n_radial_ + 1) x n_angular_
};

/// Row k holds the barycentric weights that carry values at the nodes to
/// targets[k]; exact at coincident points.
Eigen::MatrixXd barycentric_matrix(const std::vector<double>& nodes, const std::vector<double>& node_weights,
                                   const std::vector<double>& targets);

/// Barycentric weights for Gauss-Legendre nodes on any interval.
std::vector<double> legendre_barycentric_weights(std::size_t n);

}  // namespace hgft
