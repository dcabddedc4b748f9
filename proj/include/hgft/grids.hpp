#pragma once

// Quadrature grids and the sampled containers that live on them.
//
//   DiskGrid         geodesic polar grid on the disk, weights for dx
//   SpectralGrid     (lambda, b) nodes, weights for |c(lambda)|^{-2} d lambda db / |W|
//   TranslationGrid  radial nodes t for the group variable h, weights 2 pi sinh t dt
//
// Containers hold a shared pointer to their grid; two containers combine only
// when their grids compare equal.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgft/hypgeom.hpp"

namespace hgft {

using Complex = std::complex<double>;

/// Grid sizes for one run. The defaults are the desk-scale configuration.
struct GridConfig {
  int n_r = 96;
  int n_theta = 64;
  double r_max = 6.0;
  int n_lambda = 128;
  double lambda_max = 24.0;
  int n_t = 32;
  double t_max = 4.0;

  /// Every count doubled, extents unchanged.
  GridConfig refined() const;
  /// The 8x8x8x4 grid used for dense operator probes.
  static GridConfig probe();
  std::string descriptor() const;
};

class DiskGrid {
 public:
  DiskGrid(int n_r, int n_theta, double r_max);

  int n_r() const { return n_r_; }
  int n_theta() const { return n_theta_; }
  double r_max() const { return r_max_; }
  std::size_t size() const { return static_cast<std::size_t>(n_r_) * static_cast<std::size_t>(n_theta_); }

  /// Gauss-Legendre nodes on [0, r_max], ascending.
  const std::vector<double>& radii() const { return radii_; }
  /// Gauss-Legendre weights times sinh(r_i).
  const std::vector<double>& radial_weights() const { return radial_weights_; }
  double theta(int j) const;
  double angular_weight() const;
  double cell_weight(int i, int /*j*/) const { return radial_weights_[static_cast<std::size_t>(i)] * angular_weight(); }
  /// N_r x N_theta array of cell weights.
  const Eigen::ArrayXXd& weights() const { return weights_; }
  DiskPointd node(int i, int j) const;

  /// Samples used for a spherical mean of radius t on this grid.
  std::size_t circle_samples(double t) const;

  bool operator==(const DiskGrid& other) const;
  std::string descriptor() const;

 private:
  int n_r_;
  int n_theta_;
  double r_max_;
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  Eigen::ArrayXXd weights_;
};

class SpectralGrid {
 public:
  SpectralGrid(int n_lambda, double lambda_max, int n_b);

  int n_lambda() const { return n_lambda_; }
  double lambda_max() const { return lambda_max_; }
  int n_b() const { return n_b_; }

  /// Midpoint nodes (k + 1/2) lambda_max / n_lambda.
  const std::vector<double>& lambdas() const { return lambdas_; }
  /// Plain d lambda weights.
  const std::vector<double>& lambda_steps() const { return steps_; }
  /// d lambda times the Plancherel density; folding lambda < 0 onto lambda > 0
  /// doubles the density and 1/|W| = 1/2 halves it again.
  const std::vector<double>& lambda_weights() const { return weights_; }
  double boundary(int j) const;
  double boundary_weight() const { return 1.0 / n_b_; }
  double cell_weight(int k) const { return weights_[static_cast<std::size_t>(k)] * boundary_weight(); }

  bool operator==(const SpectralGrid& other) const;
  std::string descriptor() const;

 private:
  int n_lambda_;
  double lambda_max_;
  int n_b_;
  std::vector<double> lambdas_;
  std::vector<double> steps_;
  std::vector<double> weights_;
};

class TranslationGrid {
 public:
  TranslationGrid(int n_t, double t_max);

  int n_t() const { return n_t_; }
  double t_max() const { return t_max_; }
  /// Uniform nodes m t_max / (n_t - 1), starting at t = 0.
  const std::vector<double>& nodes() const { return nodes_; }
  /// Integral of 2 pi sinh t over each node's cell.
  const std::vector<double>& weights() const { return weights_; }

  bool operator==(const TranslationGrid& other) const;
  std::string descriptor() const;

 private:
  int n_t_;
  double t_max_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using DiskGridPtr = std::shared_ptr<const DiskGrid>;
using SpectralGridPtr = std::shared_ptr<const SpectralGrid>;
using TranslationGridPtr = std::shared_ptr<const TranslationGrid>;

DiskGridPtr make_disk_grid(const GridConfig& config);
SpectralGridPtr make_spectral_grid(const GridConfig& config);
TranslationGridPtr make_translation_grid(const GridConfig& config);

/// Complex samples on a DiskGrid, indexed (i, j) = (radius, angle).
class SampledFunction {
 public:
  SampledFunction(DiskGridPtr grid, Eigen::MatrixXcd values);
  static SampledFunction zero(DiskGridPtr grid);

  const DiskGridPtr& grid() const { return grid_; }
  const Eigen::MatrixXcd& values() const { return values_; }
  Eigen::MatrixXcd& values() { return values_; }

  /// Every ring constant to within tol * max|f|.
  bool is_radial(double tol = 1e-13) const;

 private:
  DiskGridPtr grid_;
  Eigen::MatrixXcd values_;
};

/// Complex samples on a SpectralGrid, indexed (k, j) = (lambda, b).
class SpectralFunction {
 public:
  SpectralFunction(SpectralGridPtr grid, Eigen::MatrixXcd values);

  const SpectralGridPtr& grid() const { return grid_; }
  const Eigen::MatrixXcd& values() const { return values_; }
  Eigen::MatrixXcd& values() { return values_; }

 private:
  SpectralGridPtr grid_;
  Eigen::MatrixXcd values_;
};

/// Complex samples over (lambda, b, t); one N_lambda x N_b slice per t node.
class GaborField {
 public:
  GaborField(SpectralGridPtr spectral, TranslationGridPtr translations, std::vector<Eigen::MatrixXcd> slices);

  const SpectralGridPtr& spectral() const { return spectral_; }
  const TranslationGridPtr& translations() const { return translations_; }
  const std::vector<Eigen::MatrixXcd>& slices() const { return slices_; }
  std::vector<Eigen::MatrixXcd>& slices() { return slices_; }

  std::size_t cell_count() const;
  /// Row-major cell index over (k, j, m).
  std::size_t cell_index(int k, int j, int m) const;
  const Complex& at(int k, int j, int m) const { return slices_[static_cast<std::size_t>(m)](k, j); }
  double cell_weight(int k, int m) const;
  /// All cell weights in cell_index order.
  Eigen::VectorXd cell_weights() const;
  /// All values in cell_index order.
  Eigen::VectorXcd flatten() const;
  double max_abs() const;

 private:
  SpectralGridPtr spectral_;
  TranslationGridPtr translations_;
  std::vector<Eigen::MatrixXcd> slices_;
};

void require_same_grid(const SampledFunction& f, const SampledFunction& g);

Complex inner_product(const SampledFunction& f, const SampledFunction& g);
double norm2(const SampledFunction& f);
Complex spectral_inner_product(const SpectralFunction& f, const SpectralFunction& g);
double spectral_norm2(const SpectralFunction& f);
Complex gabor_inner_product(const GaborField& f, const GaborField& g);
double gabor_norm2(const GaborField& g);

/// Pointwise f * conj(g).
SampledFunction times_conj(const SampledFunction& f, const SampledFunction& g);
SampledFunction operator*(Complex c, const SampledFunction& f);
SampledFunction operator+(const SampledFunction& f, const SampledFunction& g);
SampledFunction operator-(const SampledFunction& f, const SampledFunction& g);

/// exp(-d(center, x)^2 / (2 width^2)). Warns when distance(0, center) + 4 width
/// reaches r_max, since the grid then truncates the bump.
SampledFunction make_bump(const DiskGridPtr& grid, const DiskPointd& center, double width);

/// Smooth bump exp(1 - 1 / (1 - (d/radius)^2)) for d < radius, zero outside.
SampledFunction make_compact_bump(const DiskGridPtr& grid, const DiskPointd& center, double radius);

/// Pointwise-sampled indicator of the geodesic ball of the given radius about the origin.
SampledFunction make_disk_indicator(const DiskGridPtr& grid, double radius);

SampledFunction make_constant(const DiskGridPtr& grid, Complex value);

/// Share of norm2(f) carried by nodes with r > r_max - band.
double edge_energy_fraction(const SampledFunction& f, double band);

}  // namespace hgft
