#pragma once

// Helgason-Fourier transform on the disk:
//
//   F(lambda, b) = sum_x f(x) exp((-i lambda + 1/2) A(x, b)) w_x
//   f(x)         = sum_{lambda, b} F(lambda, b) exp((i lambda + 1/2) A(x, b)) p(lambda) d lambda db
//
// The sum over the angular nodes is taken with the kernel band-limited to the
// N_theta grid modes, so it factors through a DFT in theta and one
// N_lambda x N_r matrix per angular mode.

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hgft/grids.hpp"

namespace hgft {

class HelgasonTransform {
 public:
  HelgasonTransform(DiskGridPtr disk, SpectralGridPtr spectral);

  /// Shared instance for a pair of grids, built on first use.
  static std::shared_ptr<const HelgasonTransform> cached(const DiskGridPtr& disk, const SpectralGridPtr& spectral);
  static void clear_cache();

  const DiskGridPtr& disk() const { return disk_; }
  const SpectralGridPtr& spectral() const { return spectral_; }

  SpectralFunction forward(const SampledFunction& f) const;
  /// F(-lambda_k, b_j), i.e. the forward transform at the reflected spectral nodes.
  SpectralFunction forward_reflected(const SampledFunction& f) const;
  SampledFunction inverse(const SpectralFunction& F) const;

  /// Kernel Fourier coefficients for angular mode n >= 0, indexed (lambda_k, r_i).
  const Eigen::MatrixXcd& kernel_modes(int n) const { return modes_[static_cast<std::size_t>(n)]; }

 private:
  SpectralFunction apply_forward(const SampledFunction& f, bool reflected) const;

  DiskGridPtr disk_;
  SpectralGridPtr spectral_;
  std::vector<Eigen::MatrixXcd> modes_;
};

SpectralFunction forward(const SampledFunction& f, const SpectralGridPtr& spectral);
SampledFunction inverse(const SpectralFunction& F, const DiskGridPtr& disk);

/// spectral_norm2(forward(f)) / norm2(f). Throws std::invalid_argument for f = 0.
/// Warns when more than 1e-6 of the energy of f sits within 0.5 of r_max.
double plancherel_ratio(const SampledFunction& f, const SpectralGridPtr& spectral);

/// Relative spectral L2 error of forward(translate(f, t)) against phi_lambda(t) forward(f).
double multiplier_check(const SampledFunction& f, double t, const SpectralGridPtr& spectral);

/// Relative L2 error of inverse(forward(f)) against f.
double round_trip_error(const SampledFunction& f, const SpectralGridPtr& spectral);

/// max over lambda of the spread of |F(lambda, .)| across b, relative to max|F|.
double boundary_spread(const SpectralFunction& F);

}  // namespace hgft
