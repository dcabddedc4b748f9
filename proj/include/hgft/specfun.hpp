#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace hgft {

/// Plancherel density |c(lambda)|^{-2} = lambda tanh(pi lambda) / (2 pi).
double plancherel_density(double lambda);

/// Spherical function phi_lambda(r), the boundary average of
/// exp((i lambda + 1/2) A(x, b)) over b for any x at distance r from the
/// origin. Adaptive periodic trapezoid with doubling.
/// Throws NumericalError if refinement stalls above 1e-8.
double spherical_function(double lambda, double r);

/// Fourier coefficients of the boundary kernel psi -> exp((-i lambda + 1/2) A(x, e^{i psi}))
/// for x = tanh(r/2) on the positive real axis:
///   K_n = (1/2pi) int exp((-i lambda + 1/2) A) e^{-i n psi} d psi.
/// The kernel is even in psi, so K_{-n} = K_n and only n = 0..max_mode are
/// returned. Row k holds lambdas[k]. K_0 equals phi_lambda(r).
Eigen::MatrixXcd boundary_kernel_modes(std::span<const double> lambdas, double r, int max_mode);

/// FFT length used by boundary_kernel_modes for one (lambda, r) pair.
std::size_t kernel_fft_size(double lambda, double r, int max_mode);

}  // namespace hgft
