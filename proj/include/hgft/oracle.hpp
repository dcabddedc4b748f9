#pragma once

// Brute-force references that share nothing with the transform code beyond
// the disk geometry and grid containers.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hgft/grids.hpp"

namespace hgft::oracle {

/// Conical Legendre function P_{-1/2 + i lambda}(cosh r) from the
/// Mehler-Dirichlet integral
///   (sqrt 2 / pi) int_0^r cos(lambda t) / sqrt(cosh r - cosh t) dt,
/// after the substitution t = r - s^2, by composite Gauss-Legendre.
double conical_legendre(double lambda, double r);

/// Table P(lambda_k, r_i) sharing the quadrature nodes across lambdas.
Eigen::MatrixXd conical_legendre_table(std::span<const double> lambdas, std::span<const double> radii);

/// F(lambda_k) = int_0^r_max f(r) P_{-1/2+i lambda_k}(cosh r) sinh r dr over the
/// grid's radial rule. profile[i] is f at grid.radii()[i].
Eigen::VectorXcd mehler_fock_forward(const Eigen::VectorXcd& profile, const DiskGrid& grid, const SpectralGrid& sg);

/// f(r_i) = int_0^lambda_max F(lambda) P_{-1/2+i lambda}(cosh r_i) lambda tanh(pi lambda) d lambda
/// over the spectral grid's lambda nodes.
Eigen::VectorXcd mehler_fock_inverse(const Eigen::VectorXcd& spectrum, const SpectralGrid& sg, const DiskGrid& grid);

/// Largest output count accepted by the dense builders.
inline constexpr Eigen::Index kMaxDenseCells = 8192;

/// Matrix A with A * vec(f) = vec(forward(f)); vec is row-major over (i, j)
/// and (k, j) respectively. The angular sum uses the kernel projected onto the
/// N_theta grid modes, evaluated here by direct Dirichlet-kernel quadrature.
Eigen::MatrixXcd dense_transform_matrix(const DiskGrid& dg, const SpectralGrid& sg);

/// Matrix with columns G(e_x) in GaborField::cell_index order, so that
/// A * vec(f) = flatten(gabor_forward(f, phi)). Spherical means are evaluated
/// node by node.
Eigen::MatrixXcd dense_gabor_matrix(const DiskGrid& dg, const SpectralGrid& sg, const TranslationGrid& tg,
                                    const SampledFunction& phi);

/// Adjoint of a dense operator between weighted spaces:
///   W_in^{-1} A^* W_out, so <A f, F>_out = <f, adjoint F>_in.
Eigen::MatrixXcd dense_adjoint(const Eigen::MatrixXcd& a, const Eigen::VectorXd& in_weights,
                               const Eigen::VectorXd& out_weights);

/// Row-major vectorization of a sampled function and its inverse.
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& values);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols);

/// Cell weights of a DiskGrid / SpectralGrid in vectorize order.
Eigen::VectorXd disk_weights(const DiskGrid& dg);
Eigen::VectorXd spectral_weights(const SpectralGrid& sg);

}  // namespace hgft::oracle
