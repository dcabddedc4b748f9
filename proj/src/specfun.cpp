#include "hgft/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "hgft/errors.hpp"
#include "hgft/hypgeom.hpp"

namespace hgft {
namespace {

constexpr double kPi = std::numbers::pi;

// log of the Poisson kernel (1 - rho^2) / |rho - e^{i psi}|^2 with rho = tanh(r/2),
// written in forms that stay accurate as rho -> 1.
double log_poisson(double r, double psi) {
  const double em = std::exp(-r);
  const double one_minus_rho = 2 * em / (1 + em);
  const double rho = std::tanh(r / 2);
  const double s = std::sin(psi / 2);
  const double denom = one_minus_rho * one_minus_rho + 4 * rho * s * s;
  const double c = std::cosh(r / 2);
  return -std::log(c * c * denom);
}

}  // namespace

double plancherel_density(double lambda) {
  return lambda * std::tanh(kPi * lambda) / (2 * kPi);
}

double spherical_function(double lambda, double r) {
  if (r < 0) throw std::domain_error("spherical_function: negative radius");
  const DiskPointd x = polar_to_disk(r, 0.0);
  const std::complex<double> exponent(0.5, lambda);
  auto integrand = [&](double theta) {
    return std::exp(exponent * busemann(x, BoundaryPointd(theta)));
  };

  constexpr std::size_t kStart = 64;
  constexpr std::size_t kCap = std::size_t{1} << 16;
  std::complex<double> sum = 0;
  for (std::size_t m = 0; m < kStart; ++m) sum += integrand(2 * kPi * static_cast<double>(m) / kStart);
  std::complex<double> estimate = sum / static_cast<double>(kStart);
  double change = 0;
  for (std::size_t n = kStart; n < kCap; n *= 2) {
    std::complex<double> mids = 0;
    for (std::size_t m = 0; m < n; ++m) {
      mids += integrand(2 * kPi * (static_cast<double>(m) + 0.5) / static_cast<double>(n));
    }
    sum += mids;
    const std::complex<double> refined = sum / static_cast<double>(2 * n);
    change = std::abs(refined - estimate);
    estimate = refined;
    if (change < 1e-10) break;
  }
  if (change > 1e-8) {
    std::ostringstream msg;
    msg << "spherical_function(" << lambda << ", " << r << "): refinement stalled at " << change;
    throw NumericalError(msg.str());
  }
  if (std::abs(estimate.imag()) > 1e-10) {
    std::ostringstream msg;
    msg << "spherical_function(" << lambda << ", " << r << "): imaginary residue " << estimate.imag();
    throw NumericalError(msg.str());
  }
  return estimate.real();
}

std::size_t kernel_fft_size(double lambda, double r, int max_mode) {
  const std::size_t floor_size = std::max<std::size_t>(64, 4 * static_cast<std::size_t>(max_mode + 1));
  if (r <= 0) return floor_size;
  // Coefficients decay like rho^n once n exceeds ~ pi |lambda| / (2 |log rho|);
  // 36 e-folds past that leaves aliasing far below double precision.
  const double decay = -std::log(std::tanh(r / 2));
  const double needed = (kPi * std::abs(lambda) / 2 + 36) / decay + 4.0 * max_mode;
  constexpr std::size_t limit = std::size_t{1} << 24;
  if (!(decay > 0) || !(needed <= static_cast<double>(limit))) {
    throw NumericalError("boundary_kernel_modes: radius too large");
  }
  std::size_t m = floor_size;
  while (static_cast<double>(m) < needed) m *= 2;
  return m;
}

Eigen::MatrixXcd boundary_kernel_modes(std::span<const double> lambdas, double r, int max_mode) {
  if (max_mode < 0) throw std::invalid_argument("boundary_kernel_modes: negative mode count");
  if (r < 0) throw std::domain_error("boundary_kernel_modes: negative radius");
  const auto n_lambda = static_cast<Eigen::Index>(lambdas.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_lambda, max_mode + 1);

  if (n_lambda == 0) return out;
  std::map<std::size_t, std::vector<Eigen::Index>> by_size;
  for (Eigen::Index k = 0; k < n_lambda; ++k) {
    by_size[kernel_fft_size(lambdas[static_cast<std::size_t>(k)], r, max_mode)].push_back(k);
  }

  // On a uniform lambda ladder exp(-i lambda_k L) follows from one complex
  // multiply per sample; otherwise each sample is exponentiated directly.
  bool uniform = n_lambda > 2;
  const double step = n_lambda > 1 ? lambdas[1] - lambdas[0] : 0.0;
  for (Eigen::Index k = 2; uniform && k < n_lambda; ++k) {
    const double expected = lambdas[0] + static_cast<double>(k) * step;
    uniform = std::abs(lambdas[static_cast<std::size_t>(k)] - expected) <= 1e-12 * (1 + std::abs(expected));
  }

  const std::size_t top = by_size.rbegin()->first;
  std::vector<double> log_p(top);
  std::vector<double> root_p(top);
  for (std::size_t q = 0; q < top; ++q) {
    log_p[q] = log_poisson(r, 2 * kPi * static_cast<double>(q) / static_cast<double>(top));
    root_p[q] = std::exp(0.5 * log_p[q]);
  }
  std::vector<std::complex<double>> phase(top);
  std::vector<std::complex<double>> advance(top);
  if (uniform) {
    for (std::size_t q = 0; q < top; ++q) {
      phase[q] = std::polar(1.0, -lambdas[0] * log_p[q]);
      advance[q] = std::polar(1.0, -step * log_p[q]);
    }
  }
  std::vector<std::size_t> size_of(static_cast<std::size_t>(n_lambda));
  for (const auto& [m, rows] : by_size) {
    for (Eigen::Index k : rows) size_of[static_cast<std::size_t>(k)] = m;
  }

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> samples;
  std::vector<std::complex<double>> spectrum;
  for (Eigen::Index k = 0; k < n_lambda; ++k) {
    const std::size_t m = size_of[static_cast<std::size_t>(k)];
    const std::size_t stride = top / m;
    samples.resize(m);
    if (uniform) {
      // Re-anchor periodically so rounding in the ladder stays negligible.
      if (k > 0 && k % 64 == 0) {
        for (std::size_t q = 0; q < top; ++q) phase[q] = std::polar(1.0, -lambdas[static_cast<std::size_t>(k)] * log_p[q]);
      }
      for (std::size_t q = 0; q < m; ++q) samples[q] = root_p[q * stride] * phase[q * stride];
      for (std::size_t q = 0; q < top; ++q) phase[q] *= advance[q];
    } else {
      const double lambda = lambdas[static_cast<std::size_t>(k)];
      for (std::size_t q = 0; q < m; ++q) samples[q] = root_p[q * stride] * std::polar(1.0, -lambda * log_p[q * stride]);
    }
    fft.fwd(spectrum, samples);
    for (int n = 0; n <= max_mode; ++n) {
      // Average the +n and -n bins; they agree up to rounding by evenness.
      const auto plus = spectrum[static_cast<std::size_t>(n)];
      const auto minus = spectrum[(m - static_cast<std::size_t>(n)) % m];
      out(k, n) = 0.5 * (plus + minus) / static_cast<double>(m);
    }
  }
  return out;
}

}  // namespace hgft
