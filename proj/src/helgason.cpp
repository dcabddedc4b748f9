#include "hgft/helgason.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include <unsupported/Eigen/FFT>

#include "hgft/errors.hpp"
#include "hgft/gabor.hpp"
#include "hgft/log.hpp"
#include "hgft/parallel.hpp"
#include "hgft/specfun.hpp"

namespace hgft {
namespace {

constexpr double kPi = std::numbers::pi;

using CacheKey = std::tuple<int, int, double, int, double, int>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, std::shared_ptr<const HelgasonTransform>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const HelgasonTransform>> c;
  return c;
}

// Row-wise DFT. Forward: (1/N) sum_l x_l e^{-2 pi i q l / N}. Backward: sum_q X_q e^{2 pi i q l / N}.
Eigen::MatrixXcd dft_rows(const Eigen::MatrixXcd& m, bool forward) {
  Eigen::FFT<double> fft;
  const auto n = static_cast<std::size_t>(m.cols());
  std::vector<std::complex<double>> in(n);
  std::vector<std::complex<double>> out;
  Eigen::MatrixXcd result(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) in[c] = m(r, static_cast<Eigen::Index>(c));
    if (forward) {
      fft.fwd(out, in);
      for (std::size_t c = 0; c < n; ++c) result(r, static_cast<Eigen::Index>(c)) = out[c] / static_cast<double>(n);
    } else {
      fft.inv(out, in);
      for (std::size_t c = 0; c < n; ++c) result(r, static_cast<Eigen::Index>(c)) = out[c] * static_cast<double>(n);
    }
  }
  return result;
}

int mode_of_bin(int q, int n) { return q <= n / 2 ? q : n - q; }

}  // namespace

HelgasonTransform::HelgasonTransform(DiskGridPtr disk, SpectralGridPtr spectral)
    : disk_(std::move(disk)), spectral_(std::move(spectral)) {
  if (!disk_ || !spectral_) throw std::invalid_argument("HelgasonTransform: null grid");
  if (spectral_->n_b() != disk_->n_theta()) {
    std::ostringstream msg;
    msg << "boundary count N_b = " << spectral_->n_b() << " must equal the angular count N_theta = "
        << disk_->n_theta();
    throw GridMismatch(msg.str());
  }
  const int n_theta = disk_->n_theta();
  const int max_mode = n_theta / 2;
  const int n_r = disk_->n_r();
  const int n_lambda = spectral_->n_lambda();
  modes_.assign(static_cast<std::size_t>(max_mode + 1), Eigen::MatrixXcd(n_lambda, n_r));
  const auto& lambdas = spectral_->lambdas();
  parallel_for(static_cast<std::size_t>(n_r), [&](std::size_t i) {
    const Eigen::MatrixXcd k = boundary_kernel_modes(lambdas, disk_->radii()[i], max_mode);
    for (int n = 0; n <= max_mode; ++n) {
      modes_[static_cast<std::size_t>(n)].col(static_cast<Eigen::Index>(i)) = k.col(n);
    }
  });
}

std::shared_ptr<const HelgasonTransform> HelgasonTransform::cached(const DiskGridPtr& disk,
                                                                   const SpectralGridPtr& spectral) {
  const CacheKey key{disk->n_r(),          disk->n_theta(),         disk->r_max(),
                     spectral->n_lambda(), spectral->lambda_max(), spectral->n_b()};
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto built = std::make_shared<const HelgasonTransform>(disk, spectral);
  std::lock_guard lock(cache_mutex());
  return cache().emplace(key, std::move(built)).first->second;
}

void HelgasonTransform::clear_cache() {
  std::lock_guard lock(cache_mutex());
  cache().clear();
}

SpectralFunction HelgasonTransform::apply_forward(const SampledFunction& f, bool reflected) const {
  if (!(*f.grid() == *disk_)) {
    throw GridMismatch("forward: function lives on " + f.grid()->descriptor() + ", transform on " +
                       disk_->descriptor());
  }
  const int n = disk_->n_theta();
  const Eigen::MatrixXcd rings = dft_rows(f.values(), true);
  Eigen::VectorXd w(disk_->n_r());
  for (int i = 0; i < disk_->n_r(); ++i) w(i) = 2 * kPi * disk_->radial_weights()[static_cast<std::size_t>(i)];

  Eigen::MatrixXcd modal(spectral_->n_lambda(), n);
  for (int q = 0; q < n; ++q) {
    const Eigen::VectorXcd weighted = rings.col(q).cwiseProduct(w.cast<Complex>());
    const auto& k = modes_[static_cast<std::size_t>(mode_of_bin(q, n))];
    if (reflected) {
      modal.col(q).noalias() = k.conjugate() * weighted;
    } else {
      modal.col(q).noalias() = k * weighted;
    }
  }
  return {spectral_, dft_rows(modal, false)};
}

SpectralFunction HelgasonTransform::forward(const SampledFunction& f) const { return apply_forward(f, false); }

SpectralFunction HelgasonTransform::forward_reflected(const SampledFunction& f) const {
  return apply_forward(f, true);
}

SampledFunction HelgasonTransform::inverse(const SpectralFunction& F) const {
  if (!(*F.grid() == *spectral_)) {
    throw GridMismatch("inverse: function lives on " + F.grid()->descriptor() + ", transform on " +
                       spectral_->descriptor());
  }
  const int n = disk_->n_theta();
  const Eigen::MatrixXcd boundary_modes = dft_rows(F.values(), true);
  Eigen::VectorXd w(spectral_->n_lambda());
  for (int k = 0; k < spectral_->n_lambda(); ++k) w(k) = spectral_->lambda_weights()[static_cast<std::size_t>(k)];

  Eigen::MatrixXcd modal(disk_->n_r(), n);
  for (int q = 0; q < n; ++q) {
    const Eigen::VectorXcd weighted = boundary_modes.col(q).cwiseProduct(w.cast<Complex>());
    modal.col(q).noalias() = modes_[static_cast<std::size_t>(mode_of_bin(q, n))].adjoint() * weighted;
  }
  return {disk_, dft_rows(modal, false)};
}

SpectralFunction forward(const SampledFunction& f, const SpectralGridPtr& spectral) {
  return HelgasonTransform::cached(f.grid(), spectral)->forward(f);
}

SampledFunction inverse(const SpectralFunction& F, const DiskGridPtr& disk) {
  return HelgasonTransform::cached(disk, F.grid())->inverse(F);
}

double plancherel_ratio(const SampledFunction& f, const SpectralGridPtr& spectral) {
  const double n2 = norm2(f);
  if (n2 == 0) throw std::invalid_argument("plancherel_ratio: f is identically zero");
  const double edge = edge_energy_fraction(f, 0.5);
  if (edge > 1e-6) {
    std::ostringstream msg;
    msg << "plancherel_ratio: " << edge << " of the energy lies within 0.5 of r_max; ratio is affected by truncation";
    log::warn(msg.str());
  }
  return spectral_norm2(forward(f, spectral)) / n2;
}

double multiplier_check(const SampledFunction& f, double t, const SpectralGridPtr& spectral) {
  if (t < 0) throw std::domain_error("multiplier_check: negative translation radius");
  const SpectralFunction base = forward(f, spectral);
  const SpectralFunction moved = forward(translate(f, t).values, spectral);
  const double denom = spectral_norm2(base);
  if (denom == 0) return 0.0;
  Eigen::MatrixXcd diff = moved.values();
  for (int k = 0; k < spectral->n_lambda(); ++k) {
    const double phi = spherical_function(spectral->lambdas()[static_cast<std::size_t>(k)], t);
    diff.row(k) -= phi * base.values().row(k);
  }
  return std::sqrt(spectral_norm2(SpectralFunction(spectral, std::move(diff))) / denom);
}

double round_trip_error(const SampledFunction& f, const SpectralGridPtr& spectral) {
  const double n2 = norm2(f);
  if (n2 == 0) throw std::invalid_argument("round_trip_error: f is identically zero");
  const SampledFunction back = inverse(forward(f, spectral), f.grid());
  return std::sqrt(norm2(back - f) / n2);
}

double boundary_spread(const SpectralFunction& F) {
  const Eigen::MatrixXd mag = F.values().cwiseAbs();
  const double top = mag.maxCoeff();
  if (top == 0) return 0.0;
  double spread = 0;
  for (Eigen::Index k = 0; k < mag.rows(); ++k) {
    spread = std::max(spread, mag.row(k).maxCoeff() - mag.row(k).minCoeff());
  }
  return spread / top;
}

}  // namespace hgft
