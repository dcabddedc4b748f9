#pragma once

// Geometry of the Poincare disk with curvature -1, metric 2|dz| / (1 - |z|^2).
// Points are complex numbers in the open unit disk; the boundary circle
// parameterizes horocycle directions.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgft {

template <typename Scalar>
class DiskPoint {
 public:
  using Complex = std::complex<Scalar>;

  DiskPoint() = default;

  /// Rejects points with |z| >= 1.
  DiskPoint(Scalar re, Scalar im) : z_(re, im) {
    if (!(std::norm(z_) < Scalar(1))) {
      throw std::domain_error("DiskPoint outside the open unit disk: |z|^2 = " +
                              std::to_string(static_cast<double>(std::norm(z_))));
    }
  }
  explicit DiskPoint(Complex z) : DiskPoint(z.real(), z.imag()) {}

  /// Pulls a point that rounding pushed onto or past the unit circle back inside.
  static DiskPoint clamped(Complex z) {
    const Scalar a = std::abs(z);
    constexpr Scalar limit = Scalar(1) - 4 * std::numeric_limits<Scalar>::epsilon();
    if (a >= limit) z *= limit / a;
    DiskPoint p;
    p.z_ = z;
    return p;
  }

  Scalar re() const { return z_.real(); }
  Scalar im() const { return z_.imag(); }
  const Complex& value() const { return z_; }
  Scalar abs() const { return std::abs(z_); }

  /// Hyperbolic distance to the origin.
  Scalar radius() const { return 2 * std::atanh(std::abs(z_)); }

  /// Polar angle in [0, 2 pi).
  Scalar angle() const {
    Scalar a = std::atan2(z_.imag(), z_.real());
    if (a < 0) a += 2 * std::numbers::pi_v<Scalar>;
    if (a >= 2 * std::numbers::pi_v<Scalar>) a = 0;
    return a;
  }

 private:
  Complex z_{0, 0};
};

template <typename Scalar>
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  explicit BoundaryPoint(Scalar theta) : theta_(normalize(theta)) {}

  Scalar theta() const { return theta_; }
  std::complex<Scalar> point() const { return std::polar(Scalar(1), theta_); }

 private:
  static Scalar normalize(Scalar theta) {
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    Scalar t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    if (t >= two_pi) t = 0;
    return t;
  }

  Scalar theta_ = 0;
};

/// w -> e^{i rotation} (w + center) / (1 + conj(center) w).
template <typename Scalar>
struct Isometry {
  DiskPoint<Scalar> center;
  Scalar rotation = 0;

  DiskPoint<Scalar> operator()(const DiskPoint<Scalar>& w) const {
    const auto a = center.value();
    const auto z = std::polar(Scalar(1), rotation) * (w.value() + a) /
                   (Scalar(1) + std::conj(a) * w.value());
    return DiskPoint<Scalar>::clamped(z);
  }
};

template <typename Scalar>
Scalar distance(const DiskPoint<Scalar>& x, const DiskPoint<Scalar>& y) {
  const auto w = (x.value() - y.value()) / (Scalar(1) - std::conj(y.value()) * x.value());
  return 2 * std::atanh(std::min(std::abs(w), Scalar(1) - std::numeric_limits<Scalar>::epsilon()));
}

/// Busemann function A(x, b) = log((1 - |x|^2) / |x - b|^2), zero at the origin.
template <typename Scalar>
Scalar busemann(const DiskPoint<Scalar>& x, const BoundaryPoint<Scalar>& b) {
  const Scalar a = x.abs();
  const Scalar num = (Scalar(1) - a) * (Scalar(1) + a);
  return std::log(num / std::norm(x.value() - b.point()));
}

/// The Moebius map sending the origin to a, applied to w.
template <typename Scalar>
DiskPoint<Scalar> mobius_translate(const DiskPoint<Scalar>& a, const DiskPoint<Scalar>& w) {
  return Isometry<Scalar>{a, Scalar(0)}(w);
}

template <typename Scalar>
DiskPoint<Scalar> polar_to_disk(Scalar r, Scalar theta) {
  if (r < 0) throw std::domain_error("polar_to_disk: negative radius");
  return DiskPoint<Scalar>::clamped(std::polar(std::tanh(r / 2), theta));
}

/// n equally spaced points on the geodesic circle of radius t about x. The
/// phase rotates the sampling pattern; phase = arg(x) makes the pattern
/// equivariant under rotations about the origin.
template <typename Scalar>
std::vector<DiskPoint<Scalar>> circle_points(const DiskPoint<Scalar>& x, Scalar t,
                                             std::size_t n, Scalar phase = 0) {
  if (t < 0) throw std::domain_error("circle_points: negative radius");
  if (n == 0) throw std::domain_error("circle_points: need at least one point");
  std::vector<DiskPoint<Scalar>> out;
  out.reserve(n);
  const Scalar rho = std::tanh(t / 2);
  const Scalar step = 2 * std::numbers::pi_v<Scalar> / static_cast<Scalar>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = DiskPoint<Scalar>::clamped(std::polar(rho, phase + step * static_cast<Scalar>(j)));
    out.push_back(mobius_translate(x, w));
  }
  return out;
}

using DiskPointd = DiskPoint<double>;
using BoundaryPointd = BoundaryPoint<double>;
using Isometryd = Isometry<double>;

}  // namespace hgft
