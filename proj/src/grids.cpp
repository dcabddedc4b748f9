#include "hgft/grids.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hgft/errors.hpp"
#include "hgft/log.hpp"
#include "hgft/quadrature.hpp"
#include "hgft/specfun.hpp"

namespace hgft {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const Eigen::MatrixXcd& values, const char* what) {
  if (!values.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite values");
}

}  // namespace

GridConfig GridConfig::refined() const {
  GridConfig c = *this;
  c.n_r *= 2;
  c.n_theta *= 2;
  c.n_lambda *= 2;
  c.n_t *= 2;
  return c;
}

GridConfig GridConfig::probe() {
  GridConfig c;
  c.n_r = 8;
  c.n_theta = 8;
  c.r_max = 3.0;
  c.n_lambda = 8;
  c.lambda_max = 8.0;
  c.n_t = 4;
  c.t_max = 2.0;
  return c;
}

std::string GridConfig::descriptor() const {
  std::ostringstream s;
  s << "N_r=" << n_r << " N_theta=" << n_theta << " r_max=" << r_max << " N_lambda=" << n_lambda
    << " lambda_max=" << lambda_max << " N_t=" << n_t << " t_max=" << t_max;
  return s.str();
}

DiskGrid::DiskGrid(int n_r, int n_theta, double r_max) : n_r_(n_r), n_theta_(n_theta), r_max_(r_max) {
  if (n_r < 1 || n_theta < 2 || n_theta % 2 != 0 || !(r_max > 0)) {
    throw std::invalid_argument("DiskGrid: need n_r >= 1, even n_theta >= 2, r_max > 0");
  }
  const auto rule = gauss_legendre<double>(static_cast<std::size_t>(n_r), 0.0, r_max);
  radii_ = rule.nodes;
  radial_weights_.resize(radii_.size());
  for (std::size_t i = 0; i < radii_.size(); ++i) radial_weights_[i] = rule.weights[i] * std::sinh(radii_[i]);
  weights_.resize(n_r, n_theta);
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_theta; ++j) weights_(i, j) = cell_weight(i, j);
  }
}

double DiskGrid::theta(int j) const { return 2 * kPi * j / n_theta_; }

double DiskGrid::angular_weight() const { return 2 * kPi / n_theta_; }

DiskPointd DiskGrid::node(int i, int j) const {
  return polar_to_disk(radii_[static_cast<std::size_t>(i)], theta(j));
}

std::size_t DiskGrid::circle_samples(double t) const {
  const double arc = 2 * kPi / n_theta_;
  const double n = std::ceil(16 * std::sinh(t) / arc);
  return std::max<std::size_t>(32, static_cast<std::size_t>(n));
}

bool DiskGrid::operator==(const DiskGrid& other) const {
  return n_r_ == other.n_r_ && n_theta_ == other.n_theta_ && r_max_ == other.r_max_;
}

std::string DiskGrid::descriptor() const {
  std::ostringstream s;
  s << "disk(N_r=" << n_r_ << ", N_theta=" << n_theta_ << ", r_max=" << r_max_ << ")";
  return s.str();
}

SpectralGrid::SpectralGrid(int n_lambda, double lambda_max, int n_b)
    : n_lambda_(n_lambda), lambda_max_(lambda_max), n_b_(n_b) {
  if (n_lambda < 1 || n_b < 2 || !(lambda_max > 0)) {
    throw std::invalid_argument("SpectralGrid: need n_lambda >= 1, n_b >= 2, lambda_max > 0");
  }
  const double h = lambda_max / n_lambda;
  for (int k = 0; k < n_lambda; ++k) {
    const double lambda = (k + 0.5) * h;
    lambdas_.push_back(lambda);
    steps_.push_back(h);
    weights_.push_back(h * plancherel_density(lambda));
  }
}

double SpectralGrid::boundary(int j) const { return 2 * kPi * j / n_b_; }

bool SpectralGrid::operator==(const SpectralGrid& other) const {
  return n_lambda_ == other.n_lambda_ && lambda_max_ == other.lambda_max_ && n_b_ == other.n_b_;
}

std::string SpectralGrid::descriptor() const {
  std::ostringstream s;
  s << "spectral(N_lambda=" << n_lambda_ << ", lambda_max=" << lambda_max_ << ", N_b=" << n_b_ << ")";
  return s.str();
}

TranslationGrid::TranslationGrid(int n_t, double t_max) : n_t_(n_t), t_max_(t_max) {
  if (n_t < 2 || !(t_max > 0)) throw std::invalid_argument("TranslationGrid: need n_t >= 2, t_max > 0");
  const double dt = t_max / (n_t - 1);
  for (int m = 0; m < n_t; ++m) {
    const double t = m * dt;
    const double lo = std::max(0.0, t - dt / 2);
    const double hi = std::min(t_max, t + dt / 2);
    nodes_.push_back(t);
    weights_.push_back(2 * kPi * (std::cosh(hi) - std::cosh(lo)));
  }
}

bool TranslationGrid::operator==(const TranslationGrid& other) const {
  return n_t_ == other.n_t_ && t_max_ == other.t_max_;
}

std::string TranslationGrid::descriptor() const {
  std::ostringstream s;
  s << "translation(N_t=" << n_t_ << ", t_max=" << t_max_ << ")";
  return s.str();
}

DiskGridPtr make_disk_grid(const GridConfig& c) {
  return std::make_shared<const DiskGrid>(c.n_r, c.n_theta, c.r_max);
}

SpectralGridPtr make_spectral_grid(const GridConfig& c) {
  return std::make_shared<const SpectralGrid>(c.n_lambda, c.lambda_max, c.n_theta);
}

TranslationGridPtr make_translation_grid(const GridConfig& c) {
  return std::make_shared<const TranslationGrid>(c.n_t, c.t_max);
}

SampledFunction::SampledFunction(DiskGridPtr grid, Eigen::MatrixXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("SampledFunction: null grid");
  if (values_.rows() != grid_->n_r() || values_.cols() != grid_->n_theta()) {
    throw GridMismatch("SampledFunction: values shape does not match " + grid_->descriptor());
  }
  require_finite(values_, "SampledFunction");
}

SampledFunction SampledFunction::zero(DiskGridPtr grid) {
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(grid->n_r(), grid->n_theta());
  return {std::move(grid), std::move(v)};
}

bool SampledFunction::is_radial(double tol) const {
  const double scale = values_.cwiseAbs().maxCoeff();
  if (scale == 0) return true;
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    for (Eigen::Index j = 1; j < values_.cols(); ++j) {
      if (std::abs(values_(i, j) - values_(i, 0)) > tol * scale) return false;
    }
  }
  return true;
}

SpectralFunction::SpectralFunction(SpectralGridPtr grid, Eigen::MatrixXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("SpectralFunction: null grid");
  if (values_.rows() != grid_->n_lambda() || values_.cols() != grid_->n_b()) {
    throw GridMismatch("SpectralFunction: values shape does not match " + grid_->descriptor());
  }
  require_finite(values_, "SpectralFunction");
}

GaborField::GaborField(SpectralGridPtr spectral, TranslationGridPtr translations,
                       std::vector<Eigen::MatrixXcd> slices)
    : spectral_(std::move(spectral)), translations_(std::move(translations)), slices_(std::move(slices)) {
  if (!spectral_ || !translations_) throw std::invalid_argument("GaborField: null grid");
  if (slices_.size() != static_cast<std::size_t>(translations_->n_t())) {
    throw GridMismatch("GaborField: slice count does not match " + translations_->descriptor());
  }
  for (const auto& s : slices_) {
    if (s.rows() != spectral_->n_lambda() || s.cols() != spectral_->n_b()) {
      throw GridMismatch("GaborField: slice shape does not match " + spectral_->descriptor());
    }
    require_finite(s, "GaborField");
  }
}

std::size_t GaborField::cell_count() const {
  return static_cast<std::size_t>(spectral_->n_lambda()) * static_cast<std::size_t>(spectral_->n_b()) *
         static_cast<std::size_t>(translations_->n_t());
}

std::size_t GaborField::cell_index(int k, int j, int m) const {
  return (static_cast<std::size_t>(k) * static_cast<std::size_t>(spectral_->n_b()) + static_cast<std::size_t>(j)) *
             static_cast<std::size_t>(translations_->n_t()) +
         static_cast<std::size_t>(m);
}

double GaborField::cell_weight(int k, int m) const {
  return spectral_->cell_weight(k) * translations_->weights()[static_cast<std::size_t>(m)];
}

Eigen::VectorXd GaborField::cell_weights() const {
  Eigen::VectorXd w(static_cast<Eigen::Index>(cell_count()));
  for (int k = 0; k < spectral_->n_lambda(); ++k) {
    for (int j = 0; j < spectral_->n_b(); ++j) {
      for (int m = 0; m < translations_->n_t(); ++m) {
        w(static_cast<Eigen::Index>(cell_index(k, j, m))) = cell_weight(k, m);
      }
    }
  }
  return w;
}

Eigen::VectorXcd GaborField::flatten() const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(cell_count()));
  for (int k = 0; k < spectral_->n_lambda(); ++k) {
    for (int j = 0; j < spectral_->n_b(); ++j) {
      for (int m = 0; m < translations_->n_t(); ++m) {
        v(static_cast<Eigen::Index>(cell_index(k, j, m))) = at(k, j, m);
      }
    }
  }
  return v;
}

double GaborField::max_abs() const {
  double best = 0;
  for (const auto& s : slices_) best = std::max(best, s.cwiseAbs().maxCoeff());
  return best;
}

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(*f.grid() == *g.grid())) {
    throw GridMismatch("grid mismatch: " + f.grid()->descriptor() + " vs " + g.grid()->descriptor());
  }
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  const auto& w = f.grid()->weights();
  return (f.values().array() * g.values().conjugate().array() * w.cast<Complex>()).sum();
}

double norm2(const SampledFunction& f) {
  return (f.values().cwiseAbs2().array() * f.grid()->weights()).sum();
}

Complex spectral_inner_product(const SpectralFunction& f, const SpectralFunction& g) {
  if (!(*f.grid() == *g.grid())) throw GridMismatch("spectral grid mismatch");
  const auto& sg = *f.grid();
  Complex acc = 0;
  for (int k = 0; k < sg.n_lambda(); ++k) {
    acc += sg.cell_weight(k) * (f.values().row(k).array() * g.values().row(k).conjugate().array()).sum();
  }
  return acc;
}

double spectral_norm2(const SpectralFunction& f) {
  const auto& sg = *f.grid();
  double acc = 0;
  for (int k = 0; k < sg.n_lambda(); ++k) acc += sg.cell_weight(k) * f.values().row(k).squaredNorm();
  return acc;
}

Complex gabor_inner_product(const GaborField& f, const GaborField& g) {
  if (!(*f.spectral() == *g.spectral()) || !(*f.translations() == *g.translations())) {
    throw GridMismatch("Gabor field grid mismatch");
  }
  const auto& sg = *f.spectral();
  const auto& tw = f.translations()->weights();
  Complex acc = 0;
  for (std::size_t m = 0; m < tw.size(); ++m) {
    Complex slice = 0;
    for (int k = 0; k < sg.n_lambda(); ++k) {
      Complex row = 0;
      for (int j = 0; j < sg.n_b(); ++j) row += f.slices()[m](k, j) * std::conj(g.slices()[m](k, j));
      slice += sg.cell_weight(k) * row;
    }
    acc += tw[m] * slice;
  }
  return acc;
}

double gabor_norm2(const GaborField& g) {
  const auto& sg = *g.spectral();
  const auto& tw = g.translations()->weights();
  double acc = 0;
  for (std::size_t m = 0; m < tw.size(); ++m) {
    double slice = 0;
    for (int k = 0; k < sg.n_lambda(); ++k) {
      double row = 0;
      for (int j = 0; j < sg.n_b(); ++j) row += std::norm(g.slices()[m](k, j));
      slice += sg.cell_weight(k) * row;
    }
    acc += tw[m] * slice;
  }
  return acc;
}

SampledFunction times_conj(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  return {f.grid(), f.values().cwiseProduct(g.values().conjugate())};
}

SampledFunction operator*(Complex c, const SampledFunction& f) { return {f.grid(), c * f.values()}; }

SampledFunction operator+(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  return {f.grid(), f.values() + g.values()};
}

SampledFunction operator-(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  return {f.grid(), f.values() - g.values()};
}

namespace {

template <typename Profile>
SampledFunction sample_by_distance(const DiskGridPtr& grid, const DiskPointd& center, Profile&& profile) {
  Eigen::MatrixXcd v(grid->n_r(), grid->n_theta());
  for (int i = 0; i < grid->n_r(); ++i) {
    for (int j = 0; j < grid->n_theta(); ++j) v(i, j) = profile(distance(center, grid->node(i, j)));
  }
  return {grid, std::move(v)};
}

}  // namespace

SampledFunction make_bump(const DiskGridPtr& grid, const DiskPointd& center, double width) {
  if (!(width > 0)) throw std::invalid_argument("make_bump: width must be positive");
  if (center.radius() + 4 * width >= grid->r_max()) {
    std::ostringstream msg;
    msg << "bump at distance " << center.radius() << " with width " << width << " is truncated by r_max = "
        << grid->r_max();
    log::warn(msg.str());
  }
  const double scale = 2 * width * width;
  return sample_by_distance(grid, center, [scale](double d) { return Complex(std::exp(-d * d / scale), 0); });
}

SampledFunction make_compact_bump(const DiskGridPtr& grid, const DiskPointd& center, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("make_compact_bump: radius must be positive");
  return sample_by_distance(grid, center, [radius](double d) {
    const double u = d / radius;
    if (u >= 1) return Complex(0, 0);
    return Complex(std::exp(1 - 1 / (1 - u * u)), 0);
  });
}

SampledFunction make_disk_indicator(const DiskGridPtr& grid, double radius) {
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(grid->n_r(), grid->n_theta());
  for (int i = 0; i < grid->n_r(); ++i) {
    if (grid->radii()[static_cast<std::size_t>(i)] <= radius) v.row(i).setOnes();
  }
  return {grid, std::move(v)};
}

SampledFunction make_constant(const DiskGridPtr& grid, Complex value) {
  return {grid, Eigen::MatrixXcd::Constant(grid->n_r(), grid->n_theta(), value)};
}

double edge_energy_fraction(const SampledFunction& f, double band) {
  const auto& grid = *f.grid();
  double total = 0;
  double edge = 0;
  for (int i = 0; i < grid.n_r(); ++i) {
    const double ring = grid.radial_weights()[static_cast<std::size_t>(i)] * grid.angular_weight() *
                        f.values().row(i).squaredNorm();
    total += ring;
    if (grid.radii()[static_cast<std::size_t>(i)] > grid.r_max() - band) edge += ring;
  }
  return total > 0 ? edge / total : 0.0;
}

}  // namespace hgft
