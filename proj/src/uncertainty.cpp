#include "hgft/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/QR>

#include "hgft/errors.hpp"
#include "hgft/log.hpp"
#include "hgft/oracle.hpp"

namespace hgft {
namespace {

// Neumaier-compensated running sum; order fixed by the caller.
class Sum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

Eigen::VectorXd cell_weights(const SpectralGrid& sg, const TranslationGrid& tg) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(sg.n_lambda()) * sg.n_b() * tg.n_t());
  Eigen::Index c = 0;
  for (int k = 0; k < sg.n_lambda(); ++k) {
    for (int j = 0; j < sg.n_b(); ++j) {
      for (int m = 0; m < tg.n_t(); ++m) w(c++) = sg.cell_weight(k) * tg.weights()[static_cast<std::size_t>(m)];
    }
  }
  return w;
}

std::string field_descriptor(const GaborField& G) {
  return G.spectral()->descriptor() + " " + G.translations()->descriptor();
}

void require_region_matches(const GaborField& G, const Region& region) {
  if (!(*G.spectral() == *region.spectral()) || !(*G.translations() == *region.translations())) {
    throw GridMismatch("region and Gabor field live on different grids");
  }
}

const double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::string to_string(ClaimClass c) { return c == ClaimClass::Verified ? "VERIFIED" : "EMPIRICAL"; }

ClaimReport make_claim(std::string claim, ClaimClass cls, std::string relation, double lhs, double rhs,
                       double measured, double tolerance, std::string grid, std::string note) {
  ClaimReport r;
  r.claim = std::move(claim);
  r.cls = cls;
  r.relation = std::move(relation);
  r.lhs = lhs;
  r.rhs = rhs;
  r.measured = measured;
  r.tolerance = tolerance;
  r.grid = std::move(grid);
  r.note = std::move(note);
  const double slack = tolerance * std::max(std::abs(lhs), std::abs(rhs));
  if (r.relation == "<=") {
    r.pass = lhs <= rhs + slack;
  } else if (r.relation == ">=") {
    r.pass = lhs >= rhs - slack;
  } else if (r.relation == "==") {
    r.pass = std::abs(lhs - rhs) <= slack;
  } else {
    throw std::invalid_argument("make_claim: unknown relation " + r.relation);
  }
  return r;
}

Region::Region(SpectralGridPtr sg, TranslationGridPtr tg, Mask mask)
    : spectral_(std::move(sg)), translations_(std::move(tg)), mask_(std::move(mask)) {
  const Eigen::VectorXd w = cell_weights(*spectral_, *translations_);
  if (mask_.size() != w.size()) throw GridMismatch("Region: mask size does not match the grids");
  Sum s;
  for (Eigen::Index c = 0; c < w.size(); ++c) {
    if (mask_(c)) s.add(w(c));
  }
  measure_ = s.value();
}

Region Region::empty(const SpectralGridPtr& sg, const TranslationGridPtr& tg) {
  return {sg, tg, Mask::Constant(static_cast<Eigen::Index>(sg->n_lambda()) * sg->n_b() * tg->n_t(), false)};
}

Region Region::full(const SpectralGridPtr& sg, const TranslationGridPtr& tg) {
  return {sg, tg, Mask::Constant(static_cast<Eigen::Index>(sg->n_lambda()) * sg->n_b() * tg->n_t(), true)};
}

Region Region::product(const SpectralGridPtr& sg, const TranslationGridPtr& tg, int k0, int k1, int j0, int j1,
                       int m0, int m1) {
  if (k0 < 0 || k1 > sg->n_lambda() || j0 < 0 || j1 > sg->n_b() || m0 < 0 || m1 > tg->n_t() || k0 > k1 ||
      j0 > j1 || m0 > m1) {
    throw std::invalid_argument("Region::product: index ranges outside the grid");
  }
  Region r = empty(sg, tg);
  Mask mask = r.mask_;
  Eigen::Index c = 0;
  for (int k = 0; k < sg->n_lambda(); ++k) {
    for (int j = 0; j < sg->n_b(); ++j) {
      for (int m = 0; m < tg->n_t(); ++m, ++c) {
        mask(c) = k >= k0 && k < k1 && j >= j0 && j < j1 && m >= m0 && m < m1;
      }
    }
  }
  return {sg, tg, std::move(mask)};
}

Region Region::product_with_measure(const SpectralGridPtr& sg, const TranslationGridPtr& tg, double target) {
  if (!(target >= 0)) throw std::invalid_argument("Region::product_with_measure: negative target");
  std::vector<double> lambda_prefix(static_cast<std::size_t>(sg->n_lambda()) + 1, 0.0);
  for (int k = 0; k < sg->n_lambda(); ++k) {
    lambda_prefix[static_cast<std::size_t>(k) + 1] =
        lambda_prefix[static_cast<std::size_t>(k)] + sg->lambda_weights()[static_cast<std::size_t>(k)];
  }
  std::vector<double> t_prefix(static_cast<std::size_t>(tg->n_t()) + 1, 0.0);
  for (int m = 0; m < tg->n_t(); ++m) {
    t_prefix[static_cast<std::size_t>(m) + 1] = t_prefix[static_cast<std::size_t>(m)] + tg->weights()[static_cast<std::size_t>(m)];
  }
  int best_k = 0, best_j = 0, best_m = 0;
  double best = std::abs(target);
  for (int k = 1; k <= sg->n_lambda(); ++k) {
    for (int j = 1; j <= sg->n_b(); ++j) {
      for (int m = 1; m <= tg->n_t(); ++m) {
        const double value = lambda_prefix[static_cast<std::size_t>(k)] * j / sg->n_b() * t_prefix[static_cast<std::size_t>(m)];
        if (std::abs(value - target) < best) {
          best = std::abs(value - target);
          best_k = k;
          best_j = j;
          best_m = m;
        }
      }
    }
  }
  return product(sg, tg, 0, best_k, 0, best_j, 0, best_m);
}

Region Region::superlevel(const GaborField& G, double level) {
  const Eigen::VectorXcd values = G.flatten();
  const double top = values.cwiseAbs().maxCoeff();
  Mask mask(values.size());
  for (Eigen::Index c = 0; c < values.size(); ++c) mask(c) = top > 0 && std::abs(values(c)) >= level * top;
  return {G.spectral(), G.translations(), std::move(mask)};
}

Region Region::superlevel_with_measure(const GaborField& G, double target) {
  const Eigen::VectorXcd values = G.flatten();
  const Eigen::VectorXd w = G.cell_weights();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::abs(values(a)) > std::abs(values(b)); });
  Mask mask = Mask::Constant(values.size(), false);
  double measure = 0;
  for (Eigen::Index c : order) {
    if (measure + w(c) <= target) {
      mask(c) = true;
      measure += w(c);
    }
  }
  return {G.spectral(), G.translations(), std::move(mask)};
}

Region Region::random(const SpectralGridPtr& sg, const TranslationGridPtr& tg, double target, std::uint64_t seed) {
  const Eigen::VectorXd w = cell_weights(*sg, *tg);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(w.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  Mask mask = Mask::Constant(w.size(), false);
  double measure = 0;
  for (Eigen::Index c : order) {
    if (measure + w(c) <= target) {
      mask(c) = true;
      measure += w(c);
    }
  }
  return {sg, tg, std::move(mask)};
}

Region Region::complement() const { return {spectral_, translations_, !mask_}; }

double Region::total_measure() const {
  const Eigen::VectorXd w = cell_weights(*spectral_, *translations_);
  Sum s;
  for (Eigen::Index c = 0; c < w.size(); ++c) s.add(w(c));
  return s.value();
}

std::size_t Region::cell_count() const { return static_cast<std::size_t>(mask_.count()); }

double masked_energy(const GaborField& G, const Region& region) {
  require_region_matches(G, region);
  const auto& sg = *G.spectral();
  const auto& tg = *G.translations();
  Sum s;
  Eigen::Index c = 0;
  for (int k = 0; k < sg.n_lambda(); ++k) {
    for (int j = 0; j < sg.n_b(); ++j) {
      for (int m = 0; m < tg.n_t(); ++m, ++c) {
        if (region.mask()(c)) s.add(G.cell_weight(k, m) * std::norm(G.at(k, j, m)));
      }
    }
  }
  return s.value();
}

ClaimReport sup_bound_check(const GaborField& G, double norm2_f, double norm2_phi) {
  const double top = G.max_abs();
  const double bound = std::sqrt(norm2_f * norm2_phi);
  return make_claim("sup_norm_bound", ClaimClass::Verified, "<=", top, bound, bound > 0 ? top / bound : 0.0, 1e-6,
                    field_descriptor(G), "max|G| against ||f|| ||phi||");
}

ClaimReport sup_bound_check(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                            const TranslationGridPtr& tg) {
  return sup_bound_check(gabor_forward(f, phi, sg, tg), norm2(f), phi.norm2());
}

ConcentrationReports concentration_check(const GaborField& G, double norm2_f, double norm2_phi, const Region& region) {
  const double m = region.measure();
  const double inside = masked_energy(G, region);
  const double outside = masked_energy(G, region.complement());
  const double total = gabor_norm2(G);
  const double product = norm2_f * norm2_phi;
  const std::string grid = field_descriptor(G);
  std::ostringstream note;
  note << "m(Sigma) = " << m;

  ConcentrationReports out;
  out.chain = make_claim("concentration_chain", ClaimClass::Verified, "<=", inside, m * product,
                         m * product > 0 ? inside / (m * product) : 0.0, 1e-6, grid, note.str());
  out.complement = make_claim("concentration_complement", ClaimClass::Verified, ">=", outside, total - m * product,
                              total > 0 ? outside / total : 0.0, 1e-10, grid, note.str());

  const double norm_product = std::sqrt(product);
  if (m >= 1) {
    out.stated_form = make_claim("concentration_stated_form", ClaimClass::Empirical, "<=", norm_product, kNaN, kNaN,
                                0.0, grid, note.str() + "; skipped: stated form needs m(Sigma) < 1");
    out.stated_form.pass = false;
  } else {
    const double rhs = std::sqrt(outside) / std::sqrt(1 - m * m);
    out.stated_form = make_claim("concentration_stated_form", ClaimClass::Empirical, "<=", norm_product, rhs,
                                rhs > 0 ? norm_product / rhs : kNaN, 0.0, grid, note.str());
  }
  const double small_rhs = norm_product * (1 - m);
  out.small_set = make_claim("concentration_small_set", ClaimClass::Empirical, ">=", std::sqrt(outside), small_rhs,
                             small_rhs > 0 ? std::sqrt(outside) / small_rhs : kNaN, 0.0, grid, note.str());
  return out;
}

double moment(const GaborField& G, double s) {
  if (!(s > 0)) throw std::invalid_argument("moment: s must be positive");
  const auto& sg = *G.spectral();
  const auto& tg = *G.translations();
  Sum acc;
  for (int k = 0; k < sg.n_lambda(); ++k) {
    const double l = sg.lambdas()[static_cast<std::size_t>(k)];
    for (int j = 0; j < sg.n_b(); ++j) {
      for (int m = 0; m < tg.n_t(); ++m) {
        const double t = tg.nodes()[static_cast<std::size_t>(m)];
        acc.add(std::pow(l * l + t * t, s) * G.cell_weight(k, m) * std::norm(G.at(k, j, m)));
      }
    }
  }
  return acc.value();
}

ClaimReport moment_bound_check(const GaborField& G, double norm2_f, double norm2_phi, double s) {
  const double ms = moment(G, s);
  const double lhs = std::sqrt(norm2_f * norm2_phi);
  std::ostringstream note;
  note << "s = " << s << "; |(lambda, b, h)| taken as sqrt(lambda^2 + t^2)";
  const std::string grid = field_descriptor(G);
  if (norm2_f == 0) {
    ClaimReport r = make_claim("moment_bound", ClaimClass::Empirical, "<=", lhs, std::sqrt(ms), kNaN, 0.0, grid,
                               note.str() + "; degenerate input: f = 0");
    r.pass = true;
    return r;
  }
  const double constant = std::sqrt(norm2_f * norm2_phi / ms);
  ClaimReport r = make_claim("moment_bound", ClaimClass::Empirical, "<=", lhs, std::sqrt(ms), constant, 0.0, grid,
                             note.str() + "; measured is the realized constant C_s");
  r.pass = std::isfinite(ms) && ms > 0 && std::isfinite(constant);
  return r;
}

PowerIteration power_iteration(const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& op, Eigen::Index n,
                               double tol, int max_iterations) {
  if (n <= 0) throw std::invalid_argument("power_iteration: empty operator");
  std::mt19937_64 rng(0x5eed);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    v(i) = Complex(re, im);
  }
  v.normalize();
  PowerIteration out;
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iterations; ++it) {
    const Eigen::VectorXcd w = op(v);
    const double rayleigh = v.dot(w).real();
    out.history.push_back(rayleigh);
    out.iterations = it;
    out.value = rayleigh;
    const double norm = w.norm();
    if (std::abs(rayleigh - previous) < tol || norm == 0) {
      out.converged = true;
      break;
    }
    previous = rayleigh;
    v = w / norm;
  }
  return out;
}

BenedicksResult benedicks_probe(const Window& phi, const Region& region, const DiskGridPtr& dg) {
  const auto& sg = *region.spectral();
  const auto& tg = *region.translations();
  if (!(*phi.grid() == *dg)) throw GridMismatch("benedicks_probe: window grid differs");
  const std::string grid = dg->descriptor() + " " + sg.descriptor() + " " + tg.descriptor();

  const Eigen::MatrixXcd a = oracle::dense_gabor_matrix(*dg, sg, tg, phi.values());
  const Eigen::VectorXd root_w = cell_weights(sg, tg).cwiseSqrt();
  const Eigen::MatrixXcd scaled = root_w.asDiagonal() * a;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(scaled);
  qr.setThreshold(1e-12);
  const Eigen::Index rank = qr.rank();
  if (rank < std::min(scaled.rows(), scaled.cols())) {
    std::ostringstream msg;
    msg << "benedicks_probe: Gabor matrix has numerical rank " << rank << " of " << std::min(scaled.rows(), scaled.cols());
    log::warn(msg.str());
  }
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(scaled.rows(), rank);
  const Eigen::ArrayXd mask = region.mask().cast<double>();

  auto project = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return q * (q.adjoint() * v); };
  auto composite = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    const Eigen::VectorXcd pv = project(v);
    return project((mask * pv.array()).matrix());
  };

  BenedicksResult out;
  out.rank = rank;
  out.iteration = power_iteration(composite, scaled.rows(), 1e-8, 20000);
  out.sigma = std::sqrt(std::max(0.0, out.iteration.value));

  const Eigen::MatrixXcd p = q * q.adjoint();
  const Eigen::MatrixXcd defect = p * p - p;
  const PowerIteration defect_norm = power_iteration(
      [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return defect.adjoint() * (defect * v); }, p.rows(),
      1e-30, 50);
  out.idempotence = std::sqrt(std::max(0.0, defect_norm.value));

  std::ostringstream note;
  note << "m(Sigma) = " << region.measure() << ", rank = " << rank << ", iterations = " << out.iteration.iterations
       << (out.iteration.converged ? "" : " (not converged)");
  out.sigma_report = make_claim("benedicks_sigma", ClaimClass::Verified, "<=", out.sigma, 1 - 1e-6, out.sigma, 0.0,
                                grid, note.str());
  out.sigma_report.pass = out.sigma_report.pass && out.iteration.converged;
  out.idempotence_report = make_claim("projector_idempotence", ClaimClass::Verified, "<=", out.idempotence, 1e-10,
                                      out.idempotence, 0.0, grid, "||P_phi^2 - P_phi|| by power iteration");
  return out;
}

}  // namespace hgft
