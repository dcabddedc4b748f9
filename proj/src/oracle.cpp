#include "hgft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hgft/errors.hpp"
#include "hgft/interpolate.hpp"
#include "hgft/parallel.hpp"
#include "hgft/quadrature.hpp"

namespace hgft::oracle {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPanelNodes = 16;

struct MehlerRule {
  std::vector<double> t;       // t = r - s^2 at each node
  std::vector<double> weight;  // quadrature weight times the non-oscillatory factor
};

// Nodes in s on [0, sqrt(r)] for int_0^r cos(lambda t) / sqrt(cosh r - cosh t) dt.
MehlerRule mehler_rule(double r, double lambda_max) {
  MehlerRule rule;
  if (r <= 0) return rule;
  const int panels = static_cast<int>(std::ceil(lambda_max * r / kPi)) + 4;
  const double top = std::sqrt(r);
  const auto base = gauss_legendre<double>(kPanelNodes, 0.0, 1.0);
  const double width = top / panels;
  for (int p = 0; p < panels; ++p) {
    for (int q = 0; q < kPanelNodes; ++q) {
      const double s = width * (p + base.nodes[static_cast<std::size_t>(q)]);
      const double s2 = s * s;
      // cosh r - cosh(r - s^2) = 2 sinh(r - s^2/2) sinh(s^2/2)
      const double gap = 2 * std::sinh(r - s2 / 2) * std::sinh(s2 / 2);
      rule.t.push_back(r - s2);
      rule.weight.push_back(width * base.weights[static_cast<std::size_t>(q)] * 2 * s / std::sqrt(gap));
    }
  }
  return rule;
}

double mehler_sum(const MehlerRule& rule, double lambda) {
  if (rule.t.empty()) return 1.0;
  double acc = 0;
  for (std::size_t q = 0; q < rule.t.size(); ++q) acc += rule.weight[q] * std::cos(lambda * rule.t[q]);
  return std::sqrt(2.0) / kPi * acc;
}

// Fine angular sample count resolving the boundary kernel at radius r.
std::size_t fine_samples(double r, double lambda_max, int n_theta) {
  std::size_t m = 1024;
  if (r <= 0) return m;
  const double decay = -std::log(std::tanh(r / 2));
  const double needed = (kPi * lambda_max + 80) / decay + 2.0 * n_theta;
  while (static_cast<double>(m) < needed) m *= 2;
  return m;
}

// sin(N x / 2) cot(x / 2): the grid-band Dirichlet kernel sum_{|n|<N/2} e^{inx} + cos(N x / 2).
double dirichlet(double x, int n) {
  x = std::remainder(x, 2 * kPi);
  if (std::abs(x) < 1e-300) return n;
  return std::sin(n * x / 2) / std::tan(x / 2);
}

void check_cells(Eigen::Index cells, const char* what) {
  if (cells > kMaxDenseCells) {
    std::ostringstream msg;
    msg << what << ": " << cells << " output cells exceed the dense limit " << kMaxDenseCells;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double conical_legendre(double lambda, double r) {
  if (r < 0) throw std::domain_error("conical_legendre: negative radius");
  return mehler_sum(mehler_rule(r, std::abs(lambda)), lambda);
}

Eigen::MatrixXd conical_legendre_table(std::span<const double> lambdas, std::span<const double> radii) {
  double top = 0;
  for (double l : lambdas) top = std::max(top, std::abs(l));
  Eigen::MatrixXd out(static_cast<Eigen::Index>(lambdas.size()), static_cast<Eigen::Index>(radii.size()));
  parallel_for(radii.size(), [&](std::size_t i) {
    const MehlerRule rule = mehler_rule(radii[i], top);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = mehler_sum(rule, lambdas[k]);
    }
  });
  return out;
}

Eigen::VectorXcd mehler_fock_forward(const Eigen::VectorXcd& profile, const DiskGrid& grid, const SpectralGrid& sg) {
  if (profile.size() != grid.n_r()) throw GridMismatch("mehler_fock_forward: profile length differs from N_r");
  const Eigen::MatrixXd p = conical_legendre_table(sg.lambdas(), grid.radii());
  Eigen::VectorXcd weighted(grid.n_r());
  for (int i = 0; i < grid.n_r(); ++i) weighted(i) = profile(i) * grid.radial_weights()[static_cast<std::size_t>(i)];
  return p.cast<Complex>() * weighted;
}

Eigen::VectorXcd mehler_fock_inverse(const Eigen::VectorXcd& spectrum, const SpectralGrid& sg, const DiskGrid& grid) {
  if (spectrum.size() != sg.n_lambda()) throw GridMismatch("mehler_fock_inverse: spectrum length differs from N_lambda");
  const Eigen::MatrixXd p = conical_legendre_table(sg.lambdas(), grid.radii());
  Eigen::VectorXcd weighted(sg.n_lambda());
  for (int k = 0; k < sg.n_lambda(); ++k) {
    const double l = sg.lambdas()[static_cast<std::size_t>(k)];
    weighted(k) = spectrum(k) * l * std::tanh(kPi * l) * sg.lambda_steps()[static_cast<std::size_t>(k)];
  }
  return p.transpose().cast<Complex>() * weighted;
}

Eigen::MatrixXcd dense_transform_matrix(const DiskGrid& dg, const SpectralGrid& sg) {
  const int n = dg.n_theta();
  if (sg.n_b() != n) throw GridMismatch("dense_transform_matrix: N_b must equal N_theta");
  const Eigen::Index rows = static_cast<Eigen::Index>(sg.n_lambda()) * n;
  check_cells(rows, "dense_transform_matrix");
  const Eigen::Index cols = static_cast<Eigen::Index>(dg.n_r()) * n;
  Eigen::MatrixXcd a(rows, cols);
  const BoundaryPointd b0(0.0);

  parallel_for(static_cast<std::size_t>(dg.n_r()), [&](std::size_t i) {
    const double r = dg.radii()[i];
    const std::size_t m = fine_samples(r, sg.lambda_max(), n);
    std::vector<double> psi(m);
    std::vector<double> a_psi(m);
    for (std::size_t q = 0; q < m; ++q) {
      psi[q] = 2 * kPi * static_cast<double>(q) / static_cast<double>(m);
      a_psi[q] = busemann(polar_to_disk(r, psi[q]), b0);
    }
    // Dirichlet weights for every angular offset d = l - j.
    Eigen::MatrixXd dk(n, static_cast<Eigen::Index>(m));
    for (int d = 0; d < n; ++d) {
      const double delta = 2 * kPi * d / n;
      for (std::size_t q = 0; q < m; ++q) dk(d, static_cast<Eigen::Index>(q)) = dirichlet(delta - psi[q], n);
    }
    const double cell = dg.radial_weights()[i] * 2 * kPi / n;
    Eigen::VectorXcd kernel(static_cast<Eigen::Index>(m));
    for (int k = 0; k < sg.n_lambda(); ++k) {
      const std::complex<double> exponent(0.5, -sg.lambdas()[static_cast<std::size_t>(k)]);
      for (std::size_t q = 0; q < m; ++q) kernel(static_cast<Eigen::Index>(q)) = std::exp(exponent * a_psi[q]);
      const Eigen::VectorXcd projected = dk.cast<Complex>() * kernel / static_cast<double>(m);
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          const int d = ((l - j) % n + n) % n;
          a(static_cast<Eigen::Index>(k) * n + j, static_cast<Eigen::Index>(i) * n + l) = cell * projected(d);
        }
      }
    }
  });
  return a;
}

Eigen::MatrixXcd dense_gabor_matrix(const DiskGrid& dg, const SpectralGrid& sg, const TranslationGrid& tg,
                                    const SampledFunction& phi) {
  if (!(*phi.grid() == dg)) throw GridMismatch("dense_gabor_matrix: window grid differs");
  const Eigen::Index n = dg.n_theta();
  const Eigen::Index spectral_cells = static_cast<Eigen::Index>(sg.n_lambda()) * n;
  const Eigen::Index cells = spectral_cells * tg.n_t();
  check_cells(cells, "dense_gabor_matrix");
  const Eigen::MatrixXcd base = dense_transform_matrix(dg, sg);
  const PolarInterpolant interp(phi);

  Eigen::MatrixXcd a(cells, base.cols());
  for (int m = 0; m < tg.n_t(); ++m) {
    const double t = tg.nodes()[static_cast<std::size_t>(m)];
    // Spherical mean of phi at every node.
    Eigen::VectorXcd mean(base.cols());
    for (int i = 0; i < dg.n_r(); ++i) {
      for (int l = 0; l < dg.n_theta(); ++l) {
        const Eigen::Index col = static_cast<Eigen::Index>(i) * n + l;
        if (t == 0) {
          mean(col) = phi.values()(i, l);
          continue;
        }
        const std::size_t count = dg.circle_samples(t);
        std::complex<double> acc = 0;
        for (const auto& p : circle_points(dg.node(i, l), t, count, dg.theta(l))) acc += interp(p);
        mean(col) = acc / static_cast<double>(count);
      }
    }
    const Eigen::MatrixXcd slice = base * mean.conjugate().asDiagonal();
    for (int k = 0; k < sg.n_lambda(); ++k) {
      for (int j = 0; j < sg.n_b(); ++j) {
        const Eigen::Index row = (static_cast<Eigen::Index>(k) * sg.n_b() + j) * tg.n_t() + m;
        a.row(row) = slice.row(static_cast<Eigen::Index>(k) * n + j);
      }
    }
  }
  return a;
}

Eigen::MatrixXcd dense_adjoint(const Eigen::MatrixXcd& a, const Eigen::VectorXd& in_weights,
                               const Eigen::VectorXd& out_weights) {
  if (in_weights.size() != a.cols() || out_weights.size() != a.rows()) {
    throw std::invalid_argument("dense_adjoint: weight vector sizes do not match the matrix");
  }
  return in_weights.cwiseInverse().asDiagonal() * a.adjoint() * out_weights.asDiagonal();
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& values) {
  Eigen::VectorXcd v(values.size());
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) v(i * values.cols() + j) = values(i, j);
  }
  return v;
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvectorize: size mismatch");
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

Eigen::VectorXd disk_weights(const DiskGrid& dg) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(dg.size()));
  for (int i = 0; i < dg.n_r(); ++i) {
    for (int j = 0; j < dg.n_theta(); ++j) w(static_cast<Eigen::Index>(i) * dg.n_theta() + j) = dg.cell_weight(i, j);
  }
  return w;
}

Eigen::VectorXd spectral_weights(const SpectralGrid& sg) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(sg.n_lambda()) * sg.n_b());
  for (int k = 0; k < sg.n_lambda(); ++k) {
    for (int j = 0; j < sg.n_b(); ++j) w(static_cast<Eigen::Index>(k) * sg.n_b() + j) = sg.cell_weight(k);
  }
  return w;
}

}  // namespace hgft::oracle
