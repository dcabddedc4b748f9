#include "hgft/gabor.hpp"

#include <cmath>

#include "hgft/errors.hpp"
#include "hgft/helgason.hpp"
#include "hgft/parallel.hpp"

namespace hgft {

Window::Window(SampledFunction values) : values_(std::move(values)), norm2_(hgft::norm2(values_)) {
  if (!(norm2_ > 0)) throw std::invalid_argument("Window: zero window");
}

Translation translate(const SampledFunction& f, double t, std::size_t n_circle) {
  if (t == 0) {
    if (n_circle != 0 && n_circle < 8) throw std::invalid_argument("translate: n_circle must be at least 8");
    return {f, 0, 0};
  }
  const PolarInterpolant interp(f);
  return translate(f, interp, t, n_circle);
}

Translation translate(const SampledFunction& f, const PolarInterpolant& interp, double t, std::size_t n_circle) {
  if (t < 0) throw std::domain_error("translate: negative radius");
  if (n_circle != 0 && n_circle < 8) throw std::invalid_argument("translate: n_circle must be at least 8");
  if (t == 0) return {f, 0, 0};
  const DiskGrid& grid = *f.grid();
  const std::size_t n = n_circle == 0 ? grid.circle_samples(t) : n_circle;
  const bool radial = f.is_radial();
  const int n_theta = grid.n_theta();
  const int columns = radial ? 1 : n_theta;

  Eigen::MatrixXcd out(grid.n_r(), n_theta);
  std::vector<std::size_t> leaks(static_cast<std::size_t>(grid.n_r()), 0);
  parallel_for(static_cast<std::size_t>(grid.n_r()), [&](std::size_t i) {
    const auto row = static_cast<Eigen::Index>(i);
    for (int j = 0; j < columns; ++j) {
      const DiskPointd x = grid.node(static_cast<int>(i), j);
      std::complex<double> acc = 0;
      for (const auto& p : circle_points(x, t, n, grid.theta(j))) {
        bool inside = true;
        acc += interp(p, &inside);
        if (!inside) ++leaks[i];
      }
      out(row, j) = acc / static_cast<double>(n);
    }
    if (radial) out.row(row).setConstant(out(row, 0));
  });

  std::size_t leaked = 0;
  for (auto l : leaks) leaked += l;
  if (radial) leaked *= static_cast<std::size_t>(n_theta);
  return {SampledFunction(f.grid(), std::move(out)), leaked, n * grid.size()};
}

std::vector<Translation> translated_windows(const Window& phi, const TranslationGrid& tg) {
  const PolarInterpolant interp(phi.values());
  std::vector<Translation> out;
  out.reserve(tg.nodes().size());
  for (double t : tg.nodes()) out.push_back(translate(phi.values(), interp, t));
  return out;
}

GaborField gabor_forward(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                         const TranslationGridPtr& tg) {
  require_same_grid(f, phi.values());
  return gabor_forward(f, translated_windows(phi, *tg), sg, tg);
}

GaborField gabor_forward(const SampledFunction& f, const std::vector<Translation>& windows, const SpectralGridPtr& sg,
                         const TranslationGridPtr& tg) {
  if (windows.size() != static_cast<std::size_t>(tg->n_t())) {
    throw GridMismatch("gabor_forward: window translations do not match " + tg->descriptor());
  }
  const auto transform = HelgasonTransform::cached(f.grid(), sg);
  std::vector<Eigen::MatrixXcd> slices(windows.size());
  parallel_for(windows.size(), [&](std::size_t m) {
    slices[m] = transform->forward(times_conj(f, windows[m].values)).values();
  });
  return {sg, tg, std::move(slices)};
}

SampledFunction gabor_reconstruct(const GaborField& G, const Window& phi, const DiskGridPtr& dg) {
  if (!(*phi.grid() == *dg)) throw GridMismatch("gabor_reconstruct: window grid differs from target grid");
  const auto transform = HelgasonTransform::cached(dg, G.spectral());
  const auto windows = translated_windows(phi, *G.translations());
  const auto& tw = G.translations()->weights();
  std::vector<Eigen::MatrixXcd> terms(windows.size());
  parallel_for(windows.size(), [&](std::size_t m) {
    const SampledFunction slice = transform->inverse(SpectralFunction(G.spectral(), G.slices()[m]));
    terms[m] = tw[m] * windows[m].values.values().cwiseProduct(slice.values());
  });
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dg->n_r(), dg->n_theta());
  for (const auto& term : terms) acc += term;
  return {dg, acc / phi.norm2()};
}

Reconstruction gabor_reconstruct(const GaborField& G, const Window& phi, const DiskGridPtr& dg,
                                 const SampledFunction& reference) {
  SampledFunction rec = gabor_reconstruct(G, phi, dg);
  const double ref = norm2(reference);
  const double residual = ref > 0 ? std::sqrt(norm2(rec - reference) / ref) : std::sqrt(norm2(rec));
  return {std::move(rec), residual};
}

double gabor_energy_ratio(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                          const TranslationGridPtr& tg) {
  const double nf = norm2(f);
  if (nf == 0) throw std::invalid_argument("gabor_energy_ratio: f is identically zero");
  return gabor_norm2(gabor_forward(f, phi, sg, tg)) / (nf * phi.norm2());
}

std::pair<Complex, Complex> gabor_parseval(const SampledFunction& f, const SampledFunction& g, const Window& phi,
                                           const SpectralGridPtr& sg, const TranslationGridPtr& tg) {
  require_same_grid(f, g);
  const auto windows = translated_windows(phi, *tg);
  const GaborField gf = gabor_forward(f, windows, sg, tg);
  const GaborField gg = gabor_forward(g, windows, sg, tg);
  return {gabor_inner_product(gf, gg), phi.norm2() * inner_product(f, g)};
}

}  // namespace hgft
