#pragma once

// Translation by spherical means and the Helgason-Gabor transform
//
//   G(lambda, b, t) = forward(f * conj(T_t phi))(lambda, b)
//
// with the group variable reduced to the radius t = d(o, h^{-1} o).

#include <cstddef>
#include <utility>
#include <vector>

#include "hgft/grids.hpp"
#include "hgft/interpolate.hpp"

namespace hgft {

class Window {
 public:
  /// Throws std::invalid_argument if the window vanishes on its grid.
  explicit Window(SampledFunction values);

  const SampledFunction& values() const { return values_; }
  const DiskGridPtr& grid() const { return values_.grid(); }
  double norm2() const { return norm2_; }

 private:
  SampledFunction values_;
  double norm2_;
};

struct Translation {
  SampledFunction values;
  /// Circle samples that fell beyond r_max and were taken as zero.
  std::size_t leaked = 0;
  std::size_t samples = 0;
};

/// Spherical mean (T_t f)(x) = (1/n) sum f(p) over n points p on the circle of
/// radius t about x. n_circle = 0 picks the grid default; otherwise n_circle >= 8.
Translation translate(const SampledFunction& f, double t, std::size_t n_circle = 0);

/// Same, reusing an interpolant built from f.
Translation translate(const SampledFunction& f, const PolarInterpolant& interp, double t, std::size_t n_circle = 0);

/// T_{t_m} phi for every node of the translation grid.
std::vector<Translation> translated_windows(const Window& phi, const TranslationGrid& tg);

GaborField gabor_forward(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                         const TranslationGridPtr& tg);

/// Variant reusing precomputed window translations.
GaborField gabor_forward(const SampledFunction& f, const std::vector<Translation>& windows, const SpectralGridPtr& sg,
                         const TranslationGridPtr& tg);

/// (1 / ||phi||^2) sum_m w_m T_{t_m} phi(x) inverse(G(., ., m))(x).
SampledFunction gabor_reconstruct(const GaborField& G, const Window& phi, const DiskGridPtr& dg);

struct Reconstruction {
  SampledFunction values;
  /// Relative L2 distance to the reference function.
  double residual = 0;
};

Reconstruction gabor_reconstruct(const GaborField& G, const Window& phi, const DiskGridPtr& dg,
                                 const SampledFunction& reference);

/// gabor_norm2(G) / (norm2(f) norm2(phi)). Throws std::invalid_argument for f = 0.
double gabor_energy_ratio(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                          const TranslationGridPtr& tg);

/// (Gabor-domain pairing of G f and G g, ||phi||^2 <f, g>).
std::pair<Complex, Complex> gabor_parseval(const SampledFunction& f, const SampledFunction& g, const Window& phi,
                                           const SpectralGridPtr& sg, const TranslationGridPtr& tg);

}  // namespace hgft
