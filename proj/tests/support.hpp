#pragma once

#include "hgft/grids.hpp"

namespace hgft::test {

// Small grid that keeps unit tests fast while staying well resolved for
// bumps of width >= 0.4 centered within distance 1.5 of the origin.
inline GridConfig small_config() {
  GridConfig c;
  c.n_r = 40;
  c.n_theta = 32;
  c.r_max = 6.0;
  c.n_lambda = 64;
  c.lambda_max = 12.0;
  c.n_t = 8;
  c.t_max = 3.0;
  return c;
}

struct Grids {
  DiskGridPtr disk;
  SpectralGridPtr spectral;
  TranslationGridPtr translations;
};

inline Grids make_grids(const GridConfig& c = small_config()) {
  return {make_disk_grid(c), make_spectral_grid(c), make_translation_grid(c)};
}

}  // namespace hgft::test
