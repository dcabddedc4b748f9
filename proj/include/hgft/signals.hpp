#pragma once

#include <string>

#include "hgft/grids.hpp"

namespace hgft {

/// Built-in test signal: a Gaussian bump at polar position (r, theta).
struct BumpSpec {
  double r = 0;
  double theta = 0;
  double width = 1;
};

/// Parses "bump:<r>,<width>" or "bump:<r>@<theta>,<width>".
/// Throws std::invalid_argument on anything else.
BumpSpec parse_bump(const std::string& spec);

bool is_bump_spec(const std::string& spec);

SampledFunction make_signal(const DiskGridPtr& grid, const BumpSpec& spec);

/// A bump spec, or the path of a SampledFunction JSON file. File contents must
/// live on a grid equal to the given one (GridMismatch otherwise).
SampledFunction load_signal(const DiskGridPtr& grid, const std::string& spec_or_path);

}  // namespace hgft
