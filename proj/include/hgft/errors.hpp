#pragma once

#include <stdexcept>
#include <string>

namespace hgft {

/// Quadrature or iteration failed to reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Two containers live on grids that cannot be combined.
class GridMismatch : public std::invalid_argument {
 public:
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hgft
