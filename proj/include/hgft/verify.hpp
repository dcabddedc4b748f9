#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgft/grids.hpp"
#include "hgft/uncertainty.hpp"

namespace hgft {

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  GridConfig grid;
};

/// plancherel, multiplier, gabor, uncertainty, benedicks, all.
const std::vector<std::string>& suite_names();

/// Runs one suite and returns its reports in a fixed order.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<ClaimReport> run_verify(const VerifyOptions& options);

/// True when every VERIFIED report passed.
bool verified_pass(const std::vector<ClaimReport>& reports);

struct SweepRow {
  std::string claim;
  std::string region;
  double param = 0;
  double measure = 0;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  ClaimClass cls = ClaimClass::Verified;
};

/// Parses "name=v1,v2,..." or "name=start:stop:step" (name optional). The
/// name, when present, must equal expected_name. Throws std::invalid_argument
/// on malformed or empty grids.
std::vector<double> parse_param_grid(const std::string& spec, const std::string& expected_name);

struct SweepOptions {
  std::string claim;            // concentration | moment
  std::vector<double> params;   // m(Sigma) values or moment orders s
  std::string region = "product";  // product | superlevel (concentration only)
  std::uint64_t seed = 1;
  GridConfig grid;
};

/// concentration: one row per m with lhs = m(S) ||f||^2 ||phi||^2, rhs = masked
/// energy on S, ratio = lhs / rhs (>= 1 when the bound holds).
/// moment: one row per s with lhs = sqrt(M_s), rhs = ||f|| ||phi||, ratio = the
/// realized constant rhs / lhs.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

/// Columns: claim,region,param,measure,lhs,rhs,ratio,class
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace hgft
