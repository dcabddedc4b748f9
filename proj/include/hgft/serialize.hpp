#pragma once

// JSON and CSV forms of the containers and of claim reports.
//
//   SampledFunction  {model, r_max, N_r, N_theta, values: [[re, im], ...]}   row-major (i, j)
//   SpectralFunction {model, lambda_max, N_lambda, N_b, values}            row-major (k, j)
//   GaborField       {model, lambda_max, N_lambda, N_b, t_max, N_t, values} row-major (k, j, m)

#include <string>
#include <vector>

#include <json.hpp>

#include "hgft/grids.hpp"
#include "hgft/uncertainty.hpp"

namespace hgft {

using Json = nlohmann::json;

Json to_json(const SampledFunction& f);
Json to_json(const SpectralFunction& F);
Json to_json(const GaborField& G);
Json to_json(const ClaimReport& r);
Json to_json(const std::vector<ClaimReport>& reports);

/// Throws std::invalid_argument on malformed documents.
SampledFunction sampled_from_json(const Json& j);
SpectralFunction spectral_from_json(const Json& j);
GaborField gabor_from_json(const Json& j);

/// Columns: i,j,r,theta,x,y,weight,re,im
std::string to_csv(const SampledFunction& f);
/// Columns: k,j,lambda,b,weight,re,im
std::string to_csv(const SpectralFunction& F);
/// Columns: k,j,m,lambda,b,t,weight,re,im
std::string to_csv(const GaborField& G);

/// Fixed-width, human-readable table of reports.
std::string report_table(const std::vector<ClaimReport>& reports);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace hgft
