#include "hgft/signals.hpp"

#include <charconv>
#include <cmath>

#include "hgft/errors.hpp"
#include "hgft/serialize.hpp"

namespace hgft {
namespace {

double parse_number(std::string_view text, const std::string& spec) {
  double value = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "' in signal spec '" + spec + "'");
  }
  return value;
}

}  // namespace

bool is_bump_spec(const std::string& spec) { return spec.rfind("bump:", 0) == 0; }

BumpSpec parse_bump(const std::string& spec) {
  if (!is_bump_spec(spec)) throw std::invalid_argument("signal spec must start with 'bump:': '" + spec + "'");
  const std::string_view body = std::string_view(spec).substr(5);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("signal spec needs exactly one ',' before the width: '" + spec + "'");
  }
  const std::string_view position = body.substr(0, comma);
  BumpSpec out;
  const auto at = position.find('@');
  if (at == std::string_view::npos) {
    out.r = parse_number(position, spec);
  } else {
    out.r = parse_number(position.substr(0, at), spec);
    out.theta = parse_number(position.substr(at + 1), spec);
  }
  out.width = parse_number(body.substr(comma + 1), spec);
  if (out.r < 0) throw std::invalid_argument("bump center radius must be nonnegative: '" + spec + "'");
  if (out.width <= 0) throw std::invalid_argument("bump width must be positive: '" + spec + "'");
  return out;
}

SampledFunction make_signal(const DiskGridPtr& grid, const BumpSpec& spec) {
  return make_bump(grid, polar_to_disk(spec.r, spec.theta), spec.width);
}

SampledFunction load_signal(const DiskGridPtr& grid, const std::string& spec_or_path) {
  if (is_bump_spec(spec_or_path)) return make_signal(grid, parse_bump(spec_or_path));
  Json doc;
  try {
    doc = Json::parse(read_file(spec_or_path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + spec_or_path + ": " + e.what());
  }
  SampledFunction f = sampled_from_json(doc);
  if (!(*f.grid() == *grid)) {
    throw GridMismatch(spec_or_path + " is sampled on " + f.grid()->descriptor() + ", expected " +
                       grid->descriptor());
  }
  return {grid, f.values()};
}

}  // namespace hgft
