#include "hgft/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace hgft {
namespace {

constexpr const char* kModel = "poincare-disk";

std::string num(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json pair(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
  }
}

void check_model(const Json& j) {
  if (field<std::string>(j, "model") != kModel) throw std::invalid_argument("model must be \"poincare-disk\"");
}

std::vector<Complex> values_of(const Json& j, std::size_t expected) {
  const Json& v = j.contains("values") ? j.at("values") : throw std::invalid_argument("missing field 'values'");
  if (!v.is_array() || v.size() != expected) {
    throw std::invalid_argument("'values' must be an array of " + std::to_string(expected) + " [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument("each value must be a [re, im] pair of numbers");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

int positive(const Json& j, const char* key) {
  const int n = field<int>(j, key);
  if (n <= 0) throw std::invalid_argument(std::string("field '") + key + "' must be positive");
  return n;
}

}  // namespace

Json to_json(const SampledFunction& f) {
  const auto& g = *f.grid();
  Json values = Json::array();
  for (int i = 0; i < g.n_r(); ++i) {
    for (int j = 0; j < g.n_theta(); ++j) values.push_back(pair(f.values()(i, j)));
  }
  return Json{{"model", kModel}, {"r_max", g.r_max()}, {"N_r", g.n_r()}, {"N_theta", g.n_theta()},
              {"values", std::move(values)}};
}

Json to_json(const SpectralFunction& F) {
  const auto& g = *F.grid();
  Json values = Json::array();
  for (int k = 0; k < g.n_lambda(); ++k) {
    for (int j = 0; j < g.n_b(); ++j) values.push_back(pair(F.values()(k, j)));
  }
  return Json{{"model", kModel},        {"lambda_max", g.lambda_max()}, {"N_lambda", g.n_lambda()},
              {"N_b", g.n_b()},         {"values", std::move(values)}};
}

Json to_json(const GaborField& G) {
  const auto& sg = *G.spectral();
  const auto& tg = *G.translations();
  Json values = Json::array();
  for (int k = 0; k < sg.n_lambda(); ++k) {
    for (int j = 0; j < sg.n_b(); ++j) {
      for (int m = 0; m < tg.n_t(); ++m) values.push_back(pair(G.at(k, j, m)));
    }
  }
  return Json{{"model", kModel},   {"lambda_max", sg.lambda_max()}, {"N_lambda", sg.n_lambda()},
              {"N_b", sg.n_b()},   {"t_max", tg.t_max()},           {"N_t", tg.n_t()},
              {"values", std::move(values)}};
}

Json to_json(const ClaimReport& r) {
  return Json{{"claim", r.claim},         {"class", to_string(r.cls)}, {"relation", r.relation},
              {"lhs", number_or_null(r.lhs)}, {"rhs", number_or_null(r.rhs)}, {"measured", number_or_null(r.measured)},
              {"tolerance", r.tolerance}, {"grid", r.grid},            {"pass", r.pass},
              {"note", r.note}};
}

Json to_json(const std::vector<ClaimReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

SampledFunction sampled_from_json(const Json& j) {
  check_model(j);
  const int n_r = positive(j, "N_r");
  const int n_theta = positive(j, "N_theta");
  const double r_max = field<double>(j, "r_max");
  auto grid = std::make_shared<const DiskGrid>(n_r, n_theta, r_max);
  const auto v = values_of(j, grid->size());
  Eigen::MatrixXcd m(n_r, n_theta);
  for (int i = 0; i < n_r; ++i) {
    for (int c = 0; c < n_theta; ++c) m(i, c) = v[static_cast<std::size_t>(i) * n_theta + c];
  }
  return {grid, std::move(m)};
}

SpectralFunction spectral_from_json(const Json& j) {
  check_model(j);
  const int n_lambda = positive(j, "N_lambda");
  const int n_b = positive(j, "N_b");
  auto grid = std::make_shared<const SpectralGrid>(n_lambda, field<double>(j, "lambda_max"), n_b);
  const auto v = values_of(j, static_cast<std::size_t>(n_lambda) * n_b);
  Eigen::MatrixXcd m(n_lambda, n_b);
  for (int k = 0; k < n_lambda; ++k) {
    for (int c = 0; c < n_b; ++c) m(k, c) = v[static_cast<std::size_t>(k) * n_b + c];
  }
  return {grid, std::move(m)};
}

GaborField gabor_from_json(const Json& j) {
  check_model(j);
  const int n_lambda = positive(j, "N_lambda");
  const int n_b = positive(j, "N_b");
  const int n_t = positive(j, "N_t");
  auto sg = std::make_shared<const SpectralGrid>(n_lambda, field<double>(j, "lambda_max"), n_b);
  auto tg = std::make_shared<const TranslationGrid>(n_t, field<double>(j, "t_max"));
  const auto v = values_of(j, static_cast<std::size_t>(n_lambda) * n_b * n_t);
  std::vector<Eigen::MatrixXcd> slices(static_cast<std::size_t>(n_t), Eigen::MatrixXcd(n_lambda, n_b));
  std::size_t c = 0;
  for (int k = 0; k < n_lambda; ++k) {
    for (int b = 0; b < n_b; ++b) {
      for (int m = 0; m < n_t; ++m) slices[static_cast<std::size_t>(m)](k, b) = v[c++];
    }
  }
  return {sg, tg, std::move(slices)};
}

std::string to_csv(const SampledFunction& f) {
  const auto& g = *f.grid();
  std::string out = "i,j,r,theta,x,y,weight,re,im\n";
  for (int i = 0; i < g.n_r(); ++i) {
    for (int j = 0; j < g.n_theta(); ++j) {
      const auto p = g.node(i, j);
      const auto& v = f.values()(i, j);
      out += std::to_string(i) + ',' + std::to_string(j) + ',' + num(g.radii()[static_cast<std::size_t>(i)]) + ',' +
             num(g.theta(j)) + ',' + num(p.re()) + ',' + num(p.im()) + ',' + num(g.cell_weight(i, j)) + ',' +
             num(v.real()) + ',' + num(v.imag()) + '\n';
    }
  }
  return out;
}

std::string to_csv(const SpectralFunction& F) {
  const auto& g = *F.grid();
  std::string out = "k,j,lambda,b,weight,re,im\n";
  for (int k = 0; k < g.n_lambda(); ++k) {
    for (int j = 0; j < g.n_b(); ++j) {
      const auto& v = F.values()(k, j);
      out += std::to_string(k) + ',' + std::to_string(j) + ',' + num(g.lambdas()[static_cast<std::size_t>(k)]) + ',' +
             num(g.boundary(j)) + ',' + num(g.cell_weight(k)) + ',' + num(v.real()) + ',' + num(v.imag()) + '\n';
    }
  }
  return out;
}

std::string to_csv(const GaborField& G) {
  const auto& sg = *G.spectral();
  const auto& tg = *G.translations();
  std::string out = "k,j,m,lambda,b,t,weight,re,im\n";
  for (int k = 0; k < sg.n_lambda(); ++k) {
    for (int j = 0; j < sg.n_b(); ++j) {
      for (int m = 0; m < tg.n_t(); ++m) {
        const auto& v = G.at(k, j, m);
        out += std::to_string(k) + ',' + std::to_string(j) + ',' + std::to_string(m) + ',' +
               num(sg.lambdas()[static_cast<std::size_t>(k)]) + ',' + num(sg.boundary(j)) + ',' +
               num(tg.nodes()[static_cast<std::size_t>(m)]) + ',' + num(G.cell_weight(k, m)) + ',' + num(v.real()) +
               ',' + num(v.imag()) + '\n';
      }
    }
  }
  return out;
}

std::string report_table(const std::vector<ClaimReport>& reports) {
  std::ostringstream s;
  s << std::left << std::setw(34) << "claim" << std::setw(11) << "class" << std::setw(5) << "rel" << std::right
    << std::setw(14) << "lhs" << std::setw(14) << "rhs" << std::setw(14) << "measured" << "  result\n";
  for (const auto& r : reports) {
    s << std::left << std::setw(34) << r.claim << std::setw(11) << to_string(r.cls) << std::setw(5) << r.relation
      << std::right << std::setprecision(6) << std::setw(14) << r.lhs << std::setw(14) << r.rhs << std::setw(14)
      << r.measured << "  " << (r.pass ? "pass" : (r.cls == ClaimClass::Verified ? "FAIL" : "differs")) << '\n';
  }
  return s.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace hgft
