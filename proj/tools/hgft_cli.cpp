// hgft: transforms, verification suites and uncertainty sweeps on the Poincare disk.
//
// Exit codes: 0 ok, 1 a VERIFIED claim failed, 2 malformed input or usage,
// 3 grid mismatch, 4 numerical accuracy failure, 5 I/O failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgft/errors.hpp"
#include "hgft/gabor.hpp"
#include "hgft/helgason.hpp"
#include "hgft/parallel.hpp"
#include "hgft/serialize.hpp"
#include "hgft/signals.hpp"
#include "hgft/verify.hpp"

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kGrid = 3, kNumerical = 4, kIo = 5 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_grid_options(CLI::App* app, hgft::GridConfig& g) {
  app->add_option("--nr", g.n_r, "radial nodes")->check(CLI::PositiveNumber);
  app->add_option("--ntheta", g.n_theta, "angular nodes (even); also the boundary count")->check(CLI::PositiveNumber);
  app->add_option("--rmax", g.r_max, "geodesic radius of the disk grid")->check(CLI::PositiveNumber);
  app->add_option("--nlambda", g.n_lambda, "spectral nodes")->check(CLI::PositiveNumber);
  app->add_option("--lmax", g.lambda_max, "spectral cutoff")->check(CLI::PositiveNumber);
  app->add_option("--nt", g.n_t, "translation nodes")->check(CLI::Range(2, 1 << 20));
  app->add_option("--tmax", g.t_max, "largest translation radius")->check(CLI::PositiveNumber);
}

void write_output(const std::string& path, const std::string& content) {
  try {
    hgft::write_atomic(path, content);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Appends "--key value" for every config entry whose flag is not already on
// the command line, so explicit flags take precedence.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  auto given = [&](const std::string& flag) {
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> extra;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": invalid key");
    }
    if (!given("--" + key)) {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

struct TransformArgs {
  std::string input;
  std::string window;
  std::string mode = "helgason";
  std::string out;
};

int run_transform(const TransformArgs& a, const hgft::GridConfig& grid) {
  const auto disk = hgft::make_disk_grid(grid);
  const auto spectral = hgft::make_spectral_grid(grid);
  const auto start = std::chrono::steady_clock::now();
  const hgft::SampledFunction f = hgft::load_signal(disk, a.input);
  const bool csv = ends_with(a.out, ".csv");
  std::string content;
  double spread = 0;
  if (a.mode == "helgason") {
    const hgft::SpectralFunction F = hgft::forward(f, spectral);
    spread = hgft::boundary_spread(F);
    content = csv ? hgft::to_csv(F) : hgft::to_json(F).dump() + '\n';
  } else {
    if (a.window.empty()) throw std::invalid_argument("--mode gabor requires --window");
    const auto translations = hgft::make_translation_grid(grid);
    const hgft::Window phi(hgft::load_signal(disk, a.window));
    const hgft::GaborField G = hgft::gabor_forward(f, phi, spectral, translations);
    spread = hgft::boundary_spread(hgft::SpectralFunction(spectral, G.slices()[0]));
    content = csv ? hgft::to_csv(G) : hgft::to_json(G).dump() + '\n';
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_output(a.out, content);
  std::printf("grid %s\n", grid.descriptor().c_str());
  std::printf("mode %s, %.3f s, threads %u\n", a.mode.c_str(), seconds, hgft::thread_count());
  std::printf("b-independence (max spread of |F| across b, relative%s): %.3e\n",
              a.mode == "gabor" ? ", t = 0 slice" : "", spread);
  std::printf("wrote %s\n", a.out.c_str());
  return kOk;
}

int run_verify_cmd(const hgft::VerifyOptions& options, const std::string& report) {
  const auto reports = hgft::run_verify(options);
  if (!report.empty()) write_output(report, hgft::to_json(reports).dump(2) + '\n');
  std::cout << hgft::report_table(reports);
  std::size_t failed = 0;
  std::size_t differs = 0;
  for (const auto& r : reports) {
    if (r.pass) continue;
    (r.cls == hgft::ClaimClass::Verified ? failed : differs)++;
  }
  std::printf("%zu claims: %zu VERIFIED failed, %zu EMPIRICAL differ from the stated form\n", reports.size(), failed,
              differs);
  return hgft::verified_pass(reports) ? kOk : kClaimFailed;
}

int run_sweep_cmd(hgft::SweepOptions options, const std::string& param_grid, const std::string& out) {
  options.params = hgft::parse_param_grid(param_grid, options.claim == "moment" ? "s" : "m");
  const auto rows = hgft::run_sweep(options);
  write_output(out, hgft::sweep_csv(rows));
  std::printf("%zu rows written to %s\n", rows.size(), out.c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helgason-Fourier and Helgason-Gabor transforms on the Poincare disk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Exit codes: 0 ok, 1 VERIFIED claim failed, 2 malformed input, 3 grid mismatch, 4 numerical error, 5 I/O "
      "error.\nSignals: bump:<r>,<width> | bump:<r>@<theta>,<width> | path to a SampledFunction JSON file.");

  unsigned threads = hgft::thread_count();
  std::string config_path;
  app.add_option("--threads", threads, "worker threads (default: hardware concurrency)")
      ->envname("HGFT_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--config", config_path, "key=value file mirroring the flags; flags win");

  hgft::GridConfig grid;

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Helgason or Helgason-Gabor transform of a signal");
  transform->add_option("--input", targs.input, "signal spec or SampledFunction JSON")->required();
  transform->add_option("--window", targs.window, "window spec or JSON (gabor mode)");
  transform->add_option("--mode", targs.mode, "helgason | gabor")->check(CLI::IsMember({"helgason", "gabor"}));
  transform->add_option("--out", targs.out, "output path; .csv writes plot-ready CSV, anything else JSON")
      ->required();
  add_grid_options(transform, grid);

  hgft::VerifyOptions voptions;
  std::string report;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", voptions.suite, "all | plancherel | multiplier | gabor | uncertainty | benedicks")
      ->check(CLI::IsMember(hgft::suite_names()));
  verify->add_option("--report", report, "ClaimReport JSON array output");
  verify->add_option("--seed", voptions.seed, "seed for random signals and regions");
  add_grid_options(verify, grid);

  hgft::SweepOptions soptions;
  std::string param_grid;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Tightness sweep of an uncertainty inequality");
  sweep->add_option("--claim", soptions.claim, "concentration | moment")
      ->required()
      ->check(CLI::IsMember({"concentration", "moment"}));
  sweep->add_option("--param-grid", param_grid, "m=0.1,0.2 | m=0.1:0.9:0.1 (concentration), s=... (moment)")
      ->required();
  sweep->add_option("--region", soptions.region, "product | superlevel")
      ->check(CLI::IsMember({"product", "superlevel"}));
  sweep->add_option("--seed", soptions.seed, "seed for the signal and window");
  sweep->add_option("--out", sweep_out, "CSV output")->required();
  sweep->footer("CSV columns: claim,region,param,measure,lhs,rhs,ratio,class");
  add_grid_options(sweep, grid);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  hgft::set_thread_count(threads);
  try {
    if (*transform) return run_transform(targs, grid);
    if (*verify) {
      voptions.grid = grid;
      return run_verify_cmd(voptions, report);
    }
    soptions.grid = grid;
    return run_sweep_cmd(soptions, param_grid, sweep_out);
  } catch (const hgft::GridMismatch& e) {
    std::cerr << "grid mismatch: " << e.what() << '\n';
    return kGrid;
  } catch (const hgft::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
