#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hgft/gabor.hpp"
#include "hgft/serialize.hpp"

using namespace hgft;
namespace fs = std::filesystem;

namespace {

const std::string kSmall = " --nr 32 --ntheta 32 --nlambda 32 --lmax 16 --nt 6 --tmax 3";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path log = fs::temp_directory_path() / ("hgft_cli_" + std::to_string(::getpid()) + "_" +
                                                    std::to_string(counter++) + ".log");
  const std::string cmd = env + " " + HGFT_CLI_PATH + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, {}};
  std::ifstream in(log);
  r.out.assign(std::istreambuf_iterator<char>(in), {});
  fs::remove(log);
  return r;
}

struct Dir {
  fs::path path = fs::temp_directory_path() / ("hgft_cli_test_" + std::to_string(::getpid()));
  Dir() { fs::create_directories(path); }
  ~Dir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("transform --out x.json").code == 2);
  CHECK(run("transform --input bump:0,0.6").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("--threads 0 verify").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("helgason transform of a radial bump") {
  Dir dir;
  const Run r = run("transform --input bump:0,0.6 --mode helgason --out " + (dir / "F.json") + kSmall);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("N_r=32") != std::string::npos);
  CHECK(r.out.find("b-independence") != std::string::npos);
  const SpectralFunction F = spectral_from_json(Json::parse(read_file(dir / "F.json")));
  CHECK(F.grid()->n_lambda() == 32);
  CHECK(F.grid()->n_b() == 32);
  CHECK(run("transform --input bump:0,0.6 --out " + (dir / "F.csv") + kSmall).code == 0);
  CHECK(read_file(dir / "F.csv").rfind("k,j,lambda,b,weight,re,im\n", 0) == 0);
}

TEST_CASE("malformed inputs exit 2 and leave no output") {
  Dir dir;
  const std::string out = dir / "out.json";
  CHECK(run("transform --input bump:abc --out " + out + kSmall).code == 2);
  CHECK(run("transform --input " + (dir / "missing.json") + " --out " + out + kSmall).code == 2);
  {
    std::ofstream(dir / "broken.json") << "{\"model\": \"poincare-disk\", \"N_r\": ";
  }
  CHECK(run("transform --input " + (dir / "broken.json") + " --out " + out + kSmall).code == 2);
  CHECK(run("transform --input bump:0,0.6 --mode gabor --out " + out + kSmall).code == 2);
  CHECK(run("transform --input bump:0,0.6 --out " + out + " --nr 32 --ntheta 31").code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(std::distance(fs::directory_iterator(dir.path), fs::directory_iterator{}) == 1);
}

TEST_CASE("grid mismatch exits 3") {
  Dir dir;
  const auto g = std::make_shared<const DiskGrid>(16, 16, 6.0);
  write_atomic(dir / "f.json", to_json(make_bump(g, DiskPointd(0.0, 0.0), 0.6)).dump());
  CHECK(run("transform --input " + (dir / "f.json") + " --out " + (dir / "F.json") + kSmall).code == 3);
  CHECK_FALSE(fs::exists(dir / "F.json"));
  CHECK(run("transform --input " + (dir / "f.json") + " --out " + (dir / "F.json") +
            " --nr 16 --ntheta 16 --nlambda 16 --lmax 8")
            .code == 0);
}

TEST_CASE("numerical failures exit 4") {
  Dir dir;
  CHECK(run("transform --input bump:0,0.6 --out " + (dir / "F.json") + " --rmax 60 --nr 8 --ntheta 8 --nlambda 4")
            .code == 4);
}

TEST_CASE("gabor t = 0 slice matches a helgason run of f conj(phi)") {
  Dir dir;
  REQUIRE(run("transform --input bump:0.7@1.2,0.6 --mode gabor --window bump:0,0.3 --out " + (dir / "G.json") +
              kSmall)
              .code == 0);
  const GaborField G = gabor_from_json(Json::parse(read_file(dir / "G.json")));
  const auto disk = std::make_shared<const DiskGrid>(32, 32, 6.0);
  const SampledFunction product =
      times_conj(make_bump(disk, polar_to_disk(0.7, 1.2), 0.6), make_bump(disk, DiskPointd(0.0, 0.0), 0.3));
  write_atomic(dir / "p.json", to_json(product).dump());
  REQUIRE(run("transform --input " + (dir / "p.json") + " --out " + (dir / "F.json") + kSmall).code == 0);
  const SpectralFunction F = spectral_from_json(Json::parse(read_file(dir / "F.json")));
  CHECK((G.slices()[0] - F.values()).cwiseAbs().maxCoeff() <= 1e-12 * F.values().cwiseAbs().maxCoeff());
}

TEST_CASE("verify writes a report and reflects VERIFIED outcomes") {
  Dir dir;
  const Run r = run("verify --suite benedicks --seed 3 --report " + (dir / "r.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("benedicks_sigma") != std::string::npos);
  const Json j = Json::parse(read_file(dir / "r.json"));
  REQUIRE(j.is_array());
  for (const auto& e : j) {
    for (const char* key : {"claim", "class", "measured", "tolerance", "grid", "pass"}) CHECK(e.contains(key));
  }
  // A grid too coarse for the Plancherel tolerances makes VERIFIED claims fail.
  const Run coarse = run("verify --suite plancherel --nr 8 --ntheta 8 --nlambda 8 --lmax 4 --nt 4");
  CHECK(coarse.code == 1);
  CHECK(coarse.out.find("FAIL") != std::string::npos);
}

TEST_CASE("config files mirror flags and flags win") {
  Dir dir;
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "# small grid\nnr = 32\nntheta=32\nnlambda=32\nlmax=16\nnt=6\ntmax=3\ninput=bump:0,0.6\n";
  }
  const Run r = run("--config " + (dir / "run.cfg") + " transform --nr 24 --out " + (dir / "F.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("N_r=24 N_theta=32") != std::string::npos);
  {
    std::ofstream cfg(dir / "bad.cfg");
    cfg << "this line has no equals sign\n";
  }
  CHECK(run("--config " + (dir / "bad.cfg") + " transform --input bump:0,0.6 --out " + (dir / "x.json")).code == 2);
  CHECK(run("--config " + (dir / "none.cfg") + " verify").code == 2);
}

TEST_CASE("thread count from flag or environment") {
  Dir dir;
  const std::string args = "transform --input bump:0,0.6 --out " + (dir / "F.json") + kSmall;
  CHECK(run(args, "HGFT_THREADS=3").out.find("threads 3") != std::string::npos);
  CHECK(run("--threads 2 " + args, "HGFT_THREADS=3").out.find("threads 2") != std::string::npos);
}

TEST_CASE("sweeps") {
  Dir dir;
  const Run c = run("sweep --claim concentration --param-grid m=0.1:0.9:0.1 --out " + (dir / "c.csv") + kSmall);
  REQUIRE(c.code == 0);
  const std::string csv = read_file(dir / "c.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "claim,region,param,measure,lhs,rhs,ratio,class");
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    for (std::string cell; std::getline(cs, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    CHECK(std::stod(cells[6]) >= 1.0);
    CHECK(cells[7] == "VERIFIED");
  }
  CHECK(run("sweep --claim concentration --region superlevel --param-grid m=0.2,0.4 --out " + (dir / "s.csv") +
            kSmall)
            .code == 0);

  REQUIRE(run("sweep --claim moment --param-grid s=0.5,1,2 --out " + (dir / "m.csv") + kSmall).code == 0);
  const std::string mcsv = read_file(dir / "m.csv");
  CHECK(std::count(mcsv.begin(), mcsv.end(), '\n') == 4);
  CHECK(mcsv.find("nan") == std::string::npos);
  CHECK(mcsv.find("inf") == std::string::npos);

  CHECK(run("sweep --claim moment --param-grid '' --out " + (dir / "e.csv") + kSmall).code == 2);
  CHECK(run("sweep --claim moment --param-grid s=1:0:1 --out " + (dir / "e.csv") + kSmall).code == 2);
  CHECK(run("sweep --claim energy --param-grid s=1 --out " + (dir / "e.csv") + kSmall).code == 2);
  CHECK_FALSE(fs::exists(dir / "e.csv"));
}
