#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcompass/cli.hpp"
#include "qcompass/compass.hpp"

using namespace qcompass;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qcompass_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("params") {
  const auto r = run({"params"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q = 0.4295") != std::string::npos);
  CHECK(r.out.find("[1]_q = 1\n") != std::string::npos);

  const auto r21 = run({"params", "--h", "2.1"});
  CHECK(r21.out.find("q = 0.1102") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  const auto zero = run({"params", "--h", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("h > 0") != std::string::npos);
  CHECK(run({"params", "--h", "-1"}).code == 2);
  CHECK(run({"params", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"params", "--n", "-1"}).code == 2);
  CHECK(run({"render", "--np", "1"}).code == 2);
  CHECK(run({"render", "--format", "png"}).code == 2);
  CHECK(run({"eval", "--direction", "Q"}).code == 2);
  CHECK(run({"eval", "--quad-halfwidth", "5"}).code == 2);
  CHECK(run({"params", "--help"}).code == 0);
}

TEST_CASE("eval component matches the library call") {
  const auto r = run({"eval", "--what", "component", "--direction", "W", "--n", "1", "--x", "0"});
  CHECK(r.code == 0);
  const cplx v = component(Direction::West, 1, 0.0, make_params(1, 1, 1, 1.3));
  CHECK(r.out.find("\n0," + format_double(v.real()) + "," + format_double(v.imag()) + "\n") != std::string::npos);
}

TEST_CASE("eval compass n = 0 reports a constant ratio") {
  const auto r = run({"eval", "--what", "compass", "--n", "0", "--nx", "11"});
  CHECK(r.code == 0);
  const auto at = r.out.find("# ratio");
  REQUIRE(at != std::string::npos);
  std::istringstream line(r.out.substr(at));
  std::string token;
  double lo = 0.0, hi = 0.0;
  while (line >> token) {
    if (token == "min") line >> token >> lo;
    if (token == "max") {
      line >> token >> hi;
      break;
    }
  }
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eval cat reports unit norm") {
  const auto r = run({"eval", "--what", "cat", "--pair", "EW", "--n", "1", "--nx", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# norm = ") != std::string::npos);
  CHECK(r.out.find("(unit)") != std::string::npos);
}

TEST_CASE("eval writes csv and quadrature overrides are honored") {
  const auto dir = fresh_dir("eval");
  const auto path = (dir / "cat.csv").string();
  const auto r = run({"eval", "--what", "cat", "--pair", "NS", "--n", "2", "--quad-halfwidth", "14", "--quad-step",
                      "0.01", "--out", path});
  CHECK(r.code == 0);
  CHECK(slurp(path).find("(unit)") != std::string::npos);
  CHECK(run({"eval", "--what", "cat", "--quad-halfwidth", "2", "--quad-step", "0.01"}).code == 1);
}

TEST_CASE("render is byte-identical across runs and worker counts") {
  const auto dir = fresh_dir("render");
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  CHECK(run({"render", "--format", "csv", "--np", "21", "--nx", "21", "--out", a}).code == 0);
  CHECK(run({"render", "--format", "csv", "--np", "21", "--nx", "21", "--workers", "4", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));

  const auto c = (dir / "c.pgm").string();
  const auto d = (dir / "d.pgm").string();
  CHECK(run({"render", "--np", "21", "--nx", "21", "--out", c}).code == 0);
  CHECK(run({"render", "--np", "21", "--nx", "21", "--out", d}).code == 0);
  CHECK(slurp(c) == slurp(d));
  CHECK(slurp(sidecar_path(c)) == slurp(sidecar_path(d)));
}

TEST_CASE("render I/O failure exits with 1") {
  const auto r = run({"render", "--np", "5", "--nx", "5", "--out", "/nonexistent-dir/w.pgm"});
  CHECK(r.code == 1);
  CHECK(r.err.find("/nonexistent-dir/w.pgm") != std::string::npos);
}

TEST_CASE("figure1 writes six panels, six sidecars and one summary") {
  const auto dir = fresh_dir("figure1");
  const auto r = run({"figure1", "--np", "101", "--workers", "4", "--out", dir.string()});
  CHECK(r.code == 0);
  int panels = 0, sidecars = 0, summaries = 0, other = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (ext == ".pgm") ++panels;
    else if (ext == ".meta") ++sidecars;
    else if (entry.path().filename() == "summary.txt") ++summaries;
    else ++other;
  }
  CHECK(panels == 6);
  CHECK(sidecars == 6);
  CHECK(summaries == 1);
  CHECK(other == 0);
  const std::string summary = slurp(dir / "summary.txt");
  CHECK(summary.find("[panel h = 5]") != std::string::npos);
  CHECK(summary.find("[control n = 0, h = 1.3]\nnegativity_fraction(1e-06) = 0\n") != std::string::npos);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--verbose"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PROPERTY wigner.oracle_equivalence: PASS residual=") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("analytic=") != std::string::npos);
  CHECK(ok.out.find("numeric=") != std::string::npos);

  const auto perturbed = run({"verify", "--perturb-prefactor", "1.001"});
  CHECK(perturbed.code == 3);
  CHECK(perturbed.out.find("PROPERTY wigner.oracle_equivalence: FAIL") != std::string::npos);
}
