#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "chdyn/cli.hpp"

using namespace chdyn;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "chdyn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("parsing") {
  TEST_CASE("complex literals") {
    CHECK(cli::parse_complex("-0.0164") == Complex{-0.0164, 0.0});
    CHECK(cli::parse_complex("0.1,-2") == Complex{0.1, -2.0});
    CHECK(cli::parse_complex("1e-3,4e-3") == Complex{1e-3, 4e-3});
    CHECK_FALSE(cli::parse_complex("abc").has_value());
    CHECK_FALSE(cli::parse_complex("1,2,3").has_value());
    CHECK_FALSE(cli::parse_complex("").has_value());
  }

  TEST_CASE("resolution") {
    CHECK(cli::parse_resolution("256x128") == std::pair{256, 128});
    CHECK_FALSE(cli::parse_resolution("256").has_value());
    CHECK_FALSE(cli::parse_resolution("0x10").has_value());
    CHECK_FALSE(cli::parse_resolution("axb").has_value());
  }
}

TEST_SUITE("in-process") {
  TEST_CASE("classify anchors") {
    const Outcome ch = invoke({"classify", "--family", "ch", "--a", "-0.0164"});
    CHECK(ch.code == cli::kExitOk);
    CHECK(ch.out.find("\"class\": \"Sierpinski\"") != std::string::npos);
    const Outcome m = invoke({"classify", "--family", "mcmullen", "--lambda", "0.005"});
    CHECK(m.code == cli::kExitOk);
    CHECK(m.out.find("\"class\": \"CantorCircles\"") != std::string::npos);
  }

  TEST_CASE("domain errors exit 2") {
    CHECK(invoke({"classify", "--family", "ch", "--a", "0"}).code == cli::kExitDomain);
    CHECK(invoke({"classify", "--family", "mcmullen", "--lambda", "0"}).code == cli::kExitDomain);
    CHECK(invoke({"find-special", "--target", "a-q", "--bracket", "-0.01,-0.005"}).code == cli::kExitDomain);
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(invoke({}).code == cli::kExitIoOrUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitIoOrUsage);
    CHECK(invoke({"classify", "--family", "ch", "--a", "zz"}).code == cli::kExitIoOrUsage);
    CHECK(invoke({"render-dyn", "--family", "ch", "--a", "0", "--out", "x.ppm"}).code == cli::kExitIoOrUsage);
  }

  TEST_CASE("io errors exit 1") {
    const Outcome r = invoke({"render-dyn", "--family", "ch", "--a", "0", "--width", "1", "--res", "2x2", "--out",
                              "/nonexistent-dir/x.ppm"});
    CHECK(r.code == cli::kExitIoOrUsage);
  }

  TEST_CASE("find-special") {
    const Outcome q0 = invoke({"find-special", "--target", "q0", "--a", "0"});
    CHECK(q0.code == cli::kExitOk);
    CHECK(q0.out.find("\"target\": \"q0\"") != std::string::npos);
    const Outcome star = invoke({"find-special", "--target", "a-star"});
    CHECK(star.code == cli::kExitOk);
    CHECK(star.out.find("\"value\": -0.01642") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Outcome sym = invoke({"verify", "--suite", "symmetry", "--a", "0.7,0.2"});
    CHECK(sym.code == cli::kExitOk);
    CHECK(sym.out.find("\"class\": \"pass\"") != std::string::npos);
    const Outcome norm = invoke({"verify", "--suite", "normalize", "--seed", "3"});
    CHECK(norm.code == cli::kExitOk);
  }

  TEST_CASE("render with csv") {
    const auto ppm = temp("chdyn_cli_render.ppm");
    const auto csv = temp("chdyn_cli_render.csv");
    const Outcome r = invoke({"render-dyn", "--family", "ch", "--a", "-0.0164", "--center", "0,0", "--width", "0.49",
                              "--res", "8x4", "--max-iter", "50", "--out", ppm.string(), "--csv", csv.string()});
    CHECK(r.code == cli::kExitOk);
    const std::string bytes = slurp(ppm);
    CHECK(bytes.starts_with("P6\n8 4\n255\n"));
    CHECK(bytes.size() == std::string("P6\n8 4\n255\n").size() + 8 * 4 * 3);
    const std::string table = slurp(csv);
    CHECK(table.starts_with("i,j,re,im,class,iter\n"));
    CHECK(std::count(table.begin(), table.end(), '\n') == 1 + 32);
    std::filesystem::remove(ppm);
    std::filesystem::remove(csv);
  }
}

TEST_CASE("installed binary") {
  const auto ppm = temp("chdyn_cli_binary.ppm");
  const std::string cmd = std::string(CHDYN_BINARY) +
                          " render-param --family mcmullen --center 0,0 --width 1 --res 4x4 --out " + ppm.string() +
                          " > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(ppm).starts_with("P6\n4 4\n255\n"));
  std::filesystem::remove(ppm);

  const std::string bad = std::string(CHDYN_BINARY) + " classify --family ch --a 0 > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
