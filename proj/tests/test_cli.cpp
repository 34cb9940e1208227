#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exwit/app/checks.hpp"
#include "exwit/app/commands.hpp"
#include "exwit/app/manifest.hpp"
#include "exwit/app/products.hpp"

using namespace exwit;
using namespace exwit::app;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "exwit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("exwit_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("manifest parsing") {
  const auto doc = nlohmann::json::parse(R"({"n_monomers": 4, "n_reservoir": 2, "eta": 0.2,
      "environment": "markov", "engine": "exact", "grid": "0:1:5", "outputs": ["witness"]})");
  const RunManifest m = parse_manifest(doc, "inline");
  CHECK(m.config.n_monomers == 4);
  CHECK(m.config.spec.n_sites == 4);
  CHECK(m.config.environment == Environment::Markov);
  CHECK(m.config.engine == Engine::Exact);
  REQUIRE(m.sweep.has_value());
  CHECK(m.sweep->points().size() == 5);

  try {
    parse_manifest(nlohmann::json::parse(R"({"n_monomers": 3, "couplings": [1.0]})"), "inline");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "couplings");
  }
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"({"etaa": 0.1})"), "inline"), ValidationError);
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"({"environment": "lindblad"})"), "inline"),
                  ValidationError);
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"({"n_monomers": 12})"), "inline"), ResourceError);
}

TEST_CASE("eta grids") {
  const EtaGrid g = EtaGrid::parse("0:1:3");
  const auto p = g.points();
  REQUIRE(p.size() == 3);
  CHECK(p[1] == 0.5);
  CHECK(EtaGrid{}.points().size() == 513);
  CHECK(EtaGrid{}.points().back() == kHalfPi);
  CHECK_THROWS_AS(EtaGrid::parse("0:1"), ValidationError);
  CHECK_THROWS_AS(EtaGrid::parse("0:2:5"), ValidationError);
  CHECK_THROWS_AS(EtaGrid::parse("1:0:5"), ValidationError);
  CHECK_THROWS_AS(EtaGrid::parse("0:1:0"), ValidationError);
}

TEST_CASE("verify passes and an injected fault is caught") {
  const Outcome ok = cli({"verify"});
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("0 failed") != std::string::npos);

  const Outcome bad = cli({"verify", "--inject-fault", "cos-exponent"});
  CHECK(bad.code == kVerification);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  const auto only = run_checks({"conservation", ""});
  CHECK(only.size() == 4);
  for (const auto& r : only) CHECK(r.group == "conservation");
  CHECK(cli({"verify", "--only", "nonsense"}).code == kValidation);
}

TEST_CASE("bad input maps to exit codes") {
  const Outcome missing = cli({"run", "--config", "/nonexistent/cfg.json"});
  CHECK(missing.code == kValidation);
  CHECK(missing.err.find("/nonexistent/cfg.json") != std::string::npos);

  const fs::path dir = scratch("codes");
  write(dir / "big.json", R"({"n_monomers": 12})");
  CHECK(cli({"run", "--config", (dir / "big.json").string(), "--out", dir.string()}).code == kResource);
  write(dir / "bad.json", R"({"n_monomers": 3, "fields": [0, 0]})");
  const Outcome field = cli({"run", "--config", (dir / "bad.json").string(), "--out", dir.string()});
  CHECK(field.code == kValidation);
  CHECK(field.err.find("fields") != std::string::npos);
  CHECK(cli({"run", "--preset", "fig99"}).code == kValidation);
  CHECK(cli({"sweep", "--grid", "0:9:3"}).code == kValidation);
}

TEST_CASE("table preset") {
  const fs::path dir = scratch("table");
  REQUIRE(cli({"run", "--preset", "table1", "--out", dir.string()}).code == kOk);
  const std::string csv = slurp(dir / "table1.csv");
  CHECK(csv.rfind("stage,markov,F_re,F_im,G_re,G_im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("runs are byte-identical across repeats and worker counts") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  write(a / "cfg.json", R"({"eta": 0.3, "environment": "nonmarkov", "grid": "0:1.5:9",
      "outputs": ["trace", "witness", "fig4", "figs7-9"]})");
  REQUIRE(cli({"run", "--config", (a / "cfg.json").string(), "--out", a.string(), "--workers", "1"}).code == kOk);
  REQUIRE(cli({"run", "--config", (a / "cfg.json").string(), "--out", b.string(), "--workers", "4"}).code == kOk);
  for (const char* f : {"trace.jsonl", "witness.csv", "fig4.csv", "fig7.csv", "fig8.csv", "fig9.csv"}) {
    INFO(f);
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  // each trace line is a standalone JSON record
  std::istringstream lines(slurp(a / "trace.jsonl"));
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    CHECK_FALSE(nlohmann::json::parse(line).is_discarded());
    ++records;
  }
  CHECK(records > 3);
}

TEST_CASE("installed binary reports a failing verification through its exit status") {
  const std::string bin = EXWIT_CLI_PATH;
  CHECK(std::system((bin + " verify --only protocol > /dev/null").c_str()) == 0);
  CHECK(std::system((bin + " verify --inject-fault cos-exponent > /dev/null").c_str()) != 0);
}
