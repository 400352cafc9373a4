#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "discrim/cli.hpp"
#include "discrim/ensemble_json.hpp"
#include "support/random_ensembles.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = discrim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DISCRIM_TEST_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "discrim_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_CASE("report on the four-state generator") {
  const Run r = run({"report", "--family", "four_state", "--theta", "1.0", "--q", "0.5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json& b = j["bounds"];
  CHECK(std::abs(b["entropic"].get<double>() - 0.5) <= 1e-9);
  CHECK(std::abs(b["srm"].get<double>() - 0.5) <= 1e-9);
  CHECK(std::abs(b["pairwise"].get<double>() - 0.5) <= 1e-9);
  CHECK(b["oracle_primal"].get<double>() <= 0.5 + 1e-9);
  CHECK(b["oracle_dual"].get<double>() >= 0.5 - 1e-9);
  CHECK_FALSE(b.contains("helstrom"));
  CHECK(j["monotonicity"]["holds"].get<bool>());
}

TEST_CASE("report on files") {
  SUBCASE("single pure state") {
    const Run r = run({"report", data("single_pure.json")});
    REQUIRE(r.code == 0);
    const json b = json::parse(r.out)["bounds"];
    for (const char* key : {"entropic", "srm", "pairwise", "pure_state", "oracle_primal", "oracle_dual"})
      CHECK(b[key].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("|0> and |+> include the two-state closed form") {
    const Run r = run({"report", "--input", data("zero_plus.json")});
    REQUIRE(r.code == 0);
    const json b = json::parse(r.out)["bounds"];
    CHECK(b["helstrom"].get<double>() == doctest::Approx(0.853553).epsilon(1e-6));
  }
  SUBCASE("mixed members omit the pure-only bounds") {
    const Run r = run({"report", data("mixed_pair.json")});
    REQUIRE(r.code == 0);
    const json b = json::parse(r.out)["bounds"];
    CHECK_FALSE(b.contains("pairwise"));
    CHECK_FALSE(b.contains("pure_state"));
    CHECK(b.contains("helstrom"));
  }
  SUBCASE("nearly unit vectors are normalized") {
    CHECK(run({"report", data("nearly_normalized.json")}).code == 0);
  }
}

TEST_CASE("report output is byte-identical across runs and uses 17 digits") {
  const Run a = run({"report", data("zero_plus.json")});
  const Run b = run({"report", data("zero_plus.json")});
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"helstrom\": 0.85355339059327") != std::string::npos);
}

TEST_CASE("report error exits") {
  const Run missing = run({"report", data("missing_dim.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("'dim'") != std::string::npos);

  const Run bad_entry = run({"report", data("bad_entry.json")});
  CHECK(bad_entry.code == 2);
  CHECK(bad_entry.err.find("members[0].vector[1]") != std::string::npos);

  const Run probs = run({"report", data("bad_probs.json")});
  CHECK(probs.code == 3);
  CHECK(probs.err.find("probability sum") != std::string::npos);

  CHECK(run({"report", data("non_psd.json")}).code == 3);
  CHECK(run({"report", data("unnormalized_vector.json")}).code == 3);
  CHECK(run({"report", data("does_not_exist.json")}).code == 2);
  CHECK(run({"report"}).code == 2);
  CHECK(run({"report", "--family", "five_state"}).code == 2);
  CHECK(run({"report", "--family", "four_state", "--q", "1.5"}).code == 3);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("validate") {
  const Run ok = run({"validate", data("four_state.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("OK") != std::string::npos);
  CHECK(ok.out.find("member 3: prob 0.25, trace 1") != std::string::npos);

  const Run probs = run({"validate", data("bad_probs.json")});
  CHECK(probs.code == 3);
  CHECK(probs.out.find("FAIL probability sum 0.9") != std::string::npos);

  const Run psd = run({"validate", data("non_psd.json")});
  CHECK(psd.code == 3);
  CHECK(psd.out.find("PSD violation") != std::string::npos);

  CHECK(run({"validate", data("missing_dim.json")}).code == 2);
}

TEST_CASE("sweep") {
  SUBCASE("two points give two rows") {
    const fs::path out = scratch("two.csv");
    const Run r = run({"sweep", "--family", "three_state_original", "--points", "2", "--out", out.string()});
    REQUIRE(r.code == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "theta,entropic,srm,pairwise");
  }
  SUBCASE("oracle columns and SVG") {
    const fs::path out = scratch("oracle.csv");
    const fs::path svg = scratch("oracle.svg");
    const Run r = run({"sweep", "--family", "four_state", "--theta-min", "0", "--theta-max", "6.283185307179586",
                       "--points", "5", "--bounds", "entropic,srm,oracle", "--tol", "1e-9",
                       "--out", out.string(), "--svg", svg.string()});
    REQUIRE(r.code == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "theta,entropic,srm,oracle_primal,oracle_dual");
    CHECK(fs::file_size(svg) > 0);
  }
  SUBCASE("file family") {
    const fs::path out = scratch("file.csv");
    const Run r = run({"sweep", "--family", "file", "--input", data("zero_plus.json"), "--points", "3",
                       "--bounds", "helstrom,srm", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(read_lines(out).size() == 4);
  }
  SUBCASE("errors") {
    CHECK(run({"sweep", "--out", "/nonexistent-dir/x.csv", "--points", "2"}).code == 4);
    CHECK(run({"sweep", "--out", scratch("x.csv").string(), "--points", "1"}).code == 2);
    CHECK(run({"sweep", "--out", scratch("x.csv").string(), "--bounds", "upper"}).code == 2);
    CHECK(run({"sweep", "--points", "3"}).code == 2);
  }
}

TEST_CASE("installed binary maps exit codes") {
  const std::string bin = DISCRIM_BINARY;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(bin + " validate " + data("four_state.json")) == 0);
  CHECK(status(bin + " validate " + data("non_psd.json")) == 3);
  CHECK(status(bin + " report " + data("missing_dim.json")) == 2);
  CHECK(status(bin + " --help") == 0);
}

TEST_CASE("ensemble JSON round-trips through the file schema") {
  discrim::testing::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = discrim::testing::random_ensemble(rng, discrim::testing::Purity::Any);
    const auto back = discrim::to_ensemble(discrim::parse_ensemble(json::parse(discrim::to_json(e).dump())));
    REQUIRE(back.size() == e.size());
    CHECK(back.label() == e.label());
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(back[i].prob == e[i].prob);
      CHECK((back[i].state.matrix() - e[i].state.matrix()).norm() <= 1e-12);
      CHECK(back[i].vector.has_value() == e[i].vector.has_value());
    }
  }
}
