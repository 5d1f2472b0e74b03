// End-to-end tests for the command-line front end, driven in-process through
// cli::command_dispatch, plus round-trip tests for the JSON layer it rests on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "shops/cli.hpp"
#include "shops/errors.hpp"
#include "shops/io.hpp"
#include "shops/version.hpp"

#include "helpers.hpp"

namespace {

using shops::Errc;
using shops::Error;
using shops::io::json;
using shops::test::fixture_path;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  json env;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("shops");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = shops::cli::command_dispatch(static_cast<int>(argv.size()), argv.data(),
                                        out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.env = json::parse(r.out);
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("shops_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool single_error_line(const std::string& err) {
  return err.rfind("error: ", 0) == 0 &&
         std::count(err.begin(), err.end(), '\n') == 1 && err.back() == '\n';
}

}  // namespace

TEST_CASE("version and help exit cleanly") {
  CliRun v = run_cli({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == std::string(shops::kVersion) + "\n");
  CHECK(v.err.empty());

  CliRun h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("suite") != std::string::npos);
  CHECK(h.out.find("adjoint") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with a diagnostic on stderr") {
  CliRun none = run_cli({});
  CHECK(none.code == 2);
  CHECK(none.err.rfind("error: ", 0) == 0);

  CliRun bogus = run_cli({"radius", "--kind", "bogus", "-i", fixture_path("example21.json")});
  CHECK(bogus.code == 2);

  CliRun noinst = run_cli({"bounds"});
  CHECK(noinst.code == 2);
}

TEST_CASE("adjoint reports the reduced adjoint of the worked instance") {
  unsetenv("SHOPS_SEED");
  CliRun r = run_cli({"adjoint", "-i", fixture_path("example21.json")});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());

  std::vector<std::string> keys;
  for (auto it = r.env.begin(); it != r.env.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "version", "seed", "results",
                                         "discrepancies", "wall_time_ms"});
  CHECK(r.env["command"].get<std::string>().rfind("adjoint -i ", 0) == 0);
  CHECK(r.env["version"] == shops::kVersion);
  CHECK(r.env["seed"] == 42);
  CHECK(r.env["discrepancies"].is_array());
  CHECK(r.env["discrepancies"].empty());
  CHECK(r.env["wall_time_ms"].is_number());

  const shops::Matrix sharp = shops::io::matrix_from_json(r.env["results"]["sharp"]);
  const shops::Matrix expected = shops::test::mat({{1.0, 0.0}, {1.0, 1.0}});
  CHECK((sharp - expected).norm() <= 1e-12);
}

TEST_CASE("classify reports structure flags and an optional pair check") {
  CliRun plain = run_cli({"classify", "-i", fixture_path("example21.json")});
  REQUIRE(plain.code == 0);
  const json& cls = plain.env["results"]["classification"];
  CHECK_FALSE(cls["a_selfadjoint"]["holds"].get<bool>());
  CHECK_FALSE(cls["a_normal"]["holds"].get<bool>());
  CHECK_FALSE(cls["a_hyponormal"]["holds"].get<bool>());
  CHECK_FALSE(plain.env["results"].contains("pair"));

  const double alpha = 1.0 / std::sqrt(6.0);
  const double beta = std::sqrt(10.0);
  CliRun pass = run_cli({"classify", "--alpha", std::to_string(alpha), "--beta",
                         std::to_string(beta), "-i", fixture_path("example21.json")});
  CHECK(pass.code == 0);
  CHECK(pass.env["results"]["pair"]["holds"].get<bool>());

  CliRun fail = run_cli({"classify", "--alpha", "0.5", "--beta", "2.2", "-i",
                         fixture_path("example21.json")});
  CHECK(fail.code == 1);
  CHECK_FALSE(fail.env["results"]["pair"]["holds"].get<bool>());
  CHECK(fail.env["results"]["pair"].contains("witness"));
}

TEST_CASE("bounds match the pencil optimum on the worked instance") {
  CliRun r = run_cli({"bounds", "-i", fixture_path("example21.json")});
  REQUIRE(r.code == 0);
  const json& b = r.env["results"];
  CHECK(std::abs(b["alpha_opt"].get<double>() - (std::sqrt(2.0) - 1.0)) <= 1e-12);
  CHECK(std::abs(b["beta_opt"].get<double>() - (std::sqrt(2.0) + 1.0)) <= 1e-12);
  CHECK(b["method"] == "pencil");
  CHECK_FALSE(b["zero_seminorm"].get<bool>());
  CHECK(b.contains("alpha_witness"));
  CHECK(b.contains("beta_witness"));
}

TEST_CASE("radius reports the seminorm and both radii of the worked instance") {
  CliRun omega = run_cli({"radius", "--kind", "omega", "-i", fixture_path("example21.json")});
  REQUIRE(omega.code == 0);
  CHECK(omega.env["results"]["kind"] == "omega");
  CHECK(std::abs(omega.env["results"]["value"].get<double>() -
                 (1.0 + std::sqrt(2.0) / 2.0)) <= 1e-9);

  CliRun spectral =
      run_cli({"radius", "--kind", "spectral", "-i", fixture_path("example21.json")});
  REQUIRE(spectral.code == 0);
  CHECK(std::abs(spectral.env["results"]["value"].get<double>() - 1.0) <= 1e-9);

  CliRun norm = run_cli({"radius", "--kind", "norm", "-i", fixture_path("example21.json")});
  REQUIRE(norm.code == 0);
  CHECK(std::abs(norm.env["results"]["value"].get<double>() -
                 std::sqrt(2.0 + std::sqrt(3.0))) <= 1e-9);
}

TEST_CASE("mu output is ordered and deterministic for a fixed seed") {
  CliRun a = run_cli({"mu", "--seed", "7", "-i", fixture_path("example21.json")});
  REQUIRE(a.code == 0);
  const json& m = a.env["results"];
  CHECK(m["mu1"].get<double>() <= m["mu2"].get<double>() + 1e-12);
  CHECK(m["samples_used"].get<int>() > 0);
  CHECK(m["certified"].is_boolean());
  CHECK(a.env["seed"] == 7);

  CliRun b = run_cli({"mu", "--seed", "7", "-i", fixture_path("example21.json")});
  CHECK(a.env["results"].dump() == b.env["results"].dump());
}

TEST_CASE("check maps verdicts onto exit codes") {
  CliRun holds = run_cli({"check", "--theorem", "P1.1", "-i", fixture_path("p116.json")});
  CHECK(holds.code == 0);
  CHECK(holds.env["results"]["applicable"] == "yes");
  CHECK(holds.env["results"]["holds"].get<bool>());

  CliRun violated =
      run_cli({"check", "--theorem", "E2.2", "-i", fixture_path("example22.json")});
  CHECK(violated.code == 1);
  CHECK(violated.env["results"]["applicable"] == "yes");
  CHECK_FALSE(violated.env["results"]["holds"].get<bool>());

  CliRun normalized =
      run_cli({"check", "--theorem", "E2.3(2)", "-i", fixture_path("example23b.json")});
  CHECK(normalized.code == 1);
  CHECK(normalized.env["results"]["theorem_id"] == "E2.3.2");

  CliRun gated = run_cli({"check", "--theorem", "T2.4", "-i", fixture_path("example21.json")});
  CHECK(gated.code == 3);
  CHECK(gated.env["results"]["applicable"] == "no");

  CliRun unknown = run_cli({"check", "--theorem", "T9.9", "-i", fixture_path("example21.json")});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown_theorem") != std::string::npos);
}

TEST_CASE("invalid input exits 2 with one error line") {
  CliRun missing = run_cli({"bounds", "-i", "/nonexistent/instance.json"});
  CHECK(missing.code == 2);
  CHECK(single_error_line(missing.err));
  CHECK(missing.err.find("bad_file") != std::string::npos);
  CHECK(missing.out.empty());

  const std::string bad = temp_file("malformed.json", "not json");
  CliRun malformed = run_cli({"bounds", "-i", bad});
  CHECK(malformed.code == 2);
  CHECK(single_error_line(malformed.err));
}

TEST_CASE("degenerate operators exit 3 by error class") {
  const std::string noadj = temp_file(
      "noadj.json",
      R"({"dim":2,"A":[[[1,0],[0,0]],[[0,0],[0,0]]],"T":[[[0,0],[1,0]],[[0,0],[0,0]]]})");
  CliRun adjoint = run_cli({"adjoint", "-i", noadj});
  CHECK(adjoint.code == 3);
  CHECK(single_error_line(adjoint.err));
  CHECK(adjoint.err.find("no_a_adjoint") != std::string::npos);

  CliRun radius = run_cli({"radius", "--kind", "omega", "-i", noadj});
  CHECK(radius.code == 3);
  CHECK(radius.err.find("not_a_bounded") != std::string::npos);

  const std::string anull = temp_file(
      "anull.json",
      R"({"dim":2,"A":[[[1,0],[0,0]],[[0,0],[0,0]]],"T":[[[0,0],[0,0]],[[1,0],[0,0]]]})");
  CliRun mu = run_cli({"mu", "-i", anull});
  CHECK(mu.code == 3);
  CHECK(mu.err.find("a_null_operator") != std::string::npos);
}

TEST_CASE("seed resolution prefers the flag over the environment") {
  unsetenv("SHOPS_SEED");
  CliRun fallback = run_cli({"bounds", "-i", fixture_path("example21.json")});
  CHECK(fallback.env["seed"] == 42);

  setenv("SHOPS_SEED", "123", 1);
  CliRun env = run_cli({"bounds", "-i", fixture_path("example21.json")});
  CHECK(env.env["seed"] == 123);

  CliRun flag = run_cli({"bounds", "--seed", "9", "-i", fixture_path("example21.json")});
  CHECK(flag.env["seed"] == 9);

  setenv("SHOPS_SEED", "abc", 1);
  CliRun invalid = run_cli({"bounds", "-i", fixture_path("example21.json")});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("SHOPS_SEED") != std::string::npos);
  unsetenv("SHOPS_SEED");
}

TEST_CASE("suite envelope is deterministic and hoists discrepancies") {
  CliRun a = run_cli({"suite", "--trials", "2", "--dim-max", "2", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.env["results"]["pass"].get<bool>());
  CHECK(a.env["results"]["trials"] == 2);
  CHECK(a.env["results"]["dim_max"] == 2);
  CHECK_FALSE(a.env["results"].contains("discrepancies"));

  std::vector<std::string> ids;
  for (const auto& d : a.env["discrepancies"]) ids.push_back(d["id"].get<std::string>());
  CHECK(std::count(ids.begin(), ids.end(), "P1.1.6") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "E2.2") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "E2.3.2") == 1);
  for (const auto& rec : a.env["results"]["results"]) {
    CHECK(rec["failures"].get<int>() == 0);
  }

  CliRun b = run_cli({"suite", "--trials", "2", "--dim-max", "2", "--seed", "5"});
  CHECK(a.env["results"].dump() == b.env["results"].dump());
  CHECK(a.env["discrepancies"].dump() == b.env["discrepancies"].dump());
}

TEST_CASE("search exit code tracks counterexamples and instances re-verify") {
  CliRun quiet = run_cli({"search", "--trials", "50", "--power", "2", "--dims", "2",
                          "--seed", "3"});
  CHECK(quiet.code == 0);
  CHECK(quiet.env["results"]["counterexamples"].empty());
  CHECK(quiet.env["results"]["tested"].get<int>() +
            quiet.env["results"]["skipped"].get<int>() ==
        50);

  CliRun loud = run_cli({"search", "--trials", "2000", "--power", "2", "--dims", "2,3",
                         "--seed", "42"});
  REQUIRE(loud.code == 1);
  const json& cxs = loud.env["results"]["counterexamples"];
  REQUIRE(cxs.size() > 0);

  const std::string path = temp_file("cx.json", cxs[0]["instance"].dump());
  CliRun reverify = run_cli({"check", "--theorem", "Q2", "-i", path});
  CHECK(reverify.code == 1);
  CHECK(reverify.env["results"]["applicable"] == "yes");
  CHECK_FALSE(reverify.env["results"]["holds"].get<bool>());
}

TEST_CASE("scalar serialization spells infinities as strings") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(shops::io::real_to_json(inf) == "inf");
  CHECK(shops::io::real_to_json(-inf) == "-inf");
  CHECK(shops::io::real_to_json(1.5) == json(1.5));
  CHECK(shops::io::real_from_json(json("inf")) == inf);
  CHECK(shops::io::real_from_json(json("-inf")) == -inf);
  CHECK(shops::io::real_from_json(json(2.25)) == 2.25);
  CHECK_THROWS_AS(shops::io::real_from_json(json("oops")), Error);
}

TEST_CASE("complex and matrix serialization round-trips") {
  const shops::Complex z(1.25, -3.5);
  CHECK(shops::io::complex_from_json(shops::io::complex_to_json(z)) == z);

  const shops::Matrix m = shops::test::mat(
      {{{1.0, 2.0}, {0.0, -1.0}}, {{3.5, 0.0}, {-2.0, 0.25}}});
  const shops::Matrix back = shops::io::matrix_from_json(shops::io::matrix_to_json(m));
  CHECK((back - m).norm() == 0.0);

  shops::Vector v(3);
  v << shops::Complex(1, 1), shops::Complex(0, -2), shops::Complex(3, 0);
  CHECK((shops::io::vector_from_json(shops::io::vector_to_json(v)) - v).norm() == 0.0);

  const json ragged = json::parse(R"([[[1,0],[0,0]],[[0,0]]])");
  try {
    shops::io::matrix_from_json(ragged);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_file);
  }
}

TEST_CASE("instance parsing validates required fields") {
  try {
    shops::io::instance_from_json(json::parse(R"({"A":[[[1,0]]]})"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_file);
  }

  try {
    shops::io::instance_from_json(json::parse(R"({"dim":2,"A":[[[1,0]],[[0,0]]]})"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_file);
  }

  const json good = json::parse(
      R"({"dim":2,"A":[[[1,0],[0,0]],[[0,0],[2,0]]],"T":[[[1,0],[2,0]],[[0,0],[1,0]]],
          "alpha":0.5,"lambda":[0,1],"seed":11})");
  shops::Instance inst = shops::io::instance_from_json(good);
  CHECK(inst.space->dim() == 2);
  CHECK(inst.params.at("alpha") == 0.5);
  CHECK(*inst.lambda == shops::Complex(0, 1));
  CHECK(inst.seed == 11);

  const json round = shops::io::instance_to_json(inst);
  shops::Instance again = shops::io::instance_from_json(round);
  CHECK((again.op("T").matrix() - inst.op("T").matrix()).norm() == 0.0);
  CHECK(again.seed == inst.seed);
}
