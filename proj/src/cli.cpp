#include "shops/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shops/classify.hpp"
#include "shops/errors.hpp"
#include "shops/extremal.hpp"
#include "shops/harness.hpp"
#include "shops/io.hpp"
#include "shops/version.hpp"

namespace shops::cli {
namespace {

using io::json;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::no_a_adjoint:
    case Errc::not_a_bounded:
    case Errc::a_null_operator:
      return kExitNotApplicable;
    default:
      return kExitInvalidInput;
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SHOPS_SEED")) {
    const std::string s(env);
    if (s.empty()) fail(Errc::invalid_input, "SHOPS_SEED is set but empty");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
      fail(Errc::invalid_input, "SHOPS_SEED must be a base-10 integer, got \"" + s + "\"");
    }
    return static_cast<std::uint64_t>(v);
  }
  return 42;
}

std::string echo_command(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

struct Outcome {
  int exit_code = kExitHolds;
  json results;
  json discrepancies = json::array();
};

}  // namespace

int command_dispatch(int argc, const char* const* argv, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"operator theory on finite-dimensional semi-Hilbertian spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::optional<std::uint64_t> seed_flag;
  std::string instance_path;
  std::string theorem_id;
  std::string radius_kind;
  std::optional<double> alpha_flag;
  std::optional<double> beta_flag;
  int mu_samples = 2000;
  int mu_refine = 50;
  int suite_trials = 200;
  int suite_dim_max = 6;
  int search_power = 2;
  int search_trials = 10000;
  std::vector<int> search_dims = {2, 3};

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("-i,--instance", instance_path, "instance JSON file")->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag, "RNG seed (default: SHOPS_SEED, then 42)");
  };

  CLI::App* c_adjoint = app.add_subcommand("adjoint", "reduced A-adjoint of T");
  add_instance(c_adjoint);
  add_seed(c_adjoint);

  CLI::App* c_classify = app.add_subcommand("classify", "structural classification of T");
  add_instance(c_classify);
  add_seed(c_classify);
  c_classify->add_option("--alpha", alpha_flag, "lower pair constant to test");
  c_classify->add_option("--beta", beta_flag, "upper pair constant to test");

  CLI::App* c_bounds = app.add_subcommand("bounds", "optimal pair constants of T");
  add_instance(c_bounds);
  add_seed(c_bounds);

  CLI::App* c_radius = app.add_subcommand("radius", "A-numerical/spectral radius or seminorm");
  add_instance(c_radius);
  add_seed(c_radius);
  c_radius->add_option("--kind", radius_kind, "omega | spectral | norm")
      ->required()
      ->check(CLI::IsMember({"omega", "spectral", "norm"}));

  CLI::App* c_mu = app.add_subcommand("mu", "inner numerical bound estimates for T");
  add_instance(c_mu);
  add_seed(c_mu);
  c_mu->add_option("--samples", mu_samples, "sample count")->check(CLI::PositiveNumber);
  c_mu->add_option("--refine", mu_refine, "hill-climbing rounds")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_check = app.add_subcommand("check", "check one registered statement");
  add_instance(c_check);
  add_seed(c_check);
  c_check->add_option("--theorem", theorem_id, "statement id, e.g. T2.1")->required();

  CLI::App* c_suite = app.add_subcommand("suite", "randomized verification suite");
  add_seed(c_suite);
  c_suite->add_option("--trials", suite_trials, "applicable trials per statement")
      ->check(CLI::PositiveNumber);
  c_suite->add_option("--dim-max", suite_dim_max, "largest factor dimension")
      ->check(CLI::Range(2, 64));

  CLI::App* c_search = app.add_subcommand("search", "power-conjecture counterexample search");
  add_seed(c_search);
  c_search->add_option("--power", search_power, "power n >= 2")->check(CLI::Range(2, 16));
  c_search->add_option("--trials", search_trials, "number of random operators")
      ->check(CLI::PositiveNumber);
  c_search->add_option("--dims", search_dims, "dimensions to draw from")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    Outcome oc;

    if (app.got_subcommand(c_adjoint)) {
      Instance inst = io::load_instance(instance_path);
      AOperator t = inst.op("T");
      oc.results["sharp"] = io::matrix_to_json(t.sharp());
    } else if (app.got_subcommand(c_classify)) {
      Instance inst = io::load_instance(instance_path);
      AOperator t = inst.op("T");
      oc.results["classification"] = io::classification_to_json(classify(t));
      if (alpha_flag || beta_flag) {
        const double a = alpha_flag.value_or(0.0);
        const double b = beta_flag.value_or(std::numeric_limits<double>::infinity());
        AlphaBetaCheck chk = is_alpha_beta_a_normal(t, a, b);
        oc.results["pair"] = io::pair_check_to_json(chk);
        oc.exit_code = chk.holds ? kExitHolds : kExitViolated;
      }
    } else if (app.got_subcommand(c_bounds)) {
      Instance inst = io::load_instance(instance_path);
      oc.results = io::bounds_to_json(optimal_alpha_beta(inst.op("T")));
    } else if (app.got_subcommand(c_radius)) {
      Instance inst = io::load_instance(instance_path);
      AOperator t = inst.op("T");
      if (radius_kind == "norm") {
        oc.results["kind"] = "norm";
        oc.results["value"] = io::real_to_json(t.a_norm());
      } else {
        RadiusResult r =
            (radius_kind == "omega") ? a_numerical_radius(t) : a_spectral_radius(t);
        oc.results = io::radius_to_json(r);
        oc.results["kind"] = radius_kind;
      }
    } else if (app.got_subcommand(c_mu)) {
      Instance inst = io::load_instance(instance_path);
      oc.results = io::mu_to_json(mu_bounds(inst.op("T"), mu_samples, mu_refine, seed));
    } else if (app.got_subcommand(c_check)) {
      Instance inst = io::load_instance(instance_path);
      TheoremVerdict v = check_theorem(theorem_id, inst);
      oc.results = io::verdict_to_json(v);
      if (v.applicable != Applicability::yes) {
        oc.exit_code = kExitNotApplicable;
      } else {
        oc.exit_code = v.holds ? kExitHolds : kExitViolated;
      }
    } else if (app.got_subcommand(c_suite)) {
      SuiteReport rep = run_suite(suite_trials, suite_dim_max, seed);
      json j = io::suite_report_to_json(rep);
      oc.discrepancies = j["discrepancies"];
      j.erase("discrepancies");
      oc.results = std::move(j);
      oc.exit_code = rep.pass ? kExitHolds : kExitViolated;
    } else if (app.got_subcommand(c_search)) {
      SearchReport rep = search_power_conjecture(search_trials, search_power, search_dims, seed);
      oc.results = io::search_report_to_json(rep);
      oc.exit_code = rep.counterexamples.empty() ? kExitHolds : kExitViolated;
    }

    const auto t1 = std::chrono::steady_clock::now();
    json env;
    env["command"] = echo_command(argc, argv);
    env["version"] = kVersion;
    env["seed"] = seed;
    env["results"] = std::move(oc.results);
    env["discrepancies"] = std::move(oc.discrepancies);
    env["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    out << env.dump(2) << '\n';
    return oc.exit_code;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace shops::cli
