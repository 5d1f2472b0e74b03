#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shops/classify.hpp"
#include "shops/rng.hpp"
#include "shops/space.hpp"

namespace shops {

/// Carrier for theorem hypotheses: one or two spaces, named operators, and
/// named scalar parameters. Operators are stored as raw matrices so an
/// instance serializes losslessly; checkers bind them to their space on use.
struct Instance {
  SpacePtr space;
  SpacePtr space_b;
  std::map<std::string, Matrix> ops;
  std::map<std::string, double> params;
  std::optional<Complex> lambda;
  std::uint64_t seed = 0;

  /// Binds a named operator to the primary (or secondary) space; throws
  /// Errc::missing_component naming the operator when absent.
  AOperator op(const std::string& name, bool on_second_space = false) const;
  bool has_op(const std::string& name) const { return ops.count(name) != 0; }
  double param_or(const std::string& name, double fallback) const;
  bool has_param(const std::string& name) const { return params.count(name) != 0; }
};

enum class Applicability { yes, no, uncertain };

/// Outcome of checking one claim against one instance. When the hypotheses
/// fail (applicable = no) the verdict is vacuous-true with notes naming the
/// failed hypothesis; `uncertain` marks hypotheses that could only be
/// estimated, never certified, and is excluded from pass/fail tallies.
struct TheoremVerdict {
  std::string theorem_id;
  Applicability applicable = Applicability::no;
  bool holds = true;
  /// Minimum slack across the conclusion's inequalities, normalized so that
  /// -1e-8 is the suite-wide failure threshold.
  double margin = 0.0;
  std::optional<Vector> witness;
  std::string notes;
};

/// How an entry participates in the suite: theorems gate the exit status;
/// claim checks record statements the numerics contradict (reported in the
/// discrepancy section); questions are open problems probed but never
/// treated as failures.
enum class EntryKind { theorem, claim_check, question };

struct RegistryEntry {
  std::string id;
  EntryKind kind = EntryKind::theorem;
  std::string summary;
  /// Draws a random instance satisfying (or likely satisfying) the
  /// hypotheses. `trial` is the suite's attempt index, letting an entry pin
  /// deterministic fixtures to fixed trials; dim_max bounds each factor
  /// dimension.
  std::function<Instance(std::uint64_t seed, int trial, int dim_max)> generate;
  std::function<TheoremVerdict(const Instance&)> check;
};

const std::vector<RegistryEntry>& registry();
/// Accepts both "T2.2(1)" and "T2.2.1" spellings.
std::string normalize_theorem_id(const std::string& id);
/// nullptr when the id is unknown.
const RegistryEntry* find_entry(const std::string& id);

/// Random space with exactly `rank` positive eigenvalues, log-uniform in
/// [1e-2, 1e2]. Throws Errc::rank_out_of_range unless 1 <= rank <= dim.
SpacePtr gen_space(int dim, int rank, std::uint64_t seed);

/// Random operator admitting an A-adjoint, built from the general solution
/// T = pinv(A) K A + (I - P) Y of the Douglas condition; with probability
/// 1/2 the null-range term Y is dropped so reduced operators (T = PTP) are
/// sampled too.
AOperator gen_operator(const SpacePtr& s, std::uint64_t seed);

/// Structured generators used by theorem checkers and tests. All draw from
/// the passed RNG only.
namespace gen {
AOperator admissible(const SpacePtr& s, Rng& rng);
AOperator reduced(const SpacePtr& s, Rng& rng);
AOperator a_selfadjoint(const SpacePtr& s, Rng& rng);
AOperator a_normal(const SpacePtr& s, Rng& rng);
AOperator a_unitary(const SpacePtr& s, Rng& rng);
AOperator a_isometry(const SpacePtr& s, Rng& rng);
AOperator a_positive(const SpacePtr& s, Rng& rng);
/// Operator with Herm(A T) PSD, certifying mu1 >= 0.
AOperator herm_nonnegative(const SpacePtr& s, Rng& rng);
/// Pair (T, S) with T# S = S T#, drawn from a common compressed block
/// structure (S block-scalar, hence A-selfadjoint) or as a polynomial
/// S = a P + b T# + c (T#)^2. Pass selfadjoint_s to force the first family.
std::pair<AOperator, AOperator> sharp_commuting_pair(const SpacePtr& s, Rng& rng,
                                                     bool selfadjoint_s = false);
/// Pair (T, S) with T S = S T and both admissible.
std::pair<AOperator, AOperator> commuting_pair(const SpacePtr& s, Rng& rng);
}  // namespace gen

TheoremVerdict check_theorem(const std::string& id, const Instance& inst);

struct FailureRecord {
  Instance instance;
  TheoremVerdict verdict;
};

struct TheoremSuiteResult {
  std::string id;
  EntryKind kind = EntryKind::theorem;
  std::string summary;
  int requested = 0;
  int attempts = 0;
  int applicable = 0;
  int uncertain = 0;
  int holds = 0;
  int failures = 0;
  /// Minimum margin over applicable, certain trials; 0 when none ran.
  double min_margin = 0.0;
  bool insufficient = false;
  /// At most three failing instances kept for reproduction.
  std::vector<FailureRecord> failing;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int dim_max = 0;
  std::vector<TheoremSuiteResult> results;
  /// Claim checks and open questions, including the statements the
  /// numerics contradict; never affects `pass`.
  std::vector<TheoremSuiteResult> discrepancies;
  bool pass = true;
};

/// Runs every registry entry on `trials` applicable instances (capped at
/// 100x attempts), dims in [2, dim_max], deterministic per seed.
SuiteReport run_suite(int trials, int dim_max, std::uint64_t seed);

struct SearchCounterexample {
  Instance instance;
  double alpha = 0.0;
  double beta = 0.0;
  double lower_slack = 0.0;
  double upper_slack = 0.0;
};

struct SearchReport {
  int trials = 0;
  int power = 0;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  int tested = 0;
  int skipped = 0;
  std::vector<SearchCounterexample> counterexamples;
  /// Empirical tightest exponent e(T) = max log-ratio of optimal constants
  /// of T^n against those of T; the conjecture asserts e(T) <= n^2.
  int exponent_count = 0;
  double exponent_min = 0.0;
  double exponent_max = 0.0;
  double exponent_mean = 0.0;
};

/// Tests whether T^n stays (alpha^{n^2}, beta^{n^2})-A-normal when T is
/// (alpha, beta)-A-normal with the clamped optimal pair. n >= 2.
SearchReport search_power_conjecture(int trials, int n, const std::vector<int>& dims,
                                     std::uint64_t seed);

}  // namespace shops
