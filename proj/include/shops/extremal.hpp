#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shops/space.hpp"

namespace shops {

/// Value of an extremal quantity together with the vector achieving it.
struct RadiusResult {
  double value = 0.0;
  /// Unit-A-seminorm maximizer (for the numerical radius) or a vector in
  /// the dominant invariant direction (for the spectral radius).
  std::optional<Vector> argmax;
  /// Phase at which the numerical-radius maximum is attained.
  double theta_star = 0.0;
  std::string method_note;
};

/// Estimates of the inner numerical bounds
///   mu1 = inf { Re <Tu|u>_A / ||Tu||_A : ||u||_A = 1, ||Tu||_A > 0 }
///   mu2 = sup { ... }
/// obtained by deterministic sampling plus local hill climbing. These are
/// one-sided estimates: mu1 from above, mu2 from below; `certified` stays
/// false because the optimization is global only in the limit.
struct MuEstimate {
  double mu1 = 0.0;
  double mu2 = 0.0;
  std::optional<Vector> arginf;
  std::optional<Vector> argsup;
  int samples_used = 0;
  bool certified = false;
};

/// A-numerical radius sup_{||u||_A = 1} |<Tu|u>_A|, computed from the
/// compressed operator by phase-grid + golden-section refinement over
/// lambda_max(Re(e^{i theta} compression)). Requires A-bounded T.
RadiusResult a_numerical_radius(const AOperator& t);

/// A-spectral radius lim ||T^k||_A^{1/k} = spectral radius of the
/// compression. Requires A-bounded T.
RadiusResult a_spectral_radius(const AOperator& t);

/// Samples `samples` unit-A-seminorm vectors (prefix-stable in the seed),
/// keeps the extremal quotients, and refines each with `refine` rounds of
/// step-halving hill climbing. Throws Errc::a_null_operator when the
/// feasible set { u : ||Tu||_A > 0 } is empty.
MuEstimate mu_bounds(const AOperator& t, int samples, int refine, std::uint64_t seed);

}  // namespace shops
