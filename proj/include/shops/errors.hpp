#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>

namespace shops {

/// Reason codes attached to every shops::Error. The CLI maps
/// no_a_adjoint, not_a_bounded and a_null_operator to exit code 3 (the
/// requested quantity does not apply to the input) and everything else to
/// exit code 2 (invalid input); library callers can dispatch on them.
enum class Errc {
  invalid_input,
  not_square,
  not_hermitian,
  not_psd,
  dimension_mismatch,
  no_a_adjoint,
  not_a_bounded,
  a_null_operator,
  rank_out_of_range,
  unknown_theorem,
  missing_component,
  bad_file,
};

const char* errc_name(Errc code);

/// Exception type used across the library. Carries an optional witness
/// vector (e.g. a direction of negativity for a failed PSD check) and an
/// optional residual magnitude so callers can report diagnostics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

  const std::optional<Eigen::VectorXcd>& witness() const { return witness_; }
  Error& with_witness(Eigen::VectorXcd w) {
    witness_ = std::move(w);
    return *this;
  }

  std::optional<double> residual() const { return residual_; }
  Error& with_residual(double r) {
    residual_ = r;
    return *this;
  }

 private:
  Errc code_;
  std::optional<Eigen::VectorXcd> witness_;
  std::optional<double> residual_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace shops
