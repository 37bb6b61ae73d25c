#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colombeau {

enum class ErrorCode {
  syntax,
  overlap,
  indeterminate_sign,
  backend_mismatch,
  not_sharply_bounded,
  empty_family,
  empty_clip,
  invalid_shape,
  not_a_partition,
  unsupported_shape_combo,
  dimension_mismatch,
  domain_evaluation,
  outside_domain,
  no_modulus_found,
  missing_bound,
  chain_not_decreasing,
  empty_entry,
  not_nested,
  not_cauchy,
  sequence_too_short,
  grid_too_shallow,
  quadrature_failure,
  budget_infeasible,
  precondition_moment_failure,
  derivative_overflow,
  invalid_argument,
  io,
};

/// Machine-readable name of an error code, as printed in `RESULT: error=<code>`.
std::string_view error_name(ErrorCode code) noexcept;

/// The one exception type thrown by the library. Every failure carries a code so
/// the CLI can map it onto a report trailer.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace colombeau
