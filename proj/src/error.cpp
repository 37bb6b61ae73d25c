#include "colombeau/error.hpp"

namespace colombeau {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "SyntaxError";
    case ErrorCode::overlap: return "OverlapError";
    case ErrorCode::indeterminate_sign: return "IndeterminateSign";
    case ErrorCode::backend_mismatch: return "BackendMismatch";
    case ErrorCode::not_sharply_bounded: return "NotSharplyBounded";
    case ErrorCode::empty_family: return "EmptyFamily";
    case ErrorCode::empty_clip: return "EmptyClip";
    case ErrorCode::invalid_shape: return "InvalidShape";
    case ErrorCode::not_a_partition: return "NotAPartition";
    case ErrorCode::unsupported_shape_combo: return "UnsupportedShapeCombo";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::domain_evaluation: return "DomainEvaluationError";
    case ErrorCode::outside_domain: return "OutsideDomain";
    case ErrorCode::no_modulus_found: return "NoModulusFound";
    case ErrorCode::missing_bound: return "MissingBound";
    case ErrorCode::chain_not_decreasing: return "ChainNotDecreasing";
    case ErrorCode::empty_entry: return "EmptyEntry";
    case ErrorCode::not_nested: return "NotNested";
    case ErrorCode::not_cauchy: return "NotCauchy";
    case ErrorCode::sequence_too_short: return "SequenceTooShort";
    case ErrorCode::grid_too_shallow: return "GridTooShallow";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::budget_infeasible: return "BudgetInfeasible";
    case ErrorCode::precondition_moment_failure: return "PreconditionMomentFailure";
    case ErrorCode::derivative_overflow: return "DerivativeOverflow";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io: return "IOError";
  }
  return "Unknown";
}

}  // namespace colombeau
