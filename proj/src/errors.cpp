#include "qtorder/errors.hpp"

namespace qtorder {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndefinedHeight: return "UNDEFINED_HEIGHT";
    case ErrorCode::DefectExceeded: return "DEFECT_EXCEEDED";
    case ErrorCode::OverflowGuard: return "OVERFLOW_GUARD";
    case ErrorCode::WindowExhausted: return "WINDOW_EXHAUSTED";
    case ErrorCode::BudgetExhausted: return "BUDGET_EXHAUSTED";
    case ErrorCode::NotARefinement: return "NOT_A_REFINEMENT";
    case ErrorCode::BadGenerator: return "BAD_GENERATOR";
    case ErrorCode::BadIndex: return "BAD_INDEX";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::ReductionCap: return "REDUCTION_CAP";
    case ErrorCode::NotIncreasing: return "NOT_INCREASING";
    case ErrorCode::NumericDegenerate: return "NUMERIC_DEGENERATE";
    case ErrorCode::DecompositionMissing: return "DECOMPOSITION_MISSING";
    case ErrorCode::OrderViolation: return "ORDER_VIOLATION";
    case ErrorCode::DomainTooSmall: return "DOMAIN_TOO_SMALL";
    case ErrorCode::PlacementConflict: return "PLACEMENT_CONFLICT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace qtorder
