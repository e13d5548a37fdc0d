#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorder {

enum class ErrorCode {
  UndefinedHeight,
  DefectExceeded,
  OverflowGuard,
  WindowExhausted,
  BudgetExhausted,
  NotARefinement,
  BadGenerator,
  BadIndex,
  CapExceeded,
  ReductionCap,
  NotIncreasing,
  NumericDegenerate,
  DecompositionMissing,
  OrderViolation,
  DomainTooSmall,
  PlacementConflict,
  InvalidArgument,
  ParseError,
};

/// Upper-snake name used in reports and CLI output, e.g. "WINDOW_EXHAUSTED".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by qa_defect_estimate; carries the violating (g, a, b) triple.
template <class G, class P>
class DefectExceeded : public Error {
 public:
  DefectExceeded(G g, P a, P b, long long measured, long long declared)
      : Error(ErrorCode::DefectExceeded,
              "measured " + std::to_string(measured) + " > declared " + std::to_string(declared)),
        g(std::move(g)),
        a(std::move(a)),
        b(std::move(b)),
        measured(measured) {}

  G g;
  P a;
  P b;
  long long measured;
};

}  // namespace qtorder
