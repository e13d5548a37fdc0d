#pragma once

#include <string>
#include <vector>

#include "qtorder/halfspace.hpp"
#include "qtorder/rational.hpp"

namespace qtorder {

/// Lift F of a piecewise-linear circle homeomorphism, F(x + 1) = F(x) + 1,
/// with exact rational data. Canonical form: breakpoints start at 0, are
/// strictly increasing in [0, 1), and no breakpoint other than 0 lies on a
/// straight stretch, so equal maps have equal data.
class PLLift {
 public:
  PLLift();  // identity
  /// Arbitrary breakpoints in [0, 1) with values; throws NotIncreasing if the
  /// data does not describe an increasing lift.
  PLLift(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PLLift translation(const Rational& t);

  Rational operator()(const Rational& x) const;
  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }

  bool operator==(const PLLift& o) const { return xs_ == o.xs_ && ys_ == o.ys_; }
  bool operator!=(const PLLift& o) const { return !(*this == o); }

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  void canonicalize();
};

PLLift pl_compose(const PLLift& f, const PLLift& g);  // f o g
PLLift pl_invert(const PLLift& f);
Rational pl_eval(const PLLift& f, const Rational& x);
PLLift pl_power(const PLLift& f, long long n);

/// Exact p/q when some breakpoint orbit closes up (F^q(x) = x + p, q <= N);
/// otherwise [F^N(0)/N - 1/N, F^N(0)/N + 1/N].
RationalEnclosure pl_rotation_number(const PLLift& f, long long N);

/// Fixed enumeration of the rationals in [0, 1): 0, then the Stern-Brocot
/// tree of (0, 1) level by level (1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...).
std::vector<Rational> stern_brocot_prefix(std::size_t count);

struct LexResult {
  Comparison result;
  std::size_t index;  // 1-based position of the deciding rational; 0 for Equal
};

/// Lexicographic comparison of (f(q_n)) and (g(q_n)). Equal only for equal
/// PL data; otherwise the scan runs past the first K points (up to
/// caps().lex_scan) until the values differ.
LexResult homeo_lex_compare(const PLLift& f, const PLLift& g, std::size_t K = 64);

GroupOps<PLLift> pl_ops();

/// Homeo_Z(R) acting on the line system; defect 1.
RegisteredAction<PLLift, Rational> pl_line_action();

/// JSON shape {"breakpoints": [[num, den], ...], "values": [[num, den], ...]}.
PLLift pl_from_json(const std::string& text);
std::string pl_to_json(const PLLift& f);

}  // namespace qtorder
