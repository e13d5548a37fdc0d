#pragma once

#include <array>
#include <string>

#include "qtorder/rational.hpp"

namespace qtorder {

/// Lift to R of the action of a matrix in SL2(R) on the projective line,
/// with RP^1 parametrized by x -> [cos(pi x) : sin(pi x)]. The lift is the
/// unique continuous increasing F with F(x + 1) = F(x) + 1, F(x) = phi(x)
/// mod 1 and F(0) in [winding, winding + 1).
struct MobiusLift {
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
  long long winding = 0;
};

/// Throws NumericDegenerate unless |det - 1| <= 1e-12 (after normalizing a
/// positive determinant to 1 when `normalize` is set).
MobiusLift make_mobius(double a, double b, double c, double d, long long winding, bool normalize = false);

double mobius_act(const MobiusLift& f, double x);
/// Lift of f o g; the winding is read off F_f(F_g(0)) and must agree with the
/// closed form within 1e-6, else NumericDegenerate.
MobiusLift mobius_compose(const MobiusLift& f, const MobiusLift& g);
MobiusLift mobius_invert(const MobiusLift& f);

/// F^N(0)/N with abs_err 2/N.
FloatEnclosure mobius_translation_number(const MobiusLift& f, long long N);

/// JSON shape {"matrix": [[a, b], [c, d]], "winding": k}.
MobiusLift mobius_from_json(const std::string& text);
std::string mobius_to_json(const MobiusLift& f);

}  // namespace qtorder
