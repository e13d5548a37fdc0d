#pragma once

#include <vector>

#include "qtorder/pl_lift.hpp"
#include "qtorder/triples.hpp"

namespace qtorder {

/// Point (a, i) of Z x {0, 1}.
struct GapPoint {
  long long a;
  int i;
  bool operator==(const GapPoint& o) const { return a == o.a && i == o.i; }
};

/// Incomplete triple on Z x {0, 1}: (a, i) <= (b, j) iff equal or a + 2 <= b,
/// T(a, i) = (a + 1, i). Quasi-total with NX = 2, not complete since
/// T(a, i) and (a, i) are incomparable.
QuasiTotalTriple<GapPoint> gap_fixture_triple();

/// Closed forms for the infimum defining h_T on the gap fixture, for the
/// original triple and its completion alike: a - b if i = j, else a - b + 2.
long long gap_fixture_height(const GapPoint& p, const GapPoint& q);

/// Twisted line C_{S^1}: points (lambda, p) with p in [0, 1) standing for
/// the circle; (lambda, p) < (mu, q) iff lambda < mu, T adds 1 to lambda.
using TwistPoint = LexPoint<Rational, Rational>;

/// NX = CX = 1.
QuasiTotalTriple<TwistPoint> twist_triple();
TwistPoint twist_point(const Rational& lambda, const Rational& p);

/// Automorphism (lambda, p) -> (F(lambda), p + r mod 1).
struct TwistAuto {
  PLLift lift;
  Rational rotation;
  bool operator==(const TwistAuto& o) const { return lift == o.lift && rotation == o.rotation; }
};

GroupOps<TwistAuto> twist_group();
TwistPoint twist_act(const TwistAuto& g, const TwistPoint& x);

/// Lexicographic tie-break on the fiber coordinate; a total refinement.
PartialOrder<TwistPoint> twist_tiebreak_order();

}  // namespace qtorder
