#include "qtorder/triples.hpp"

#include "qtorder/fixtures.hpp"

namespace qtorder {

QuasiTotalTriple<Rational> standard_line_triple() {
  QuasiTotalTriple<Rational> t;
  t.name = "line";
  t.order.compare = [](const Rational& a, const Rational& b) { return compare_values(a, b); };
  t.order.total = true;
  t.shift = [](const Rational& x, long long m) -> Rational { return x + Rational(static_cast<long>(m)); };
  t.NX = 0;
  t.CX = 0;
  t.complete = true;
  return t;
}

QuasiTotalTriple<GapPoint> gap_fixture_triple() {
  QuasiTotalTriple<GapPoint> t;
  t.name = "gap2";
  t.order.compare = [](const GapPoint& p, const GapPoint& q) {
    if (p == q) return Comparison::Equal;
    if (p.a + 2 <= q.a) return Comparison::Less;
    if (q.a + 2 <= p.a) return Comparison::Greater;
    return Comparison::Incomparable;
  };
  t.shift = [](const GapPoint& p, long long m) { return GapPoint{p.a + m, p.i}; };
  t.NX = 2;
  t.complete = false;
  return t;
}

long long gap_fixture_height(const GapPoint& p, const GapPoint& q) {
  return p.i == q.i ? p.a - q.a : p.a - q.a + 2;
}

TwistPoint twist_point(const Rational& lambda, const Rational& p) { return TwistPoint{lambda, {p}}; }

QuasiTotalTriple<TwistPoint> twist_triple() {
  PartialOrder<Rational> trivial;
  trivial.compare = [](const Rational& a, const Rational& b) {
    return a == b ? Comparison::Equal : Comparison::Incomparable;
  };
  QuasiTotalTriple<Rational> base = standard_line_triple();
  // Strict order on the head with the trivial fiber: equal heads with
  // different fibers are incomparable, as in the lexicographic rule.
  auto t = lex_product<Rational, Rational>(base, {trivial});
  t.name = "twist";
  t.NX = 1;
  t.CX = 1;
  return t;
}

GroupOps<TwistAuto> twist_group() {
  GroupOps<TwistAuto> ops;
  ops.multiply = [](const TwistAuto& g, const TwistAuto& h) {
    return TwistAuto{pl_compose(g.lift, h.lift), frac(g.rotation + h.rotation)};
  };
  ops.inverse = [](const TwistAuto& g) { return TwistAuto{pl_invert(g.lift), frac(-g.rotation)}; };
  ops.identity = TwistAuto{PLLift(), Rational(0)};
  ops.equal = [](const TwistAuto& g, const TwistAuto& h) { return g == h; };
  return ops;
}

TwistPoint twist_act(const TwistAuto& g, const TwistPoint& x) {
  return TwistPoint{g.lift(x.head), {frac(x.tail.at(0) + g.rotation)}};
}

PartialOrder<TwistPoint> twist_tiebreak_order() {
  PartialOrder<TwistPoint> o;
  o.compare = [](const TwistPoint& x, const TwistPoint& y) {
    Comparison c = compare_values(x.head, y.head);
    return c != Comparison::Equal ? c : compare_values(x.tail.at(0), y.tail.at(0));
  };
  o.total = true;
  return o;
}

}  // namespace qtorder
