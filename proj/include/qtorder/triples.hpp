#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorder/halfspace.hpp"
#include "qtorder/order.hpp"

namespace qtorder {

/// (X, <=, T) with quasi-totality constant NX and, for complete triples
/// (T a >= a everywhere), the completeness constant CX.
template <class P>
struct QuasiTotalTriple {
  std::string name;
  PartialOrder<P> order;
  /// shift(p, m) = T^m p for any integer m.
  std::function<P(const P&, long long)> shift;
  long long NX = 0;
  std::optional<long long> CX;
  bool complete = false;

  P T(const P& p) const { return shift(p, 1); }
  P T_inv(const P& p) const { return shift(p, -1); }
};

template <class P>
class NotARefinement : public Error {
 public:
  NotARefinement(P a, P b)
      : Error(ErrorCode::NotARefinement, "a <= b in the coarse order but not in the finer one"),
        a(std::move(a)),
        b(std::move(b)) {}
  P a;
  P b;
};

/// h_T(a, b) = least m with T^m b >= a (complete triples only).
template <class P>
long long relative_t_height(const QuasiTotalTriple<P>& t, const P& a, const P& b) {
  if (!t.complete) throw Error(ErrorCode::InvalidArgument, "relative_t_height needs a complete triple");
  return least_true([&](long long m) { return t.order.geq(t.shift(b, m), a); }, caps().t_height_exponent);
}

/// Same infimum by linear scan over [lo, hi]; valid for incomplete triples,
/// where the predicate need not be monotone. Caller picks a window covering
/// the infimum.
template <class P>
long long relative_t_height_scan(const QuasiTotalTriple<P>& t, const P& a, const P& b, long long lo, long long hi) {
  for (long long m = lo; m <= hi; ++m)
    if (t.order.geq(t.shift(b, m), a)) return m;
  throw Error(ErrorCode::WindowExhausted, "no m in scan window with T^m b >= a");
}

/// H_n = [T^n x0, inf); height(a) = max{n : a >= T^n x0}, width 2 CX + 2.
template <class P>
HalfspaceSystem<P> triple_to_halfspace(const QuasiTotalTriple<P>& t, const P& x0) {
  if (!t.complete || !t.CX) throw Error(ErrorCode::InvalidArgument, "triple_to_halfspace needs a complete triple with CX");
  HalfspaceSystem<P> sys;
  sys.name = t.name + "/halfspace";
  sys.order = t.order;
  sys.width = 2 * *t.CX + 2;
  sys.height = [t, x0](const P& a) {
    return greatest_true([&](long long n) { return t.order.geq(a, t.shift(x0, n)); }, caps().t_height_exponent);
  };
  return sys;
}

/// Registers an action by automorphisms of the triple; defect 4 CX + 2.
template <class G, class P>
RegisteredAction<G, P> automorphism_action(const QuasiTotalTriple<P>& t, GroupOps<G> group,
                                           std::function<P(const G&, const P&)> act) {
  if (!t.CX) throw Error(ErrorCode::InvalidArgument, "automorphism_action needs CX");
  RegisteredAction<G, P> a;
  a.group = std::move(group);
  a.act = std::move(act);
  a.defect = 4 * *t.CX + 2;
  return a;
}

/// a <=_T b iff T^k a <= b for some k in [0, NX + 1].
template <class P>
bool completion_leq(const QuasiTotalTriple<P>& t, const P& a, const P& b) {
  for (long long k = 0; k <= t.NX + 1; ++k)
    if (t.order.leq(t.shift(a, k), b)) return true;
  return false;
}

/// The completed triple. In a complete triple a <= T^k b with k <= NX
/// implies a <= T^NX b, so CX = NX.
template <class P>
QuasiTotalTriple<P> completion(const QuasiTotalTriple<P>& t) {
  QuasiTotalTriple<P> c = t;
  c.name = t.name + "/completed";
  c.order.total = false;
  c.order.compare = [t](const P& a, const P& b) {
    if (t.order.compare(a, b) == Comparison::Equal) return Comparison::Equal;
    bool ab = completion_leq(t, a, b);
    bool ba = completion_leq(t, b, a);
    if (ab && ba) return Comparison::Equal;
    if (ab) return Comparison::Less;
    if (ba) return Comparison::Greater;
    return Comparison::Incomparable;
  };
  c.complete = true;
  c.CX = t.NX;
  return c;
}

/// First sampled pair (a, b) for which no k in [0, NX] makes them comparable.
template <class P>
std::optional<std::pair<P, P>> quasi_totality_violation(const QuasiTotalTriple<P>& t, const std::vector<P>& sample) {
  for (const auto& a : sample)
    for (const auto& b : sample) {
      bool ok = false;
      for (long long k = 0; k <= t.NX && !ok; ++k)
        ok = t.order.leq(a, t.shift(b, k)) || t.order.leq(b, t.shift(a, k));
      if (!ok) return std::make_pair(a, b);
    }
  return std::nullopt;
}

/// First sampled point with T a not >= a.
template <class P>
std::optional<P> completeness_violation(const QuasiTotalTriple<P>& t, const std::vector<P>& sample) {
  for (const auto& a : sample)
    if (!t.order.geq(t.T(a), a)) return a;
  return std::nullopt;
}

/// First sampled pair with a <= b but T a not <= T b.
template <class P>
std::optional<std::pair<P, P>> monotonicity_violation(const QuasiTotalTriple<P>& t, const std::vector<P>& sample) {
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (t.order.leq(a, b) && !t.order.leq(t.T(a), t.T(b))) return std::make_pair(a, b);
  return std::nullopt;
}

/// First sampled pair with no n <= budget such that T^n a > b.
template <class P>
std::optional<std::pair<P, P>> dominance_violation(const QuasiTotalTriple<P>& t, const std::vector<P>& sample,
                                                   long long budget) {
  for (const auto& a : sample)
    for (const auto& b : sample) {
      bool ok = false;
      for (long long n = 0; n <= budget && !ok; ++n) ok = t.order.compare(t.shift(a, n), b) == Comparison::Greater;
      if (!ok) return std::make_pair(a, b);
    }
  return std::nullopt;
}

template <class P, class Q>
struct LexPoint {
  P head;
  std::vector<Q> tail;

  bool operator==(const LexPoint& o) const { return head == o.head && tail == o.tail; }
};

/// Lexicographic product of a complete triple with further posets; T acts
/// on the head coordinate only.
template <class P, class Q>
QuasiTotalTriple<LexPoint<P, Q>> lex_product(const QuasiTotalTriple<P>& base, std::vector<PartialOrder<Q>> factors) {
  if (!base.complete) throw Error(ErrorCode::InvalidArgument, "lex_product needs a complete base triple");
  QuasiTotalTriple<LexPoint<P, Q>> t;
  t.name = base.name + "/lex" + std::to_string(factors.size());
  t.NX = base.NX;
  t.CX = base.CX;
  t.complete = true;
  bool all_total = base.order.total;
  for (const auto& f : factors) all_total = all_total && f.total;
  t.order.total = all_total;
  t.order.compare = [base, factors](const LexPoint<P, Q>& x, const LexPoint<P, Q>& y) {
    Comparison c = base.order.compare(x.head, y.head);
    if (c != Comparison::Equal) return c;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      c = factors[i].compare(x.tail.at(i), y.tail.at(i));
      if (c != Comparison::Equal) return c;
    }
    return Comparison::Equal;
  };
  t.shift = [base](const LexPoint<P, Q>& x, long long m) { return LexPoint<P, Q>{base.shift(x.head, m), x.tail}; };
  return t;
}

/// Checks S y >= T y and that (Y, <=, S) is quasi-total, order-preserving
/// and dominant on the sample. `in_y` guards the sub-carrier.
template <class P>
Verdict<P> subtriple_verify(const QuasiTotalTriple<P>& t, const std::function<bool(const P&)>& in_y,
                            const std::function<P(const P&, long long)>& S, const std::vector<P>& sample,
                            long long budget = 64) {
  Verdict<P> v;
  auto fail = [&](const P& y) {
    v.kind = VerdictKind::Falsified;
    v.witness = y;
    return v;
  };
  for (const auto& y : sample) {
    ++v.checked;
    if (!in_y(y) || !in_y(S(y, 1))) return fail(y);
    if (!t.order.geq(S(y, 1), t.T(y))) return fail(y);
  }
  QuasiTotalTriple<P> sub = t;
  sub.shift = S;
  if (auto bad = quasi_totality_violation(sub, sample)) return fail(bad->first);
  if (auto bad = monotonicity_violation(sub, sample)) return fail(bad->first);
  if (auto bad = dominance_violation(sub, sample, budget)) return fail(bad->first);
  return v;
}

/// Replaces the order by a finer one after a sampled refinement check.
template <class P>
QuasiTotalTriple<P> refinement(const QuasiTotalTriple<P>& t, const PartialOrder<P>& finer, const std::vector<P>& sample) {
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (t.order.leq(a, b) && !finer.leq(a, b)) throw NotARefinement<P>(a, b);
  QuasiTotalTriple<P> r = t;
  r.name = t.name + "/refined";
  r.order = finer;
  if (auto bad = quasi_totality_violation(r, sample))
    throw Error(ErrorCode::InvalidArgument, "refined triple fails quasi-totality on the sample");
  return r;
}

/// (R, <=, x -> x + 1): rationals standing in for the reals.
QuasiTotalTriple<Rational> standard_line_triple();

}  // namespace qtorder
