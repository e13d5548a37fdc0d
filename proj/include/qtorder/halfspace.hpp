#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qtorder/order.hpp"
#include "qtorder/rational.hpp"

namespace qtorder {

/// A poset with an integer level function and a declared width w: points
/// whose heights differ by at least w must be comparable.
template <class P>
struct HalfspaceSystem {
  std::string name;
  PartialOrder<P> order;
  /// Throws Error(UndefinedHeight) when it cannot place a point.
  std::function<long long(const P&)> height;
  long long width = 0;
};

template <class G, class P>
struct RegisteredAction {
  GroupOps<G> group;
  std::function<P(const G&, const P&)> act;
  long long defect = 0;
  std::optional<std::pair<G, P>> unbounded_witness;
};

template <class G>
struct QuasimorphismHandle {
  std::function<Rational(const G&)> eval;
  std::optional<Rational> defect_bound;
  bool homogeneous = false;
};

enum class VerdictKind { Verified, Falsified, Inconclusive };

inline std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Verified: return "VERIFIED";
    case VerdictKind::Falsified: return "FALSIFIED";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// Sample-relative verdict. `checked` counts the sample items that were
/// actually tested; `witness` is set for Falsified and Inconclusive.
template <class W>
struct Verdict {
  VerdictKind kind = VerdictKind::Verified;
  long long checked = 0;
  std::optional<W> witness;

  bool verified() const { return kind == VerdictKind::Verified; }
  bool falsified() const { return kind == VerdictKind::Falsified; }
};

template <class P>
long long relative_height(const HalfspaceSystem<P>& sys, const P& a, const P& b) {
  return sys.height(a) - sys.height(b);
}

/// f_a(g) = h(g.a, a). Its declared defect is the action defect d.
template <class G, class P>
QuasimorphismHandle<G> base_quasimorphism(const HalfspaceSystem<P>& sys, const RegisteredAction<G, P>& action,
                                          const P& a) {
  QuasimorphismHandle<G> q;
  q.eval = [sys, action, a](const G& g) {
    return Rational(static_cast<long>(relative_height(sys, action.act(g, a), a)));
  };
  q.defect_bound = Rational(static_cast<long>(action.defect));
  q.homogeneous = false;
  return q;
}

template <class G, class P>
using DefectSample = std::vector<std::tuple<G, P, P>>;

/// max |h(ga, gb) - h(a, b)| over the sample; throws DefectExceeded carrying
/// the first triple that breaks the declared defect.
template <class G, class P>
long long qa_defect_estimate(const HalfspaceSystem<P>& sys, const RegisteredAction<G, P>& action,
                             const DefectSample<G, P>& sample) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "qa_defect_estimate needs a nonempty sample");
  long long best = 0;
  for (const auto& [g, a, b] : sample) {
    long long before = relative_height(sys, a, b);
    long long after = relative_height(sys, action.act(g, a), action.act(g, b));
    long long dist = std::llabs(after - before);
    if (dist > action.defect) throw DefectExceeded<G, P>(g, a, b, dist, action.defect);
    best = std::max(best, dist);
  }
  return best;
}

/// Same measurement over pairs expressed through the displacement
/// delta(p) = h(g.p) - h(p): the maximum over pairs equals max delta - min delta.
template <class G, class P>
long long qa_defect_over_points(const HalfspaceSystem<P>& sys, const RegisteredAction<G, P>& action,
                                const std::vector<G>& actors, const std::vector<P>& points) {
  long long best = 0;
  for (const auto& g : actors) {
    std::optional<long long> lo, hi;
    for (const auto& p : points) {
      long long delta = sys.height(action.act(g, p)) - sys.height(p);
      lo = lo ? std::min(*lo, delta) : delta;
      hi = hi ? std::max(*hi, delta) : delta;
    }
    if (lo) best = std::max(best, *hi - *lo);
  }
  return best;
}

/// [f_a(g^n)/n - d/n, f_a(g^n)/n + d/n].
template <class G, class P>
RationalEnclosure translation_number(const HalfspaceSystem<P>& sys, const RegisteredAction<G, P>& action,
                                     const G& g, const P& a, long long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "translation_number needs n >= 1");
  G gn = power(action.group, g, n);
  Rational center(static_cast<long>(relative_height(sys, action.act(gn, a), a)), static_cast<long>(n));
  center.canonicalize();
  Rational radius(static_cast<long>(action.defect), static_cast<long>(n));
  radius.canonicalize();
  return RationalEnclosure::around(center, radius);
}

/// Every sampled g with f(g) >= C must be confirmed positive by the oracle.
template <class G>
Verdict<G> sandwich_verify(const std::function<Truth(const G&)>& positive, const QuasimorphismHandle<G>& f,
                           const Rational& C, const std::vector<G>& sample) {
  Verdict<G> v;
  std::optional<G> unsettled;
  for (const auto& g : sample) {
    if (f.eval(g) < C) continue;
    ++v.checked;
    Truth t = positive(g);
    if (t == Truth::False) {
      v.kind = VerdictKind::Falsified;
      v.witness = g;
      return v;
    }
    if (t == Truth::Unknown && !unsettled) unsettled = g;
  }
  if (unsettled) {
    v.kind = VerdictKind::Inconclusive;
    v.witness = unsettled;
  }
  return v;
}

/// Checks (k g).x >= k.x on each sampled (k, x).
template <class G, class P>
Verdict<std::pair<G, P>> induced_order_test(const PartialOrder<P>& order, const RegisteredAction<G, P>& action,
                                            const G& g, const std::vector<std::pair<G, P>>& sample) {
  Verdict<std::pair<G, P>> v;
  for (const auto& [k, x] : sample) {
    ++v.checked;
    P moved = action.act(action.group.multiply(k, g), x);
    P base = action.act(k, x);
    if (!order.geq(moved, base)) {
      v.kind = VerdictKind::Falsified;
      v.witness = std::make_pair(k, x);
      return v;
    }
  }
  return v;
}

template <class G, class P>
Verdict<std::pair<G, P>> induced_order_test(const HalfspaceSystem<P>& sys, const RegisteredAction<G, P>& action,
                                            const G& g, const std::vector<std::pair<G, P>>& sample) {
  return induced_order_test(sys.order, action, g, sample);
}

/// The standard line: H_n = [n, inf), height = floor, width 1.
HalfspaceSystem<Rational> line_system();

}  // namespace qtorder
