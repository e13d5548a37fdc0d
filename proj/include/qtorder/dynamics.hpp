#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorder/mobius.hpp"
#include "qtorder/order.hpp"
#include "qtorder/pl_lift.hpp"
#include "qtorder/rational.hpp"

namespace qtorder {

/// An increasing homeomorphism of R together with its inverse.
struct LineMap {
  std::function<double(double)> forward;
  std::function<double(double)> backward;
};

LineMap line_map(const MobiusLift& f);
LineMap line_map(const PLLift& f);

struct OrbitVerdict {
  bool bounded = false;
  double lo = 0.0;  // orbit hull when bounded
  double hi = 0.0;
  double drift = 0.0;              // max |w.base - base| over all tested words
  std::vector<int> witness;        // word reaching the largest drift (+-(i+1))
  long long points = 0;            // distinct orbit points visited
};

/// Explores all reduced words of length <= L in the generators and their
/// inverses, merging words that reach the same point (to 1e-12). BOUNDED
/// when the drift at L is at most `threshold` and grew by no more than 1/2
/// between L/2 and L; otherwise UNBOUNDED with the drift-maximizing word.
/// CapExceeded when L > caps().orbit_horizon.
OrbitVerdict orbit_bounded_test(const std::vector<LineMap>& generators, double base, int L, double threshold = 4.0);

/// Sampled left-ordered group with central dominant element x.
template <class G>
struct OrderSample {
  GroupOps<G> group;
  std::function<Comparison(const G&, const G&)> compare;
  G x;
  std::vector<G> elements;
};

struct DynRealReport {
  bool order_preserving = true;
  bool translation_exact = true;  // t(gx) = t(g) + 1 on in-sample pairs
  bool ito_bound = true;          // |t(g) - h_T(g, e)| < 3
  Rational max_ito_gap;
  long long pairs_checked = 0;
  long long shifts_checked = 0;
  std::vector<std::string> notes;

  bool pass() const { return order_preserving && translation_exact && ito_bound; }
};

template <class G>
struct DynRealResult {
  std::vector<Rational> t;  // aligned with sample.elements
  DynRealReport report;
};

template <class G>
class DecompositionMissing : public Error {
 public:
  explicit DecompositionMissing(G g)
      : Error(ErrorCode::DecompositionMissing, "interval representative missing from the sample"), g(std::move(g)) {}
  G g;
};

/// Midpoint construction on the order interval [e, x] (in sample order),
/// extended by t(g0 x^n) = n + t(g0). Index-based witnesses go to notes.
template <class G>
DynRealResult<G> dynamical_realization(const OrderSample<G>& s) {
  const auto& ops = s.group;
  auto find = [&](const std::vector<std::size_t>& pool, const G& g) -> std::optional<std::size_t> {
    for (std::size_t i : pool)
      if (ops.equal(s.elements[i], g)) return i;
    return std::nullopt;
  };
  std::vector<std::size_t> all(s.elements.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!find(all, ops.identity) || !find(all, s.x))
    throw Error(ErrorCode::InvalidArgument, "sample must contain e and x");

  // Interval [e, x) enumerated in sample order; x itself is pinned to 1.
  std::vector<std::size_t> interval;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const G& g = s.elements[i];
    if (is_geq(s.compare(g, ops.identity)) && s.compare(g, s.x) == Comparison::Less) interval.push_back(i);
  }
  std::vector<std::pair<G, Rational>> placed{{ops.identity, Rational(0)}, {s.x, Rational(1)}};
  std::map<std::size_t, Rational> t_interval;
  for (std::size_t i : interval) {
    const G& g = s.elements[i];
    if (s.compare(g, ops.identity) == Comparison::Equal) {
      t_interval[i] = Rational(0);
      continue;
    }
    std::optional<Rational> lo, hi;
    for (const auto& [p, tp] : placed) {
      Comparison c = s.compare(p, g);
      if (c == Comparison::Equal) {
        lo = hi = tp;
        break;
      }
      if (c == Comparison::Less && (!lo || tp > *lo)) lo = tp;
      if (c == Comparison::Greater && (!hi || tp < *hi)) hi = tp;
    }
    Rational value = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
    t_interval[i] = value;
    placed.emplace_back(g, value);
  }

  DynRealResult<G> out;
  out.t.resize(s.elements.size());
  std::vector<long long> heights(s.elements.size());
  const G xinv = ops.inverse(s.x);
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const G& g = s.elements[i];
    // n with x^n <= g < x^{n+1}
    long long n = greatest_true([&](long long m) { return is_leq(s.compare(power(ops, s.x, m), g)); },
                                caps().t_height_exponent);
    G g0 = ops.multiply(g, power(ops, xinv, n));
    auto idx = find(interval, g0);
    if (!idx) throw DecompositionMissing<G>(g);
    out.t[i] = Rational(static_cast<long>(n)) + t_interval[*idx];
    // h_T(g, e) = least m with x^m >= g
    heights[i] = least_true([&](long long m) { return is_geq(s.compare(power(ops, s.x, m), g)); },
                            caps().t_height_exponent);
  }

  auto& rep = out.report;
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    for (std::size_t j = 0; j < s.elements.size(); ++j) {
      if (i == j) continue;
      ++rep.pairs_checked;
      bool less = s.compare(s.elements[i], s.elements[j]) == Comparison::Less;
      if (less != (out.t[i] < out.t[j])) {
        if (rep.order_preserving)
          rep.notes.push_back("order violated at sample pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        rep.order_preserving = false;
      }
    }
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    auto j = find(all, ops.multiply(s.elements[i], s.x));
    if (!j) continue;
    ++rep.shifts_checked;
    if (out.t[*j] != out.t[i] + 1) {
      if (rep.translation_exact) rep.notes.push_back("t(gx) != t(g) + 1 at sample index " + std::to_string(i));
      rep.translation_exact = false;
    }
  }
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    Rational gap = out.t[i] - Rational(static_cast<long>(heights[i]));
    if (gap < 0) gap = -gap;
    if (gap > rep.max_ito_gap) rep.max_ito_gap = gap;
    if (!(gap < 3)) {
      if (rep.ito_bound) rep.notes.push_back("|t - h_T| >= 3 at sample index " + std::to_string(i));
      rep.ito_bound = false;
    }
  }
  return out;
}

}  // namespace qtorder
