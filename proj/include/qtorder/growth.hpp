#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qtorder/order.hpp"
#include "qtorder/rational.hpp"

namespace qtorder {

/// A bi-invariant partial order on a group, given by its comparison oracle.
template <class G>
struct BiInvariantOrder {
  GroupOps<G> group;
  std::function<Comparison(const G&, const G&)> compare;
  bool total = false;

  bool geq(const G& a, const G& b) const { return is_geq(compare(a, b)); }
};

struct Window {
  long long lo;
  long long hi;
};

/// [floor(n f(h)/f(g)) - 4, ceil(n f(h)/f(g)) + 4]; f(g) must be positive.
Window sandwich_window(long long n, const Rational& fg, const Rational& fh);
/// [-n K, n K] with K = caps().window_k.
Window fallback_window(long long n);

/// Least p in the window with g^p >= h^n.
template <class G>
long long growth_gamma_n(const BiInvariantOrder<G>& order, const G& g, const G& h, long long n, Window w) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "growth_gamma_n needs n >= 1");
  if (w.lo > w.hi) throw Error(ErrorCode::InvalidArgument, "empty window");
  const G hn = power(order.group, h, n);
  auto ok = [&](const G& gp) { return order.geq(gp, hn); };
  auto exhausted = [&] {
    return Error(ErrorCode::WindowExhausted,
                 "no p in [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "] with g^p >= h^" +
                     std::to_string(n));
  };
  if (order.total) {
    if (!ok(power(order.group, g, w.hi))) throw exhausted();
    long long lo = w.lo, hi = w.hi;
    if (ok(power(order.group, g, lo))) return lo;
    while (hi - lo > 1) {
      long long mid = lo + (hi - lo) / 2;
      if (ok(power(order.group, g, mid))) hi = mid; else lo = mid;
    }
    return hi;
  }
  G gp = power(order.group, g, w.lo);
  for (long long p = w.lo; p <= w.hi; ++p) {
    if (ok(gp)) return p;
    gp = order.group.multiply(gp, g);
  }
  throw exhausted();
}

struct GrowthResult {
  RationalEnclosure enclosure;
  std::vector<long long> gamma;  // gamma[n-1] = gamma_n for n = 1..N
  long long defect = 0;           // max gamma_m + gamma_n - gamma_{m+n}
};

/// Window chooser: n -> Window.
using WindowFn = std::function<Window(long long)>;

/// Enclosure [(gamma_N - c)/N, gamma_N/N] where c is the largest observed
/// superadditivity gap. Subadditivity of gamma_n makes gamma_N/N an upper
/// bound; the lower one relies on the observed gap. A result sitting on the
/// lower edge of its window is recomputed with the window doubled downward.
template <class G>
GrowthResult growth_gamma(const BiInvariantOrder<G>& order, const G& g, const G& h, long long N,
                          const WindowFn& window) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "growth_gamma needs N >= 1");
  GrowthResult r;
  for (long long n = 1; n <= N; ++n) {
    Window w = window(n);
    long long value = growth_gamma_n(order, g, h, n, w);
    int widen = 0;
    while (value == w.lo && widen < 8) {
      long long span = std::max<long long>(4, w.hi - w.lo);
      w.hi = w.lo;
      w.lo -= span;
      value = growth_gamma_n(order, g, h, n, w);
      ++widen;
    }
    r.gamma.push_back(value);
  }
  for (long long m = 1; m < N; ++m)
    for (long long n = 1; m + n <= N; ++n)
      r.defect = std::max(r.defect, r.gamma[m - 1] + r.gamma[n - 1] - r.gamma[m + n - 1]);
  long long gN = r.gamma.back();
  Rational hi(static_cast<long>(gN), static_cast<long>(N));
  Rational lo(static_cast<long>(gN - r.defect), static_cast<long>(N));
  hi.canonicalize();
  lo.canonicalize();
  r.enclosure = {lo, hi};
  return r;
}

/// Sampled dominance check: g^n >= h for every sampled h, some n <= budget.
template <class G>
std::optional<G> dominance_counterexample(const BiInvariantOrder<G>& order, const G& g, const std::vector<G>& sample,
                                          long long budget) {
  for (const auto& h : sample) {
    G gn = order.group.identity;
    bool found = false;
    for (long long n = 0; n <= budget && !found; ++n) {
      if (order.geq(gn, h)) found = true;
      gn = order.group.multiply(gn, g);
    }
    if (!found) return h;
  }
  return std::nullopt;
}

}  // namespace qtorder
