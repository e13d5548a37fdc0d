#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "qtorder/caps.hpp"
#include "qtorder/errors.hpp"

namespace qtorder {

enum class Comparison { Less, Equal, Greater, Incomparable };

/// Three-valued answer of semi-decidable oracles.
enum class Truth { True, False, Unknown };

inline Comparison flip(Comparison c) {
  switch (c) {
    case Comparison::Less: return Comparison::Greater;
    case Comparison::Greater: return Comparison::Less;
    default: return c;
  }
}

inline std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LESS";
    case Comparison::Equal: return "EQUAL";
    case Comparison::Greater: return "GREATER";
    case Comparison::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

inline bool is_leq(Comparison c) { return c == Comparison::Less || c == Comparison::Equal; }
inline bool is_geq(Comparison c) { return c == Comparison::Greater || c == Comparison::Equal; }

template <class T>
Comparison compare_values(const T& a, const T& b) {
  if (a < b) return Comparison::Less;
  if (b < a) return Comparison::Greater;
  return Comparison::Equal;
}

/// compare(a, b) answers how a sits relative to b: Less means a < b.
/// For a semi-decidable oracle (decidable == false) Incomparable may also
/// mean "not settled within budget".
template <class P>
struct PartialOrder {
  std::function<Comparison(const P&, const P&)> compare;
  bool decidable = true;
  bool total = false;

  bool leq(const P& a, const P& b) const { return is_leq(compare(a, b)); }
  bool geq(const P& a, const P& b) const { return is_geq(compare(a, b)); }
};

template <class G>
struct GroupOps {
  std::function<G(const G&, const G&)> multiply;
  std::function<G(const G&)> inverse;
  G identity;
  std::function<bool(const G&, const G&)> equal;
  /// Word length, used for the power cap. Empty means "unbounded".
  std::function<long long(const G&)> length;
};

/// g^n by binary exponentiation. When the group reports word lengths, any
/// intermediate longer than caps().word_length raises OverflowGuard.
template <class G>
G power(const GroupOps<G>& ops, const G& g, long long n) {
  G base = n < 0 ? ops.inverse(g) : g;
  unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  auto guard = [&](const G& x) {
    if (ops.length && ops.length(x) > caps().word_length)
      throw Error(ErrorCode::OverflowGuard, "power exceeds word-length cap of " + std::to_string(caps().word_length));
  };
  G result = ops.identity;
  while (e > 0) {
    if (e & 1ULL) {
      result = ops.multiply(result, base);
      guard(result);
    }
    e >>= 1;
    if (e > 0) {
      base = ops.multiply(base, base);
      guard(base);
    }
  }
  return result;
}

/// Least m in Z with pred(m) true, for pred monotone (false ... false true ... true).
/// Exponential bracketing from 0, then bisection. BudgetExhausted past `cap`.
template <class Pred>
long long least_true(Pred&& pred, long long cap) {
  long long lo, hi;  // pred(lo) false, pred(hi) true
  if (pred(0)) {
    hi = 0;
    long long step = 1;
    while (true) {
      long long m = -step;
      if (step > cap) throw Error(ErrorCode::BudgetExhausted, "bracketing passed exponent cap " + std::to_string(cap));
      if (!pred(m)) { lo = m; break; }
      hi = m;
      step *= 2;
    }
  } else {
    lo = 0;
    long long step = 1;
    while (true) {
      if (step > cap) throw Error(ErrorCode::BudgetExhausted, "bracketing passed exponent cap " + std::to_string(cap));
      if (pred(step)) { hi = step; break; }
      lo = step;
      step *= 2;
    }
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

/// Greatest m with pred(m) true, for pred monotone (true ... true false ... false).
template <class Pred>
long long greatest_true(Pred&& pred, long long cap) {
  return least_true([&](long long m) { return !pred(m); }, cap) - 1;
}

}  // namespace qtorder
