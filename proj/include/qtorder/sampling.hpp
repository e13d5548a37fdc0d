#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "qtorder/braids.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/pl_lift.hpp"

namespace qtorder {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random rational in [0, 1) with denominator dividing `den`.
inline Rational random_unit_rational(Rng& rng, long long den) { return make_rational(uniform(rng, 0, den - 1), den); }

/// Random PL lift with up to `pieces` breakpoints on the grid 1/den and a
/// translation part with |F(0)| <= shift.
inline PLLift random_pl_lift(Rng& rng, int pieces = 3, long long den = 12, long long shift = 2) {
  int k = static_cast<int>(uniform(rng, 1, pieces));
  std::set<Rational> xs{Rational(0)}, ys{Rational(0)};
  while (static_cast<int>(xs.size()) < k) xs.insert(random_unit_rational(rng, den));
  while (static_cast<int>(ys.size()) < k) ys.insert(random_unit_rational(rng, den));
  Rational t = make_rational(uniform(rng, -shift * den, shift * den), den);
  std::vector<Rational> bx(xs.begin(), xs.end()), vy;
  for (const auto& y : ys) vy.push_back(y + t);
  return PLLift(bx, vy);
}

inline FreeWord random_free_word(Rng& rng, int rank, int max_length) {
  std::vector<int> letters;
  int len = static_cast<int>(uniform(rng, 0, max_length));
  while (static_cast<int>(letters.size()) < len) {
    int g = static_cast<int>(uniform(rng, 1, rank));
    int l = uniform(rng, 0, 1) ? g : -g;
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return FreeWord{rank, letters};
}

inline BraidWord random_braid(Rng& rng, int strands, int max_length) {
  std::vector<int> letters;
  int len = static_cast<int>(uniform(rng, 0, max_length));
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(uniform(rng, 1, strands - 1));
    letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return make_braid(strands, letters);
}

/// `count` distinct indices into a population of size n (all when n <= count),
/// in increasing order.
inline std::vector<std::size_t> sample_indices(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (n <= count) return idx;
  for (std::size_t i = 0; i < count; ++i) std::swap(idx[i], idx[i + uniform(rng, 0, static_cast<long long>(n - i - 1))]);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace qtorder
