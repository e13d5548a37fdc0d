#include "qtorder/magnus.hpp"

#include <cstdlib>
#include <optional>

namespace qtorder {

namespace {

// Dense truncated series: layers[k][idx] is the coefficient of the degree-k
// monomial whose base-rank digits (most significant first) are idx.
template <class C>
struct DenseSeries {
  int rank;
  int degree;
  std::vector<std::vector<C>> layers;

  DenseSeries(int r, int d) : rank(r), degree(d), layers(static_cast<std::size_t>(d) + 1) {
    std::size_t size = 1;
    for (int k = 0; k <= d; ++k) {
      layers[static_cast<std::size_t>(k)].assign(size, C(0));
      size *= static_cast<std::size_t>(r);
    }
    layers[0][0] = C(1);
  }
};

inline bool add_checked(__int128& acc, const __int128& x, bool negate) {
  __int128 out;
  bool overflow = negate ? __builtin_sub_overflow(acc, x, &out) : __builtin_add_overflow(acc, x, &out);
  if (overflow) return false;
  acc = out;
  return true;
}

inline bool add_checked(Integer& acc, const Integer& x, bool negate) {
  if (negate) acc -= x;
  else acc += x;
  return true;
}

// Right-multiplies by x_i^{+-1}. Returns false on coefficient overflow.
template <class C>
bool right_multiply(DenseSeries<C>& s, int letter) {
  const std::size_t r = static_cast<std::size_t>(s.rank);
  const std::size_t digit = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter > 0) {
    // S (1 + X): new_k = S_k + S_{k-1} X, so sweep degrees downward.
    for (int k = s.degree; k >= 1; --k) {
      auto& hi = s.layers[static_cast<std::size_t>(k)];
      const auto& lo = s.layers[static_cast<std::size_t>(k - 1)];
      for (std::size_t idx = 0; idx < lo.size(); ++idx)
        if (lo[idx] != 0 && !add_checked(hi[idx * r + digit], lo[idx], false)) return false;
    }
  } else {
    // N = S (1 + X)^{-1} satisfies N_k = S_k - N_{k-1} X, so sweep upward.
    for (int k = 1; k <= s.degree; ++k) {
      auto& hi = s.layers[static_cast<std::size_t>(k)];
      const auto& lo = s.layers[static_cast<std::size_t>(k - 1)];
      for (std::size_t idx = 0; idx < lo.size(); ++idx)
        if (lo[idx] != 0 && !add_checked(hi[idx * r + digit], lo[idx], true)) return false;
    }
  }
  return true;
}

template <class C>
std::optional<DenseSeries<C>> expand_dense(const FreeWord& w, int degree) {
  DenseSeries<C> s(w.rank, degree);
  for (int l : w.letters)
    if (!right_multiply(s, l)) return std::nullopt;
  return s;
}

std::vector<int> digits_of(std::size_t idx, int rank, int k) {
  std::vector<int> m(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    m[static_cast<std::size_t>(j)] = static_cast<int>(idx % static_cast<std::size_t>(rank)) + 1;
    idx /= static_cast<std::size_t>(rank);
  }
  return m;
}

void check_size(int rank, int degree) {
  if (degree > caps().magnus_degree)
    throw Error(ErrorCode::CapExceeded, "Magnus degree " + std::to_string(degree) + " above cap " +
                                            std::to_string(caps().magnus_degree));
  double entries = 1, layer = 1;
  for (int k = 1; k <= degree; ++k) entries += (layer *= rank);
  if (entries > double(1 << 23))
    throw Error(ErrorCode::CapExceeded, "Magnus expansion of degree " + std::to_string(degree) + " too large");
}

// Sign of the leading coefficient at exactly degree k; 0 if that layer vanishes.
template <class C>
int leading_sign(const DenseSeries<C>& s, int k) {
  const auto& layer = s.layers[static_cast<std::size_t>(k)];
  for (std::size_t idx = layer.size(); idx-- > 0;)
    if (layer[idx] != 0) return layer[idx] > 0 ? 1 : -1;
  return 0;
}

std::size_t syllables(const FreeWord& w) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || std::abs(w.letters[i]) != std::abs(w.letters[i - 1])) ++r;
  return r;
}

}  // namespace

Integer MagnusSeries::coefficient(const std::vector<int>& monomial) const {
  auto it = coefficients.find(monomial);
  return it == coefficients.end() ? Integer(0) : it->second;
}

MagnusSeries magnus_expand(const FreeWord& w, int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "Magnus degree must be >= 1");
  check_size(w.rank, degree);
  auto s = expand_dense<Integer>(w, degree);
  MagnusSeries out;
  out.rank = w.rank;
  out.degree = degree;
  for (int k = 0; k <= degree; ++k) {
    const auto& layer = s->layers[static_cast<std::size_t>(k)];
    for (std::size_t idx = 0; idx < layer.size(); ++idx)
      if (layer[idx] != 0) out.coefficients[digits_of(idx, w.rank, k)] = layer[idx];
  }
  return out;
}

Comparison magnus_compare(const FreeWord& u, const FreeWord& v) {
  FreeWord w = multiply(inverse(u), v);
  if (w.empty()) return Comparison::Equal;
  const int limit = static_cast<int>(syllables(w));
  for (int k = 1; k <= limit; ++k) {
    check_size(w.rank, k);
    int sign = 0;
    if (auto fast = expand_dense<__int128>(w, k)) sign = leading_sign(*fast, k);
    else sign = leading_sign(*expand_dense<Integer>(w, k), k);
    if (sign > 0) return Comparison::Less;
    if (sign < 0) return Comparison::Greater;
  }
  throw Error(ErrorCode::InvalidArgument, "nontrivial word with vanishing Magnus expansion");
}

BiInvariantOrder<FreeWord> magnus_order(int rank) {
  BiInvariantOrder<FreeWord> o;
  o.group = free_group_ops(rank);
  o.compare = [](const FreeWord& a, const FreeWord& b) { return magnus_compare(a, b); };
  o.total = true;
  return o;
}

}  // namespace qtorder
