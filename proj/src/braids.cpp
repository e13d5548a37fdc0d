#include "qtorder/braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qtorder {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) out.pop_back();
  else out.push_back(letter);
}

int least_index(const std::vector<int>& w) {
  int m = 0;
  for (int l : w)
    if (m == 0 || std::abs(l) < m) m = std::abs(l);
  return m;
}

bool mixed_sign(const std::vector<int>& w, int m) {
  bool pos = false, neg = false;
  for (int l : w) {
    if (l == m) pos = true;
    if (l == -m) neg = true;
  }
  return pos && neg;
}

// Locates the handle with leftmost right end: letters k < j with
// w[k] = -w[j] = sigma_i^e and no sigma_i, sigma_{i-1} letters strictly between.
bool find_handle(const std::vector<int>& w, std::size_t& left, std::size_t& right) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    int i = std::abs(w[j]);
    for (std::size_t k = j; k-- > 0;) {
      int a = std::abs(w[k]);
      if (a == i || a == i - 1) {
        if (w[k] == -w[j]) {
          left = k;
          right = j;
          return true;
        }
        break;
      }
    }
  }
  return false;
}

// sigma_i^e v sigma_i^{-e} -> v with sigma_{i+1}^d -> sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e.
std::vector<int> reduce_handle(const std::vector<int>& w, std::size_t left, std::size_t right) {
  int i = std::abs(w[left]);
  int e = w[left] > 0 ? 1 : -1;
  std::vector<int> out;
  out.reserve(w.size() + 2 * (right - left));
  for (std::size_t k = 0; k < left; ++k) push_reduced(out, w[k]);
  for (std::size_t k = left + 1; k < right; ++k) {
    int l = w[k];
    if (std::abs(l) == i + 1) {
      int d = l > 0 ? 1 : -1;
      push_reduced(out, -e * (i + 1));
      push_reduced(out, d * i);
      push_reduced(out, e * (i + 1));
    } else {
      push_reduced(out, l);
    }
  }
  for (std::size_t k = right + 1; k < w.size(); ++k) push_reduced(out, w[k]);
  return out;
}

}  // namespace

BraidWord make_braid(int strands, const std::vector<int>& letters) {
  if (strands < 2) throw Error(ErrorCode::BadGenerator, "braid groups need at least 2 strands");
  BraidWord b{strands, {}};
  for (int l : letters) {
    if (l == 0 || std::abs(l) >= strands)
      throw Error(ErrorCode::BadGenerator, "generator " + std::to_string(l) + " outside B_" + std::to_string(strands));
    push_reduced(b.letters, l);
  }
  return b;
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw Error(ErrorCode::InvalidArgument, "strand mismatch");
  BraidWord out = u;
  for (int l : v.letters) push_reduced(out.letters, l);
  return out;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord out{b.strands, {}};
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord power(const BraidWord& b, long long n) { return qtorder::power(braid_ops(b.strands), b, n); }

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      letters.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "braid token '" + tok + "' is not an integer");
    }
  }
  return make_braid(strands, letters);
}

std::string format_braid(const BraidWord& b) {
  std::string s;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(b.letters[k]);
  }
  return s;
}

BraidWord delta_sq(int strands) {
  std::vector<int> delta;
  for (int top = strands - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) delta.push_back(i);
  std::vector<int> sq = delta;
  sq.insert(sq.end(), delta.begin(), delta.end());
  return make_braid(strands, sq);
}

BraidWord handle_reduce(const BraidWord& w) {
  std::vector<int> cur = w.letters;
  long long steps = 0;
  while (!cur.empty()) {
    int m = least_index(cur);
    if (!mixed_sign(cur, m)) break;
    std::size_t left = 0, right = 0;
    if (!find_handle(cur, left, right))
      throw Error(ErrorCode::InvalidArgument, "mixed-sign word without a handle");
    cur = reduce_handle(cur, left, right);
    if (++steps > caps().reduction_steps)
      throw Error(ErrorCode::ReductionCap, "handle reduction passed " + std::to_string(caps().reduction_steps) + " steps");
  }
  return BraidWord{w.strands, cur};
}

int sigma_sign(const BraidWord& reduced) {
  if (reduced.empty()) return 0;
  int m = least_index(reduced.letters);
  for (int l : reduced.letters)
    if (std::abs(l) == m) return l > 0 ? 1 : -1;
  return 0;
}

Comparison dehornoy_compare(const BraidWord& u, const BraidWord& v) {
  int s = sigma_sign(handle_reduce(multiply(inverse(u), v)));
  if (s == 0) return Comparison::Equal;
  return s > 0 ? Comparison::Less : Comparison::Greater;
}

long long dehornoy_floor(const BraidWord& b) {
  const BraidWord d = delta_sq(b.strands);
  const BraidWord dinv = inverse(d);
  // Delta^{2m} <= b iff Delta^{-2m} b is sigma-positive or trivial.
  auto below = [&](long long m) {
    BraidWord w = b;
    const BraidWord& f = m >= 0 ? dinv : d;
    for (long long k = 0; k < std::llabs(m); ++k) w = multiply(f, w);
    return sigma_sign(handle_reduce(w)) >= 0;
  };
  return greatest_true(below, caps().t_height_exponent);
}

RationalEnclosure braid_translation_number(const BraidWord& b, long long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "braid_translation_number needs N >= 1");
  long long f = dehornoy_floor(power(b, N));
  Rational lo(static_cast<long>(f), static_cast<long>(N)), hi(static_cast<long>(f + 1), static_cast<long>(N));
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> pos(static_cast<std::size_t>(b.strands));
  std::iota(pos.begin(), pos.end(), 0);
  // pos[k]: strand currently at position k
  for (int l : b.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(pos[i], pos[i + 1]);
  }
  std::vector<int> perm(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) perm[static_cast<std::size_t>(pos[k])] = static_cast<int>(k);
  return perm;
}

GroupOps<BraidWord> braid_ops(int strands) {
  GroupOps<BraidWord> ops;
  ops.multiply = [](const BraidWord& u, const BraidWord& v) { return multiply(u, v); };
  ops.inverse = [](const BraidWord& b) { return inverse(b); };
  ops.identity = BraidWord{strands, {}};
  ops.equal = [](const BraidWord& u, const BraidWord& v) { return dehornoy_compare(u, v) == Comparison::Equal; };
  ops.length = [](const BraidWord& b) { return static_cast<long long>(b.size()); };
  return ops;
}

QuasiTotalTriple<BraidWord> dehornoy_triple(int strands) {
  QuasiTotalTriple<BraidWord> t;
  t.name = "dehornoy-B" + std::to_string(strands);
  t.order.compare = [](const BraidWord& u, const BraidWord& v) { return dehornoy_compare(u, v); };
  t.order.total = true;
  const BraidWord d = delta_sq(strands);
  t.shift = [d](const BraidWord& p, long long m) { return multiply(p, power(d, m)); };
  t.NX = 0;
  t.CX = 0;
  t.complete = true;
  return t;
}

long long pure_braid_pi(int n, const std::vector<PureLetter>& word) {
  long long total = 0;
  for (const auto& l : word) {
    if (l.i < 1 || l.i >= l.j || l.j > n)
      throw Error(ErrorCode::BadIndex, "A_" + std::to_string(l.i) + "," + std::to_string(l.j) + " outside P_" +
                                           std::to_string(n));
    if (l.sign != 1 && l.sign != -1) throw Error(ErrorCode::BadIndex, "pure letter sign must be +-1");
    if (l.i == 1 && l.j == 2) total += l.sign;
  }
  return total;
}

}  // namespace qtorder
