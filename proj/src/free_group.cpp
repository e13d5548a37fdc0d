#include "qtorder/free_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qtorder {

namespace {

// a, A, b, B, ... -> 0, 1, 2, 3, ...
int letter_rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) out.pop_back();
  else out.push_back(letter);
}

}  // namespace

bool shortlex_less(const FreeWord& u, const FreeWord& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int ru = letter_rank(u.letters[i]), rv = letter_rank(v.letters[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

FreeWord free_reduce(int rank, const std::vector<int>& letters) {
  if (rank < 1) throw Error(ErrorCode::BadGenerator, "rank must be positive");
  FreeWord w{rank, {}};
  w.letters.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw Error(ErrorCode::BadGenerator, "generator " + std::to_string(l) + " outside 1.." + std::to_string(rank));
    push_reduced(w.letters, l);
  }
  return w;
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank != v.rank) throw Error(ErrorCode::InvalidArgument, "rank mismatch in multiply");
  FreeWord w = u;
  for (int l : v.letters) push_reduced(w.letters, l);
  return w;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord r{w.rank, {}};
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

FreeWord power(const FreeWord& w, long long n) { return qtorder::power(free_group_ops(w.rank), w, n); }

FreeWord generator(int rank, int letter) { return free_reduce(rank, {letter}); }

FreeWord parse_free_word(const std::string& text, int rank) {
  FreeWord w{rank, {}};
  if (text == "e") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int letter = 0;
    if (c >= 'a' && c <= 'z') letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') letter = -(c - 'A' + 1);
    else throw Error(ErrorCode::ParseError, "position " + std::to_string(i) + ": unexpected character '" + c + "'");
    if (std::abs(letter) > rank)
      throw Error(ErrorCode::ParseError, "position " + std::to_string(i) + ": generator '" + c + "' outside rank " +
                                             std::to_string(rank));
    push_reduced(w.letters, letter);
  }
  return w;
}

std::string format_free_word(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int l : w.letters) s.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  return s;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w.letters[i] == -w.letters[j - 1]) {
    ++i;
    --j;
  }
  return FreeWord{w.rank, std::vector<int>(w.letters.begin() + static_cast<long>(i), w.letters.begin() + static_cast<long>(j))};
}

long long ball_size(int rank, int radius) {
  long long total = 1, layer = 2LL * rank;
  for (int k = 1; k <= radius; ++k) {
    total += layer;
    layer *= 2LL * rank - 1;
  }
  return total;
}

std::vector<FreeWord> ball_enumerate(int rank, int radius) {
  if (rank < 1) throw Error(ErrorCode::BadGenerator, "rank must be positive");
  // The radius cap is stated for rank 2; it shrinks as the sphere growth rises.
  int cap = caps().free_ball_radius;
  if (rank > 2) cap = std::max(1, static_cast<int>(cap * 1.0986 / std::log(2.0 * rank - 1)));
  if (radius < 0 || radius > cap)
    throw Error(ErrorCode::CapExceeded, "ball radius " + std::to_string(radius) + " outside 0.." + std::to_string(cap));
  std::vector<int> alphabet;  // shortlex letter order
  for (int i = 1; i <= rank; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<FreeWord> out{FreeWord{rank, {}}};
  std::size_t layer_begin = 0;
  for (int k = 1; k <= radius; ++k) {
    std::size_t layer_end = out.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx)
      for (int l : alphabet) {
        const FreeWord& w = out[idx];
        if (!w.empty() && w.letters.back() == -l) continue;
        FreeWord next = w;
        next.letters.push_back(l);
        out.push_back(std::move(next));
      }
    layer_begin = layer_end;
  }
  return out;
}

long long counting_hom(const FreeWord& w, int s) {
  long long n = 0;
  for (int l : w.letters) {
    if (l == s) ++n;
    else if (l == -s) --n;
  }
  return n;
}

namespace {

long long count_factor(const std::vector<int>& w, const std::vector<int>& p, bool cyclic) {
  if (p.empty() || w.empty()) return 0;
  std::size_t L = w.size(), m = p.size();
  if (!cyclic && m > L) return 0;
  std::size_t starts = cyclic ? L : L - m + 1;
  long long n = 0;
  for (std::size_t i = 0; i < starts; ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < m && hit; ++j) hit = w[(i + j) % L] == p[j];
    if (hit) ++n;
  }
  return n;
}

}  // namespace

long long brooks_count(const FreeWord& w, const FreeWord& pattern) {
  return count_factor(w.letters, pattern.letters, false) - count_factor(w.letters, inverse(pattern).letters, false);
}

long long brooks_cyclic(const FreeWord& w, const FreeWord& pattern) {
  FreeWord c = cyclic_reduce(w);
  return count_factor(c.letters, pattern.letters, true) - count_factor(c.letters, inverse(pattern).letters, true);
}

GroupOps<FreeWord> free_group_ops(int rank) {
  GroupOps<FreeWord> ops;
  ops.multiply = [](const FreeWord& u, const FreeWord& v) { return multiply(u, v); };
  ops.inverse = [](const FreeWord& w) { return inverse(w); };
  ops.identity = FreeWord{rank, {}};
  ops.equal = [](const FreeWord& u, const FreeWord& v) { return u == v; };
  ops.length = [](const FreeWord& w) { return static_cast<long long>(w.size()); };
  return ops;
}

}  // namespace qtorder
