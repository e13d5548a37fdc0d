#pragma once

#include <string>
#include <vector>

#include "qtorder/order.hpp"
#include "qtorder/rational.hpp"
#include "qtorder/triples.hpp"

namespace qtorder {

/// Word in the Artin generators of B_strands: +i is sigma_i, -i its
/// inverse. Kept freely reduced.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord& o) const { return strands == o.strands && letters == o.letters; }
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

/// Throws BadGenerator for letters outside +-1..strands-1.
BraidWord make_braid(int strands, const std::vector<int>& letters);
BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, long long n);

/// Whitespace-separated signed integers, e.g. "1 2 -1".
BraidWord parse_braid(const std::string& text, int strands);
std::string format_braid(const BraidWord& b);

/// Delta_n^2 with Delta_n = (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
BraidWord delta_sq(int strands);

/// Repeatedly reduces the handle whose right end is leftmost (such a handle
/// contains no other handle, so it is permitted) until the least generator
/// occurs with a single sign. Throws ReductionCap past caps().reduction_steps.
BraidWord handle_reduce(const BraidWord& w);

/// +1 if sigma-positive, -1 if sigma-negative, 0 for the empty word. The
/// argument must already be handle-reduced.
int sigma_sign(const BraidWord& reduced);

/// Dehornoy order: u < v (Less) iff u^{-1} v is sigma-positive.
Comparison dehornoy_compare(const BraidWord& u, const BraidWord& v);

/// max{m : Delta^{2m} <= b}.
long long dehornoy_floor(const BraidWord& b);

/// [floor(b^N)/N, (floor(b^N)+1)/N]. Centrality of Delta^2 gives
/// N*floor(c) <= floor(c^N) < N*(floor(c)+1) for every c, so the
/// homogenization of the floor lies in this interval.
RationalEnclosure braid_translation_number(const BraidWord& b, long long N);

/// Image in the symmetric group: perm[k] is the final position of strand k.
std::vector<int> braid_permutation(const BraidWord& b);

GroupOps<BraidWord> braid_ops(int strands);

/// (B_n, Dehornoy order, right multiplication by Delta^2); total, NX = CX = 0.
QuasiTotalTriple<BraidWord> dehornoy_triple(int strands);

/// Letter of a word in the pure braid generators A_ij.
struct PureLetter {
  int i;
  int j;
  int sign;
};

/// Exponent sum of A_12. Throws BadIndex unless 1 <= i < j <= n.
long long pure_braid_pi(int n, const std::vector<PureLetter>& word);

}  // namespace qtorder
