#pragma once

#include <map>
#include <vector>

#include "qtorder/free_group.hpp"
#include "qtorder/growth.hpp"
#include "qtorder/rational.hpp"

namespace qtorder {

/// Truncated image of a word under x_i -> 1 + X_i. Monomials are sequences
/// of 1-based generator indices; only nonzero coefficients are stored.
struct MagnusSeries {
  int rank = 2;
  int degree = 0;
  std::map<std::vector<int>, Integer> coefficients;

  Integer coefficient(const std::vector<int>& monomial) const;
};

MagnusSeries magnus_expand(const FreeWord& w, int degree);

/// Bi-invariant total order on F_n. Expands u^{-1} v degree by degree and
/// reads the first nonzero coefficient: degrees ascending, and within a
/// degree monomials in descending lexicographic order of their index
/// sequences, so X_n^k is read first. A positive coefficient means u < v.
///
/// Termination: write a nontrivial reduced w as syllables x_{i_1}^{e_1} ...
/// x_{i_r}^{e_r} with i_j != i_{j+1}. The only way to spell X_{i_1}...X_{i_r}
/// is one linear term per syllable, so its coefficient is e_1 ... e_r != 0.
/// Hence w - 1 has a nonzero term of degree <= r <= |w|, and the deepening
/// search over degrees 1..|u^{-1}v| always ends.
Comparison magnus_compare(const FreeWord& u, const FreeWord& v);

/// The Magnus order on F_rank packaged for growth computations.
BiInvariantOrder<FreeWord> magnus_order(int rank);

}  // namespace qtorder
