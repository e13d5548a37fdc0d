#pragma once

#include <string>
#include <vector>

#include "qtorder/halfspace.hpp"
#include "qtorder/order.hpp"

namespace qtorder {

/// Freely reduced word in F_rank. Letter +i is x_i, -i is x_i^{-1} (1-based).
struct FreeWord {
  int rank = 2;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const FreeWord& o) const { return rank == o.rank && letters == o.letters; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }
};

/// Shortlex order with letters ranked a < A < b < B < ...; used for
/// deterministic enumeration and as a map key.
bool shortlex_less(const FreeWord& u, const FreeWord& v);

struct FreeWordLess {
  bool operator()(const FreeWord& u, const FreeWord& v) const { return shortlex_less(u, v); }
};

/// Throws BadGenerator on an index outside 1..rank or a zero letter.
FreeWord free_reduce(int rank, const std::vector<int>& letters);
FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, long long n);
FreeWord generator(int rank, int letter);

/// Lowercase letters are generators, uppercase their inverses ("aB" = a b^{-1}).
/// The empty string and "e" denote the identity. Throws ParseError with the
/// offending position.
FreeWord parse_free_word(const std::string& text, int rank = 2);
std::string format_free_word(const FreeWord& w);

/// Conjugate-minimal form: strips u ... u^{-1} from both ends.
FreeWord cyclic_reduce(const FreeWord& w);

/// Reduced words of length <= radius in shortlex order; CapExceeded past the
/// configured radius cap.
std::vector<FreeWord> ball_enumerate(int rank, int radius);
/// 1 + sum_{k=1..r} 2n (2n-1)^{k-1}.
long long ball_size(int rank, int radius);

/// Exponent sum of generator s.
long long counting_hom(const FreeWord& w, int s);

/// Occurrences of the pattern as a factor (overlaps allowed) minus
/// occurrences of its inverse.
long long brooks_count(const FreeWord& w, const FreeWord& pattern);
/// Same count taken cyclically on the cyclic reduction; this is the
/// homogenization of brooks_count.
long long brooks_cyclic(const FreeWord& w, const FreeWord& pattern);

GroupOps<FreeWord> free_group_ops(int rank);

}  // namespace qtorder
