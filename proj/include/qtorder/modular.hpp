#pragma once

#include <string>
#include <vector>

#include "qtorder/order.hpp"

namespace qtorder {

/// Element of PSL2(Z) = <S, R | S^2, R^3> in alternating normal form.
/// Syllables: 0 is S, 1 is R, 2 is R^2. No two S are adjacent and no two
/// R-syllables are adjacent.
struct ModularElement {
  std::vector<int> syllables;

  bool operator==(const ModularElement& o) const { return syllables == o.syllables; }
  bool operator!=(const ModularElement& o) const { return !(*this == o); }
  bool operator<(const ModularElement& o) const;  // shortlex
  std::size_t size() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }
};

/// g = S^{left_s} * t_1 ... t_k * S^{right_s} with t_i in {T1 = SR, T2 = SR^2},
/// stored as 1 for T1 and 2 for T2.
struct SemigroupForm {
  bool left_s = false;
  std::vector<int> t;
  bool right_s = false;

  bool operator==(const SemigroupForm& o) const { return left_s == o.left_s && t == o.t && right_s == o.right_s; }
};

ModularElement modular_identity();
ModularElement modular_S();
ModularElement modular_R();
ModularElement modular_T1();
ModularElement modular_T2();

ModularElement multiply(const ModularElement& a, const ModularElement& b);
ModularElement inverse(const ModularElement& g);
ModularElement power(const ModularElement& g, long long n);

/// Letters: S, R and r = R^{-1}. Throws ParseError with the position of any
/// other character. "e" and "" are the identity.
ModularElement parse_modular(const std::string& text);
/// Normal-form spelling over S and R ("SRR" is S R^2); "e" for the identity.
std::string format_modular(const ModularElement& g);
/// Raw tokens: 0 = S, 1 = R, -1 = R^{-1}.
ModularElement modular_reduce(const std::vector<int>& raw);

struct Decomposition {
  ModularElement normal;
  SemigroupForm form;
};

Decomposition modular_decompose(const std::vector<int>& raw);
SemigroupForm semigroup_form(const ModularElement& g);
ModularElement compose(const SemigroupForm& form);

/// #T1 - #T2 in the semigroup form of g itself (not conjugation invariant;
/// this is the x-coordinate of the planar embedding).
long long rademacher_raw(const ModularElement& g);

/// The Rademacher quasimorphism: the count taken on a cyclically reduced
/// conjugate, which makes it homogeneous and conjugation invariant. Torsion
/// elements (conjugates of S, R, R^2) get 0.
long long rademacher(const ModularElement& g);

/// Normal forms with at most `radius` syllables, shortlex order.
std::vector<ModularElement> modular_ball(int radius);

GroupOps<ModularElement> modular_ops();

}  // namespace qtorder
