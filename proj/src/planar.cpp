#include "qtorder/planar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace qtorder {

namespace {

template <class G, class Less>
void place(PlanarEmbedding<G, Less>& emb, std::map<PlanarPoint, int>& occupied, const G& g, PlanarPoint p) {
  if (occupied[p]++ > 0)
    throw Error(ErrorCode::PlacementConflict, "two elements placed at (" + std::to_string(p.x) + ", " +
                                                  std::to_string(p.y) + ")");
  emb.coords.emplace(g, p);
  emb.domain.push_back(g);
}

template <class G, class Less>
void assign_columns(PlanarEmbedding<G, Less>& emb, const std::vector<G>& ordered,
                    const std::function<long long(const G&)>& x_of) {
  std::map<long long, long long> next_row;
  std::map<PlanarPoint, int> occupied;
  for (const auto& g : ordered) {
    long long x = x_of(g);
    place(emb, occupied, g, PlanarPoint{x, next_row[x]++});
  }
}

constexpr int A = 1, B = 2;

}  // namespace

ModularEmbedding rademacher_embedding(int radius) {
  if (radius > caps().embedding_radius)
    throw Error(ErrorCode::CapExceeded, "embedding radius " + std::to_string(radius) + " above cap");
  ModularEmbedding emb;
  emb.name = "rademacher-planar";
  assign_columns<ModularElement, std::less<ModularElement>>(emb, modular_ball(radius), rademacher_raw);
  return emb;
}

long long brooks_hair_x(const FreeWord& w) {
  static const FreeWord ab{2, {A, B}};
  long long eps = 0;
  if (!w.empty()) {
    if (w.letters.back() == A) eps = 1;
    else if (w.letters.back() == -B) eps = -1;
  }
  return 2 * brooks_count(w, ab) + eps;
}

FreeEmbedding brooks_hair_embedding(int radius) {
  if (radius < 0 || radius > caps().embedding_radius)
    throw Error(ErrorCode::CapExceeded, "embedding radius " + std::to_string(radius) + " outside 0.." +
                                            std::to_string(caps().embedding_radius));
  FreeEmbedding emb;
  emb.name = "brooks-hair";
  std::map<PlanarPoint, int> occupied;
  const FreeWord ab{2, {A, B}}, a{2, {A}};

  // Axis: (ab)^k at 2k, (ab)^k a at 2k + 1.
  std::vector<std::pair<FreeWord, long long>> axis;
  for (long long k = -radius; k <= radius; ++k) {
    FreeWord p = power(ab, k);
    if (static_cast<int>(p.size()) <= radius) axis.emplace_back(p, 2 * k);
    FreeWord q = multiply(p, a);
    if (static_cast<int>(q.size()) <= radius) axis.emplace_back(q, 2 * k + 1);
  }
  for (auto& [w, x] : axis) place(emb, occupied, w, PlanarPoint{x, 0});

  long long counter = 0;
  auto grow = [&](const FreeWord& w, int c) {
    const PlanarPoint at = emb.coords.at(w);
    const int last = w.empty() ? 0 : w.letters.back();
    bool below = false;
    long long x = at.x;
    if (c == A && last == -B) x += 2;
    if (c == -B) {
      below = true;
      if (last == A) x -= 2;
    }
    long long row = below ? -(++counter) : ++counter;
    const bool rightward = c > 0;
    FreeWord cur = multiply(w, FreeWord{2, {c}});
    int letter = c;
    while (static_cast<int>(cur.size()) <= radius) {
      place(emb, occupied, cur, PlanarPoint{x, row});
      // alternate a <-> b (rightward) or a^{-1} <-> b^{-1} (leftward)
      letter = rightward ? (std::abs(letter) == A ? B : A) : (std::abs(letter) == A ? -B : -A);
      cur = multiply(cur, FreeWord{2, {letter}});
      x += rightward ? 1 : -1;
    }
  };

  for (int len = 0; len < radius; ++len) {
    std::vector<FreeWord> layer;
    for (const auto& w : emb.domain)
      if (static_cast<int>(w.size()) == len) layer.push_back(w);
    std::sort(layer.begin(), layer.end(), shortlex_less);
    for (const auto& w : layer)
      for (int c : {A, -A, B, -B}) {
        if (!w.empty() && w.letters.back() == -c) continue;
        if (emb.coords.count(multiply(w, FreeWord{2, {c}}))) continue;
        grow(w, c);
      }
  }
  return emb;
}

FreeEmbedding counting_embedding(int radius, const FreeWord& pattern) {
  if (pattern.size() != 2) throw Error(ErrorCode::InvalidArgument, "counting embedding needs a length-2 pattern");
  if (radius > caps().embedding_radius)
    throw Error(ErrorCode::CapExceeded, "embedding radius " + std::to_string(radius) + " above cap");
  FreeEmbedding emb;
  emb.name = "counting-" + format_free_word(pattern);
  assign_columns<FreeWord, FreeWordLess>(emb, ball_enumerate(pattern.rank, radius),
                                         [pattern](const FreeWord& w) { return 2 * brooks_count(w, pattern); });
  return emb;
}

namespace {

template <class G>
HalfspaceSystem<G> formula_system(std::string name, std::function<long long(const G&)> x_of) {
  HalfspaceSystem<G> sys;
  sys.name = std::move(name);
  sys.width = 1;
  sys.height = x_of;
  // Points are group elements; distinct elements with equal x are incomparable.
  sys.order.compare = [x_of](const G& a, const G& b) {
    if (a == b) return Comparison::Equal;
    long long xa = x_of(a), xb = x_of(b);
    if (xa == xb) return Comparison::Incomparable;
    return xa < xb ? Comparison::Less : Comparison::Greater;
  };
  return sys;
}

}  // namespace

HalfspaceSystem<ModularElement> rademacher_system() {
  return formula_system<ModularElement>("rademacher-planar", rademacher_raw);
}

HalfspaceSystem<FreeWord> brooks_hair_system() { return formula_system<FreeWord>("brooks-hair", brooks_hair_x); }

HalfspaceSystem<FreeWord> counting_system(const FreeWord& pattern) {
  return formula_system<FreeWord>("counting-" + format_free_word(pattern),
                                  [pattern](const FreeWord& w) { return 2 * brooks_count(w, pattern); });
}

RegisteredAction<ModularElement, ModularElement> modular_left_action(long long defect) {
  RegisteredAction<ModularElement, ModularElement> a;
  a.group = modular_ops();
  a.act = [](const ModularElement& g, const ModularElement& p) { return multiply(g, p); };
  a.defect = defect;
  a.unbounded_witness = std::make_pair(modular_T1(), modular_identity());
  return a;
}

RegisteredAction<FreeWord, FreeWord> free_left_action(long long defect) {
  RegisteredAction<FreeWord, FreeWord> a;
  a.group = free_group_ops(2);
  a.act = [](const FreeWord& g, const FreeWord& p) { return multiply(g, p); };
  a.defect = defect;
  a.unbounded_witness = std::make_pair(FreeWord{2, {A, B}}, FreeWord{2, {}});
  return a;
}

Truth rademacher_moves_right(const ModularElement& g, const std::vector<ModularElement>& points) {
  for (const auto& p : points)
    if (rademacher_raw(multiply(g, p)) <= rademacher_raw(p)) return Truth::False;
  return Truth::True;
}

}  // namespace qtorder
