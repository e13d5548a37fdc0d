#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorder/free_group.hpp"
#include "qtorder/halfspace.hpp"
#include "qtorder/modular.hpp"

namespace qtorder {

struct PlanarPoint {
  long long x;
  long long y;
  bool operator<(const PlanarPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
  bool operator==(const PlanarPoint& o) const { return x == o.x && y == o.y; }
};

/// Injective map from a finite ball of group elements into Z^2, frozen
/// after construction. `domain` lists elements in construction order.
template <class G, class Less = std::less<G>>
struct PlanarEmbedding {
  std::string name;
  std::vector<G> domain;
  std::map<G, PlanarPoint, Less> coords;

  std::optional<PlanarPoint> find(const G& g) const {
    auto it = coords.find(g);
    if (it == coords.end()) return std::nullopt;
    return it->second;
  }
  bool injective() const;
  /// Every column x in [min x, max x] is occupied.
  bool slabs_nonempty() const;
};

template <class G, class Less>
bool PlanarEmbedding<G, Less>::injective() const {
  std::map<PlanarPoint, int> seen;
  for (const auto& [g, p] : coords)
    if (seen[p]++ > 0) return false;
  return coords.size() == domain.size();
}

template <class G, class Less>
bool PlanarEmbedding<G, Less>::slabs_nonempty() const {
  std::map<long long, int> cols;
  for (const auto& [g, p] : coords) cols[p.x]++;
  if (cols.empty()) return false;
  for (long long x = cols.begin()->first; x <= cols.rbegin()->first; ++x)
    if (!cols.count(x)) return false;
  return true;
}

using ModularEmbedding = PlanarEmbedding<ModularElement>;
using FreeEmbedding = PlanarEmbedding<FreeWord, FreeWordLess>;

/// x = rademacher_raw, y = running index within the column (shortlex).
ModularEmbedding rademacher_embedding(int radius);

/// Axis (ab)^k at x = 2k and (ab)^k a at x = 2k + 1 on row 0, then hairs
/// grown breadth-first until the ball of the given radius is covered. Each
/// hair gets a fresh row: counter + 1 when placed above its root,
/// -(counter + 1) when placed below.
FreeEmbedding brooks_hair_embedding(int radius);

/// Closed form of the hair builder's x-coordinate, valid on all of F_2:
/// 2 brooks(w, ab) + eps(last letter), eps(a) = 1, eps(b^{-1}) = -1, else 0.
long long brooks_hair_x(const FreeWord& w);

/// x = 2 brooks_count(w, pattern), y = running index within the column.
FreeEmbedding counting_embedding(int radius, const FreeWord& pattern);

/// Half-space system read off the embedding: H_n = {x >= n}, width 1.
/// Points outside the domain raise UndefinedHeight.
template <class G, class Less>
HalfspaceSystem<G> embedding_system(const PlanarEmbedding<G, Less>& emb) {
  HalfspaceSystem<G> sys;
  sys.name = emb.name;
  sys.width = 1;
  auto coords = emb.coords;
  auto locate = [coords](const G& g) {
    auto it = coords.find(g);
    if (it == coords.end()) throw Error(ErrorCode::UndefinedHeight, "element outside the embedded ball");
    return it->second;
  };
  sys.height = [locate](const G& g) { return locate(g).x; };
  sys.order.compare = [locate](const G& a, const G& b) {
    PlanarPoint p = locate(a), q = locate(b);
    if (p == q) return Comparison::Equal;
    if (p.x < q.x) return Comparison::Less;
    if (p.x > q.x) return Comparison::Greater;
    return Comparison::Incomparable;
  };
  return sys;
}

/// Half-space systems on the whole group using the coordinate formulas
/// (the formulas agree with the builders on their balls).
HalfspaceSystem<ModularElement> rademacher_system();
HalfspaceSystem<FreeWord> brooks_hair_system();
HalfspaceSystem<FreeWord> counting_system(const FreeWord& pattern);

/// Left multiplication with the given declared defect.
RegisteredAction<ModularElement, ModularElement> modular_left_action(long long defect);
RegisteredAction<FreeWord, FreeWord> free_left_action(long long defect);

/// Sample-relative positivity in the Rademacher planar order: g moves every
/// sampled point strictly right (x(g p) > x(p)).
Truth rademacher_moves_right(const ModularElement& g, const std::vector<ModularElement>& points);

template <class G>
struct EmbeddingReport {
  long long measured_defect = 0;
  long long in_domain_points = 0;   // (actor, point) pairs with g.p in the ball
  long long clipped_points = 0;     // pairs dropped because g.p left the ball
  bool unbounded = false;           // heights strictly increase along the witness
  std::vector<long long> witness_heights;
  HalfspaceSystem<G> system;        // width 1
  long long declared_defect = 0;    // set to the measurement
};

/// Measures max_g (max_p delta_g(p) - min_p delta_g(p)) over in-domain pairs,
/// delta_g(p) = x(g p) - x(p), i.e. max |h(ga, gb) - h(a, b)|, and checks that
/// heights along powers of `witness` inside the ball strictly increase.
/// DomainTooSmall when fewer than `quorum` pairs stay in the ball.
template <class G, class Less>
EmbeddingReport<G> embedding_quasi_action_verify(const PlanarEmbedding<G, Less>& emb, const GroupOps<G>& ops,
                                                 const std::vector<G>& actors, const G& witness,
                                                 long long quorum = 10) {
  EmbeddingReport<G> r;
  for (const auto& g : actors) {
    std::optional<long long> lo, hi;
    for (const auto& p : emb.domain) {
      auto gp = emb.find(ops.multiply(g, p));
      if (!gp) {
        ++r.clipped_points;
        continue;
      }
      ++r.in_domain_points;
      long long delta = gp->x - emb.coords.at(p).x;
      lo = lo ? std::min(*lo, delta) : delta;
      hi = hi ? std::max(*hi, delta) : delta;
    }
    if (lo) r.measured_defect = std::max(r.measured_defect, *hi - *lo);
  }
  if (r.in_domain_points < quorum)
    throw Error(ErrorCode::DomainTooSmall, "only " + std::to_string(r.in_domain_points) + " in-domain pairs");
  G w = ops.identity;
  while (auto p = emb.find(w)) {
    r.witness_heights.push_back(p->x);
    w = ops.multiply(w, witness);
  }
  r.unbounded = r.witness_heights.size() >= 2;
  for (std::size_t i = 1; i < r.witness_heights.size(); ++i)
    if (r.witness_heights[i] <= r.witness_heights[i - 1]) r.unbounded = false;
  r.system = embedding_system(emb);
  r.declared_defect = r.measured_defect;
  return r;
}

}  // namespace qtorder
