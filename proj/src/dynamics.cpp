#include "qtorder/dynamics.hpp"

#include <cmath>

namespace qtorder {

LineMap line_map(const MobiusLift& f) {
  MobiusLift inv = mobius_invert(f);
  return {[f](double x) { return mobius_act(f, x); }, [inv](double x) { return mobius_act(inv, x); }};
}

LineMap line_map(const PLLift& f) {
  PLLift inv = pl_invert(f);
  // Exact evaluation on the dyadic value of x, rounded back to double.
  auto eval = [](const PLLift& g, double x) { return g(Rational(x)).get_d(); };
  return {[f, eval](double x) { return eval(f, x); }, [inv, eval](double x) { return eval(inv, x); }};
}

namespace {

struct Node {
  double x;
  int last;  // last letter applied (0 for the base point)
  std::size_t parent;
};

long long key_of(double x) { return std::llround(x * 1e12); }

}  // namespace

OrbitVerdict orbit_bounded_test(const std::vector<LineMap>& generators, double base, int L, double threshold) {
  if (L < 0 || L > caps().orbit_horizon)
    throw Error(ErrorCode::CapExceeded, "orbit horizon " + std::to_string(L) + " outside 0.." +
                                            std::to_string(caps().orbit_horizon));
  std::vector<Node> nodes{{base, 0, 0}};
  std::map<std::pair<long long, int>, bool> seen;  // (point, last letter) states
  seen[{key_of(base), 0}] = true;
  std::vector<std::size_t> layer{0};
  double drift_half = 0.0, drift = 0.0;
  std::size_t best = 0;
  OrbitVerdict v;
  v.lo = v.hi = base;
  for (int len = 1; len <= L; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t id : layer) {
      for (std::size_t gi = 0; gi < generators.size(); ++gi)
        for (int sign : {1, -1}) {
          int letter = sign * static_cast<int>(gi + 1);
          if (letter == -nodes[id].last) continue;
          double y = sign > 0 ? generators[gi].forward(nodes[id].x) : generators[gi].backward(nodes[id].x);
          auto key = std::make_pair(key_of(y), letter);
          if (seen.count(key)) continue;
          seen[key] = true;
          nodes.push_back({y, letter, id});
          next.push_back(nodes.size() - 1);
          v.lo = std::min(v.lo, y);
          v.hi = std::max(v.hi, y);
          if (std::fabs(y - base) > drift) {
            drift = std::fabs(y - base);
            best = nodes.size() - 1;
          }
        }
    }
    layer = std::move(next);
    if (len == L / 2) drift_half = drift;
  }
  v.drift = drift;
  v.points = static_cast<long long>(nodes.size());
  v.bounded = drift <= threshold && drift - drift_half <= 0.5;
  if (!v.bounded) {
    for (std::size_t id = best; id != 0; id = nodes[id].parent) v.witness.push_back(nodes[id].last);
    std::reverse(v.witness.begin(), v.witness.end());
  }
  return v;
}

}  // namespace qtorder
