#pragma once

#include <vector>

#include "qtorder/halfspace.hpp"
#include "qtorder/triples.hpp"

namespace qtorder {

enum class Certificate { PositiveCertified, Falsified, Inconclusive };

inline std::string_view certificate_name(Certificate c) {
  switch (c) {
    case Certificate::PositiveCertified: return "POSITIVE_CERTIFIED";
    case Certificate::Falsified: return "FALSIFIED";
    case Certificate::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// x <_f y iff f(g x) < f(g y) for every g. Positives are only certified by
/// the defect criterion f(x^{-1} y) > D, which gives f(g y) >= f(g x) +
/// f(x^{-1} y) - D > f(g x); negatives come from the falsifier sample.
template <class G>
struct TautologicalOrder {
  GroupOps<G> group;
  QuasimorphismHandle<G> f;
  Rational D;
  G h;
  std::vector<G> falsifiers;

  Certificate strictly_less(const G& x, const G& y) const {
    if (f.eval(group.multiply(group.inverse(x), y)) > D) return Certificate::PositiveCertified;
    for (const auto& g : falsifiers)
      if (f.eval(group.multiply(g, x)) >= f.eval(group.multiply(g, y))) return Certificate::Falsified;
    return Certificate::Inconclusive;
  }

  /// Semi-decidable: Incomparable also covers "not certified".
  PartialOrder<G> order() const {
    PartialOrder<G> o;
    auto self = *this;
    o.compare = [self](const G& x, const G& y) {
      if (self.group.equal(x, y)) return Comparison::Equal;
      if (self.f.eval(self.group.multiply(self.group.inverse(x), y)) > self.D) return Comparison::Less;
      if (self.f.eval(self.group.multiply(self.group.inverse(y), x)) > self.D) return Comparison::Greater;
      return Comparison::Incomparable;
    };
    o.decidable = false;
    return o;
  }

  /// (G, <=_f, right multiplication by h). With homogeneous f one of
  /// f(a^{-1} b), f(b^{-1} a) is >= 0, and k f(h) > 2D then certifies a
  /// comparison after k steps, so NX = floor(2D / f(h)) + 1.
  QuasiTotalTriple<G> triple() const {
    Rational fh = f.eval(h);
    if (fh <= 0) throw Error(ErrorCode::InvalidArgument, "tautological triple needs f(h) > 0");
    QuasiTotalTriple<G> t;
    t.name = "tautological";
    t.order = order();
    auto ops = group;
    auto hh = h;
    t.shift = [ops, hh](const G& x, long long m) { return ops.multiply(x, power(ops, hh, m)); };
    t.NX = to_int64(floor(2 * D / fh)) + 1;
    t.complete = fh > D;
    if (t.complete) t.CX = t.NX;
    return t;
  }
};

template <class G>
TautologicalOrder<G> tautological_order(const GroupOps<G>& group, const QuasimorphismHandle<G>& f, const G& h,
                                        std::vector<G> falsifiers) {
  if (!f.homogeneous || !f.defect_bound)
    throw Error(ErrorCode::InvalidArgument, "tautological order needs a homogeneous f with a defect bound");
  TautologicalOrder<G> t{group, f, *f.defect_bound, h, std::move(falsifiers)};
  return t;
}

}  // namespace qtorder
