// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Reference values come from the oracles in tests/oracles.hpp or from
// direct arithmetic here, never from the routine being checked.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qtorder/bounds.hpp"
#include "qtorder/braids.hpp"
#include "qtorder/dynamics.hpp"
#include "qtorder/fixtures.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/growth.hpp"
#include "qtorder/halfspace.hpp"
#include "qtorder/magnus.hpp"
#include "qtorder/mobius.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/pl_lift.hpp"
#include "qtorder/planar.hpp"
#include "qtorder/sampling.hpp"
#include "qtorder/suites.hpp"
#include "qtorder/tautological.hpp"

using namespace qtorder;

namespace {

Rational of(long long v) { return Rational(static_cast<long>(v)); }
Rational absq(const Rational& q) { return q < 0 ? Rational(-q) : q; }

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failed sub-checks; the first few are kept for the summary line.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome done() const {
    Outcome o;
    o.ok = failures_ == 0;
    std::ostringstream s;
    s << checks_ << " checks";
    if (!notes_.empty()) s << ", " << notes_;
    if (failures_) s << "; " << failures_ << " failed: " << detail_;
    o.detail = s.str();
    return o;
  }

 private:
  long long checks_ = 0, failures_ = 0;
  std::string detail_, notes_;
};

std::string modular_string(const ModularElement& g) {
  std::string s = format_modular(g);
  return s == "e" ? "" : s;
}

std::vector<std::vector<int>> all_words(const std::vector<int>& alphabet, int n) {
  std::vector<std::vector<int>> out{{}};
  std::size_t start = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (int l : alphabet) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(w);
      }
    start = end;
  }
  return out;
}

// ------------------------------------------------------------------- 1
Outcome rotation_numbers() {
  Checker c;
  Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    long long q = uniform(rng, 1, 50), p = uniform(rng, -3 * q, 3 * q);
    Rational target = make_rational(p, q);
    auto e = pl_rotation_number(PLLift::translation(target), 100);
    c.expect(e.lo == target && e.hi == target, "x+" + target.get_str());
  }
  return c.done();
}

// ------------------------------------------------------------------- 2
Outcome translation_defect() {
  Checker c;
  Rng rng(202);
  long long violations = 0;
  Rational worst = 0;
  for (int i = 0; i < 200; ++i) {
    PLLift f = random_pl_lift(rng), g = random_pl_lift(rng);
    const long long N = 256;
    auto ef = pl_rotation_number(f, N), eg = pl_rotation_number(g, N);
    auto efg = pl_rotation_number(pl_compose(f, g), N);
    // Brute orbit estimate of the composite, independent of the enclosure code.
    Rational x = 0;
    PLLift fg = pl_compose(f, g);
    for (long long k = 0; k < N; ++k) x = fg(x);
    c.expect(efg.intersects({x / of(N) - make_rational(1, N), x / of(N) + make_rational(1, N)}), "orbit estimate");
    Rational gap = absq(efg.midpoint() - ef.midpoint() - eg.midpoint());
    Rational slack = 1 + ef.width() + eg.width() + efg.width();
    if (gap > slack) ++violations;
    if (gap > worst) worst = gap;
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.note("max gap " + worst.get_str());
  return c.done();
}

// ------------------------------------------------------------------- 3
Outcome rademacher_criterion() {
  Checker c;
  c.expect(rademacher(modular_T1()) == 1, "f(T1)");
  c.expect(rademacher(modular_T2()) == -1, "f(T2)");
  c.expect(rademacher(modular_S()) == 0, "f(S)");
  c.expect(rademacher(modular_R()) == 0, "f(R)");

  for (const auto& g : modular_ball(4)) {
    auto syl = oracle::modular_syllables(modular_string(g));
    c.expect(rademacher(g) == oracle::modular_cyclic_count(syl), "oracle " + format_modular(g));
    c.expect(rademacher_raw(g) == oracle::modular_raw_count(syl), "raw oracle " + format_modular(g));
    for (long long n = 1; n <= 6; ++n)
      c.expect(rademacher(power(g, n)) == n * rademacher(g), "homogeneity " + format_modular(g));
  }

  // Sandwich with C = 6 against direct positivity: g moves every point of
  // the radius-6 ball strictly right in x.
  auto points = modular_ball(6);
  std::vector<std::vector<int>> point_syl;
  for (const auto& p : points) point_syl.push_back(oracle::modular_syllables(modular_string(p)));
  auto moves_right = [&](const ModularElement& g) {
    std::string gs = modular_string(g);
    for (std::size_t i = 0; i < points.size(); ++i) {
      long long before = oracle::modular_raw_count(point_syl[i]);
      long long after = oracle::modular_raw_count(oracle::modular_syllables(gs + modular_string(points[i])));
      if (after <= before) return Truth::False;
    }
    return Truth::True;
  };
  QuasimorphismHandle<ModularElement> f;
  f.eval = [](const ModularElement& g) { return of(rademacher_raw(g)); };
  f.defect_bound = of(bounds::kRademacherRawDefect);
  for (int radius : {8, 14}) {
    auto v = sandwich_verify<ModularElement>(moves_right, f, of(6), modular_ball(radius));
    c.expect(v.verified(), "sandwich radius " + std::to_string(radius));
    c.note("sandwich r" + std::to_string(radius) + " checked " + std::to_string(v.checked));
  }

  auto sys = rademacher_system();
  const long long d = bounds::kRademacherActionDefect, n = 8;
  auto act = modular_left_action(d);
  for (const auto& g : modular_ball(4)) {
    auto e = translation_number(sys, act, g, modular_identity(), n);
    long long target = oracle::modular_cyclic_count(oracle::modular_syllables(modular_string(g)));
    c.expect(absq(e.midpoint() - of(target)) <= make_rational(2 * d, n), "planar translation " + format_modular(g));
  }
  return c.done();
}

// ------------------------------------------------------------------- 4
Outcome brooks_criterion() {
  Checker c;
  const FreeWord ab = parse_free_word("ab");
  for (long long n = 0; n <= 20; ++n) c.expect(brooks_count(power(ab, n), ab) == n, "(ab)^" + std::to_string(n));

  const std::vector<FreeWord> actors{parse_free_word("a"), parse_free_word("b"), parse_free_word("A"),
                                     parse_free_word("B")};
  try {
    auto hair = brooks_hair_embedding(6);
    auto cnt = counting_embedding(6, ab);
    c.expect(hair.injective() && cnt.injective(), "injective");
    for (const auto& g : cnt.domain)
      c.expect(cnt.coords.at(g).x == 2 * oracle::brooks(g.letters, ab.letters), "counting x " + format_free_word(g));
    auto rh = embedding_quasi_action_verify(hair, free_group_ops(2), actors, ab);
    auto rc = embedding_quasi_action_verify(cnt, free_group_ops(2), actors, ab);
    c.expect(rh.measured_defect <= bounds::kHairActionDefect, "hair defect");
    c.expect(rc.measured_defect <= bounds::kCountingActionDefect, "counting defect");
    c.expect(rh.unbounded && rc.unbounded, "unbounded along ab");
    c.note("defects hair " + std::to_string(rh.measured_defect) + " counting " + std::to_string(rc.measured_defect));
  } catch (const Error& e) {
    c.expect(false, std::string(error_name(e.code())) + ": " + e.what());
  }

  Rng rng(404);
  auto hs = brooks_hair_system();
  auto cs = counting_system(ab);
  auto act_h = free_left_action(bounds::kHairActionDefect);
  auto act_c = free_left_action(bounds::kCountingActionDefect);
  const FreeWord e{2, {}};
  for (int i = 0; i < 10; ++i) {
    FreeWord g = random_free_word(rng, 2, 6);
    Rational target = of(2 * oracle::brooks_homogenized(g.letters, ab.letters));
    c.expect(translation_number(hs, act_h, g, e, 32).contains(target), "hair tn " + format_free_word(g));
    c.expect(translation_number(cs, act_c, g, e, 32).contains(target), "counting tn " + format_free_word(g));
  }
  return c.done();
}

// ------------------------------------------------------------------- 5
Outcome dehornoy_criterion() {
  Checker c;
  auto s = make_braid(2, {1});
  for (long long k = -10; k <= 10; ++k)
    c.expect(dehornoy_floor(power(s, k)) == oracle::floor_div(k, 2), "B2 floor " + std::to_string(k));
  c.expect(braid_translation_number(s, 64).contains(make_rational(1, 2)), "tn(sigma1)");

  auto words = all_words({1, -1, 2, -2}, 4);
  const std::size_t n = words.size();
  std::vector<BraidWord> braids;
  for (const auto& w : words) braids.push_back(make_braid(3, w));
  std::vector<std::vector<Comparison>> cmp(n, std::vector<Comparison>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cmp[i][j] = dehornoy_compare(braids[i], braids[j]);
  long long bad_total = 0, bad_anti = 0, bad_eq = 0, bad_trans = 0, bad_inv = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (cmp[i][j] == Comparison::Incomparable) ++bad_total;
      if (flip(cmp[i][j]) != cmp[j][i]) ++bad_anti;
      if ((cmp[i][j] == Comparison::Equal) != oracle::braid_equal(3, words[i], words[j])) ++bad_eq;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_leq(cmp[i][j])) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (is_leq(cmp[j][k]) && !is_leq(cmp[i][k])) ++bad_trans;
    }
  for (int g : {1, -1, 2, -2}) {
    auto gb = make_braid(3, {g});
    for (std::size_t i = 0; i < n; i += 3)
      for (std::size_t j = 0; j < n; j += 2)
        if (dehornoy_compare(multiply(gb, braids[i]), multiply(gb, braids[j])) != cmp[i][j]) ++bad_inv;
  }
  c.expect(bad_total == 0, "totality");
  c.expect(bad_anti == 0, "antisymmetry");
  c.expect(bad_eq == 0, "equality vs Artin action");
  c.expect(bad_trans == 0, "transitivity");
  c.expect(bad_inv == 0, "left invariance");
  c.note(std::to_string(n) + " words");

  Rng rng(505);
  const auto d3 = delta_sq(3);
  for (int i = 0; i < 50; ++i) {
    long long m = uniform(rng, -4, 4);
    BraidWord b = random_braid(rng, 3, 8);
    c.expect(dehornoy_floor(multiply(power(d3, m), b)) == m + dehornoy_floor(b), "central shift");
  }
  return c.done();
}

// ------------------------------------------------------------------- 6
Outcome magnus_criterion() {
  Checker c;
  auto order = magnus_order(2);
  const FreeWord x2 = parse_free_word("b");
  Rng rng(606);
  auto mu = [](const FreeWord& h) {
    long long n = 0;
    for (int l : h.letters) n += l == 2 ? 1 : (l == -2 ? -1 : 0);
    return n;
  };
  for (int i = 0; i < 20; ++i) {
    FreeWord h = random_free_word(rng, 2, 5);
    long long mh = mu(h);
    auto res = growth_gamma(order, x2, h, 10, [mh](long long n) { return sandwich_window(n, of(1), of(mh)); });
    for (long long n = 1; n <= 10; ++n)
      c.expect(std::llabs(res.gamma[n - 1] - n * mh) <= 2, "gamma_" + std::to_string(n) + " " + format_free_word(h));
    c.expect(res.enclosure.contains(of(mh)), "enclosure " + format_free_word(h));
  }
  auto ball = ball_enumerate(2, 2);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      Comparison cuv = magnus_compare(u, v);
      c.expect(cuv != Comparison::Incomparable, "total");
      for (const auto& g : ball) {
        c.expect(magnus_compare(multiply(g, u), multiply(g, v)) == cuv, "left");
        c.expect(magnus_compare(multiply(u, g), multiply(v, g)) == cuv, "right");
      }
    }
  return c.done();
}

// ------------------------------------------------------------------- 7
Outcome completion_invariance() {
  Checker c;
  auto t = gap_fixture_triple();
  auto done = completion(t);
  std::vector<GapPoint> pts;
  for (long long a = -10; a <= 9; ++a)
    for (int i = 0; i < 2; ++i) pts.push_back({a, i});
  // Original height: least m with T^m b >= a, i.e. b + m = a on the same
  // row or b + m >= a + 2.
  for (const auto& a : pts)
    for (const auto& b : pts) {
      long long expect = a.a - b.a + (a.i == b.i ? 0 : 2);
      c.expect(relative_t_height(done, a, b) == expect, "pair");
    }
  c.note(std::to_string(pts.size()) + " points");
  return c.done();
}

// ------------------------------------------------------------------- 8
Outcome twist_bounds() {
  Checker c;
  auto t = twist_triple();
  const long long CX = *t.CX;
  auto x0 = twist_point(of(0), of(0));
  auto sys = triple_to_halfspace(t, x0);
  auto act = automorphism_action<TwistAuto, TwistPoint>(t, twist_group(), twist_act);
  act.defect = 4 * CX + 2;
  std::vector<TwistPoint> pts;
  for (long long k = -12; k <= 12; ++k)
    for (long long p = 0; p < 4; ++p) pts.push_back(twist_point(make_rational(k, 4), make_rational(p, 4)));
  std::vector<TwistAuto> autos{{PLLift({of(0), make_rational(1, 2)}, {make_rational(1, 4), make_rational(3, 4)}),
                                make_rational(1, 3)},
                               {PLLift::translation(make_rational(-7, 5)), make_rational(1, 2)},
                               {PLLift({of(0), make_rational(1, 3)}, {of(0), make_rational(2, 3)}), of(0)},
                               {PLLift::translation(make_rational(3, 2)), make_rational(3, 4)}};
  DefectSample<TwistAuto, TwistPoint> sample;
  for (const auto& g : autos)
    for (const auto& a : pts)
      for (const auto& b : pts) sample.emplace_back(g, a, b);
  try {
    long long measured = qa_defect_estimate(sys, act, sample);
    c.expect(measured <= 4 * CX + 2, "defect");
    c.note("defect " + std::to_string(measured) + " <= " + std::to_string(4 * CX + 2));
  } catch (const Error& e) {
    c.expect(false, e.what());
  }
  long long width_violations = 0;
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (relative_height(sys, a, b) >= sys.width && !t.order.leq(b, a)) ++width_violations;
  c.expect(width_violations == 0, std::to_string(width_violations) + " width violations");
  return c.done();
}

// ------------------------------------------------------------------- 9
Outcome dynamical_realization_b2() {
  Checker c;
  auto s1 = make_braid(2, {1});
  OrderSample<BraidWord> s{braid_ops(2), dehornoy_compare, power(s1, 2), {}};
  for (long long k = -6; k <= 6; ++k) s.elements.push_back(power(s1, k));
  auto res = dynamical_realization(s);
  std::vector<long long> k(s.elements.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = oracle::b2_exponent(s.elements[i].letters);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[i] < k[j]) c.expect(res.t[i] < res.t[j], "order");
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] == k[i] + 2) c.expect(res.t[j] == res.t[i] + 1, "shift");
  for (std::size_t i = 0; i < k.size(); ++i) {
    long long h = -oracle::floor_div(-k[i], 2);
    c.expect(absq(res.t[i] - of(h)) < 3, "ito bound");
  }
  c.expect(res.report.pass(), "library report");
  return c.done();
}

// ------------------------------------------------------------------- 10
Outcome hyperbolic_criterion() {
  Checker c;
  const long long N = 10000;
  auto find = [](const std::string& name) {
    for (const auto& f : hyperbolic_fixtures())
      if (f.name == name) return f;
    throw Error(ErrorCode::InvalidArgument, "missing fixture " + name);
  };
  struct Row {
    std::string name;
    double expect_tn;  // NaN: only |tn| >= 0.05 required
    bool bounded;
  };
  const double theta = std::sqrt(2.0) - 1.0;  // rotation angle over pi
  for (const Row& row : {Row{"parabolic", 0.0, true}, Row{"translation", 1.0, false}, Row{"elliptic", theta, false}}) {
    auto fx = find(row.name);
    auto tn = mobius_translation_number(fx.generators[0], N);
    auto v = orbit_bounded_test({line_map(fx.generators[0])}, fx.base, 16);
    c.expect(std::fabs(tn.value - row.expect_tn) <= tn.abs_err, row.name + " translation number");
    c.expect(v.bounded == row.bounded, row.name + " orbit verdict");
    bool zero = std::fabs(tn.value) <= tn.abs_err;
    c.expect(zero == v.bounded, row.name + " dichotomy");
    if (row.name == "elliptic") c.expect(std::fabs(tn.value) >= 0.05, "elliptic nonzero");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s tn=%.6f %s", row.name.c_str(), tn.value, v.bounded ? "BOUNDED" : "UNBOUNDED");
    c.note(buf);
  }
  return c.done();
}

// ------------------------------------------------------------------- 11
Outcome tautological_criterion() {
  Checker c;
  const FreeWord ab = parse_free_word("ab");
  auto hom = [&ab](const FreeWord& g) { return oracle::brooks_homogenized(g.letters, ab.letters); };
  // Measured defect of the homogenized count on pairs from the radius-3 ball.
  auto ball3 = ball_enumerate(2, 3);
  long long D = 0;
  for (const auto& u : ball3)
    for (const auto& v : ball3) D = std::max(D, std::llabs(hom(multiply(u, v)) - hom(u) - hom(v)));
  c.note("D = " + std::to_string(D));

  QuasimorphismHandle<FreeWord> f;
  f.eval = [hom](const FreeWord& g) { return of(hom(g)); };
  f.defect_bound = of(D);
  f.homogeneous = true;
  auto ops = free_group_ops(2);
  auto t = tautological_order(ops, f, ab, {});
  RegisteredAction<FreeWord, FreeWord> left;
  left.group = ops;
  left.act = [](const FreeWord& g, const FreeWord& x) { return multiply(g, x); };

  Rng rng(1111);
  std::vector<std::pair<FreeWord, FreeWord>> sample;
  for (int i = 0; i < 500; ++i) sample.emplace_back(random_free_word(rng, 2, 4), random_free_word(rng, 2, 4));
  long long certified = 0;
  for (const auto& g : ball_enumerate(2, 6)) {
    if (hom(g) <= D) continue;
    ++certified;
    c.expect(t.strictly_less(FreeWord{2, {}}, g) == Certificate::PositiveCertified, "certificate");
    c.expect(induced_order_test(t.order(), left, g, sample).verified(), "induced " + format_free_word(g));
  }
  c.expect(certified > 0, "no certified element");
  c.note(std::to_string(certified) + " certified elements");
  return c.done();
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rotation numbers exact", 1, rotation_numbers},
      {2, "translation-number defect", 10, translation_defect},
      {3, "rademacher", 60, rademacher_criterion},
      {4, "brooks", 120, brooks_criterion},
      {5, "dehornoy", 120, dehornoy_criterion},
      {6, "magnus growth", 60, magnus_criterion},
      {7, "completion invariance", 60, completion_invariance},
      {8, "twist half-space bounds", 60, twist_bounds},
      {9, "dynamical realization", 10, dynamical_realization_b2},
      {10, "hyperbolic dichotomy", 30, hyperbolic_criterion},
      {11, "tautological realization", 120, tautological_criterion},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_s;
    bool pass = o.ok && in_time;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, cr.limit_s);
    std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << "  " << cr.name << "  [" << timing
              << (in_time ? "" : " over limit") << "]  " << o.detail << "\n";
  }
  return all ? 0 : 1;
}
