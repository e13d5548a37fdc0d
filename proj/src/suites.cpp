#include "qtorder/suites.hpp"

#include <cmath>
#include <functional>

#include "qtorder/bounds.hpp"
#include "qtorder/braids.hpp"
#include "qtorder/dynamics.hpp"
#include "qtorder/fixtures.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/growth.hpp"
#include "qtorder/magnus.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/pl_lift.hpp"
#include "qtorder/planar.hpp"
#include "qtorder/sampling.hpp"
#include "qtorder/tautological.hpp"
#include "qtorder/triples.hpp"

namespace qtorder {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"order-axioms", "defects",   "sandwich", "growth-vs-qm", "completion",
                                          "total-order",  "hyperbolic", "dynreal",  "all"};
  return s;
}

std::vector<HyperbolicFixture> hyperbolic_fixtures() {
  const double pi = std::acos(-1.0);
  const double alpha = pi * (std::sqrt(2.0) - 1.0);
  return {
      {"parabolic", {make_mobius(1, 1, 0, 1, 0)}, 0.5, true},
      {"translation", {make_mobius(1, 0, 0, 1, 1)}, 0.5, false},
      {"elliptic", {make_mobius(std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha), 0)}, 0.5, false},
      {"parabolic-pair", {make_mobius(1, 1, 0, 1, 0), make_mobius(1, 2, 0, 1, 0)}, 0.5, true},
  };
}

namespace {

Rational of(long long v) { return Rational(static_cast<long>(v)); }

/// A measured quantity checked against a declared bound.
Report bounded_measure(const std::string& name, long long measured, long long bound, long long samples) {
  Report r = Report::exact_value(name, of(measured));
  r.samples = samples;
  r.status = measured <= bound ? Status::Pass : Status::Fail;
  r.notes.push_back("declared bound " + std::to_string(bound));
  return r;
}

Report check(const std::string& name, bool ok, long long samples, const std::string& witness = {}) {
  Report r = Report::check(name, ok, samples);
  if (!ok && !witness.empty()) r.notes.push_back("witness " + witness);
  return r;
}

/// Runs an item, turning library errors into FAIL reports.
void run_item(std::vector<Report>& out, const std::function<std::vector<Report>()>& item, const std::string& name) {
  try {
    for (auto& r : item()) out.push_back(std::move(r));
  } catch (const Error& e) {
    Report r = Report::check(name, false, 0);
    r.notes.push_back(e.what());
    out.push_back(std::move(r));
  }
}

std::string fw(const FreeWord& w) { return format_free_word(w); }
std::string bw(const BraidWord& b) { return b.empty() ? "e" : format_braid(b); }

template <class T, class Cmp>
std::optional<std::string> order_axioms(const std::vector<T>& xs, Cmp cmp, const std::function<std::string(const T&)>& show,
                                        long long& count) {
  for (const auto& a : xs)
    for (const auto& b : xs) {
      ++count;
      Comparison ab = cmp(a, b), ba = cmp(b, a);
      if (ab != flip(ba)) return "antisymmetry at (" + show(a) + ", " + show(b) + ")";
      if (ab == Comparison::Incomparable) return "incomparable pair (" + show(a) + ", " + show(b) + ")";
    }
  for (const auto& a : xs)
    for (const auto& b : xs) {
      if (cmp(a, b) != Comparison::Less) continue;
      for (const auto& c : xs) {
        ++count;
        if (cmp(b, c) == Comparison::Less && cmp(a, c) != Comparison::Less)
          return "transitivity at (" + show(a) + ", " + show(b) + ", " + show(c) + ")";
      }
    }
  return std::nullopt;
}

std::vector<BraidWord> braid_ball(int strands, int length) {
  std::vector<BraidWord> out;
  std::vector<std::vector<int>> layer{{}};
  for (int L = 0; L <= length; ++L) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      out.push_back(make_braid(strands, w));
      if (L == length) continue;
      for (int g = 1; g < strands; ++g)
        for (int l : {g, -g}) {
          if (!w.empty() && w.back() == -l) continue;
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<TwistPoint> twist_sample() {
  std::vector<TwistPoint> pts;
  for (long long k = -8; k <= 8; ++k)
    for (long long p = 0; p < 3; ++p) pts.push_back(twist_point(make_rational(k, 4), make_rational(p, 3)));
  return pts;
}

std::vector<TwistAuto> twist_autos(Rng& rng, int count) {
  std::vector<TwistAuto> out{{PLLift(), Rational(0)}, {PLLift::translation(make_rational(1, 2)), make_rational(1, 3)}};
  while (static_cast<int>(out.size()) < count) out.push_back({random_pl_lift(rng, 3, 8, 1), random_unit_rational(rng, 6)});
  return out;
}

// ---------------------------------------------------------------- order-axioms

std::vector<Report> suite_order_axioms(const SuiteOptions& opt) {
  std::vector<Report> out;
  const int radius = opt.radius.value_or(4);
  Rng rng(opt.seed);

  run_item(out, [&] {
    HalfspaceSystem<Rational> sys = line_system();
    long long n = 0;
    std::optional<std::string> bad;
    for (long long i = -12; i <= 12 && !bad; ++i)
      for (long long j = -12; j <= 12 && !bad; ++j) {
        Rational a = make_rational(i, 4), b = make_rational(j, 4);
        ++n;
        if (relative_height(sys, a, b) >= sys.width && !sys.order.leq(b, a)) bad = to_string(a) + ", " + to_string(b);
      }
    return std::vector<Report>{check("line_width_soundness", !bad, n, bad.value_or(""))};
  }, "line_width_soundness");

  run_item(out, [&] {
    auto ball = ball_enumerate(2, std::min(radius, 2));
    long long n = 0;
    auto bad = order_axioms<FreeWord>(ball, magnus_compare, fw, n);
    if (!bad) {
      auto ball1 = ball_enumerate(2, 1);
      for (const auto& u : ball)
        for (const auto& v : ball) {
          if (bad) break;
          Comparison c = magnus_compare(u, v);
          for (const auto& w : ball1)
            for (const auto& k : ball1) {
              ++n;
              if (!bad && magnus_compare(multiply(multiply(w, u), k), multiply(multiply(w, v), k)) != c)
                bad = "bi-invariance at (" + fw(u) + ", " + fw(v) + ", " + fw(w) + ", " + fw(k) + ")";
            }
        }
    }
    return std::vector<Report>{check("magnus_order_axioms", !bad, n, bad.value_or(""))};
  }, "magnus_order_axioms");

  run_item(out, [&] {
    auto ball = braid_ball(3, std::min(radius, 3));
    long long n = 0;
    auto bad = order_axioms<BraidWord>(ball, dehornoy_compare, bw, n);
    for (const auto& u : ball)
      for (const auto& v : ball) {
        if (bad) break;
        Comparison c = dehornoy_compare(u, v);
        for (int l : {1, -1, 2, -2}) {
          ++n;
          BraidWord g = make_braid(3, {l});
          if (dehornoy_compare(multiply(g, u), multiply(g, v)) != c)
            bad = "left invariance at (" + bw(u) + ", " + bw(v) + ", " + std::to_string(l) + ")";
        }
      }
    return std::vector<Report>{check("dehornoy_order_axioms", !bad, n, bad.value_or(""))};
  }, "dehornoy_order_axioms");

  run_item(out, [&] {
    std::vector<PLLift> lifts{PLLift(), PLLift::translation(Rational(1))};
    while (lifts.size() < 16) lifts.push_back(random_pl_lift(rng));
    auto cmp = [](const PLLift& f, const PLLift& g) { return homeo_lex_compare(f, g).result; };
    long long n = 0;
    auto bad = order_axioms<PLLift>(lifts, cmp, pl_to_json, n);
    std::vector<PLLift> hs;
    for (int i = 0; i < 4; ++i) hs.push_back(random_pl_lift(rng));
    for (const auto& f : lifts)
      for (const auto& g : lifts)
        for (const auto& h : hs) {
          if (bad) break;
          ++n;
          if (cmp(pl_compose(h, f), pl_compose(h, g)) != cmp(f, g)) bad = "left invariance " + pl_to_json(f);
        }
    return std::vector<Report>{check("pl_lex_order_axioms", !bad, n, bad.value_or(""))};
  }, "pl_lex_order_axioms");

  run_item(out, [&] {
    auto t = twist_triple();
    auto pts = twist_sample();
    bool ok = !quasi_totality_violation(t, pts) && !completeness_violation(t, pts) && !monotonicity_violation(t, pts) &&
              !dominance_violation(t, pts, 64);
    long long n = static_cast<long long>(pts.size() * pts.size());
    return std::vector<Report>{check("twist_triple_invariants", ok, n)};
  }, "twist_triple_invariants");

  run_item(out, [&] {
    auto t = dehornoy_triple(3);
    auto pts = braid_ball(3, std::min(radius, 2));
    bool ok = !quasi_totality_violation(t, pts) && !completeness_violation(t, pts) && !monotonicity_violation(t, pts) &&
              !dominance_violation(t, pts, 16);
    long long n = static_cast<long long>(pts.size() * pts.size());
    return std::vector<Report>{check("dehornoy_triple_invariants", ok, n)};
  }, "dehornoy_triple_invariants");
  return out;
}

// ---------------------------------------------------------------- defects

std::vector<Report> suite_defects(const SuiteOptions& opt) {
  std::vector<Report> out;
  const int radius = opt.radius.value_or(5);
  Rng rng(opt.seed);
  const FreeWord ab = parse_free_word("ab");

  run_item(out, [&] {
    auto ball = ball_enumerate(2, std::min(radius, 5));
    long long raw = 0, hom = 0, n = 0;
    for (const auto& u : ball)
      for (const auto& v : ball) {
        ++n;
        FreeWord uv = multiply(u, v);
        raw = std::max(raw, std::llabs(brooks_count(uv, ab) - brooks_count(u, ab) - brooks_count(v, ab)));
        hom = std::max(hom, std::llabs(brooks_cyclic(uv, ab) - brooks_cyclic(u, ab) - brooks_cyclic(v, ab)));
      }
    return std::vector<Report>{bounded_measure("brooks_defect", raw, bounds::kBrooksDefect, n),
                               bounded_measure("brooks_homogenized_defect", hom, bounds::kBrooksHomDefect, n)};
  }, "brooks_defect");

  run_item(out, [&] {
    auto ball = modular_ball(std::min(radius, 3));
    long long raw = 0, hom = 0, n = 0;
    for (const auto& u : ball)
      for (const auto& v : ball) {
        ++n;
        ModularElement uv = multiply(u, v);
        raw = std::max(raw, std::llabs(rademacher_raw(uv) - rademacher_raw(u) - rademacher_raw(v)));
        hom = std::max(hom, std::llabs(rademacher(uv) - rademacher(u) - rademacher(v)));
      }
    return std::vector<Report>{bounded_measure("rademacher_raw_defect", raw, bounds::kRademacherRawDefect, n),
                               bounded_measure("rademacher_defect", hom, bounds::kRademacherDefect, n)};
  }, "rademacher_defect");

  run_item(out, [&] {
    auto sys = rademacher_system();
    auto act = modular_left_action(bounds::kRademacherActionDefect);
    auto actors = modular_ball(3), points = modular_ball(6);
    long long d = qa_defect_over_points(sys, act, actors, points);
    return std::vector<Report>{bounded_measure("rademacher_action_defect", d, bounds::kRademacherActionDefect,
                                               static_cast<long long>(actors.size() * points.size()))};
  }, "rademacher_action_defect");

  run_item(out, [&] {
    const int r = std::min(radius + 1, 6);
    auto ops = free_group_ops(2);
    auto actors = ball_enumerate(2, 1);
    auto hair = brooks_hair_embedding(r);
    auto hr = embedding_quasi_action_verify(hair, ops, actors, ab);
    auto counting = counting_embedding(r, ab);
    auto cr = embedding_quasi_action_verify(counting, ops, actors, ab);
    Report h = bounded_measure("hair_embedding_defect", hr.measured_defect, bounds::kHairActionDefect, hr.in_domain_points);
    if (!hr.unbounded || !hair.injective()) h.status = Status::Fail;
    Report c = bounded_measure("counting_embedding_defect", cr.measured_defect, bounds::kCountingActionDefect,
                               cr.in_domain_points);
    if (!cr.unbounded || !counting.injective()) c.status = Status::Fail;
    return std::vector<Report>{h, c};
  }, "embedding_defects");

  run_item(out, [&] {
    const long long N = opt.iters.value_or(200);
    long long bad = 0;
    Rational worst(0);
    const int pairs = 200;
    for (int i = 0; i < pairs; ++i) {
      PLLift f = random_pl_lift(rng), g = random_pl_lift(rng);
      auto ef = pl_rotation_number(f, N), eg = pl_rotation_number(g, N), efg = pl_rotation_number(pl_compose(f, g), N);
      Rational gap = efg.midpoint() - ef.midpoint() - eg.midpoint();
      if (gap < 0) gap = -gap;
      Rational slack = 1 + efg.width() + ef.width() + eg.width();
      if (gap > slack) ++bad;
      if (gap - slack + 1 > worst) worst = gap - slack + 1;
    }
    Report r = Report::check("pl_translation_defect", bad == 0, pairs);
    r.notes.push_back(std::to_string(bad) + " violations");
    return std::vector<Report>{r};
  }, "pl_translation_defect");

  run_item(out, [&] {
    long long worst = 0;
    const int pairs = 100;
    for (int i = 0; i < pairs; ++i) {
      BraidWord u = random_braid(rng, 3, 6), v = random_braid(rng, 3, 6);
      worst = std::max(worst, std::llabs(dehornoy_floor(multiply(u, v)) - dehornoy_floor(u) - dehornoy_floor(v)));
    }
    return std::vector<Report>{bounded_measure("braid_floor_defect", worst, bounds::kBraidFloorDefect, pairs)};
  }, "braid_floor_defect");

  run_item(out, [&] {
    auto t = twist_triple();
    auto sys = triple_to_halfspace(t, twist_point(Rational(0), Rational(0)));
    auto act = automorphism_action<TwistAuto, TwistPoint>(t, twist_group(), twist_act);
    auto pts = twist_sample();
    auto autos = twist_autos(rng, 8);
    DefectSample<TwistAuto, TwistPoint> sample;
    for (const auto& g : autos)
      for (const auto& a : pts)
        for (const auto& b : pts) sample.emplace_back(g, a, b);
    long long d = qa_defect_estimate(sys, act, sample);
    long long width_bad = 0;
    for (const auto& a : pts)
      for (const auto& b : pts)
        if (relative_height(sys, a, b) >= sys.width && !sys.order.leq(b, a)) ++width_bad;
    Report r = bounded_measure("twist_action_defect", d, 4 * *t.CX + 2, static_cast<long long>(sample.size()));
    Report w = check("twist_width_soundness", width_bad == 0, static_cast<long long>(pts.size() * pts.size()));
    return std::vector<Report>{r, w};
  }, "twist_action_defect");
  return out;
}

// ---------------------------------------------------------------- sandwich

std::vector<Report> suite_sandwich(const SuiteOptions& opt) {
  std::vector<Report> out;
  Rng rng(opt.seed);
  const auto points = modular_ball(6);
  QuasimorphismHandle<ModularElement> f;
  f.eval = [](const ModularElement& g) { return of(rademacher_raw(g)); };
  f.defect_bound = of(bounds::kRademacherRawDefect);
  auto positive = [&points](const ModularElement& g) {
    return g.empty() ? Truth::True : rademacher_moves_right(g, points);
  };

  for (int radius : {8, 14}) {
    std::string name = "rademacher_sandwich_C6_r" + std::to_string(radius);
    run_item(out, [&] {
      auto v = sandwich_verify<ModularElement>(positive, f, of(6), modular_ball(radius));
      Report r = check(name, v.verified(), v.checked, v.witness ? format_modular(*v.witness) : "");
      r.notes.push_back(std::to_string(v.checked) + " elements with f >= 6");
      return std::vector<Report>{r};
    }, name);
  }

  run_item(out, [&] {
    auto v = sandwich_verify<ModularElement>(positive, f, of(0), modular_ball(4));
    Report r = check("rademacher_sandwich_C0_falsified", v.falsified(), v.checked);
    if (v.witness) r.notes.push_back("falsified at " + format_modular(*v.witness));
    return std::vector<Report>{r};
  }, "rademacher_sandwich_C0_falsified");

  run_item(out, [&] {
    auto sys = rademacher_system();
    auto act = modular_left_action(bounds::kRademacherActionDefect);
    auto v = induced_order_test(sys, act, modular_T2(), {{modular_identity(), modular_identity()}});
    return std::vector<Report>{check("induced_order_T2_falsified", v.falsified(), v.checked)};
  }, "induced_order_T2_falsified");

  run_item(out, [&] {
    long long n = 0, bad = 0;
    for (int i = 0; i < 40; ++i) {
      PLLift h = pl_compose(PLLift::translation(of(11)), random_pl_lift(rng));
      auto T = pl_rotation_number(h, 64);
      if (!(T.lo > 10)) continue;
      ++n;
      if (homeo_lex_compare(h, PLLift()).result != Comparison::Greater) ++bad;
    }
    return std::vector<Report>{check("pl_lex_sandwich", bad == 0 && n > 0, n)};
  }, "pl_lex_sandwich");

  run_item(out, [&] {
    const FreeWord ab = parse_free_word("ab");
    QuasimorphismHandle<FreeWord> q;
    q.eval = [ab](const FreeWord& w) { return of(brooks_cyclic(w, ab)); };
    q.defect_bound = of(bounds::kBrooksHomDefect);
    q.homogeneous = true;
    auto ops = free_group_ops(2);
    auto taut = tautological_order(ops, q, ab, ball_enumerate(2, 3));
    RegisteredAction<FreeWord, FreeWord> act;
    act.group = ops;
    act.act = [](const FreeWord& g, const FreeWord& x) { return multiply(g, x); };
    auto order = taut.order();
    auto ball = ball_enumerate(2, 6);
    std::vector<std::pair<FreeWord, FreeWord>> sample;
    for (int i = 0; i < 50; ++i)
      sample.emplace_back(random_free_word(rng, 2, 6), random_free_word(rng, 2, 6));
    long long certified = 0, bad = 0;
    for (const auto& g : ball) {
      if (!(q.eval(g) > taut.D)) continue;
      ++certified;
      if (!induced_order_test(order, act, g, sample).verified()) ++bad;
    }
    Report r = check("tautological_certified_positive", bad == 0 && certified > 0, certified);
    return std::vector<Report>{r};
  }, "tautological_certified_positive");
  return out;
}

// ---------------------------------------------------------------- growth-vs-qm

std::vector<Report> suite_growth(const SuiteOptions& opt) {
  std::vector<Report> out;
  Rng rng(opt.seed);
  const long long N = opt.iters.value_or(10);

  run_item(out, [&] {
    BiInvariantOrder<long long> z;
    z.group.multiply = [](long long a, long long b) { return a + b; };
    z.group.inverse = [](long long a) { return -a; };
    z.group.identity = 0;
    z.group.equal = [](long long a, long long b) { return a == b; };
    z.compare = [](long long a, long long b) { return compare_values(a, b); };
    z.total = true;
    long long g4 = growth_gamma_n(z, 2LL, 3LL, 4, fallback_window(4));
    auto res = growth_gamma(z, 2LL, 3LL, N, [](long long n) { return fallback_window(n); });
    bool ok = g4 == 6 && res.enclosure.contains(make_rational(3, 2));
    return std::vector<Report>{[&] {
      Report r = Report::enclosed("integer_growth", res.enclosure);
      r.samples = N;
      r.status = ok ? Status::Pass : Status::Fail;
      return r;
    }()};
  }, "integer_growth");

  run_item(out, [&] {
    auto order = magnus_order(2);
    const FreeWord x2 = parse_free_word("b");
    long long bad_gap = 0, bad_enc = 0, n_checked = 0;
    std::string witness;
    for (int i = 0; i < 10; ++i) {
      FreeWord h = random_free_word(rng, 2, 4);
      long long mh = counting_hom(h, 2);
      auto res = growth_gamma(order, x2, h, N, [mh](long long n) { return sandwich_window(n, of(1), of(mh)); });
      for (long long n = 1; n <= N; ++n) {
        ++n_checked;
        if (std::llabs(res.gamma[n - 1] - n * mh) > 2) {
          ++bad_gap;
          if (witness.empty()) witness = fw(h);
        }
      }
      if (!res.enclosure.contains(of(mh))) {
        ++bad_enc;
        if (witness.empty()) witness = fw(h);
      }
    }
    return std::vector<Report>{check("magnus_growth_matches_counting", bad_gap == 0 && bad_enc == 0, n_checked, witness)};
  }, "magnus_growth_matches_counting");

  run_item(out, [&] {
    auto order = magnus_order(2);
    const FreeWord x2 = parse_free_word("b");
    long long bad = 0, n_checked = 0;
    auto gamma = [&](const FreeWord& h, long long n) {
      return growth_gamma_n(order, x2, h, n, sandwich_window(n, of(1), of(counting_hom(h, 2))));
    };
    for (int i = 0; i < 5; ++i) {
      FreeWord a = random_free_word(rng, 2, 3), b = random_free_word(rng, 2, 3);
      FreeWord prod = multiply(a, b);
      for (long long n = 1; n <= std::min<long long>(N, 6); ++n) {
        ++n_checked;
        long long s = gamma(a, n) + gamma(b, n), p = gamma(prod, n);
        if (p < s - 2 || p > s + 2) ++bad;
      }
    }
    return std::vector<Report>{check("magnus_growth_additivity", bad == 0, n_checked)};
  }, "magnus_growth_additivity");

  run_item(out, [&] {
    auto sys = rademacher_system();
    const long long d = bounds::kRademacherActionDefect;
    auto act = modular_left_action(d);
    const long long n = 8;
    long long bad = 0, count = 0;
    std::string witness;
    for (const auto& g : modular_ball(4)) {
      ++count;
      auto e = translation_number(sys, act, g, modular_identity(), n);
      Rational gap = e.midpoint() - of(rademacher(g));
      if (gap < 0) gap = -gap;
      if (gap > make_rational(2 * d, n)) {
        ++bad;
        if (witness.empty()) witness = format_modular(g);
      }
    }
    return std::vector<Report>{check("rademacher_planar_translation", bad == 0, count, witness)};
  }, "rademacher_planar_translation");

  run_item(out, [&] {
    auto sys = brooks_hair_system();
    auto counting = counting_system(parse_free_word("ab"));
    auto act_h = free_left_action(bounds::kHairActionDefect);
    auto act_c = free_left_action(bounds::kCountingActionDefect);
    const FreeWord ab = parse_free_word("ab");
    const long long n = 32;
    long long bad = 0;
    std::string witness;
    for (int i = 0; i < 10; ++i) {
      FreeWord g = random_free_word(rng, 2, 6);
      Rational target = 2 * of(brooks_cyclic(g, ab));
      auto eh = translation_number(sys, act_h, g, FreeWord{2, {}}, n);
      auto ec = translation_number(counting, act_c, g, FreeWord{2, {}}, n);
      if (!eh.contains(target) || !ec.contains(target)) {
        ++bad;
        if (witness.empty()) witness = fw(g);
      }
    }
    return std::vector<Report>{check("brooks_embedding_translation", bad == 0, 10, witness)};
  }, "brooks_embedding_translation");
  return out;
}

// ---------------------------------------------------------------- completion

std::vector<Report> suite_completion(const SuiteOptions& opt) {
  std::vector<Report> out;
  Rng rng(opt.seed);

  run_item(out, [&] {
    auto t = gap_fixture_triple();
    auto c = completion(t);
    std::vector<GapPoint> pts;
    for (long long a = -10; a < 10; ++a)
      for (int i = 0; i < 2; ++i) pts.push_back({a, i});
    long long bad = 0;
    std::string witness;
    for (const auto& p : pts)
      for (const auto& q : pts) {
        long long hc = relative_t_height(c, p, q);
        long long ho = relative_t_height_scan(t, p, q, p.a - q.a - 8, p.a - q.a + 8);
        if (hc != ho || hc != gap_fixture_height(p, q)) {
          ++bad;
          if (witness.empty())
            witness = "(" + std::to_string(p.a) + "," + std::to_string(p.i) + ") vs (" + std::to_string(q.a) + "," +
                      std::to_string(q.i) + ")";
        }
      }
    return std::vector<Report>{check("completion_heights_agree", bad == 0, static_cast<long long>(pts.size() * pts.size()),
                                     witness)};
  }, "completion_heights_agree");

  run_item(out, [&] {
    auto t = gap_fixture_triple();
    auto c = completion(t);
    std::vector<GapPoint> pts;
    for (long long a = -6; a <= 6; ++a)
      for (int i = 0; i < 2; ++i) pts.push_back({a, i});
    bool ok = !quasi_totality_violation(c, pts) && !completeness_violation(c, pts) && !monotonicity_violation(c, pts) &&
              !dominance_violation(c, pts, 32) && completeness_violation(t, pts).has_value();
    ok = ok && completion_leq(t, {0, 0}, {1, 0}) && !completion_leq(t, {1, 0}, {0, 0});
    return std::vector<Report>{check("completion_invariants", ok, static_cast<long long>(pts.size() * pts.size()))};
  }, "completion_invariants");

  run_item(out, [&] {
    auto t = standard_line_triple();
    long long n = 0;
    bool ok = true;
    for (int i = 0; i < 30; ++i) {
      Rational a = make_rational(uniform(rng, -40, 40), 8), b = make_rational(uniform(rng, -40, 40), 8);
      ++n;
      ok = ok && completion_leq(t, a, b) == t.order.leq(a, b);
    }
    return std::vector<Report>{check("completion_of_complete_triple", ok, n)};
  }, "completion_of_complete_triple");
  return out;
}

// ---------------------------------------------------------------- total-order

std::vector<Report> suite_total(const SuiteOptions& opt) {
  std::vector<Report> out;
  Rng rng(opt.seed);
  const int radius = opt.radius.value_or(4);

  run_item(out, [&] {
    auto t = dehornoy_triple(3);
    long long bad = 0, n = 0;
    for (int i = 0; i < 20; ++i) {
      BraidWord a = random_braid(rng, 3, 8), b = random_braid(rng, 3, 8);
      ++n;
      long long m = relative_t_height(t, a, b);
      if (!(dehornoy_compare(t.shift(b, m - 1), a) == Comparison::Less && is_leq(dehornoy_compare(a, t.shift(b, m)))))
        ++bad;
    }
    return std::vector<Report>{check("dehornoy_height_sandwich", bad == 0, n)};
  }, "dehornoy_height_sandwich");

  run_item(out, [&] {
    long long bad = 0, n = 0;
    BraidWord d2 = delta_sq(3);
    for (int i = 0; i < 20; ++i) {
      BraidWord b = random_braid(rng, 3, 8);
      long long m = uniform(rng, -3, 3);
      ++n;
      if (dehornoy_floor(multiply(power(d2, m), b)) != m + dehornoy_floor(b)) ++bad;
    }
    return std::vector<Report>{check("floor_central_shift", bad == 0, n)};
  }, "floor_central_shift");

  run_item(out, [&] {
    const long long N = opt.iters.value_or(16);
    long long bad = 0, n = 0;
    for (int i = 0; i < 10; ++i) {
      BraidWord b = random_braid(rng, 3, 4);
      ++n;
      if (!braid_translation_number(b, N).intersects(braid_translation_number(b, 2 * N))) ++bad;
    }
    return std::vector<Report>{check("braid_translation_nesting", bad == 0, n)};
  }, "braid_translation_nesting");

  run_item(out, [&] {
    std::vector<PureLetter> w1, w2;
    for (int i = 0; i < 6; ++i) {
      int a = static_cast<int>(uniform(rng, 1, 3));
      int b = static_cast<int>(uniform(rng, a + 1, 4));
      (i % 2 ? w1 : w2).push_back({a, b, uniform(rng, 0, 1) ? 1 : -1});
    }
    auto w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    bool ok = pure_braid_pi(4, w) == pure_braid_pi(4, w1) + pure_braid_pi(4, w2);
    return std::vector<Report>{check("pure_braid_pi_additive", ok, 1)};
  }, "pure_braid_pi_additive");

  run_item(out, [&] {
    auto t = twist_triple();
    auto pts = twist_sample();
    auto r = refinement(t, twist_tiebreak_order(), pts);
    long long n = 0;
    bool total = true;
    for (const auto& a : pts)
      for (const auto& b : pts) {
        ++n;
        total = total && r.order.compare(a, b) != Comparison::Incomparable;
      }
    return std::vector<Report>{check("twist_refinement_total", total, n)};
  }, "twist_refinement_total");

  run_item(out, [&] {
    auto ball = ball_enumerate(2, std::min(radius, 3));
    long long bad = 0, n = 0;
    for (const auto& u : ball)
      for (const auto& v : ball) {
        ++n;
        if (magnus_compare(u, v) == Comparison::Equal && u != v) ++bad;
      }
    return std::vector<Report>{check("magnus_order_separates", bad == 0, n)};
  }, "magnus_order_separates");
  return out;
}

// ---------------------------------------------------------------- hyperbolic

std::vector<Report> suite_hyperbolic(const SuiteOptions& opt) {
  std::vector<Report> out;
  const long long N = opt.iters.value_or(10000);
  for (const auto& fx : hyperbolic_fixtures()) {
    run_item(out, [&] {
      std::vector<LineMap> maps;
      bool zero_tn = true;
      std::vector<std::string> notes;
      for (const auto& g : fx.generators) {
        auto tn = mobius_translation_number(g, N);
        maps.push_back(line_map(g));
        if (!tn.contains(0.0)) zero_tn = false;
        notes.push_back("translation number " + std::to_string(tn.value));
      }
      auto v = orbit_bounded_test(maps, fx.base, caps().orbit_horizon);
      bool ok = v.bounded == fx.expect_bounded && zero_tn == v.bounded;
      Report r = check("hyperbolic_" + fx.name, ok, v.points);
      r.notes.push_back(v.bounded ? "BOUNDED" : "UNBOUNDED");
      for (auto& s : notes) r.notes.push_back(s);
      return std::vector<Report>{r};
    }, "hyperbolic_" + fx.name);
  }
  return out;
}

// ---------------------------------------------------------------- dynreal

template <class G>
Report dyn_report(const std::string& name, const DynRealResult<G>& res, bool extra_ok) {
  Report r = Report::exact_value(name, res.report.max_ito_gap);
  r.samples = res.report.pairs_checked;
  r.status = res.report.pass() && extra_ok ? Status::Pass : Status::Fail;
  for (const auto& n : res.report.notes) r.notes.push_back(n);
  return r;
}

OrderSample<long long> integer_sample(long long x, std::vector<long long> elements) {
  OrderSample<long long> s;
  s.group.multiply = [](long long a, long long b) { return a + b; };
  s.group.inverse = [](long long a) { return -a; };
  s.group.identity = 0;
  s.group.equal = [](long long a, long long b) { return a == b; };
  s.compare = [](long long a, long long b) { return compare_values(a, b); };
  s.x = x;
  s.elements = std::move(elements);
  return s;
}

std::vector<Report> suite_dynreal(const SuiteOptions& opt) {
  std::vector<Report> out;
  const int radius = opt.radius.value_or(6);

  run_item(out, [&] {
    auto res = dynamical_realization(integer_sample(1, {-3, -2, -1, 0, 1, 2, 3}));
    bool id = true;
    for (std::size_t i = 0; i < res.t.size(); ++i) id = id && res.t[i] == of(static_cast<long long>(i) - 3);
    return std::vector<Report>{dyn_report("dynreal_integers", res, id)};
  }, "dynreal_integers");

  run_item(out, [&] {
    auto res = dynamical_realization(integer_sample(2, {0, 2, 1}));
    return std::vector<Report>{dyn_report("dynreal_midpoint", res, res.t[2] == make_rational(1, 2))};
  }, "dynreal_midpoint");

  run_item(out, [&] {
    OrderSample<BraidWord> s;
    s.group = braid_ops(2);
    s.compare = dehornoy_compare;
    s.x = delta_sq(2);
    for (long long k = -radius; k <= radius; ++k) s.elements.push_back(power(make_braid(2, {1}), k));
    return std::vector<Report>{dyn_report("dynreal_b2", dynamical_realization(s), true)};
  }, "dynreal_b2");
  return out;
}

}  // namespace

std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opt) {
  std::vector<Report> out;
  auto add = [&](std::vector<Report> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "order-axioms") known = true, add(suite_order_axioms(opt));
  if (all || suite == "defects") known = true, add(suite_defects(opt));
  if (all || suite == "sandwich") known = true, add(suite_sandwich(opt));
  if (all || suite == "growth-vs-qm") known = true, add(suite_growth(opt));
  if (all || suite == "completion") known = true, add(suite_completion(opt));
  if (all || suite == "total-order") known = true, add(suite_total(opt));
  if (all || suite == "hyperbolic") known = true, add(suite_hyperbolic(opt));
  if (all || suite == "dynreal") known = true, add(suite_dynreal(opt));
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  for (auto& r : out) r.seed = opt.seed;
  return out;
}

}  // namespace qtorder
