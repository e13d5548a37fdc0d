#include "qtorder/compute.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qtorder/braids.hpp"
#include "qtorder/dynamics.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/magnus.hpp"
#include "qtorder/mobius.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/pl_lift.hpp"

namespace qtorder {

const std::vector<std::string>& compute_subjects() {
  static const std::vector<std::string> s{"rotation", "mobius-tn", "rademacher", "brooks",        "dehornoy-floor",
                                          "braid-tn", "growth",    "magnus-compare", "dyn-real"};
  return s;
}

namespace {

std::string load_map(const std::optional<std::string>& map) {
  if (!map) throw Error(ErrorCode::InvalidArgument, "--map is required");
  const std::string& m = *map;
  auto first = m.find_first_not_of(" \t\n");
  if (first != std::string::npos && m[first] == '{') return m;
  std::ifstream in(m);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read map file '" + m + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
  return *v;
}

Rational of(long long v) { return Rational(static_cast<long>(v)); }

std::string form_text(const SemigroupForm& f) {
  std::string s = f.left_s ? "S" : "";
  for (int t : f.t) s += (s.empty() ? "" : " ") + std::string(t == 1 ? "T1" : "T2");
  if (f.right_s) s += (s.empty() ? "" : " ") + std::string("S");
  return s.empty() ? "e" : s;
}

std::vector<Report> rotation(const ComputeArgs& a) {
  PLLift f = pl_from_json(load_map(a.map));
  long long N = a.iters.value_or(1000);
  auto e = pl_rotation_number(f, N);
  Report r = e.is_exact() ? Report::exact_value("rotation_number", e.lo) : Report::enclosed("rotation_number", e);
  r.samples = N;
  r.notes.push_back(e.is_exact() ? "periodic orbit found" : "enclosure F^N(0)/N +- 1/N");
  return {r};
}

std::vector<Report> mobius_tn(const ComputeArgs& a) {
  MobiusLift f = mobius_from_json(load_map(a.map));
  long long N = a.iters.value_or(10000);
  Report r = Report::floating("mobius_translation_number", mobius_translation_number(f, N));
  r.samples = N;
  return {r};
}

std::vector<Report> rademacher_subject(const ComputeArgs& a) {
  ModularElement g = parse_modular(need(a.word, "--word"));
  Report r = Report::exact_value("rademacher", of(rademacher(g)));
  r.notes.push_back("normal form " + format_modular(g));
  r.notes.push_back("semigroup form " + form_text(semigroup_form(g)));
  r.notes.push_back("raw count " + std::to_string(rademacher_raw(g)));
  return {r};
}

std::vector<Report> brooks_subject(const ComputeArgs& a) {
  FreeWord w = parse_free_word(need(a.word, "--word"));
  FreeWord p = parse_free_word(a.pattern);
  if (p.size() != 2) throw Error(ErrorCode::InvalidArgument, "pattern must have length 2");
  Report r = Report::exact_value("brooks_count", of(brooks_count(w, p)));
  r.notes.push_back("reduced word " + format_free_word(w));
  Report h = Report::exact_value("brooks_homogenized", of(brooks_cyclic(w, p)));
  return {r, h};
}

std::vector<Report> floor_subject(const ComputeArgs& a) {
  BraidWord b = parse_braid(need(a.braid, "--braid"), a.strands);
  return {Report::exact_value("dehornoy_floor", of(dehornoy_floor(b)))};
}

std::vector<Report> braid_tn(const ComputeArgs& a) {
  BraidWord b = parse_braid(need(a.braid, "--braid"), a.strands);
  long long N = a.iters.value_or(64);
  Report r = Report::enclosed("braid_translation_number", braid_translation_number(b, N));
  r.samples = N;
  return {r};
}

std::vector<Report> growth_subject(const ComputeArgs& a) {
  FreeWord g = parse_free_word(a.g.value_or("b"));
  FreeWord h = parse_free_word(need(a.h, "--h"));
  long long N = a.iters.value_or(10);
  auto order = magnus_order(2);
  long long mg = counting_hom(g, 2), mh = counting_hom(h, 2);
  WindowFn window = [&](long long n) {
    return mg > 0 ? sandwich_window(n, of(mg), of(mh)) : fallback_window(n);
  };
  GrowthResult res = growth_gamma(order, g, h, N, window);
  Report r = Report::enclosed("growth_gamma", res.enclosure);
  r.samples = N;
  r.notes.push_back("gamma_N = " + std::to_string(res.gamma.back()) + ", observed gap " + std::to_string(res.defect));
  if (mg > 0) {
    Rational ratio = of(mh) / of(mg);
    r.notes.push_back("counting ratio " + to_string(ratio));
  }
  return {r};
}

std::vector<Report> magnus_subject(const ComputeArgs& a) {
  FreeWord u = parse_free_word(need(a.u, "--u")), v = parse_free_word(need(a.v, "--v"));
  Comparison c = magnus_compare(u, v);
  long long s = c == Comparison::Less ? -1 : c == Comparison::Greater ? 1 : 0;
  Report r = Report::exact_value("magnus_compare", of(s));
  r.notes.push_back(std::string(comparison_name(c)));
  return {r};
}

std::vector<Report> dyn_real(const ComputeArgs& a) {
  int radius = a.radius.value_or(6);
  OrderSample<BraidWord> s;
  s.group = braid_ops(2);
  s.compare = dehornoy_compare;
  s.x = delta_sq(2);
  for (long long k = -radius; k <= radius; ++k) s.elements.push_back(power(make_braid(2, {1}), k));
  auto res = dynamical_realization(s);
  Report r = Report::exact_value("dyn_real_max_gap", res.report.max_ito_gap);
  r.samples = res.report.pairs_checked;
  r.status = res.report.pass() ? Status::Pass : Status::Fail;
  r.notes.push_back(std::string("order_preserving=") + (res.report.order_preserving ? "true" : "false"));
  r.notes.push_back(std::string("translation_exact=") + (res.report.translation_exact ? "true" : "false"));
  r.notes.push_back(std::string("ito_bound=") + (res.report.ito_bound ? "true" : "false"));
  for (const auto& n : res.report.notes) r.notes.push_back(n);
  return {r};
}

}  // namespace

std::string compute_quantity(const std::string& subject) {
  static const std::map<std::string, std::string> names{
      {"rotation", "rotation_number"},       {"mobius-tn", "mobius_translation_number"},
      {"rademacher", "rademacher"},          {"brooks", "brooks_count"},
      {"dehornoy-floor", "dehornoy_floor"},  {"braid-tn", "braid_translation_number"},
      {"growth", "growth_gamma"},            {"magnus-compare", "magnus_compare"},
      {"dyn-real", "dyn_real_max_gap"}};
  auto it = names.find(subject);
  return it == names.end() ? subject : it->second;
}

std::vector<Report> run_compute(const std::string& subject, const ComputeArgs& args) {
  std::vector<Report> out;
  if (subject == "rotation") out = rotation(args);
  else if (subject == "mobius-tn") out = mobius_tn(args);
  else if (subject == "rademacher") out = rademacher_subject(args);
  else if (subject == "brooks") out = brooks_subject(args);
  else if (subject == "dehornoy-floor") out = floor_subject(args);
  else if (subject == "braid-tn") out = braid_tn(args);
  else if (subject == "growth") out = growth_subject(args);
  else if (subject == "magnus-compare") out = magnus_subject(args);
  else if (subject == "dyn-real") out = dyn_real(args);
  else throw Error(ErrorCode::InvalidArgument, "unknown subject '" + subject + "'");
  for (auto& r : out) r.seed = args.seed;
  return out;
}

}  // namespace qtorder
