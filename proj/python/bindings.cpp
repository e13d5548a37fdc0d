#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtorder/braids.hpp"
#include "qtorder/compute.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/magnus.hpp"
#include "qtorder/mobius.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/pl_lift.hpp"
#include "qtorder/planar.hpp"
#include "qtorder/suites.hpp"

namespace py = pybind11;
using namespace qtorder;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
std::pair<std::string, std::string> pair_of(const RationalEnclosure& e) { return {to_string(e.lo), to_string(e.hi)}; }

std::vector<std::string> json_lines(const std::vector<Report>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(report_json(r));
  return out;
}

template <class G, class Less, class Fmt>
std::vector<std::tuple<std::string, long long, long long>> rows(const PlanarEmbedding<G, Less>& emb, Fmt fmt) {
  std::vector<std::tuple<std::string, long long, long long>> out;
  for (const auto& g : emb.domain) {
    const auto& p = emb.coords.at(g);
    out.emplace_back(fmt(g), p.x, p.y);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasimorphisms from quasi-total orders (native core)";

  py::register_exception<Error>(m, "QtorderError");

  m.def("free_reduce", [](const std::string& w) { return format_free_word(parse_free_word(w)); });
  m.def("ball_size", &ball_size, py::arg("rank"), py::arg("radius"));
  m.def("ball_enumerate", [](int rank, int radius) {
    std::vector<std::string> out;
    for (const auto& w : ball_enumerate(rank, radius)) out.push_back(format_free_word(w));
    return out;
  }, py::arg("rank"), py::arg("radius"));
  m.def("counting_hom", [](const std::string& w, int s) { return counting_hom(parse_free_word(w), s); });
  m.def("brooks_count", [](const std::string& w, const std::string& p) {
    return brooks_count(parse_free_word(w), parse_free_word(p));
  }, py::arg("word"), py::arg("pattern") = "ab");
  m.def("brooks_homogenized", [](const std::string& w, const std::string& p) {
    return brooks_cyclic(parse_free_word(w), parse_free_word(p));
  }, py::arg("word"), py::arg("pattern") = "ab");
  m.def("magnus_compare", [](const std::string& u, const std::string& v) {
    return std::string(comparison_name(magnus_compare(parse_free_word(u), parse_free_word(v))));
  });

  m.def("rademacher", [](const std::string& w) { return rademacher(parse_modular(w)); });
  m.def("rademacher_raw", [](const std::string& w) { return rademacher_raw(parse_modular(w)); });
  m.def("modular_decompose", [](const std::string& w) {
    ModularElement g = parse_modular(w);
    SemigroupForm f = semigroup_form(g);
    py::dict d;
    d["normal"] = format_modular(g);
    d["left_s"] = f.left_s;
    std::vector<std::string> t;
    for (int x : f.t) t.push_back(x == 1 ? "T1" : "T2");
    d["t"] = t;
    d["right_s"] = f.right_s;
    return d;
  });

  m.def("dehornoy_compare", [](const std::string& u, const std::string& v, int strands) {
    return std::string(comparison_name(dehornoy_compare(parse_braid(u, strands), parse_braid(v, strands))));
  }, py::arg("u"), py::arg("v"), py::arg("strands"));
  m.def("handle_reduce", [](const std::string& w, int strands) {
    return format_braid(handle_reduce(parse_braid(w, strands)));
  }, py::arg("word"), py::arg("strands"));
  m.def("dehornoy_floor", [](const std::string& b, int strands) { return dehornoy_floor(parse_braid(b, strands)); },
        py::arg("braid"), py::arg("strands"));
  m.def("braid_translation_number", [](const std::string& b, int strands, long long N) {
    return pair_of(braid_translation_number(parse_braid(b, strands), N));
  }, py::arg("braid"), py::arg("strands"), py::arg("iters") = 64);

  m.def("pl_rotation_number", [](const std::string& json, long long N) {
    return pair_of(pl_rotation_number(pl_from_json(json), N));
  }, py::arg("lift_json"), py::arg("iters") = 1000);
  m.def("pl_compose", [](const std::string& f, const std::string& g) {
    return pl_to_json(pl_compose(pl_from_json(f), pl_from_json(g)));
  });
  m.def("pl_invert", [](const std::string& f) { return pl_to_json(pl_invert(pl_from_json(f))); });
  m.def("pl_eval", [](const std::string& f, const std::string& x) {
    return to_string(pl_eval(pl_from_json(f), parse_rational(x)));
  });
  m.def("homeo_lex_compare", [](const std::string& f, const std::string& g, std::size_t K) {
    auto r = homeo_lex_compare(pl_from_json(f), pl_from_json(g), K);
    return std::make_pair(std::string(comparison_name(r.result)), r.index);
  }, py::arg("f"), py::arg("g"), py::arg("K") = 64);
  m.def("mobius_translation_number", [](const std::string& json, long long N) {
    auto e = mobius_translation_number(mobius_from_json(json), N);
    return std::make_pair(e.value, e.abs_err);
  }, py::arg("lift_json"), py::arg("iters") = 10000);

  m.def("embedding", [](const std::string& kind, int radius, const std::string& pattern) {
    if (kind == "rademacher") return rows(rademacher_embedding(radius), format_modular);
    if (kind == "brooks-hair") return rows(brooks_hair_embedding(radius), format_free_word);
    if (kind == "counting") return rows(counting_embedding(radius, parse_free_word(pattern)), format_free_word);
    throw Error(ErrorCode::InvalidArgument, "unknown embedding '" + kind + "'");
  }, py::arg("kind"), py::arg("radius"), py::arg("pattern") = "ab");

  m.def("compute", [](const std::string& subject, py::kwargs kw) {
    ComputeArgs a;
    auto str = [&](const char* k) -> std::optional<std::string> {
      if (kw.contains(k)) return py::str(kw[k]).cast<std::string>();
      return std::nullopt;
    };
    a.map = str("map");
    a.word = str("word");
    if (auto p = str("pattern")) a.pattern = *p;
    a.braid = str("braid");
    if (kw.contains("strands")) a.strands = kw["strands"].cast<int>();
    if (kw.contains("iters")) a.iters = kw["iters"].cast<long long>();
    if (kw.contains("radius")) a.radius = kw["radius"].cast<int>();
    if (kw.contains("seed")) a.seed = kw["seed"].cast<std::uint64_t>();
    a.u = str("u");
    a.v = str("v");
    a.g = str("g");
    a.h = str("h");
    return json_lines(run_compute(subject, a));
  }, py::arg("subject"));
  m.def("verify", [](const std::string& suite, std::optional<int> radius, std::optional<long long> iters,
                     std::uint64_t seed) {
    return json_lines(run_suite(suite, SuiteOptions{radius, iters, seed}));
  }, py::arg("suite"), py::arg("radius") = py::none(), py::arg("iters") = py::none(), py::arg("seed") = 0);
}
