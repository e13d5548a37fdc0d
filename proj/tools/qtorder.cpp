#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qtorder/compute.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/modular.hpp"
#include "qtorder/planar.hpp"
#include "qtorder/suites.hpp"

namespace {

using namespace qtorder;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return kDomainError;
  }
  f << text;
  return kOk;
}

template <class G, class Less, class Fmt>
std::string embedding_csv(const PlanarEmbedding<G, Less>& emb, Fmt fmt) {
  std::string s = "element_word,x,y\n";
  for (const auto& g : emb.domain) {
    const auto& p = emb.coords.at(g);
    s += fmt(g) + "," + std::to_string(p.x) + "," + std::to_string(p.y) + "\n";
  }
  return s;
}

Report failure_report(const std::string& quantity, const Error& e, std::uint64_t seed) {
  Report r;
  r.quantity = quantity;
  r.status = Status::Fail;
  r.seed = seed;
  r.notes.push_back(std::string(error_name(e.code())));
  r.notes.push_back(e.what());
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    (void)caps();
  } catch (const Error& e) {
    std::cerr << "QTORDER_CAPS: " << e.what() << "\n";
    return kUsageError;
  }

  CLI::App app{"Quasimorphisms from quasi-total orders"};
  app.require_subcommand(1);

  std::string out, format = "json";
  std::uint64_t seed = 0;
  ComputeArgs cargs;
  SuiteOptions sopt;
  int radius = -1;
  long long iters = -1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Write output to this file");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", seed, "Sampling seed");
    sub->add_option("--radius", radius, "Ball radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--iters", iters, "Iteration count")->check(CLI::PositiveNumber);
  };

  std::string subject;
  auto* compute = app.add_subcommand("compute", "Compute one quantity");
  compute->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  compute->add_option("subject", subject, "Quantity to compute")->required()->check(CLI::IsMember(compute_subjects()));
  common(compute);
  compute->add_option("--map", cargs.map, "Lift as JSON (file path or inline)");
  compute->add_option("--word", cargs.word, "Free or modular word");
  compute->add_option("--pattern", cargs.pattern, "Brooks pattern (length 2)");
  compute->add_option("--braid", cargs.braid, "Braid word, e.g. \"1 2 -1\"");
  compute->add_option("--strands", cargs.strands, "Strand count")->check(CLI::Range(2, 6));
  compute->add_option("--u", cargs.u, "First word");
  compute->add_option("--v", cargs.v, "Second word");
  compute->add_option("--g", cargs.g, "Dominant element");
  compute->add_option("--h", cargs.h, "Measured element");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  common(verify);

  std::string kind, pattern = "ab";
  auto* embed = app.add_subcommand("embed", "Emit a planar embedding as CSV");
  embed->add_option("kind", kind, "Embedding")->required()->check(CLI::IsMember({"rademacher", "brooks-hair", "counting"}));
  common(embed);
  embed->add_option("--pattern", pattern, "Pattern for the counting embedding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  if (radius >= 0) cargs.radius = radius, sopt.radius = radius;
  if (iters > 0) cargs.iters = iters, sopt.iters = iters;
  cargs.seed = sopt.seed = seed;

  if (*compute) {
    try {
      auto reports = run_compute(subject, cargs);
      return emit(render_reports(reports, format), out);
    } catch (const Error& e) {
      int rc = emit(render_reports({failure_report(compute_quantity(subject), e, seed)}, format), out);
      return rc == kOk && e.code() == ErrorCode::InvalidArgument ? kUsageError : kDomainError;
    }
  }
  if (*verify) {
    try {
      auto reports = run_suite(suite, sopt);
      int rc = emit(render_reports(reports, format), out);
      if (rc != kOk) return rc;
      return all_pass(reports) ? kOk : kDomainError;
    } catch (const Error& e) {
      emit(render_reports({failure_report(suite, e, seed)}, format), out);
      return kDomainError;
    }
  }
  try {
    int r = radius >= 0 ? radius : 4;
    std::string csv;
    if (kind == "rademacher") csv = embedding_csv(rademacher_embedding(r), format_modular);
    else if (kind == "brooks-hair") csv = embedding_csv(brooks_hair_embedding(r), format_free_word);
    else csv = embedding_csv(counting_embedding(r, parse_free_word(pattern)), format_free_word);
    return emit(csv, out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kDomainError;
  }
}
