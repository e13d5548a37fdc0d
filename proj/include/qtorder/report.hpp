#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorder/rational.hpp"

namespace qtorder {

enum class Status { Pass, Fail, Inconclusive };

std::string_view status_name(Status s);

/// One line of CLI output. A value is either an exact rational with a
/// rational enclosure or a float with an absolute error; checks without a
/// numeric result leave both empty.
struct Report {
  std::string quantity;
  std::optional<Rational> exact;
  std::optional<RationalEnclosure> enclosure;
  std::optional<FloatEnclosure> approx;
  long long samples = 0;
  std::uint64_t seed = 0;
  Status status = Status::Pass;
  std::vector<std::string> notes;

  static Report exact_value(std::string quantity, const Rational& v);
  static Report enclosed(std::string quantity, const RationalEnclosure& e);
  static Report floating(std::string quantity, const FloatEnclosure& f);
  static Report check(std::string quantity, bool ok, long long samples);
};

/// Schema-1 JSON object on a single line.
std::string report_json(const Report& r);
std::string report_csv_header();
std::string report_csv_row(const Report& r);

/// Renders a report list in the requested format ("json": JSON Lines, "csv").
std::string render_reports(const std::vector<Report>& reports, const std::string& format);

bool all_pass(const std::vector<Report>& reports);

}  // namespace qtorder
