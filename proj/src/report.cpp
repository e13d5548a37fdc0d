#include "qtorder/report.hpp"

#include <json.hpp>
#include <sstream>

#include "qtorder/errors.hpp"

namespace qtorder {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Report Report::exact_value(std::string quantity, const Rational& v) {
  Report r;
  r.quantity = std::move(quantity);
  r.exact = v;
  r.enclosure = RationalEnclosure::exact(v);
  return r;
}

Report Report::enclosed(std::string quantity, const RationalEnclosure& e) {
  Report r;
  r.quantity = std::move(quantity);
  r.exact = e.midpoint();
  r.enclosure = e;
  return r;
}

Report Report::floating(std::string quantity, const FloatEnclosure& f) {
  Report r;
  r.quantity = std::move(quantity);
  r.approx = f;
  return r;
}

Report Report::check(std::string quantity, bool ok, long long samples) {
  Report r;
  r.quantity = std::move(quantity);
  r.samples = samples;
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["quantity"] = r.quantity;
  if (r.exact) {
    j["value"] = {{"num", integer_json(r.exact->get_num())}, {"den", integer_json(r.exact->get_den())}};
  } else if (r.approx) {
    j["value"] = {{"float", r.approx->value}, {"abs_err", r.approx->abs_err}};
  } else {
    j["value"] = nullptr;
  }
  if (r.enclosure) {
    j["enclosure"] = {to_string(r.enclosure->lo), to_string(r.enclosure->hi)};
  } else if (r.approx) {
    j["enclosure"] = {r.approx->lo(), r.approx->hi()};
  } else {
    j["enclosure"] = nullptr;
  }
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["status"] = std::string(status_name(r.status));
  j["notes"] = r.notes;
  return j.dump();
}

std::string report_csv_header() { return "quantity,value,lo,hi,samples,seed,status,notes"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string double_text(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::string report_csv_row(const Report& r) {
  std::string value, lo, hi;
  if (r.exact) value = to_string(*r.exact);
  else if (r.approx) value = double_text(r.approx->value);
  if (r.enclosure) {
    lo = to_string(r.enclosure->lo);
    hi = to_string(r.enclosure->hi);
  } else if (r.approx) {
    lo = double_text(r.approx->lo());
    hi = double_text(r.approx->hi());
  }
  std::string notes;
  for (std::size_t i = 0; i < r.notes.size(); ++i) notes += (i ? "; " : "") + r.notes[i];
  return csv_field(r.quantity) + "," + value + "," + lo + "," + hi + "," + std::to_string(r.samples) + "," +
         std::to_string(r.seed) + "," + std::string(status_name(r.status)) + "," + csv_field(notes);
}

std::string render_reports(const std::vector<Report>& reports, const std::string& format) {
  std::string out;
  if (format == "json") {
    for (const auto& r : reports) out += report_json(r) + "\n";
  } else if (format == "csv") {
    out = report_csv_header() + "\n";
    for (const auto& r : reports) out += report_csv_row(r) + "\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + format + "'");
  }
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status != Status::Pass) return false;
  return true;
}

}  // namespace qtorder
