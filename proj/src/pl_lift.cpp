#include "qtorder/pl_lift.hpp"

#include <algorithm>
#include <json.hpp>
#include <mutex>

namespace qtorder {

namespace {

Rational interpolate(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1, const Rational& x) {
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

PLLift::PLLift() : xs_{Rational(0)}, ys_{Rational(0)} {}

PLLift::PLLift(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.empty() || breakpoints.size() != values.size())
    throw Error(ErrorCode::NotIncreasing, "PL lift needs matching nonempty breakpoint and value lists");
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    if (breakpoints[j] < 0 || breakpoints[j] >= 1)
      throw Error(ErrorCode::NotIncreasing, "breakpoint " + to_string(breakpoints[j]) + " outside [0, 1)");
    if (j > 0 && !(breakpoints[j - 1] < breakpoints[j]))
      throw Error(ErrorCode::NotIncreasing, "breakpoints must increase strictly");
    if (j > 0 && !(values[j - 1] < values[j])) throw Error(ErrorCode::NotIncreasing, "values must increase strictly");
  }
  if (!(values.back() < values.front() + 1))
    throw Error(ErrorCode::NotIncreasing, "last value must stay below the first value plus one");
  if (breakpoints.front() != 0) {
    Rational y1 = interpolate(breakpoints.back(), values.back(), breakpoints.front() + 1, values.front() + 1, Rational(1));
    breakpoints.insert(breakpoints.begin(), Rational(0));
    values.insert(values.begin(), y1 - 1);
  }
  xs_ = std::move(breakpoints);
  ys_ = std::move(values);
  canonicalize();
}

void PLLift::canonicalize() {
  std::vector<Rational> xs{xs_.front()}, ys{ys_.front()};
  const std::size_t k = xs_.size();
  for (std::size_t j = 1; j < k; ++j) {
    const Rational& nx = j + 1 < k ? xs_[j + 1] : Rational(1);
    const Rational& ny = j + 1 < k ? ys_[j + 1] : ys_.front() + 1;
    Rational left = (ys_[j] - ys.back()) / (xs_[j] - xs.back());
    Rational right = (ny - ys_[j]) / (nx - xs_[j]);
    if (left != right) {
      xs.push_back(xs_[j]);
      ys.push_back(ys_[j]);
    }
  }
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

PLLift PLLift::translation(const Rational& t) { return PLLift({Rational(0)}, {t}); }

Rational PLLift::operator()(const Rational& x) const {
  Integer n = floor(x);
  Rational r = x - Rational(n);
  auto it = std::upper_bound(xs_.begin(), xs_.end(), r);
  std::size_t j = static_cast<std::size_t>(it - xs_.begin()) - 1;  // xs_[0] = 0 <= r
  Rational y;
  if (j + 1 < xs_.size()) y = interpolate(xs_[j], ys_[j], xs_[j + 1], ys_[j + 1], r);
  else y = interpolate(xs_[j], ys_[j], Rational(1), ys_.front() + 1, r);
  return y + Rational(n);
}

Rational pl_eval(const PLLift& f, const Rational& x) { return f(x); }

PLLift pl_invert(const PLLift& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t j = 0; j < f.breakpoints().size(); ++j) {
    const Rational& y = f.values()[j];
    Integer n = floor(y);
    pts.emplace_back(y - Rational(n), f.breakpoints()[j] - Rational(n));
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Rational> xs, ys;
  for (auto& [x, y] : pts) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return PLLift(std::move(xs), std::move(ys));
}

PLLift pl_compose(const PLLift& f, const PLLift& g) {
  std::vector<Rational> xs = g.breakpoints();
  PLLift ginv = pl_invert(g);
  for (const auto& y : f.breakpoints()) xs.push_back(frac(ginv(y)));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f(g(x)));
  return PLLift(std::move(xs), std::move(ys));
}

PLLift pl_power(const PLLift& f, long long n) { return power(pl_ops(), f, n); }

RationalEnclosure pl_rotation_number(const PLLift& f, long long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "pl_rotation_number needs N >= 1");
  Rational orbit0;
  for (std::size_t j = 0; j < f.breakpoints().size(); ++j) {
    const Rational x = f.breakpoints()[j];
    Rational y = x;
    for (long long q = 1; q <= N; ++q) {
      y = f(y);
      Rational shift = y - x;
      if (shift.get_den() == 1) {
        Rational p = shift / Rational(static_cast<long>(q));
        p.canonicalize();
        return RationalEnclosure::exact(p);
      }
    }
    if (j == 0) orbit0 = y;  // breakpoint 0 always comes first
  }
  Rational n(static_cast<long>(N));
  return RationalEnclosure::around(orbit0 / n, Rational(1) / n);
}

std::vector<Rational> stern_brocot_prefix(std::size_t count) {
  static std::mutex lock;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (cache.size() < count) {
    cache.clear();
    cache.push_back(Rational(0));
    // Consecutive pairs of the current Farey-like boundary list.
    std::vector<std::pair<Integer, Integer>> frontier{{0, 1}, {1, 1}};
    while (cache.size() < count) {
      std::vector<std::pair<Integer, Integer>> next;
      next.reserve(frontier.size() * 2);
      for (std::size_t i = 0; i + 1 < frontier.size(); ++i) {
        next.push_back(frontier[i]);
        Integer p = frontier[i].first + frontier[i + 1].first, q = frontier[i].second + frontier[i + 1].second;
        next.emplace_back(p, q);
        cache.push_back(Rational(p, q));
      }
      next.push_back(frontier.back());
      frontier = std::move(next);
    }
  }
  return std::vector<Rational>(cache.begin(), cache.begin() + static_cast<long>(count));
}

LexResult homeo_lex_compare(const PLLift& f, const PLLift& g, std::size_t K) {
  if (f == g) return {Comparison::Equal, 0};
  std::size_t limit = std::max<std::size_t>(K, static_cast<std::size_t>(caps().lex_scan));
  std::size_t chunk = std::min<std::size_t>(std::max<std::size_t>(K, 64), limit);
  std::size_t done = 0;
  while (done < limit) {
    std::vector<Rational> qs = stern_brocot_prefix(std::min(limit, done + chunk));
    for (std::size_t i = done; i < qs.size(); ++i) {
      Rational a = f(qs[i]), b = g(qs[i]);
      if (a != b) return {a < b ? Comparison::Less : Comparison::Greater, i + 1};
    }
    done = qs.size();
    chunk *= 2;
  }
  throw Error(ErrorCode::CapExceeded, "distinct lifts agree on the first " + std::to_string(limit) + " rationals");
}

GroupOps<PLLift> pl_ops() {
  GroupOps<PLLift> ops;
  ops.multiply = [](const PLLift& f, const PLLift& g) { return pl_compose(f, g); };
  ops.inverse = [](const PLLift& f) { return pl_invert(f); };
  ops.identity = PLLift();
  ops.equal = [](const PLLift& f, const PLLift& g) { return f == g; };
  return ops;
}

RegisteredAction<PLLift, Rational> pl_line_action() {
  RegisteredAction<PLLift, Rational> a;
  a.group = pl_ops();
  a.act = [](const PLLift& f, const Rational& x) { return f(x); };
  a.defect = 1;
  a.unbounded_witness = std::make_pair(PLLift::translation(Rational(1)), Rational(0));
  return a;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_array() && j.size() == 2) {
    auto part = [](const nlohmann::json& x) {
      if (x.is_number_integer()) return std::to_string(x.get<long long>());
      if (x.is_string()) return x.get<std::string>();
      throw Error(ErrorCode::ParseError, "rational component must be an integer or a string");
    };
    return parse_rational(part(j[0]) + "/" + part(j[1]));
  }
  throw Error(ErrorCode::ParseError, "rational must be [num, den], an integer or a \"p/q\" string");
}

nlohmann::json rational_to_json(const Rational& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
    return nlohmann::json::array({q.get_num().get_si(), q.get_den().get_si()});
  return nlohmann::json::array({q.get_num().get_str(), q.get_den().get_str()});
}

}  // namespace

PLLift pl_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("PL lift JSON: ") + e.what());
  }
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw Error(ErrorCode::ParseError, "PL lift JSON needs \"breakpoints\" and \"values\"");
  std::vector<Rational> xs, ys;
  for (const auto& x : j["breakpoints"]) xs.push_back(rational_from_json(x));
  for (const auto& y : j["values"]) ys.push_back(rational_from_json(y));
  return PLLift(std::move(xs), std::move(ys));
}

std::string pl_to_json(const PLLift& f) {
  nlohmann::json j;
  j["breakpoints"] = nlohmann::json::array();
  j["values"] = nlohmann::json::array();
  for (const auto& x : f.breakpoints()) j["breakpoints"].push_back(rational_to_json(x));
  for (const auto& y : f.values()) j["values"].push_back(rational_to_json(y));
  return j.dump();
}

}  // namespace qtorder
