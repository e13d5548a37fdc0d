#include "qtorder/mobius.hpp"

#include <cmath>
#include <json.hpp>

#include "qtorder/errors.hpp"

namespace qtorder {

namespace {

constexpr double kPi = 3.14159265358979323846;

double frac01(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

// Projective angle of M . (cos pi x, sin pi x), in units of pi, mod 1.
double phi(const MobiusLift& f, double x) {
  double c = std::cos(kPi * x), s = std::sin(kPi * x);
  double u = f.m[0][0] * c + f.m[0][1] * s;
  double v = f.m[1][0] * c + f.m[1][1] * s;
  return frac01(std::atan2(v, u) / kPi);
}

double lift_at_zero(const MobiusLift& f) { return phi(f, 0.0) + static_cast<double>(f.winding); }

}  // namespace

MobiusLift make_mobius(double a, double b, double c, double d, long long winding, bool normalize) {
  double det = a * d - b * c;
  if (normalize) {
    if (!(det > 0)) throw Error(ErrorCode::NumericDegenerate, "matrix determinant must be positive");
    double s = 1.0 / std::sqrt(det);
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    det = a * d - b * c;
  }
  if (std::fabs(det - 1.0) > 1e-12) throw Error(ErrorCode::NumericDegenerate, "determinant differs from 1");
  MobiusLift f;
  f.m = {{{a, b}, {c, d}}};
  f.winding = winding;
  return f;
}

double mobius_act(const MobiusLift& f, double x) {
  double n = std::floor(x);
  double r = x - n;
  double f0 = lift_at_zero(f);
  double step = frac01(phi(f, r) - f0);
  // F(r) - F(0) in [0, 1): rounding can push a tiny increment to just below 1.
  if (r < 0.5 && step > 1.0 - 1e-12) step = 0.0;
  return f0 + step + n;
}

MobiusLift mobius_compose(const MobiusLift& f, const MobiusLift& g) {
  MobiusLift h;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h.m[i][j] = f.m[i][0] * g.m[0][j] + f.m[i][1] * g.m[1][j];
  h.winding = 0;
  double target = mobius_act(f, mobius_act(g, 0.0));
  double base = phi(h, 0.0);
  double w = std::round(target - base);
  if (std::fabs(target - base - w) > 1e-6)
    throw Error(ErrorCode::NumericDegenerate, "composition branch could not be matched");
  h.winding = static_cast<long long>(w);
  return h;
}

MobiusLift mobius_invert(const MobiusLift& f) {
  MobiusLift g;
  g.m = {{{f.m[1][1], -f.m[0][1]}, {-f.m[1][0], f.m[0][0]}}};
  g.winding = 0;
  double back = mobius_act(g, lift_at_zero(f));  // must equal 0 for the right branch
  double w = std::round(-back);
  if (std::fabs(back + w) > 1e-6) throw Error(ErrorCode::NumericDegenerate, "inverse branch could not be matched");
  g.winding = static_cast<long long>(w);
  return g;
}

FloatEnclosure mobius_translation_number(const MobiusLift& f, long long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "mobius_translation_number needs N >= 1");
  double x = 0.0;
  for (long long k = 0; k < N; ++k) x = mobius_act(f, x);
  return {x / static_cast<double>(N), 2.0 / static_cast<double>(N)};
}

MobiusLift mobius_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    const auto& m = j.at("matrix");
    long long w = j.value("winding", 0LL);
    return make_mobius(m.at(0).at(0).get<double>(), m.at(0).at(1).get<double>(), m.at(1).at(0).get<double>(),
                       m.at(1).at(1).get<double>(), w, false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("Mobius JSON: ") + e.what());
  }
}

std::string mobius_to_json(const MobiusLift& f) {
  nlohmann::json j;
  j["matrix"] = {{f.m[0][0], f.m[0][1]}, {f.m[1][0], f.m[1][1]}};
  j["winding"] = f.winding;
  return j.dump();
}

}  // namespace qtorder
