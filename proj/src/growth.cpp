#include "qtorder/growth.hpp"

#include "qtorder/halfspace.hpp"

namespace qtorder {

Window sandwich_window(long long n, const Rational& fg, const Rational& fh) {
  if (fg <= 0) throw Error(ErrorCode::InvalidArgument, "sandwich window needs f(g) > 0");
  Rational center = Rational(static_cast<long>(n)) * fh / fg;
  return {to_int64(floor(center)) - 4, to_int64(ceil(center)) + 4};
}

Window fallback_window(long long n) {
  long long k = caps().window_k;
  return {-n * k, n * k};
}

HalfspaceSystem<Rational> line_system() {
  HalfspaceSystem<Rational> sys;
  sys.name = "line";
  sys.order.compare = [](const Rational& a, const Rational& b) { return compare_values(a, b); };
  sys.order.total = true;
  sys.height = [](const Rational& x) { return to_int64(floor(x)); };
  sys.width = 1;
  return sys;
}

}  // namespace qtorder
