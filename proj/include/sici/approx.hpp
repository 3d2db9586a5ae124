#ifndef SICI_APPROX_HPP
#define SICI_APPROX_HPP

#include <cmath>
#include <limits>

namespace sici {

// A double together with a claimed absolute error bound.  Every numeric
// evaluation in the library (quadrature, series, special functions)
// returns one of these; the bound is heuristic-conservative, not a
// rigorous interval.
struct Approx {
  double value = 0.0;
  double err = 0.0;

  Approx() = default;
  Approx(double v, double e) : value(v), err(e) {
    if (!std::isfinite(v)) err = std::numeric_limits<double>::infinity();
  }
  static Approx exact(double v) { return Approx(v, 0.0); }
};

namespace detail {
inline double rounding_slack(double v) {
  return std::abs(v) * std::numeric_limits<double>::epsilon();
}
}  // namespace detail

inline Approx operator+(const Approx& a, const Approx& b) {
  double v = a.value + b.value;
  return Approx(v, a.err + b.err + detail::rounding_slack(v));
}

inline Approx operator-(const Approx& a, const Approx& b) {
  double v = a.value - b.value;
  return Approx(v, a.err + b.err + detail::rounding_slack(v));
}

inline Approx operator-(const Approx& a) { return Approx(-a.value, a.err); }

inline Approx operator*(const Approx& a, const Approx& b) {
  double v = a.value * b.value;
  double e = a.err * std::abs(b.value) + b.err * std::abs(a.value) + a.err * b.err;
  return Approx(v, e + detail::rounding_slack(v));
}

inline Approx operator*(double s, const Approx& a) {
  double v = s * a.value;
  return Approx(v, std::abs(s) * a.err + detail::rounding_slack(v));
}

inline Approx operator*(const Approx& a, double s) { return s * a; }

inline Approx operator+(const Approx& a, double s) { return a + Approx::exact(s); }
inline Approx operator+(double s, const Approx& a) { return a + Approx::exact(s); }
inline Approx operator-(const Approx& a, double s) { return a - Approx::exact(s); }
inline Approx operator-(double s, const Approx& a) { return Approx::exact(s) - a; }

}  // namespace sici

#endif
