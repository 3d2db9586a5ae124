#include "sici/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sici/constants.hpp"
#include "sici/quad.hpp"

namespace sici {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 2.220446049250313e-16;

[[noreturn]] void bad_arg(const char* fn, double x, const char* req) {
  throw std::domain_error(std::string(fn) + ": argument " + std::to_string(x) +
                          " outside domain (" + req + ")");
}

// Alternating power series, valid (in binary64) up to x ~ 8 where the peak
// term is ~40 and cancellation stays below ~2e-14.
Approx si_series(double x) {
  double t = x;  // x^(2k+1)/(2k+1)!
  double sum = 0.0, absacc = 0.0;
  for (int k = 0;; ++k) {
    double c = t / (2 * k + 1);
    sum += (k % 2 == 0) ? c : -c;
    absacc += std::abs(c);
    if (std::abs(c) < 1e-18 * (std::abs(sum) + 1.0)) break;
    t *= x * x / ((2 * k + 2) * (2 * k + 3));
  }
  return Approx(sum, 4.0 * kEps * absacc + 1e-16);
}

Approx ci_series(double x) {
  double t = x * x / 2.0;  // x^(2k)/(2k)!
  double sum = 0.0, absacc = 0.0;
  for (int k = 1;; ++k) {
    double c = t / (2 * k);
    sum += (k % 2 == 1) ? -c : c;
    absacc += std::abs(c);
    if (std::abs(c) < 1e-18 * (std::abs(sum) + 1.0)) break;
    t *= x * x / ((2 * k + 1) * (2 * k + 2));
  }
  Approx g = constant("euler_gamma");
  return Approx(g.value + std::log(x) + sum,
                g.err + 4.0 * kEps * (absacc + std::abs(std::log(x))) + 1e-16);
}

// f and g by quadrature of int_0^inf e^{-xu}/(1+u^2) du and its u-weighted
// companion, after the substitution w = xu (keeps the decay scale at 1 for
// every x).  Valid for x >= 1.
Approx f_quad(double x) {
  QuadTask t;
  t.integrand = [x](double w) { return x * std::exp(-w) / (x * x + w * w); };
  t.lo = 0.0;
  t.hi = std::numeric_limits<double>::infinity();
  t.abs_tol = 1e-16;
  t.rel_tol = 5e-14;
  t.max_subdivisions = 400;
  return integrate(t).integral;
}

Approx g_quad(double x) {
  QuadTask t;
  t.integrand = [x](double w) { return w * std::exp(-w) / (x * x + w * w); };
  t.lo = 0.0;
  t.hi = std::numeric_limits<double>::infinity();
  t.abs_tol = 1e-16;
  t.rel_tol = 5e-14;
  t.max_subdivisions = 400;
  return integrate(t).integral;
}

struct FG {
  Approx f, g;
};

// f = Ci sin - si cos, g = -Ci cos - si sin (the lowercase-si convention;
// the only one consistent with the Laplace representations).
FG fg_from_series(double x) {
  Approx ci = ci_series(x);
  Approx si = si_series(x) - constant("pi") * 0.5;
  double s = std::sin(x), c = std::cos(x);
  double f = ci.value * s - si.value * c;
  double g = -ci.value * c - si.value * s;
  double e = ci.err + si.err + 4.0 * kEps;
  return {Approx(f, e), Approx(g, e)};
}

FG fg(double x) {
  if (x >= 1.0) return {f_quad(x), g_quad(x)};
  return fg_from_series(x);
}

// Stirling tails at y >= 10 (B_2..B_12).
double digamma_asym(double y) {
  double y2 = 1.0 / (y * y);
  double s = y2 * (1.0 / 12 - y2 * (1.0 / 120 - y2 * (1.0 / 252 -
             y2 * (1.0 / 240 - y2 * (1.0 / 132 - y2 * 691.0 / 32760)))));
  return std::log(y) - 0.5 / y - s;
}

double log_gamma_asym(double y) {
  double y2 = 1.0 / (y * y);
  double s = (1.0 / 12 - y2 * (1.0 / 360 - y2 * (1.0 / 1260 -
             y2 * (1.0 / 1680 - y2 * (1.0 / 1188 - y2 * 691.0 / 360360))))) / y;
  return (y - 0.5) * std::log(y) - y + 0.5 * constant_value("log_2pi") + s;
}

}  // namespace

Approx sine_int(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) bad_arg("sine_int", x, "x >= 0 finite");
  if (x == 0.0) return Approx::exact(0.0);
  if (x <= 8.0) return si_series(x);
  FG a = fg(x);
  double v = 0.5 * kPi - a.f.value * std::cos(x) - a.g.value * std::sin(x);
  return Approx(v, a.f.err + a.g.err + 4.0 * kEps);
}

Approx si_lower(double x) { return sine_int(x) - constant("pi") * 0.5; }

Approx cosine_int(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) bad_arg("cosine_int", x, "x > 0 finite");
  if (x <= 8.0) return ci_series(x);
  FG a = fg(x);
  double v = a.f.value * std::sin(x) - a.g.value * std::cos(x);
  return Approx(v, a.f.err + a.g.err + 4.0 * kEps);
}

Approx aux_f(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) bad_arg("aux_f", x, "x > 0 finite");
  return fg(x).f;
}

Approx aux_g(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) bad_arg("aux_g", x, "x > 0 finite");
  return fg(x).g;
}

Approx digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) bad_arg("digamma", x, "x > 0 finite");
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += 1.0 / y;
    y += 1.0;
  }
  return Approx(digamma_asym(y) - shift, 5e-14 * (1.0 + std::abs(shift)));
}

Approx log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) bad_arg("log_gamma", x, "x > 0 finite");
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += std::log(y);
    y += 1.0;
  }
  return Approx(log_gamma_asym(y) - shift, 1e-13 * (1.0 + std::abs(shift) / 8.0));
}

Approx kummer_log_gamma(double x, long terms) {
  if (!(x > 0.0 && x < 1.0)) bad_arg("kummer_log_gamma", x, "0 < x < 1");
  if (terms < 4) terms = 4;
  const double g = constant_value("euler_gamma");
  const double l2pi = constant_value("log_2pi");
  auto fejer = [&](long n_max) {
    double sum = 0.0;
    for (long n = n_max; n >= 1; --n) {
      double w = 1.0 - double(n) / double(n_max + 1);
      double ph = 2.0 * kPi * std::fmod(double(n) * x, 1.0);
      sum += w * (std::cos(ph) / (2.0 * n) +
                  (g + std::log(2.0 * n * kPi)) * std::sin(ph) / (n * kPi));
    }
    return 0.5 * l2pi + sum;
  };
  double v = fejer(terms);
  double vh = fejer(terms / 2);
  double err = 3.0 * std::abs(v - vh) + 20.0 * std::log(double(terms)) / terms;
  return Approx(v, err);
}

Approx barnes_log_G(double one_plus_u) {
  double u = one_plus_u - 1.0;
  if (!(u >= 0.0 && u <= 4.0))
    bad_arg("barnes_log_G", one_plus_u, "argument in [1, 5]");
  if (u == 0.0) return Approx::exact(0.0);
  const long K = 100000;
  const double g = constant_value("euler_gamma");
  double sum = 0.0, comp = 0.0;
  for (long k = 1; k <= K; ++k) {
    double r = u / double(k);
    double term;
    if (r > 0.02) {
      term = double(k) * std::log1p(r) - u + 0.5 * u * r;
    } else {
      // expanded form of k log(1+u/k) - u + u^2/2k, avoids cancellation
      term = (u * r * r) * (1.0 / 3 - r * (1.0 / 4 - r * (1.0 / 5 -
             r * (1.0 / 6 - r * (1.0 / 7 - r / 8)))));
    }
    double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                              : (term - t) + sum;
    sum = t;
  }
  sum += comp;
  // Euler-Maclaurin tails of sum_{k>K} k^-p for the p = 2,3,4 corrections.
  auto ptail = [K](double p) {
    double a = K + 1.0;
    double f = std::pow(a, -p);
    return a * f / (p - 1.0) + 0.5 * f + (p / 12.0) * f / a;
  };
  double u2 = u * u;
  sum += (u2 * u / 3.0) * ptail(2.0) - (u2 * u2 / 4.0) * ptail(3.0) +
         (u2 * u2 * u / 5.0) * ptail(4.0);
  double v = 0.5 * u * constant_value("log_2pi") -
             0.5 * (g * u2 + u2 + u) + sum;
  return Approx(v, 1e-11 * (1.0 + std::abs(v)));
}

Approx barnes_log_g(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) bad_arg("barnes_log_g", z, "z > 0 finite");
  if (z < 1.0) return barnes_log_g(z + 1.0) - log_gamma(z);
  if (z <= 5.0) return barnes_log_G(z);
  return barnes_log_g(z - 1.0) + log_gamma(z - 1.0);
}

Approx dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) bad_arg("dilog", x, "0 <= x <= 1");
  if (x == 0.0) return Approx::exact(0.0);
  if (x == 1.0) return constant("zeta2");
  if (x > 0.5) {
    Approx r = constant("zeta2") - dilog(1.0 - x);
    double c = std::log(x) * std::log1p(-x);
    return Approx(r.value - c, r.err + 4.0 * kEps * (1.0 + std::abs(c)));
  }
  double t = x, sum = 0.0;
  for (long n = 1; std::abs(t) > 1e-18; ++n) {
    sum += t / double(n * n);
    t *= x;
  }
  return Approx(sum, 1e-15);
}

Approx zeta_prime_neg1_hurwitz(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) bad_arg("zeta_prime_neg1_hurwitz", u, "u > 0 finite");
  double b2 = u * u - u + 1.0 / 6.0;        // B_2(u); zeta(-1,u) = -B_2(u)/2
  double sum = 0.0, err = 0.0;
  long n = 1;
  for (; n <= 5000; ++n) {
    Approx gn = aux_g(2.0 * n * kPi * u);
    sum += gn.value / (double(n) * n);
    err += gn.err;
    if (n >= 40 && 2.0 * n * kPi * u >= 100.0) break;
  }
  // Tail of sum g(2npi u)/n^2 from g(x) = 1/x^2 - 6/x^4 + O(x^-6):
  // Euler-Maclaurin sums of n^-4 and n^-6 past the cutoff.
  double c = 2.0 * kPi * u;
  double a = double(n) + 1.0;
  double t4 = std::pow(a, -3.0) / 3.0 + 0.5 * std::pow(a, -4.0) +
              std::pow(a, -5.0) / 3.0;
  double t6 = std::pow(a, -5.0) / 5.0 + 0.5 * std::pow(a, -6.0);
  double tail = t4 / (c * c) - 6.0 * t6 / (c * c * c * c);
  sum += tail;
  err += 120.0 * std::pow(c, -6.0) * std::pow(a, -7.0);
  double v = 0.5 * b2 * std::log(u) - 0.25 * u * u + 1.0 / 12.0 +
             sum / (2.0 * kPi * kPi);
  return Approx(v, err / (2.0 * kPi * kPi) + 1e-12);
}

}  // namespace sici
