#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sici/constants.hpp"
#include "sici/quad.hpp"
#include "sici/registry.hpp"
#include "sici/series.hpp"
#include "sici/specfun.hpp"

namespace sici {
namespace {

constexpr double kPi = 3.14159265358979323846;

double P(const Params& p, const char* k) { return p.at(k); }

// ---------------------------------------------------------------- quadrature

Approx quad_fin(std::function<double(double)> f, double lo, double hi,
                bool slo = false, bool shi = false) {
  QuadTask t;
  t.integrand = std::move(f);
  t.lo = lo;
  t.hi = hi;
  t.singular_lo = slo;
  t.singular_hi = shi;
  t.abs_tol = 1e-13;
  t.rel_tol = 1e-13;
  return integrate(t).integral;
}

Approx quad_inf(std::function<double(double)> f, double lo = 0.0,
                bool slo = false) {
  QuadTask t;
  t.integrand = std::move(f);
  t.lo = lo;
  t.hi = std::numeric_limits<double>::infinity();
  t.singular_lo = slo;
  t.abs_tol = 1e-13;
  t.rel_tol = 1e-13;
  return integrate(t).integral;
}

Approx quad_osc(std::function<double(double)> f, double lo, double period) {
  QuadTask t;
  t.integrand = std::move(f);
  t.lo = lo;
  t.hi = std::numeric_limits<double>::infinity();
  t.oscillatory_period = period;
  t.abs_tol = 1e-13;
  return integrate(t).integral;
}

// ---------------------------------------------------------------- series

Approx series_p(std::function<double(long)> term, double p, long n_terms,
                long start = 1) {
  SeriesTask t;
  t.term = std::move(term);
  t.start_index = start;
  t.tail_model = TailModel::power_law;
  t.power = p;
  t.max_terms = n_terms;
  SeriesResult r = sum_series(t);
  return Approx(r.sum.value, r.sum.err + 1e-14 * double(n_terms));
}

Approx series_alt(std::function<double(long)> term, long max_terms = 4000) {
  SeriesTask t;
  t.term = std::move(term);
  t.tail_model = TailModel::alternating;
  t.abs_tol = 1e-12;
  t.max_terms = max_terms;
  SeriesResult r = sum_series(t);
  return r.sum;
}

Approx series_user(std::function<double(long)> term, long n_terms,
                   std::function<std::pair<double, double>(long)> tail) {
  SeriesTask t;
  t.term = std::move(term);
  t.tail_model = TailModel::user_bound;
  t.user_tail = std::move(tail);
  t.max_terms = n_terms;
  SeriesResult r = sum_series(t);
  return Approx(r.sum.value, r.sum.err + 1e-14 * double(n_terms));
}

// Euler-Maclaurin tails past n0: sum n^-p and sum log(n)/n^2.
double ptail(double p, double n0) {
  double a = n0 + 1.0;
  double f = std::pow(a, -p);
  return a * f / (p - 1.0) + 0.5 * f + (p / 12.0) * f / a -
         p * (p + 1.0) * (p + 2.0) * f / (a * a * a) / 720.0;
}

double logtail2(double n0) {
  double a = n0 + 1.0;
  double la = std::log(a);
  return (la + 1.0) / a + 0.5 * la / (a * a) +
         (2.0 * la - 1.0) / (12.0 * a * a * a);
}

// ---------------------------------------------------------------- aux cache

// f and g on the grid m*pi, m = 1..4096; everything the catalog sums over
// lands on this grid for half-integer parameters.
struct AuxPair {
  double f, g;
};

const std::vector<AuxPair>& aux_grid() {
  static const std::vector<AuxPair> grid = [] {
    std::vector<AuxPair> t(4097);
    for (long m = 1; m <= 4096; ++m) {
      t[m].f = aux_f(m * kPi).value;
      t[m].g = aux_g(m * kPi).value;
    }
    return t;
  }();
  return grid;
}

// f(x)/g(x) with grid reuse when x is an integer multiple of pi.
double fx(double x) {
  double m = x / kPi;
  long mi = std::lround(m);
  if (mi >= 1 && mi <= 4096 && std::abs(m - double(mi)) < 1e-9 * m)
    return aux_grid()[mi].f;
  return aux_f(x).value;
}

double gx(double x) {
  double m = x / kPi;
  long mi = std::lround(m);
  if (mi >= 1 && mi <= 4096 && std::abs(m - double(mi)) < 1e-9 * m)
    return aux_grid()[mi].g;
  return aux_g(x).value;
}

// ---------------------------------------------------------------- kernels

// 1/u - pi/sin(pi u) on (0, 1).
double fu_kernel(double u) {
  if (u < 0.01) {
    double p2 = kPi * kPi, u2 = u * u;
    return -u * p2 * (1.0 / 6 + u2 * p2 * (7.0 / 360 + u2 * p2 * 31.0 / 15120));
  }
  return 1.0 / u - kPi / std::sin(kPi * u);
}

// 1/(e^y - 1) - 1/y + 1/2.
double bexp(double y) {
  if (std::abs(y) < 0.1) {
    double y2 = y * y;
    return y * (1.0 / 12 - y2 * (1.0 / 720 - y2 / 30240.0));
  }
  return 1.0 / std::expm1(y) - 1.0 / y + 0.5;
}

// bexp(y)/y, finite at y = 0.
double bexp_over(double y) {
  if (std::abs(y) < 0.1) {
    double y2 = y * y;
    return 1.0 / 12 - y2 * (1.0 / 720 - y2 / 30240.0);
  }
  return bexp(y) / y;
}

// (pi v coth(pi v) - 1)/v^2, finite at v = 0.
double coth_kernel(double v) {
  if (std::abs(v) < 0.05) {
    double p2 = kPi * kPi, z2 = p2 * v * v;
    return p2 * (1.0 / 3 - z2 * (1.0 / 45 - z2 * 2.0 / 945));
  }
  double z = kPi * v;
  return (z * (1.0 + 2.0 / std::expm1(2.0 * z)) - 1.0) / (v * v);
}

double b2(double x) { return x * x - x + 1.0 / 6.0; }
double b3(double x) { return x * (x * (x - 1.5) + 0.5); }

// ---------------------------------------------------------------- Fejer

// Cesaro-averaged partial sum for conditionally convergent trigonometric
// series; error estimated by comparing against the half-length average.
Approx fejer(const std::function<double(long)>& term, long n_terms) {
  auto avg = [&](long m) {
    double sum = 0.0, comp = 0.0;
    for (long n = m; n >= 1; --n) {
      double a = (1.0 - double(n) / double(m + 1)) * term(n);
      double t = sum + a;
      comp += (std::abs(sum) >= std::abs(a)) ? (sum - t) + a : (a - t) + sum;
      sum = t;
    }
    return sum + comp;
  };
  double v = avg(n_terms);
  double vh = avg(n_terms / 2);
  return Approx(v, 4.0 * std::abs(v - vh) + 10.0 / double(n_terms));
}

// ---------------------------------------------------------------- shared sums

// sum_n [f(2n pi a) cos(2n pi x) - g(2n pi a) sin(2n pi x)]/(n pi): the
// leading 1/(2n pi a) part of f has the closed form B_2(x)/(2a); the
// remainder decays like n^-3 and is summed directly.
Approx osc_aux_series(double a, double x, long n_terms) {
  double sum = 0.0;
  for (long n = n_terms; n >= 1; --n) {
    double arg = 2.0 * n * kPi * a;
    double c = std::cos(2.0 * n * kPi * x), s = std::sin(2.0 * n * kPi * x);
    sum += ((fx(arg) - 1.0 / arg) * c - gx(arg) * s) / (n * kPi);
  }
  double w = 2.0 * kPi * a;
  double tail = (2.0 / (w * w * w) * ptail(4.0, n_terms) +
                 1.0 / (w * w) * ptail(3.0, n_terms)) /
                kPi;
  return Approx(b2(x) / (2.0 * a) + sum, tail + 1e-12);
}

// ---------------------------------------------------------------- closed forms

Approx rhs_75(double u) {
  // Right side of the Barnes-G series identity.
  Approx g = barnes_log_G(1.0 + u);
  Approx lg = (u == 1.0) ? Approx::exact(0.0) : log_gamma(u);
  Approx zp = constant("zeta_prime_neg1");
  double el = 0.25 * (u * (u - 1.0) + 1.0 / 6.0) * std::log(u) - u * u / 8.0 +
              1.0 / 24.0;
  return 0.5 * (g - u * lg) + Approx::exact(el) - 0.5 * zp;
}

// ---------------------------------------------------------------- builder

using LR = std::function<Approx(const Params&)>;

struct Spec {
  const char* id;
  const char* title;
  Category cat;
  const char* eq;
  TolClass tol;
  Params defaults;
  std::vector<Params> sweep;
  std::map<std::string, std::pair<double, double>> ranges;
  LR lhs, rhs;
  bool ineq = false;
  bool questionable = false;
};

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out;
  auto add = [&](Spec s) {
    IdentityRecord r;
    r.id = s.id;
    r.title = s.title;
    r.category = s.cat;
    r.defaults = std::move(s.defaults);
    r.sweep = std::move(s.sweep);
    r.ranges = std::move(s.ranges);
    r.lhs = std::move(s.lhs);
    r.rhs = std::move(s.rhs);
    r.tol_class = s.tol;
    r.paper_eq = s.eq;
    r.is_inequality = s.ineq;
    r.questionable = s.questionable;
    out.push_back(std::move(r));
  };

  const double l2pi = constant_value("log_2pi");
  const double ggam = constant_value("euler_gamma");

  // ================================================================ group A
  // Fourier coefficients: quadrature against the closed form.

  add({"A1", "Fourier sine coefficient of log Gamma(x+a)",
       Category::coef_integral, "2.1", TolClass::MED,
       {{"a", 1.0}, {"n", 1.0}},
       {{{"a", 0.25}, {"n", 1.0}}, {{"a", 0.5}, {"n", 2.0}}, {{"a", 1.7}, {"n", 5.0}}},
       {{"a", {0.05, 10.0}}, {"n", {1.0, 32.0}}},
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return quad_fin([a, n](double x) {
           return log_gamma(x + a).value * std::sin(2.0 * n * kPi * x);
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return (-1.0 / (2.0 * n * kPi)) * (aux_g(2.0 * n * kPi * a) + std::log(a));
       }});

  add({"A2", "Fourier cosine coefficient of log Gamma(x+a)",
       Category::coef_integral, "2.2", TolClass::MED,
       {{"a", 1.0}, {"n", 1.0}},
       {{{"a", 0.25}, {"n", 1.0}}, {{"a", 0.5}, {"n", 2.0}}, {{"a", 1.7}, {"n", 5.0}}},
       {{"a", {0.05, 10.0}}, {"n", {1.0, 32.0}}},
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return quad_fin([a, n](double x) {
           return log_gamma(x + a).value * std::cos(2.0 * n * kPi * x);
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return (1.0 / (2.0 * n * kPi)) * aux_f(2.0 * n * kPi * a);
       }});

  add({"A3", "Fourier cosine coefficient of log x on (0, 2pi)",
       Category::coef_integral, "3.1", TolClass::MED,
       {{"n", 1.0}}, {{{"n", 2.0}}, {{"n", 5.0}}}, {{"n", {1.0, 32.0}}},
       [](const Params& p) {
         double n = P(p, "n");
         return (1.0 / kPi) * quad_fin([n](double x) {
           return std::log(x) * std::cos(n * x);
         }, 0.0, 2.0 * kPi, true);
       },
       [](const Params& p) {
         double n = P(p, "n");
         return (-1.0 / (n * kPi)) * sine_int(2.0 * n * kPi);
       }});

  add({"A4", "Fourier sine coefficient of log x on (0, 2pi)",
       Category::coef_integral, "3.2", TolClass::MED,
       {{"n", 1.0}}, {{{"n", 2.0}}, {{"n", 5.0}}}, {{"n", {1.0, 32.0}}},
       [](const Params& p) {
         double n = P(p, "n");
         return (1.0 / kPi) * quad_fin([n](double x) {
           return std::log(x) * std::sin(n * x);
         }, 0.0, 2.0 * kPi, true);
       },
       [ggam](const Params& p) {
         double n = P(p, "n");
         return (1.0 / (n * kPi)) *
                (cosine_int(2.0 * n * kPi) - (ggam + std::log(2.0 * n * kPi)));
       }});

  add({"A5", "Nielsen integral of log t sin(at)", Category::coef_integral,
       "3.3", TolClass::MED,
       {{"a", 1.0}, {"x", 1.0}},
       {{{"a", 2.0}, {"x", 3.0}}, {{"a", 0.7}, {"x", 2.5}}},
       {{"a", {0.1, 10.0}}, {"x", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), x = P(p, "x");
         return quad_fin([a](double t) {
           return std::log(t) * std::sin(a * t);
         }, 0.0, x, true);
       },
       [ggam](const Params& p) {
         double a = P(p, "a"), x = P(p, "x");
         return (1.0 / a) *
                (cosine_int(a * x) -
                 (ggam + std::cos(a * x) * std::log(x) + std::log(a)));
       }});

  add({"A6", "Fourier cosine coefficient of psi(x+a)", Category::coef_integral,
       "4.1", TolClass::MED,
       {{"a", 1.0}, {"n", 1.0}},
       {{{"a", 0.5}, {"n", 1.0}}, {{"a", 0.25}, {"n", 2.0}}, {{"a", 1.7}, {"n", 3.0}}},
       {{"a", {0.05, 10.0}}, {"n", {1.0, 32.0}}},
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return quad_fin([a, n](double x) {
           return digamma(x + a).value * std::cos(2.0 * n * kPi * x);
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         return -aux_g(2.0 * P(p, "n") * kPi * P(p, "a"));
       }});

  add({"A7", "Fourier sine coefficient of psi(x+a)", Category::coef_integral,
       "4.2", TolClass::MED,
       {{"a", 1.0}, {"n", 1.0}},
       {{{"a", 0.5}, {"n", 1.0}}, {{"a", 0.25}, {"n", 2.0}}, {{"a", 1.7}, {"n", 3.0}}},
       {{"a", {0.05, 10.0}}, {"n", {1.0, 32.0}}},
       [](const Params& p) {
         double a = P(p, "a"), n = P(p, "n");
         return quad_fin([a, n](double x) {
           return digamma(x + a).value * std::sin(2.0 * n * kPi * x);
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         return -aux_f(2.0 * P(p, "n") * kPi * P(p, "a"));
       }});

  // ================================================================ group B
  // Definite integrals.

  add({"B1", "Euler's constant as a split cosine integral",
       Category::definite_integral, "1.14", TolClass::TIGHT, {}, {}, {},
       [](const Params&) {
         Approx head = quad_fin([](double t) {
           double h = std::sin(0.5 * t);
           return 2.0 * h * h / t;
         }, 0.0, 1.0);
         Approx tail = quad_osc([](double t) { return std::cos(t) / t; },
                                1.0, 2.0 * kPi);
         return head - tail;
       },
       [](const Params&) { return constant("euler_gamma"); }});

  add({"B2", "Cin-type integral over a half period", Category::definite_integral,
       "1.16", TolClass::MED, {{"n", 1.0}}, {{{"n", 2.0}}, {{"n", 5.0}}},
       {{"n", {1.0, 32.0}}},
       [](const Params& p) {
         double n = P(p, "n");
         return quad_fin([n](double u) {
           double h = std::sin(n * kPi * u);
           return 2.0 * h * h / u;
         }, 0.0, 0.5);
       },
       [ggam](const Params& p) {
         double n = P(p, "n");
         return Approx::exact(ggam + std::log(n * kPi)) - cosine_int(n * kPi);
       }});

  add({"B3", "Cosine moment of 1/u - pi csc(pi u)", Category::definite_integral,
       "1.18", TolClass::MED, {{"n", 1.0}}, {{{"n", 2.0}}, {{"n", 5.0}}},
       {{"n", {1.0, 32.0}}},
       [](const Params& p) {
         double n = P(p, "n");
         return quad_fin([n](double u) {
           return fu_kernel(u) * std::cos(2.0 * n * kPi * u);
         }, 0.0, 0.5);
       },
       [](const Params& p) {
         double n = P(p, "n");
         return cosine_int(n * kPi) + digamma(n + 0.5) - std::log(n);
       }});

  add({"B4", "Catalan integral of x/sin x", Category::definite_integral,
       "1.28", TolClass::TIGHT, {}, {}, {},
       [](const Params&) {
         return quad_fin([](double x) { return x / std::sin(x); }, 0.0,
                         0.5 * kPi);
       },
       [](const Params&) { return 2.0 * constant("catalan"); }});

  add({"B5", "Integral of x^2/sin x", Category::definite_integral, "1.29",
       TolClass::TIGHT, {}, {}, {},
       [](const Params&) {
         return quad_fin([](double x) { return x * x / std::sin(x); }, 0.0,
                         0.5 * kPi);
       },
       [](const Params&) {
         return (2.0 * kPi) * constant("catalan") - 3.5 * constant("zeta3");
       }});

  add({"B6", "Bernoulli-weighted csc kernel integral",
       Category::definite_integral, "1.29+", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return (kPi * kPi) *
                quad_fin([](double u) { return fu_kernel(u) * b2(u); }, 0.0, 0.5);
       },
       [](const Params&) {
         double z2 = constant_value("zeta2");
         Approx z3 = constant("zeta3");
         return 3.5 * z3 + Approx::exact(-0.375 * kPi * kPi +
                                         z2 * (std::log(kPi) - 2.0 * std::log(2.0)));
       }});

  add({"B7", "Laplace transform of 1/(a^2+v^2)", Category::definite_integral,
       "5.7", TolClass::MED, {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 2.0}, {"mu", 0.5}}, {{"a", 0.5}, {"mu", 3.0}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return quad_inf([a, mu](double v) {
           return std::exp(-mu * v) / (a * a + v * v);
         });
       },
       [](const Params& p) {
         double a = P(p, "a");
         return (1.0 / a) * aux_f(a * P(p, "mu"));
       }});

  add({"B8", "Laplace transform of v/(a^2+v^2)", Category::definite_integral,
       "5.9", TolClass::MED, {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 2.0}, {"mu", 0.5}}, {{"a", 0.5}, {"mu", 3.0}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return quad_inf([a, mu](double v) {
           return v * std::exp(-mu * v) / (a * a + v * v);
         });
       },
       [](const Params& p) { return aux_g(P(p, "a") * P(p, "mu")); }});

  add({"B9", "Mellin-type form of the f transform", Category::definite_integral,
       "5.10", TolClass::MED, {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 1.0}, {"mu", 0.5}}, {{"a", 2.0}, {"mu", 2.0}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return quad_fin([a, mu](double t) {
           double l = std::log(t);
           return std::pow(t, mu - 1.0) / (a * a + l * l);
         }, 0.0, 1.0, mu < 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a");
         return (1.0 / a) * aux_f(a * P(p, "mu"));
       }});

  add({"B10", "Mellin-type form of the g transform",
       Category::definite_integral, "5.12", TolClass::MED,
       {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 1.0}, {"mu", 0.5}}, {{"a", 2.0}, {"mu", 2.0}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return quad_fin([a, mu](double t) {
           double l = std::log(t);
           return std::pow(t, mu - 1.0) * l / (a * a + l * l);
         }, 0.0, 1.0, mu < 1.0);
       },
       [](const Params& p) { return -aux_g(P(p, "a") * P(p, "mu")); }});

  add({"B11", "Squared-denominator log integral", Category::definite_integral,
       "5.14", TolClass::MED, {{"a", 1.0}}, {{{"a", 2.0}}, {{"a", 0.5}}},
       {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return quad_fin([a](double t) {
           double l = std::log(t), d = a * a + l * l;
           return l / (d * d);
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a");
         return (0.5 / a) * aux_f(a) - 0.5 / (a * a);
       }});

  add({"B12", "Squared-log Mellin moment", Category::definite_integral, "5.15",
       TolClass::MED, {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 0.5}, {"mu", 2.0}}, {{"a", 2.0}, {"mu", 0.5}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return quad_fin([a, mu](double t) {
           double l = std::log(t);
           return std::pow(t, mu - 1.0) * l * l / (a * a + l * l);
         }, 0.0, 1.0, mu < 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return Approx::exact(1.0 / mu) - a * aux_f(a * mu);
       }});

  add({"B13", "Malmsten-type integral for log Gamma(mu)",
       Category::definite_integral, "5.18", TolClass::MED, {{"mu", 2.0}},
       {{{"mu", 0.5}}, {{"mu", 3.0}}}, {{"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double mu = P(p, "mu");
         return quad_fin([mu](double x) {
           return bexp_over(std::log(x)) * std::pow(x, mu - 1.0);
         }, 0.0, 1.0, mu < 1.0);
       },
       [l2pi](const Params& p) {
         double mu = P(p, "mu");
         return log_gamma(mu) +
                Approx::exact(-0.5 * l2pi - (mu - 0.5) * std::log(mu) + mu);
       }});

  add({"B14", "Half-log-2pi integral", Category::definite_integral, "5.19",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         return -quad_fin([](double x) { return bexp_over(std::log(x)); },
                          0.0, 1.0);
       },
       [l2pi](const Params&) { return Approx::exact(0.5 * l2pi - 1.0); }});

  add({"B15", "Scaled Bernoulli kernel integral", Category::definite_integral,
       "5.22", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return quad_fin([](double x) {
           return 2.0 * bexp_over(2.0 * std::log(x));
         }, 0.0, 1.0);
       },
       [](const Params&) {
         return Approx::exact(0.5 * (1.0 - std::log(2.0)));
       }});

  add({"B16", "Exponentially weighted Bernoulli kernel",
       Category::definite_integral, "5.23", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return quad_inf([](double u) {
           return bexp_over(u) * std::exp(-u);
         });
       },
       [l2pi](const Params&) { return Approx::exact(1.0 - 0.5 * l2pi); }});

  add({"B17", "Difference-quotient integral for log Gamma(a)",
       Category::definite_integral, "5.26", TolClass::MED, {{"a", 2.0}},
       {{{"a", 0.5}}, {{"a", 1.5}}, {{"a", 3.0}}}, {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double b = P(p, "a") - 1.0;
         return quad_fin([b](double u) {
           double l = std::log(u);
           if (std::abs(l) < 1e-5)
             return b * (b - 1.0) * (0.5 + (2.0 * b - 1.0) * l / 12.0);
           return (std::expm1(b * l) / std::expm1(l) - b) / l;
         }, 0.0, 1.0, b < 0.0);
       },
       [](const Params& p) { return log_gamma(P(p, "a")); }});

  add({"B18", "Binet-like integral for 1/(2a) - log a",
       Category::definite_integral, "5.27", TolClass::MED, {{"a", 2.0}},
       {{{"a", 0.5}}, {{"a", 5.0}}}, {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double b = P(p, "a") - 1.0;
         return quad_fin([b](double u) {
           double l = std::log(u);
           return -std::expm1(b * l) / l + 0.5 * std::exp(b * l);
         }, 0.0, 1.0, b < 0.0);
       },
       [](const Params& p) {
         double a = P(p, "a");
         return Approx::exact(0.5 / a - std::log(a));
       }});

  add({"B19", "Frullani-type integral for log a", Category::definite_integral,
       "5.28", TolClass::MED, {{"a", 2.0}}, {{{"a", 0.5}}, {{"a", 5.0}}},
       {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double b = P(p, "a") - 1.0;
         return quad_fin([b](double u) {
           double l = std::log(u);
           return std::expm1(b * l) / l;
         }, 0.0, 1.0, b < 0.0);
       },
       [](const Params& p) { return Approx::exact(std::log(P(p, "a"))); }});

  add({"B20", "Generalized Bernoulli kernel moment for psi",
       Category::definite_integral, "5.29", TolClass::MED,
       {{"a", 1.0}, {"mu", 1.0}},
       {{{"a", 2.0}, {"mu", 0.75}}, {{"a", 0.5}, {"mu", 2.0}}},
       {{"a", {0.1, 10.0}}, {"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a"), mu = P(p, "mu");
         return (1.0 / a) * quad_fin([a, mu](double x) {
           return (bexp(std::log(x) / a) - 0.5) * std::pow(x, mu - 1.0);
         }, 0.0, 1.0, mu < 1.0);
       },
       [](const Params& p) {
         double am = P(p, "a") * P(p, "mu");
         return digamma(am) - std::log(am);
       }});

  add({"B21", "Logarithmic-integral limit for gamma",
       Category::definite_integral, "5.30", TolClass::ASYMPT, {}, {}, {},
       [](const Params&) {
         auto h = [](double d) {
           Approx li = quad_fin([](double t) { return 1.0 / std::log(t); },
                                0.0, 1.0 - d);
           return li - std::log(d);
         };
         Approx h1 = h(0.01), h2 = h(0.005);
         return 2.0 * h2 - h1;
       },
       [](const Params&) { return constant("euler_gamma"); }});

  add({"B22", "Coth kernel with weight exp(-pi v)", Category::definite_integral,
       "5.33", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return 0.5 * quad_inf([](double v) {
           return coth_kernel(v) * std::exp(-kPi * v);
         });
       },
       [](const Params&) {
         return Approx::exact(0.5 * kPi * (1.0 - std::log(2.0)));
       }});

  add({"B23", "Coth kernel with weight exp(-2pi v)",
       Category::definite_integral, "5.34", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return 0.5 * quad_inf([](double v) {
           return coth_kernel(v) * std::exp(-2.0 * kPi * v);
         });
       },
       [l2pi](const Params&) { return Approx::exact(kPi - 0.5 * kPi * l2pi); }});

  add({"B24", "Coth kernel Stirling remainder", Category::definite_integral,
       "5.34.1", TolClass::MED, {{"mu", 1.0}}, {{{"mu", 0.5}}, {{"mu", 3.0}}},
       {{"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double mu = P(p, "mu");
         return (0.5 / kPi) * quad_inf([mu](double v) {
           return coth_kernel(v) * std::exp(-2.0 * kPi * mu * v);
         });
       },
       [l2pi](const Params& p) {
         double mu = P(p, "mu");
         return log_gamma(mu) +
                Approx::exact(-0.5 * l2pi - (mu - 0.5) * std::log(mu) + mu);
       }});

  add({"B25", "Tangent-substitution form of f", Category::definite_integral,
       "5.35", TolClass::MED, {{"p", 1.0}}, {{{"p", 0.5}}, {{"p", 3.0}}},
       {{"p", {0.1, 10.0}}},
       [](const Params& p) {
         double q = P(p, "p");
         return quad_fin([q](double x) {
           return std::exp(-q * std::tan(x));
         }, 0.0, 0.5 * kPi);
       },
       [](const Params& p) { return aux_f(P(p, "p")); }});

  add({"B26", "Binet log1p integral for log Gamma(a)",
       Category::definite_integral, "5.36", TolClass::MED, {{"a", 1.0}},
       {{{"a", 0.5}}, {{"a", 2.0}}}, {{"a", {0.1, 10.0}}},
       [l2pi](const Params& p) {
         double a = P(p, "a");
         Approx q = quad_fin([a](double x) {
           return std::log1p(-std::exp(-2.0 * kPi * a * std::tan(x)));
         }, 0.0, 0.5 * kPi, true);
         return Approx::exact(0.5 * l2pi + (a - 0.5) * std::log(a) - a) -
                (1.0 / kPi) * q;
       },
       [](const Params& p) { return log_gamma(P(p, "a")); }});

  add({"B27", "Binet second formula for psi(a)", Category::definite_integral,
       "6.2", TolClass::TIGHT, {{"a", 1.0}},
       {{{"a", 0.5}}, {{"a", 2.0}}, {{"a", 5.0}}}, {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         Approx q = quad_inf([a](double t) {
           return t / ((a * a + t * t) * std::expm1(2.0 * kPi * t));
         });
         return Approx::exact(std::log(a) - 0.5 / a) - 2.0 * q;
       },
       [](const Params& p) { return digamma(P(p, "a")); }});

  add({"B28", "Binet first formula remainder", Category::definite_integral,
       "6.3", TolClass::TIGHT, {{"mu", 1.0}},
       {{{"mu", 0.5}}, {{"mu", 2.0}}, {{"mu", 5.0}}}, {{"mu", {0.1, 10.0}}},
       [](const Params& p) {
         double mu = P(p, "mu");
         return quad_inf([mu](double v) {
           return bexp(v) * std::exp(-mu * v);
         });
       },
       [](const Params& p) {
         double mu = P(p, "mu");
         return Approx::exact(std::log(mu) - 0.5 / mu) - digamma(mu);
       }});

  add({"B29", "Adamchik integral for log G(1+x)", Category::definite_integral,
       "7.9", TolClass::MED, {{"x", 1.0}}, {{{"x", 0.5}}, {{"x", 2.0}}},
       {{"x", {0.1, 4.0}}},
       [l2pi](const Params& p) {
         double x = P(p, "x");
         Approx q = quad_inf([x](double v) {
           return v * std::log(v * v + x * x) / std::expm1(2.0 * kPi * v);
         });
         return Approx::exact(0.5 * x * x * (std::log(x) - 1.5) +
                              0.5 * x * l2pi) +
                constant("zeta_prime_neg1") - q;
       },
       [](const Params& p) { return barnes_log_G(1.0 + P(p, "x")); }});

  add({"B30", "v log v against the Bose kernel", Category::definite_integral,
       "7.10", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return quad_inf([](double v) {
           return v * std::log(v) / std::expm1(2.0 * kPi * v);
         }, 0.0, true);
       },
       [](const Params&) { return 0.5 * constant("zeta_prime_neg1"); }});

  add({"B31", "Linear-weight log Gamma integral vs series",
       Category::definite_integral, "7.13", TolClass::MED, {{"a", 1.0}},
       {{{"a", 0.5}}, {{"a", 2.0}}}, {{"a", {0.1, 4.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return quad_fin([a](double x) {
           return (1.0 - 2.0 * x) * log_gamma(x + a).value;
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a");
         Approx s = series_p([a](long n) {
           return gx(2.0 * n * kPi * a) / (double(n) * n);
         }, 4.0, 400);
         return Approx::exact(-std::log(a) / 6.0) - (1.0 / (kPi * kPi)) * s;
       }});

  add({"B32", "Raabe integral of log Gamma(x+a)", Category::definite_integral,
       "7.14", TolClass::TIGHT, {{"a", 1.0}}, {{{"a", 0.5}}, {{"a", 2.0}}},
       {{"a", {0.1, 10.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return quad_fin([a](double x) { return log_gamma(x + a).value; },
                         0.0, 1.0);
       },
       [l2pi](const Params& p) {
         double a = P(p, "a");
         return Approx::exact(0.5 * l2pi + a * std::log(a) - a);
       }});

  add({"B33", "First moment of log Gamma(a+t)", Category::definite_integral,
       "7.15", TolClass::MED, {{"a", 1.0}}, {{{"a", 0.5}}, {{"a", 2.0}}},
       {{"a", {0.1, 4.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return 2.0 * quad_fin([a](double t) {
           return t * log_gamma(a + t).value;
         }, 0.0, 1.0);
       },
       [l2pi](const Params& p) {
         double a = P(p, "a");
         Approx zp = constant("zeta_prime_neg1");
         double la = std::log(a);
         Approx lg = (a == 1.0) ? Approx::exact(0.0) : log_gamma(a);
         return Approx::exact(-a + 0.5 * a * a - 1.0 / 6.0 + 0.5 * l2pi + la -
                              (a - 1.0) * (a - 1.0) * la) +
                2.0 * zp + (2.0 * (a - 1.0)) * lg - 2.0 * barnes_log_g(a);
       }});

  add({"B34", "Second log-moment of the Gamma function",
       Category::definite_integral, "4.3.1+", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return quad_fin([](double x) {
           double l = log_gamma(x).value;
           return l * l;
         }, 0.0, 1.0, true);
       },
       [l2pi, ggam](const Params&) {
         Approx zp2 = constant("zeta_prime_2");
         Approx zpp2 = constant("zeta_prime_prime_2");
         double p2 = kPi * kPi;
         return Approx::exact(ggam * ggam / 12.0 + p2 / 48.0 +
                              ggam * l2pi / 6.0 + l2pi * l2pi / 3.0) -
                ((ggam + l2pi) / p2) * zp2 + (0.5 / p2) * zpp2;
       }});

  add({"B35", "Parseval identity for psi(x+a)", Category::definite_integral,
       "4.3.1", TolClass::MED, {{"a", 1.0}}, {{{"a", 0.5}}},
       {{"a", {0.25, 2.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return quad_fin([a](double x) {
           double v = digamma(x + a).value;
           return v * v;
         }, 0.0, 1.0);
       },
       [](const Params& p) {
         double a = P(p, "a");
         Approx s = series_p([a](long n) {
           double arg = 2.0 * n * kPi * a;
           double f = fx(arg), g = gx(arg);
           return f * f + g * g;
         }, 2.0, 1500);
         double la = std::log(a);
         return Approx::exact(la * la) + 2.0 * s;
       }});

  add({"B36", "Parseval identity for log Gamma(x+1)",
       Category::definite_integral, "4.3.1++", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return quad_fin([](double x) {
           double l = log_gamma(x + 1.0).value;
           return l * l;
         }, 0.0, 1.0);
       },
       [l2pi](const Params&) {
         Approx s = series_p([](long n) {
           double f = fx(2.0 * n * kPi), g = gx(2.0 * n * kPi);
           return (f * f + g * g) / (double(n) * n);
         }, 4.0, 400);
         double c = 0.5 * l2pi - 1.0;
         return Approx::exact(c * c) + (0.5 / (kPi * kPi)) * s;
       }});

  add({"B37", "Dilogarithm integral for the Barnes-G series",
       Category::definite_integral, "7.15+", TolClass::MED, {{"u", 0.5}},
       {{{"u", 0.25}}, {{"u", 1.0}}}, {{"u", {0.1, 4.0}}},
       [](const Params& p) {
         double u = P(p, "u");
         double w = 2.0 * kPi * u;
         Approx q = quad_inf([w](double v) {
           return v * dilog(std::exp(-v)).value / (w * w + v * v);
         });
         return (-0.25 / (kPi * kPi)) * q;
       },
       [](const Params& p) { return rhs_75(P(p, "u")); }});

  // ================================================================ group C
  // Series with closed forms.

  add({"C1", "Odd harmonic numbers via the digamma function",
       Category::series_closed_form, "1.17", TolClass::TIGHT, {{"n", 1.0}},
       {{{"n", 2.0}}, {{"n", 5.0}}, {{"n", 10.0}}, {{"n", 50.0}}},
       {{"n", {1.0, 1e6}}},
       [](const Params& p) {
         long n = std::lround(P(p, "n"));
         return Approx(finite_sum_odd_reciprocals(n), 1e-15 * double(n));
       },
       [ggam](const Params& p) {
         return digamma(P(p, "n") + 0.5) +
                Approx::exact(ggam + 2.0 * std::log(2.0));
       }});

  add({"C2", "Wallis-type constant from the Poisson summation",
       Category::series_closed_form, "1.20", TolClass::MED, {}, {}, {},
       [](const Params&) {
         Approx ci = series_alt([](long n) {
           double g = aux_grid()[n].g;
           return (n % 2 == 1) ? g : -g;  // Ci(n pi)
         });
         Approx ps = series_p([](long n) {
           return digamma(n + 0.5).value - std::log(double(n));
         }, 2.0, 2000);
         return 2.0 * (ci + ps);
       },
       [](const Params&) {
         return Approx(std::log(4.0 / kPi), 1e-15);
       }});

  add({"C3", "Alternating aux-g series for psi(a+1/2)",
       Category::series_closed_form, "1.21", TolClass::MED, {{"a", 0.5}},
       {{{"a", 0.3}}, {{"a", 1.0}}}, {{"a", {0.05, 4.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         Approx s = series_alt([a](long n) {
           double g = gx(2.0 * n * kPi * a);
           return (n % 2 == 1) ? 2.0 * g : -2.0 * g;
         });
         return Approx::exact(std::log(a)) + s;
       },
       [](const Params& p) { return digamma(P(p, "a") + 0.5); }});

  add({"C4", "Sum of Ci(n pi)", Category::series_closed_form, "1.22",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_alt([](long n) {
           double g = aux_grid()[n].g;
           return (n % 2 == 1) ? g : -g;
         });
       },
       [ggam](const Params&) {
         return Approx::exact(0.5 * (std::log(2.0) - ggam));
       }});

  add({"C5", "Sum of psi(n+1/2) - log n", Category::series_closed_form, "1.23",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         return 2.0 * series_p([](long n) {
           return digamma(n + 0.5).value - std::log(double(n));
         }, 2.0, 2000);
       },
       [ggam](const Params&) {
         return Approx::exact(ggam + std::log(2.0 / kPi));
       }});

  add({"C6", "Merkle's digamma series", Category::series_closed_form, "1.24",
       TolClass::MED, {{"x", 0.5}}, {{{"x", 1.5}}}, {{"x", {0.1, 5.0}}},
       [](const Params& p) {
         double x = P(p, "x");
         return series_p([x](long n) {
           return digamma(x + n).value - digamma(1.0 + n).value -
                  (x - 1.0) / (1.0 + n);
         }, 2.0, 2000, 0);
       },
       [ggam](const Params& p) {
         double x = P(p, "x");
         return (1.0 - x) * (digamma(x) + Approx::exact(ggam - 1.0));
       }});

  add({"C7", "Stirling-defect series", Category::series_closed_form, "1.25",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_p([](long n) {
           return digamma(1.0 + n).value - std::log(double(n)) -
                  0.5 / (1.0 + n);
         }, 2.0, 2000);
       },
       [l2pi, ggam](const Params&) {
         return Approx::exact(1.0 + 0.5 * ggam - 0.5 * l2pi);
       }});

  add({"C8", "Weighted Ci series with zeta'(-1)", Category::series_closed_form,
       "1.26", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_alt([](long n) {
           double g = aux_grid()[n].g;
           return ((n % 2 == 1) ? g : -g) / (double(n) * n);
         });
       },
       [](const Params&) {
         double p2 = kPi * kPi;
         return Approx::exact(-p2 * std::log(2.0) / 6.0 - 5.0 * p2 / 24.0) -
                (2.0 * p2) * constant("zeta_prime_neg1");
       }});

  add({"C9", "de Doelder's psi series", Category::series_closed_form, "1.27",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         Approx r = series_p([](long n) {
           return (digamma(n + 0.5).value - std::log(double(n))) /
                  (double(n) * n);
         }, 4.0, 400);
         return r - constant("zeta_prime_2");
       },
       [ggam](const Params&) {
         Approx z3 = constant("zeta3");
         double z2 = constant_value("zeta2");
         return 3.5 * z3 + Approx::exact(-(ggam + 2.0 * std::log(2.0)) * z2);
       }});

  add({"C10", "Poisson-summation series for psi(a)",
       Category::series_closed_form, "4.3", TolClass::MED, {{"a", 1.0}},
       {{{"a", 0.5}}, {{"a", 2.0}}}, {{"a", {0.1, 4.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return -2.0 * series_p([a](long n) {
           return gx(2.0 * n * kPi * a);
         }, 2.0, 1000);
       },
       [](const Params& p) {
         double a = P(p, "a");
         return digamma(a) + Approx::exact(-std::log(a) + 0.5 / a);
       }});

  add({"C11", "Alternating sum of Ci(2n pi)", Category::series_closed_form,
       "4.7", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_alt([](long n) {
           double g = aux_grid()[2 * n].g;  // Ci(2n pi) = -g(2n pi)
           return (n % 2 == 1) ? g : -g;
         });
       },
       [ggam](const Params&) {
         return Approx::exact(1.0 - 0.5 * ggam - std::log(2.0));
       }});

  add({"C12", "Alternating sum of Ci(n pi)", Category::series_closed_form,
       "4.8", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_p([](long n) { return -aux_grid()[n].g; }, 2.0, 2000);
       },
       [ggam](const Params&) {
         return Approx::exact(0.5 * (1.0 - ggam - std::log(2.0)));
       }});

  add({"C13", "Alternating si(n pi)/n series", Category::series_closed_form,
       "5.32+", TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_p([](long n) { return -aux_grid()[n].f / double(n); },
                         2.0, 2000);
       },
       [](const Params&) {
         return Approx::exact(0.5 * kPi * std::log(2.0) - 0.5 * kPi);
       }});

  add({"C14", "si(2n pi)/n series", Category::series_closed_form, "5.34+",
       TolClass::MED, {}, {}, {},
       [](const Params&) {
         return series_p([](long n) {
           return -aux_grid()[2 * n].f / double(n);
         }, 2.0, 2000);
       },
       [l2pi](const Params&) {
         return Approx::exact(0.5 * kPi * l2pi - kPi);
       }});

  add({"C15", "Barnes-G series", Category::series_closed_form, "7.5",
       TolClass::MED, {{"u", 0.5}}, {{{"u", 0.25}}, {{"u", 1.0}}},
       {{"u", {0.1, 4.0}}},
       [](const Params& p) {
         double u = P(p, "u");
         Approx s = series_p([u](long n) {
           return gx(2.0 * n * kPi * u) / (double(n) * n);
         }, 4.0, 400);
         return (-0.25 / (kPi * kPi)) * s;
       },
       [](const Params& p) { return rhs_75(P(p, "u")); }});

  add({"C16", "Ci(2n pi)/(2n pi)^2 series", Category::series_closed_form,
       "7.5-bis", TolClass::MED, {}, {}, {},
       [](const Params&) {
         Approx s = series_p([](long n) {
           return aux_grid()[2 * n].g / (double(n) * n);
         }, 4.0, 400);
         return (-0.25 / (kPi * kPi)) * s;
       },
       [](const Params&) {
         return Approx::exact(-1.0 / 12.0) - 0.5 * constant("zeta_prime_neg1");
       }});

  add({"C17", "Glaisher series of gamma + log(2n pi)",
       Category::series_closed_form, "7.4+", TolClass::MED, {}, {}, {},
       [ggam, l2pi](const Params&) {
         return series_user([ggam](long n) {
           double w = 2.0 * n * kPi;
           return (ggam + std::log(w)) / (w * w);
         }, 2000, [ggam, l2pi](long last) {
           double t = ((ggam + l2pi) * ptail(2.0, double(last)) +
                       logtail2(double(last))) / (4.0 * kPi * kPi);
           return std::make_pair(t, 1e-12);
         });
       },
       [](const Params&) {
         return 0.5 * (Approx::exact(1.0 / 12.0) - constant("zeta_prime_neg1"));
       }});

  add({"C18", "Gosper/Vardi identity for zeta'(-1, u)",
       Category::series_closed_form, "7.6", TolClass::MED, {{"u", 1.0}},
       {{{"u", 0.5}}, {{"u", 2.0}}}, {{"u", {0.1, 4.0}}},
       [](const Params& p) { return zeta_prime_neg1_hurwitz(P(p, "u")); },
       [](const Params& p) {
         double u = P(p, "u");
         Approx lg = (u == 1.0) ? Approx::exact(0.0) : log_gamma(u);
         return constant("zeta_prime_neg1") - (barnes_log_g(1.0 + u) - u * lg);
       }});

  add({"C19", "x log x series at the midpoint", Category::series_closed_form,
       "3.4+", TolClass::MED, {}, {}, {},
       [ggam, l2pi](const Params&) {
         // odd n only; tail = (all n) - (even n), each by Euler-Maclaurin
         return series_user([ggam](long k) {
           double n = 2.0 * k - 1.0;
           double w = 2.0 * n * kPi;
           return 8.0 * (ggam + std::log(w) + gx(w)) / (w * w);
         }, 1000, [ggam, l2pi](long last_k) {
           double m = 2.0 * last_k - 1.0;  // last odd index summed
           double all = 2.0 / (kPi * kPi) *
                        ((ggam + l2pi) * ptail(2.0, m) + logtail2(m));
           double l4pi = l2pi + std::log(2.0);
           double ev = 0.5 / (kPi * kPi) *
                       ((ggam + l4pi) * ptail(2.0, 0.5 * (m - 1.0)) +
                        logtail2(0.5 * (m - 1.0)));
           return std::make_pair(all - ev, 1e-11);
         });
       },
       [](const Params&) { return Approx::exact(std::log(2.0)); }});

  add({"C20", "Coth kernel transform vs f series", Category::series_closed_form,
       "5.32", TolClass::MED, {{"mu", kPi}},
       {{{"mu", 2.0 * kPi}}, {{"mu", 1.0}}}, {{"mu", {0.5, 10.0}}},
       [](const Params& p) {
         double mu = P(p, "mu");
         return 0.5 * quad_inf([mu](double v) {
           return coth_kernel(v) * std::exp(-mu * v);
         });
       },
       [](const Params& p) {
         double mu = P(p, "mu");
         return series_p([mu](long n) { return fx(n * mu) / double(n); },
                         2.0, 800);
       }});

  add({"C21", "Bose kernel transform vs g series", Category::series_closed_form,
       "6.1", TolClass::MED, {{"a", 1.0}}, {{{"a", 0.5}}},
       {{"a", {0.25, 4.0}}},
       [](const Params& p) {
         double a = P(p, "a");
         return quad_inf([a](double t) {
           return t / ((a * a + t * t) * std::expm1(2.0 * kPi * t));
         });
       },
       [](const Params& p) {
         double a = P(p, "a");
         return series_p([a](long n) { return gx(2.0 * n * kPi * a); },
                         2.0, 1000);
       }});

  // ================================================================ group D
  // Pointwise Fourier-series checks.

  add({"D1", "Kummer's Fourier series for log Gamma",
       Category::fourier_pointwise, "2.7", TolClass::LOOSE, {{"x", 0.5}},
       {{{"x", 0.1}}, {{"x", 0.25}}, {{"x", 0.9}}}, {{"x", {0.02, 0.98}}},
       [](const Params& p) {
         return kummer_log_gamma(P(p, "x"), 6000000);
       },
       [](const Params& p) { return log_gamma(P(p, "x")); }});

  add({"D2", "Nielsen's series for log Gamma(1+x)",
       Category::fourier_pointwise, "2.8", TolClass::LOOSE, {{"x", 0.25}},
       {{{"x", 0.6}}}, {{"x", {0.02, 0.98}}},
       [l2pi](const Params& p) {
         double x = P(p, "x");
         return Approx::exact(0.5 * l2pi - 1.0) + osc_aux_series(1.0, x, 1500);
       },
       [](const Params& p) { return log_gamma(1.0 + P(p, "x")); }});

  add({"D3", "Aux-f series for log Gamma(a)", Category::fourier_pointwise,
       "2.11", TolClass::LOOSE, {{"a", 0.5}}, {{{"a", 0.75}}},
       {{"a", {0.05, 0.95}}},
       [l2pi](const Params& p) {
         double a = P(p, "a");
         Approx s = series_p([a](long n) {
           return fx(2.0 * n * kPi * a) / double(n);
         }, 2.0, 1000);
         return Approx::exact(0.5 * l2pi + (a - 0.5) * std::log(a) - a) +
                (1.0 / kPi) * s;
       },
       [](const Params& p) { return log_gamma(P(p, "a")); }});

  add({"D4", "Alternating aux-f series for log Gamma(x+1/2)",
       Category::fourier_pointwise, "2.12", TolClass::LOOSE, {{"x", 0.25}},
       {{{"x", 0.75}}}, {{"x", {0.05, 0.95}}},
       [l2pi](const Params& p) {
         double x = P(p, "x");
         Approx s = series_alt([x](long n) {
           double f = fx(2.0 * n * kPi * x) / (double(n) * kPi);
           return (n % 2 == 1) ? -f : f;
         });
         return Approx::exact(0.5 * l2pi + x * std::log(x) - x) + s;
       },
       [](const Params& p) { return log_gamma(P(p, "x") + 0.5); }});

  add({"D5", "Fourier series for log x on (0, 1)", Category::fourier_pointwise,
       "3.4", TolClass::LOOSE, {{"x", 0.5}}, {{{"x", 0.2}}, {{"x", 0.8}}},
       {{"x", {0.05, 0.95}}},
       [ggam](const Params& p) {
         double x = P(p, "x");
         Approx el = fejer([x, ggam](long n) {
           double c = std::cos(2.0 * n * kPi * x);
           double s = std::sin(2.0 * n * kPi * x);
           return (-(ggam + std::log(2.0 * n * kPi)) * s - 0.5 * kPi * c) /
                  (n * kPi);
         }, 2000000);
         return Approx::exact(-1.0) + el + osc_aux_series(1.0, x, 1500);
       },
       [](const Params& p) {
         return Approx::exact(std::log(P(p, "x")));
       }});

  add({"D6", "Symmetrized si(2n pi) cosine series", Category::fourier_pointwise,
       "3.6", TolClass::LOOSE, {{"x", 0.5}}, {{{"x", 0.2}}, {{"x", 0.8}}},
       {{"x", {0.05, 0.95}}},
       [](const Params& p) {
         double x = P(p, "x");
         double sum = 0.0;
         const long N = 800;
         for (long n = N; n >= 1; --n) {
           double arg = 2.0 * n * kPi;
           sum += (aux_grid()[2 * n].f - 1.0 / arg) *
                  std::cos(2.0 * n * kPi * x) / double(n);
         }
         double tail = (2.0 / std::pow(2.0 * kPi, 3)) * ptail(4.0, N);
         return Approx(b2(x) + (2.0 / kPi) * sum, (2.0 / kPi) * tail + 1e-12);
       },
       [](const Params& p) {
         double x = P(p, "x");
         return Approx::exact(std::log(x) + std::log(1.0 - x) -
                              std::log(2.0 * std::sin(kPi * x)) + 2.0);
       }});

  add({"D7", "Lerch's trigonometric series for psi",
       Category::fourier_pointwise, "4.10", TolClass::LOOSE, {{"x", 0.5}},
       {{{"x", 0.2}}, {{"x", 0.8}}}, {{"x", {0.05, 0.95}}},
       [](const Params& p) {
         double x = P(p, "x");
         return -1.0 * fejer([x](long n) {
           return std::sin((2.0 * n + 1.0) * kPi * x) * std::log1p(1.0 / n);
         }, 2000000);
       },
       [ggam, l2pi](const Params& p) {
         double x = P(p, "x");
         double s = std::sin(kPi * x), c = std::cos(kPi * x);
         return (digamma(x) + Approx::exact(ggam + l2pi)) * s +
                Approx::exact(0.5 * kPi * c);
       }});

  add({"D8", "Fourier series for log Gamma(a+x)", Category::fourier_pointwise,
       "2.3", TolClass::LOOSE, {{"a", 1.0}, {"x", 0.25}},
       {{{"a", 0.5}, {"x", 0.6}}, {{"a", 2.0}, {"x", 0.4}}},
       {{"a", {0.25, 2.0}}, {"x", {0.05, 0.95}}},
       [l2pi](const Params& p) {
         double a = P(p, "a"), x = P(p, "x");
         return Approx::exact(0.5 * l2pi + a * std::log(a) - a -
                              std::log(a) * (1.0 - 2.0 * x) / 2.0) +
                osc_aux_series(a, x, 400);
       },
       [](const Params& p) {
         return log_gamma(P(p, "a") + P(p, "x"));
       }});

  add({"D9", "Conjectured Fourier series for psi(x+a)",
       Category::fourier_pointwise, "4.2.1", TolClass::LOOSE,
       {{"a", 1.0}, {"x", 0.25}}, {{{"a", 0.6}, {"x", 0.3}}},
       {{"a", {0.25, 2.0}}, {"x", {0.05, 0.95}}},
       [](const Params& p) {
         double a = P(p, "a"), x = P(p, "x");
         double w = 2.0 * kPi * a;
         double sum = 0.0;
         const long N = 400;
         for (long n = N; n >= 1; --n) {
           double arg = w * n;
           double c = std::cos(2.0 * n * kPi * x);
           double s = std::sin(2.0 * n * kPi * x);
           sum += (gx(arg) - 1.0 / (arg * arg)) * c +
                  (fx(arg) - 1.0 / arg + 2.0 / (arg * arg * arg)) * s;
         }
         double tail = 2.0 * (6.0 / std::pow(w, 4) * ptail(4.0, N) +
                              24.0 / std::pow(w, 5) * ptail(5.0, N));
         double v = std::log(a) - (1.0 - 2.0 * x) / (2.0 * a) -
                    b2(x) / (2.0 * a * a) + b3(x) / (3.0 * a * a * a) -
                    2.0 * sum;
         return Approx(v, tail + 1e-11);
       },
       [](const Params& p) { return digamma(P(p, "x") + P(p, "a")); },
       false, true});

  // ================================================================ group E
  // Inequalities.

  add({"E1", "Positivity of the oscillatory sine transform",
       Category::inequality, "8.1", TolClass::MED, {}, {}, {},
       [](const Params&) {
         std::mt19937 gen(12345);
         std::uniform_real_distribution<double> dist(1e-6, 10.0);
         double worst = std::numeric_limits<double>::infinity();
         double err = 0.0;
         for (int i = 0; i < 200; ++i) {
           double t = dist(gen), a = dist(gen);
           Approx f = aux_f(t * a);
           if (f.value < worst) {
             worst = f.value;
             err = f.err;
           }
         }
         return Approx(-worst, err);
       },
       [](const Params&) { return Approx::exact(0.0); }, true});

  add({"E2", "Stirling lower bound for log Gamma", Category::inequality, "8.2",
       TolClass::MED, {}, {}, {},
       [l2pi](const Params&) {
         std::mt19937 gen(54321);
         std::uniform_real_distribution<double> dist(1e-6, 20.0);
         double worst = -std::numeric_limits<double>::infinity();
         double err = 0.0;
         for (int i = 0; i < 100; ++i) {
           double a = dist(gen);
           Approx lg = log_gamma(a);
           double d = 0.5 * l2pi + (a - 0.5) * std::log(a) - a - lg.value;
           if (d > worst) {
             worst = d;
             err = lg.err;
           }
         }
         return Approx(worst, err);
       },
       [](const Params&) { return Approx::exact(0.0); }, true});

  add({"E3", "Negativity of Ci at even multiples of pi", Category::inequality,
       "8.4", TolClass::MED, {}, {}, {},
       [](const Params&) {
         double worst = -std::numeric_limits<double>::infinity();
         double err = 0.0;
         for (long n = 1; n <= 20; ++n) {
           Approx ci = cosine_int(2.0 * n * kPi);
           if (ci.value > worst) {
             worst = ci.value;
             err = ci.err;
           }
         }
         return Approx(worst, err);
       },
       [](const Params&) { return Approx::exact(0.0); }, true});

  // ================================================================ group F
  // Limits and decay checks.

  add({"F1", "Limit of cos y Ci(y) - log y", Category::consistency, "2.4",
       TolClass::ASYMPT, {{"y", 1e-4}}, {{{"y", 1e-3}}}, {{"y", {1e-8, 0.01}}},
       [](const Params& p) {
         double y = P(p, "y");
         return std::cos(y) * cosine_int(y) - std::log(y);
       },
       [](const Params&) { return constant("euler_gamma"); }});

  add({"F2", "Odd-harmonic limit for gamma + 2 log 2", Category::consistency,
       "1.12", TolClass::ASYMPT, {{"n", 65536.0}}, {}, {{"n", {16.0, 1e7}}},
       [](const Params& p) {
         long n = std::lround(P(p, "n"));
         return Approx(finite_sum_odd_reciprocals(n) - std::log(double(n)),
                       1e-15 * double(n) * 1e-3 + 1e-12);
       },
       [ggam](const Params&) {
         return Approx::exact(ggam + 2.0 * std::log(2.0));
       }});

  add({"F3", "Riemann-Lebesgue decay of the csc-kernel coefficients",
       Category::consistency, "1.13", TolClass::MED, {}, {}, {},
       [](const Params&) {
         double worst = 0.0, err = 0.0;
         for (long n : {1L, 2L, 4L, 8L, 16L, 32L, 64L}) {
           Approx in = quad_fin([n](double u) {
             return fu_kernel(u) * std::cos(2.0 * n * kPi * u);
           }, 0.0, 0.5);
           double v = double(n) * std::abs(in.value);
           if (v > worst) {
             worst = v;
             err = double(n) * in.err;
           }
         }
         return Approx(worst, err);
       },
       [](const Params&) { return Approx::exact(0.5); }, true});

  return out;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> c = build_catalog();
  return c;
}

}  // namespace sici
