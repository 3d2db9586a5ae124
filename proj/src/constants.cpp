#include "sici/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace sici {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Euler-Maclaurin tail for sum_{n>N} n^{-p}, p > 1.
double power_tail(double p, double n0) {
  double a = n0 + 1.0;
  double f = std::pow(a, -p);
  return a * f / (p - 1.0) + 0.5 * f + (p / 12.0) * f / a -
         p * (p + 1.0) * (p + 2.0) * f / (a * a * a) / 720.0;
}

// Euler-Maclaurin tail for sum_{n>N} log(n) * n^{-p}, p > 1.
double log_power_tail(double p, double n0) {
  double a = n0 + 1.0;
  double la = std::log(a);
  double f = std::pow(a, -p) * la;
  double integral = std::pow(a, 1.0 - p) * (la / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
  double fprime = std::pow(a, -p - 1.0) * (1.0 - p * la);
  return integral + 0.5 * f - fprime / 12.0;
}

Approx recompute_pi() {
  return Approx(4.0 * std::atan(1.0), 4e-16);
}

Approx recompute_euler_gamma() {
  // gamma = lim (H_n - log n), Euler-Maclaurin corrected at n = 200.
  const int n = 200;
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  double g = h - std::log(double(n)) - 0.5 / n + 1.0 / (12.0 * double(n) * n) -
             1.0 / (120.0 * std::pow(double(n), 4));
  return Approx(g, 1e-14);
}

Approx recompute_log2() {
  // log 2 = 2 atanh(1/3)
  double t = 1.0 / 3.0, term = t, sum = 0.0;
  for (int k = 0; term > 1e-20; ++k) {
    sum += term / (2 * k + 1);
    term *= t * t;
  }
  return Approx(2.0 * sum, 1e-15);
}

Approx recompute_log_2pi() {
  Approx l2 = recompute_log2();
  return Approx(l2.value + std::log(recompute_pi().value), l2.err + 1e-15);
}

Approx recompute_catalan() {
  // Euler-averaged partial sums of sum (-1)^n / (2n+1)^2.
  const int n = 64;
  double s[n + 1];
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    acc += (k % 2 == 0 ? 1.0 : -1.0) / double((2 * k + 1) * (2 * k + 1));
    s[k] = acc;
  }
  int len = n + 1;
  while (len > 1) {
    for (int i = 0; i + 1 < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    --len;
  }
  return Approx(s[0], 1e-14);
}

Approx recompute_zeta2() {
  const int n = 100;
  double sum = 0.0;
  for (int k = n; k >= 1; --k) sum += 1.0 / (double(k) * k);
  return Approx(sum + power_tail(2.0, n), 1e-14);
}

Approx recompute_zeta3() {
  const int n = 100;
  double sum = 0.0;
  for (int k = n; k >= 1; --k) sum += 1.0 / (double(k) * k * k);
  return Approx(sum + power_tail(3.0, n), 1e-14);
}

Approx recompute_zeta_prime_2() {
  // zeta'(2) = -sum log(n)/n^2
  const int n = 400;
  double sum = 0.0;
  for (int k = n; k >= 2; --k) sum += std::log(double(k)) / (double(k) * k);
  sum += log_power_tail(2.0, n);
  return Approx(-sum, 1e-13);
}

Approx recompute_zeta_prime_prime_2() {
  // zeta''(2) = sum log^2(n)/n^2, tail by Euler-Maclaurin.
  const int n = 2000;
  double sum = 0.0;
  for (int k = n; k >= 2; --k) {
    double l = std::log(double(k));
    sum += l * l / (double(k) * k);
  }
  double a = n + 1.0;
  double la = std::log(a);
  double f = la * la / (a * a);
  double integral = (la * la + 2.0 * la + 2.0) / a;
  double fprime = (2.0 * la - 2.0 * la * la) / (a * a * a);
  sum += integral + 0.5 * f - fprime / 12.0;
  return Approx(sum, 1e-12);
}

Approx recompute_zeta_prime_neg1() {
  // zeta'(-1) = (1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2)
  Approx g = recompute_euler_gamma();
  Approx l2pi = recompute_log_2pi();
  Approx zp2 = recompute_zeta_prime_2();
  double pi2 = kPi * kPi;
  double v = (1.0 - g.value - l2pi.value) / 12.0 + zp2.value / (2.0 * pi2);
  return Approx(v, (g.err + l2pi.err) / 12.0 + zp2.err / (2.0 * pi2) + 1e-16);
}

Approx recompute_glaisher() {
  // log A = 1/12 - zeta'(-1)
  Approx zp = recompute_zeta_prime_neg1();
  double v = std::exp(1.0 / 12.0 - zp.value);
  return Approx(v, v * zp.err + 1e-15);
}

const std::vector<ConstantEntry>& table() {
  static const std::vector<ConstantEntry> t = {
      {"pi", 3.141592653589793, 16, &recompute_pi},
      {"euler_gamma", 0.5772156649015329, 16, &recompute_euler_gamma},
      {"log2", 0.6931471805599453, 16, &recompute_log2},
      {"log_2pi", 1.837877066409345, 15, &recompute_log_2pi},
      {"catalan", 0.9159655941772190, 16, &recompute_catalan},
      {"glaisher", 1.282427129100623, 15, &recompute_glaisher},
      {"zeta2", 1.644934066848226, 15, &recompute_zeta2},
      {"zeta3", 1.202056903159594, 15, &recompute_zeta3},
      {"zeta_prime_2", -0.9375482543158438, 16, &recompute_zeta_prime_2},
      {"zeta_prime_prime_2", 1.989280234298901, 15, &recompute_zeta_prime_prime_2},
      {"zeta_prime_neg1", -0.1654211437004509, 16, &recompute_zeta_prime_neg1},
  };
  return t;
}

}  // namespace

const std::vector<ConstantEntry>& constant_table() { return table(); }

Approx constant(std::string_view name) {
  for (const auto& e : table())
    if (e.name == name) return Approx(e.value, std::pow(10.0, -e.digits));
  throw std::out_of_range("unknown constant: " + std::string(name));
}

double constant_value(std::string_view name) { return constant(name).value; }

std::vector<ConstantCheck> verify_constants() {
  std::vector<ConstantCheck> out;
  for (const auto& e : table()) {
    Approx r = e.recompute();
    double d = std::abs(r.value - e.value);
    out.push_back({e.name, d <= r.err + std::pow(10.0, -e.digits), d});
  }
  // Eq-level consistency on the literals: zeta'(-1) vs its zeta'(2) form.
  double g = constant_value("euler_gamma");
  double l2pi = constant_value("log_2pi");
  double zp2 = constant_value("zeta_prime_2");
  double lhs = constant_value("zeta_prime_neg1");
  double rhs = (1.0 - g - l2pi) / 12.0 + zp2 / (2.0 * kPi * kPi);
  double d = std::abs(lhs - rhs);
  out.push_back({"zeta_prime_neg1_relation", d <= 1e-12, d});
  return out;
}

}  // namespace sici
