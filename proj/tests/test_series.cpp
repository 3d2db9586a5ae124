#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sici/constants.hpp"
#include "sici/series.hpp"

using sici::SeriesResult;
using sici::SeriesTask;
using sici::TailModel;

TEST_CASE("power-law tail model reaches far past raw truncation") {
  SeriesTask t;
  t.term = [](long n) { return 1.0 / (double(n) * n); };
  t.tail_model = TailModel::power_law;
  t.power = 2.0;
  t.max_terms = 1000;
  SeriesResult r = sici::sum_series(t);
  double z2 = sici::constant_value("zeta2");
  CHECK(r.terms_used == 1000);
  CHECK_FALSE(r.model_mismatch);
  CHECK(std::abs(r.sum.value - z2) <= r.sum.err + 1e-13);
  // Raw truncation error at 1000 terms is ~1e-3; the model must beat 1e-10.
  CHECK(std::abs(r.sum.value - z2) < 1e-10);
}

TEST_CASE("power-law model with a 1/n correction term") {
  // sum 1/(n^2 (n+1)) = zeta(2) - 1 exactly; terms ~ n^-3 (1 - 1/n + ...)
  SeriesTask t;
  t.term = [](long n) { return 1.0 / (double(n) * n * (n + 1.0)); };
  t.tail_model = TailModel::power_law;
  t.power = 3.0;
  t.max_terms = 1000;
  SeriesResult r = sici::sum_series(t);
  double exact = sici::constant_value("zeta2") - 1.0;
  CHECK(std::abs(r.sum.value - exact) <= r.sum.err + 1e-13);
  CHECK(std::abs(r.sum.value - exact) < 1e-11);
}

TEST_CASE("power-law model mismatch is flagged") {
  // declared p = 3 but the terms decay like n^-2
  SeriesTask t;
  t.term = [](long n) { return 1.0 / (double(n) * n); };
  t.tail_model = TailModel::power_law;
  t.power = 3.0;
  t.max_terms = 1000;
  SeriesResult r = sici::sum_series(t);
  CHECK(r.model_mismatch);
}

TEST_CASE("alternating tail model") {
  SeriesTask t;
  t.term = [](long n) { return (n % 2 == 1 ? 1.0 : -1.0) / double(n); };
  t.tail_model = TailModel::alternating;
  t.abs_tol = 1e-12;
  t.max_terms = 10000;
  SeriesResult r = sici::sum_series(t);
  CHECK(r.converged);
  CHECK_FALSE(r.model_mismatch);
  CHECK(std::abs(r.sum.value - std::log(2.0)) <= r.sum.err + 1e-14);
  CHECK(std::abs(r.sum.value - std::log(2.0)) < 1e-11);
  CHECK(r.terms_used < 2000);  // far fewer than 1/tol terms
}

TEST_CASE("alternating model flags a non-alternating series") {
  SeriesTask t;
  t.term = [](long n) { return 1.0 / (double(n) * n); };
  t.tail_model = TailModel::alternating;
  t.max_terms = 200;
  SeriesResult r = sici::sum_series(t);
  CHECK(r.model_mismatch);
}

TEST_CASE("user-supplied tail bound") {
  SeriesTask t;
  t.term = [](long n) { return 1.0 / (double(n) * n); };
  t.tail_model = TailModel::user_bound;
  t.max_terms = 500;
  t.user_tail = [](long last) {
    // integral bracket for sum_{n>last} n^-2
    double lo = 1.0 / (last + 1.0), hi = 1.0 / double(last);
    return std::make_pair(0.5 * (lo + hi), 0.5 * (hi - lo));
  };
  SeriesResult r = sici::sum_series(t);
  double z2 = sici::constant_value("zeta2");
  CHECK(std::abs(r.sum.value - z2) <= r.sum.err + 1e-14);
  CHECK(r.sum.err < 1e-5);
}

TEST_CASE("plain summation of a fast-converging series") {
  SeriesTask t;
  t.term = [](long n) { return std::pow(0.5, double(n)); };
  t.tail_model = TailModel::none;
  t.abs_tol = 1e-10;
  SeriesResult r = sici::sum_series(t);
  CHECK(r.converged);
  CHECK(std::abs(r.sum.value - 1.0) <= r.sum.err + 1e-14);
}

TEST_CASE("finite odd-reciprocal sums") {
  CHECK(sici::finite_sum_odd_reciprocals(1) == 2.0);
  CHECK(sici::finite_sum_odd_reciprocals(2) ==
        doctest::Approx(2.0 + 2.0 / 3.0).epsilon(1e-16));
  CHECK(sici::finite_sum_odd_reciprocals(3) ==
        doctest::Approx(2.0 + 2.0 / 3.0 + 2.0 / 5.0).epsilon(1e-16));
  // growth ~ log n + gamma + 2 log 2
  double v = sici::finite_sum_odd_reciprocals(1000000);
  double gamma = sici::constant_value("euler_gamma");
  CHECK(std::abs(v - std::log(1e6) - gamma - 2.0 * std::log(2.0)) < 1e-6);
}
