#ifndef SICI_SERIES_HPP
#define SICI_SERIES_HPP

#include <functional>

#include "sici/approx.hpp"

namespace sici {

enum class TailModel { none, power_law, alternating, user_bound };
enum class Acceleration { none, euler_alternating, richardson_power };

// A summation request.  term(n) must be reentrant; n runs from start_index
// upward.  power_law requires power > 1.  user_bound supplies
// (tail, tail_err) given the last index summed.
struct SeriesTask {
  std::function<double(long)> term;
  long start_index = 1;
  TailModel tail_model = TailModel::none;
  double power = 0.0;
  std::function<std::pair<double, double>(long)> user_tail;
  Acceleration acceleration = Acceleration::none;
  double abs_tol = 1e-10;
  long max_terms = 100000;
};

struct SeriesResult {
  Approx sum;
  long terms_used = 0;
  bool converged = false;
  bool model_mismatch = false;
};

SeriesResult sum_series(const SeriesTask& task);

// 2 * sum_{k=1..n} 1/(2k-1), summed exactly in descending magnitude.
double finite_sum_odd_reciprocals(long n);

}  // namespace sici

#endif
