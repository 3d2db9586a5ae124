#ifndef SICI_QUAD_HPP
#define SICI_QUAD_HPP

#include <functional>
#include <optional>

#include "sici/approx.hpp"

namespace sici {

// An integration request.  hi may be +infinity; integrable endpoint
// singularities (log-type or mild algebraic) are announced with the
// singular_* flags, which buys deeper graded subdivision and guarantees
// open-interval sampling.  An oscillatory_period hint (the full period of
// the oscillation) requires hi = +infinity and switches to between-zeros
// summation with Euler averaging.
struct QuadTask {
  std::function<double(double)> integrand;
  double lo = 0.0;
  double hi = 1.0;
  bool singular_lo = false;
  bool singular_hi = false;
  std::optional<double> oscillatory_period;
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

struct QuadResult {
  Approx integral;
  long evaluations = 0;
  bool converged = false;
};

// Finite-domain adaptive Gauss-Kronrod; dispatches to the semi-infinite
// path when task.hi is infinite.
QuadResult integrate(const QuadTask& task);

// Decaying integrand on [lo, +inf): rational change of variable, or
// between-zeros partial integrals with Euler averaging when
// oscillatory_period is set.
QuadResult integrate_semi_infinite(const QuadTask& task);

// Finite domain with flagged integrable endpoint singularities.
QuadResult integrate_log_singular(const QuadTask& task);

}  // namespace sici

#endif
