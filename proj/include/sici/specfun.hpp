#ifndef SICI_SPECFUN_HPP
#define SICI_SPECFUN_HPP

#include "sici/approx.hpp"

// glibc's <signal.h> defines si_lower as a siginfo_t accessor macro; clear
// it so the function below keeps its natural name.
#ifdef si_lower
#undef si_lower
#endif

namespace sici {

// Sine/cosine integrals.  Conventions: Si(x) = int_0^x sin t/t dt,
// si(x) = Si(x) - pi/2, Ci(x) = gamma + log x + int_0^x (cos t - 1)/t dt
// (x > 0).  All real arguments, real results.
Approx sine_int(double x);     // Si, x >= 0
Approx si_lower(double x);     // si = Si - pi/2, x >= 0
Approx cosine_int(double x);   // Ci, x > 0

// Auxiliary functions f(x) = int_0^inf e^{-xu}/(1+u^2) du and
// g(x) = int_0^inf u e^{-xu}/(1+u^2) du; equivalently
// f = Ci sin - si cos, g = -Ci cos - si sin.  x > 0.
Approx aux_f(double x);
Approx aux_g(double x);

Approx digamma(double x);      // psi, x > 0
Approx log_gamma(double x);    // log Gamma, x > 0

// Cesaro (Fejer) averaged partial sum of Kummer's Fourier series for
// log Gamma(x), 0 < x < 1.  err reflects the O(1/N) truncation honestly.
Approx kummer_log_gamma(double x, long terms);

// log G(1+u) for u in [0, 4] via the Weierstrass-type product.
Approx barnes_log_G(double one_plus_u);
// log G(z) for any z > 0 using G(z+1) = Gamma(z) G(z).
Approx barnes_log_g(double z);

Approx dilog(double x);        // Li_2, 0 <= x <= 1

// zeta'(-1, u) via the Elizalde series, u > 0.
Approx zeta_prime_neg1_hurwitz(double u);

}  // namespace sici

#endif
