#pragma once

// Special functions backing the generalized normal density and the
// shape-parameter Newton updates. Implemented in-repo so the library
// carries no numerical dependencies.

namespace mgnd {

// ln Gamma(x) for x > 0. Absolute error <= 1e-12 on [1e-3, 1e3].
double log_gamma(double x);

// Digamma Psi(x) for x > 0. Absolute error <= 1e-10 on [1e-3, 1e3].
double digamma(double x);

// Trigamma Psi'(x) for x > 0. Absolute error <= 1e-10 on [1e-3, 1e3].
double trigamma(double x);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
// a > 0, x >= 0. Used for chi-square tail probabilities.
double gamma_q(double a, double x);

}  // namespace mgnd
