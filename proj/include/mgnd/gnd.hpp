#pragma once

#include <cstddef>
#include <vector>

#include "mgnd/rng.hpp"

// Generalized normal distribution primitives: density, analytic moments
// and random variate generation. The density is
//
//   f(x | mu, sigma, nu) = nu / (2 sigma Gamma(1/nu)) exp{ -|x - mu|^nu / sigma^nu }
//
// with Laplace at nu = 1 and the normal distribution (variance sigma^2/2)
// at nu = 2. All evaluation happens in log space: |z|^nu overflows quickly
// once nu grows past ~5.

namespace mgnd {

struct GndParams {
    double mu;
    double sigma;  // > 0
    double nu;     // > 0

    GndParams(double mu_, double sigma_, double nu_);
};

// ln nu - ln(2 sigma) - ln Gamma(1/nu): the x-independent part of the
// log-density.
double gnd_log_norm(const GndParams& p);

double gnd_log_pdf(const GndParams& p, double x);

// n-th central moment: sigma^n {1 + (-1)^n} Gamma((n+1)/nu) / (2 Gamma(1/nu)).
// Zero for odd n by symmetry.
double gnd_central_moment(const GndParams& p, int n);

double gnd_variance(const GndParams& p);

// Standardized fourth moment (normal = 3).
double gnd_kurtosis(const GndParams& p);

// Single draw: X = mu + sigma * S * E^(1/nu), S uniform on {-1, +1},
// E ~ Gamma(1/nu, 1).
double gnd_draw(const GndParams& p, Rng& rng);

std::vector<double> gnd_sample(const GndParams& p, Rng& rng, std::size_t n);

}  // namespace mgnd
