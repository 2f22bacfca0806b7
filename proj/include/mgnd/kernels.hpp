#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mgnd/mixture.hpp"

// Data-parallel inner loops of the estimator. Reductions accumulate
// per-block partial sums over fixed 2048-element blocks and combine them
// serially in block order, so every result is bit-identical for any
// OpenMP thread count (including one). The plain serial loops in
// kernels::ref are kept as the reference implementation for tests and
// for the benchmark target.

namespace mgnd::kernels {

inline constexpr std::size_t kBlock = 2048;

struct EStepSums {
    double loglik;                // log L at the current parameters
    double q;                     // Q-function at the current parameters
    std::vector<double> colsum;   // per-component responsibility mass
};

// Fills z (resized to N x K) with posterior responsibilities.
EStepSums e_step(std::span<const double> x, const MgndModel& m, Matrix& z);

double log_likelihood(std::span<const double> x, const MgndModel& m);

struct LocationSums {
    double a;  // signed sum of z |x-mu|^(nu-1) terms
    double b;  // sum of z |x-mu|^(nu-2) (nu-1)
};

// |x - mu| is floored at 1e-10 before the powers; nu < 2 makes the b term
// singular at data points equal to mu.
LocationSums location_sums(std::span<const double> x, const Matrix& z,
                           std::size_t k, double mu, double nu);

// sum_n z_nk |x_n - mu|^nu
double weighted_power_sum(std::span<const double> x, const Matrix& z,
                          std::size_t k, double mu, double nu);

struct ShapeSums {
    double tlog;   // sum z t^nu ln t,   t = max(|x-mu|/sigma, 1e-10)
    double tlog2;  // sum z t^nu (ln t)^2
};

ShapeSums shape_sums(std::span<const double> x, const Matrix& z, std::size_t k,
                     double mu, double sigma, double nu);

// sum_n z_nk ln f(x_n | p); used to monitor Q monotonicity of the
// conditional updates.
double weighted_logpdf_sum(std::span<const double> x, const Matrix& z,
                           std::size_t k, const GndParams& p);

namespace ref {

EStepSums e_step(std::span<const double> x, const MgndModel& m, Matrix& z);
double log_likelihood(std::span<const double> x, const MgndModel& m);
LocationSums location_sums(std::span<const double> x, const Matrix& z,
                           std::size_t k, double mu, double nu);
double weighted_power_sum(std::span<const double> x, const Matrix& z,
                          std::size_t k, double mu, double nu);
ShapeSums shape_sums(std::span<const double> x, const Matrix& z, std::size_t k,
                     double mu, double sigma, double nu);
double weighted_logpdf_sum(std::span<const double> x, const Matrix& z,
                           std::size_t k, const GndParams& p);

}  // namespace ref

}  // namespace mgnd::kernels
