#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mgnd/gnd.hpp"

namespace mgnd {

// Minimal dense row-major matrix, used for responsibilities (N x K).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct Component {
    double pi;
    GndParams params;
};

// K weighted GND components. Weights must sum to one within 1e-12.
struct MgndModel {
    std::vector<Component> components;

    explicit MgndModel(std::vector<Component> comps);

    std::size_t k() const { return components.size(); }

    // Throws if weights drifted away from the simplex or a component
    // became invalid.
    void validate() const;
};

// log sum_k pi_k f_k(x), evaluated with log-sum-exp.
double mixture_log_pdf(const MgndModel& m, double x);

// Serial reference evaluation of Eq.-style sums; the OpenMP counterparts
// live in kernels.hpp.
double log_likelihood(const MgndModel& m, std::span<const double> data);

// Posterior membership probabilities z_nk; every row sums to one.
Matrix responsibilities(const MgndModel& m, std::span<const double> data);

struct MixtureMoments {
    double mean;
    double variance;
    double skewness;
    double kurtosis;  // standardized fourth moment
};

// Analytic moments via the binomial expansion of E[X - E(X)]^m around the
// mixture mean, with GND central moments inside the sum.
MixtureMoments mixture_moments(const MgndModel& m);

// Classifies a two-component model by its shape parameters (shape equality
// tested at 1e-6): "normal mixture", "Laplace mixture", "normal-Laplace
// mixture", "normal-GND mixture", "Laplace-GND mixture" or "general MGND".
std::string submodel(const MgndModel& m);

// JSON document {"components":[{"pi":..,"mu":..,"sigma":..,"nu":..},..]}.
// Parsing rejects weight vectors that do not renormalize to 1 within 1e-9;
// accepted weights are renormalized exactly.
std::string to_json(const MgndModel& m);
MgndModel model_from_json(const std::string& text);

}  // namespace mgnd
