#include "mgnd/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace mgnd {

namespace {

// Binomial coefficient for the small m used by the moment expansion.
double binom(int m, int i) {
    double v = 1.0;
    for (int j = 0; j < i; ++j) v = v * (m - j) / (j + 1);
    return v;
}

}  // namespace

MgndModel::MgndModel(std::vector<Component> comps) : components(std::move(comps)) {
    if (components.empty()) throw std::invalid_argument("MgndModel: need K >= 1");
    validate();
}

void MgndModel::validate() const {
    double sum = 0.0;
    for (const auto& c : components) {
        if (!(c.pi > 0.0) || c.pi > 1.0 || !std::isfinite(c.pi)) {
            throw std::invalid_argument("MgndModel: weights must lie in (0, 1]");
        }
        if (!(c.params.sigma > 0.0) || !(c.params.nu > 0.0)) {
            throw std::invalid_argument("MgndModel: invalid component parameters");
        }
        sum += c.pi;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("MgndModel: weights must sum to 1");
    }
}

double mixture_log_pdf(const MgndModel& m, double x) {
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> lp(m.k());
    for (std::size_t k = 0; k < m.k(); ++k) {
        lp[k] = std::log(m.components[k].pi) + gnd_log_pdf(m.components[k].params, x);
        mx = std::max(mx, lp[k]);
    }
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double v : lp) s += std::exp(v - mx);
    return mx + std::log(s);
}

double log_likelihood(const MgndModel& m, std::span<const double> data) {
    if (data.empty()) throw std::invalid_argument("log_likelihood: empty data");
    double total = 0.0;
    for (double x : data) {
        if (!std::isfinite(x)) throw std::invalid_argument("log_likelihood: non-finite datum");
        total += mixture_log_pdf(m, x);
    }
    return total;
}

Matrix responsibilities(const MgndModel& m, std::span<const double> data) {
    const std::size_t n = data.size();
    const std::size_t K = m.k();
    Matrix z(n, K);
    std::vector<double> lp(K);
    for (std::size_t i = 0; i < n; ++i) {
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < K; ++k) {
            lp[k] = std::log(m.components[k].pi) +
                    gnd_log_pdf(m.components[k].params, data[i]);
            mx = std::max(mx, lp[k]);
        }
        if (!std::isfinite(mx)) {
            // Degenerate row (all densities underflowed): fall back to the
            // prior weights so the matrix stays a valid distribution.
            for (std::size_t k = 0; k < K; ++k) z(i, k) = m.components[k].pi;
            continue;
        }
        double s = 0.0;
        for (std::size_t k = 0; k < K; ++k) s += std::exp(lp[k] - mx);
        const double lse = mx + std::log(s);
        for (std::size_t k = 0; k < K; ++k) z(i, k) = std::exp(lp[k] - lse);
    }
    return z;
}

MixtureMoments mixture_moments(const MgndModel& m) {
    double mean = 0.0;
    for (const auto& c : m.components) mean += c.pi * c.params.mu;

    auto central = [&](int order) {
        double total = 0.0;
        for (const auto& c : m.components) {
            const double d = c.params.mu - mean;
            for (int i = 0; i <= order; ++i) {
                total += c.pi * binom(order, i) * std::pow(d, order - i) *
                         gnd_central_moment(c.params, i);
            }
        }
        return total;
    };

    const double m2 = central(2);
    const double m3 = central(3);
    const double m4 = central(4);
    MixtureMoments out;
    out.mean = mean;
    out.variance = m2;
    out.skewness = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2);
    return out;
}

std::string submodel(const MgndModel& m) {
    if (m.k() != 2) throw std::invalid_argument("submodel: only K = 2 is classified");
    const double tol = 1e-6;
    const double n1 = m.components[0].params.nu;
    const double n2 = m.components[1].params.nu;
    const auto is = [tol](double v, double t) { return std::fabs(v - t) <= tol; };
    if (is(n1, 2.0) && is(n2, 2.0)) return "normal mixture";
    if (is(n1, 1.0) && is(n2, 1.0)) return "Laplace mixture";
    if ((is(n1, 2.0) && is(n2, 1.0)) || (is(n1, 1.0) && is(n2, 2.0)))
        return "normal-Laplace mixture";
    if (is(n1, 2.0) || is(n2, 2.0)) return "normal-GND mixture";
    if (is(n1, 1.0) || is(n2, 1.0)) return "Laplace-GND mixture";
    return "general MGND";
}

std::string to_json(const MgndModel& m) {
    nlohmann::json doc;
    doc["components"] = nlohmann::json::array();
    for (const auto& c : m.components) {
        doc["components"].push_back({{"pi", c.pi},
                                     {"mu", c.params.mu},
                                     {"sigma", c.params.sigma},
                                     {"nu", c.params.nu}});
    }
    return doc.dump();
}

MgndModel model_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.contains("model")) doc = doc["model"];  // accept a FitResult document
    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty()) {
        throw std::invalid_argument("model JSON: missing components array");
    }
    std::vector<Component> comps;
    double sum = 0.0;
    for (const auto& jc : doc["components"]) {
        const double pi = jc.at("pi").get<double>();
        comps.push_back({pi, GndParams(jc.at("mu").get<double>(),
                                       jc.at("sigma").get<double>(),
                                       jc.at("nu").get<double>())});
        sum += pi;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("model JSON: weights do not sum to 1");
    }
    for (auto& c : comps) c.pi /= sum;
    return MgndModel(std::move(comps));
}

}  // namespace mgnd
