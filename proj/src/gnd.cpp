#include "mgnd/gnd.hpp"

#include <cmath>
#include <stdexcept>

#include "mgnd/special.hpp"

namespace mgnd {

GndParams::GndParams(double mu_, double sigma_, double nu_)
    : mu(mu_), sigma(sigma_), nu(nu_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !std::isfinite(nu)) {
        throw std::invalid_argument("GndParams: fields must be finite");
    }
    if (!(sigma > 0.0)) throw std::invalid_argument("GndParams: sigma must be > 0");
    if (!(nu > 0.0)) throw std::invalid_argument("GndParams: nu must be > 0");
}

double gnd_log_norm(const GndParams& p) {
    return std::log(p.nu) - std::log(2.0 * p.sigma) - log_gamma(1.0 / p.nu);
}

double gnd_log_pdf(const GndParams& p, double x) {
    const double z = std::fabs((x - p.mu) / p.sigma);
    return gnd_log_norm(p) - std::pow(z, p.nu);
}

double gnd_central_moment(const GndParams& p, int n) {
    if (n < 0) throw std::invalid_argument("gnd_central_moment: n must be >= 0");
    if (n % 2 == 1) return 0.0;
    return std::pow(p.sigma, n) *
           std::exp(log_gamma((n + 1.0) / p.nu) - log_gamma(1.0 / p.nu));
}

double gnd_variance(const GndParams& p) {
    return p.sigma * p.sigma * std::exp(log_gamma(3.0 / p.nu) - log_gamma(1.0 / p.nu));
}

double gnd_kurtosis(const GndParams& p) {
    return std::exp(log_gamma(1.0 / p.nu) + log_gamma(5.0 / p.nu) -
                    2.0 * log_gamma(3.0 / p.nu));
}

double gnd_draw(const GndParams& p, Rng& rng) {
    const double e = rng.gamma(1.0 / p.nu);
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    return p.mu + p.sigma * sign * std::pow(e, 1.0 / p.nu);
}

std::vector<double> gnd_sample(const GndParams& p, Rng& rng, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(gnd_draw(p, rng));
    return out;
}

}  // namespace mgnd
