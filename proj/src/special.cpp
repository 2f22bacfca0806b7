#include "mgnd/special.hpp"

#include <cmath>
#include <stdexcept>

namespace mgnd {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Stirling series coefficients B_{2n} / (2n (2n-1)), n = 1..7.
constexpr double kStirling[] = {
    1.0 / 12.0,     -1.0 / 360.0,     1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,
};

// ln Gamma(x) for x >= 12 via the Stirling/Bernoulli series.
double log_gamma_stirling(double x) {
    double series = 0.0;
    const double r = 1.0 / (x * x);
    double t = 1.0 / x;
    for (double c : kStirling) {
        series += c * t;
        t *= r;
    }
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

// Lanczos approximation (g = 607/128, 15 terms) for 0 < x < 12.
double log_gamma_lanczos(double x) {
    static const double coef[15] = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    0.33994649984811888699e-4,
        0.46523628927048575665e-4,  -0.98374475304879564677e-4,
        0.15808870322491248884e-3,  -0.21026444172410488319e-3,
        0.21743961811521264320e-3,  -0.16431810653676389022e-3,
        0.84418223983852743293e-4,  -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    };
    double ser = coef[0];
    for (int j = 1; j < 15; ++j) ser += coef[j] / (x + j);
    const double t = x + 5.24218750000000000;  // x + g + 1/2, g = 607/128
    return (x + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * ser / x);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("log_gamma: x must be positive and finite");
    }
    if (x >= 12.0) return log_gamma_stirling(x);
    return log_gamma_lanczos(x);
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("digamma: x must be positive and finite");
    }
    // Recurrence Psi(x) = Psi(x+1) - 1/x pushes the argument to >= 10,
    // where the asymptotic series converges fast.
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Psi(x) ~ ln x - 1/(2x) - sum B_{2n} / (2n x^{2n})
    static const double c[] = {
        1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double r = 1.0 / (x * x);
    double series = 0.0;
    double t = r;
    for (double ci : c) {
        series += ci * t;
        t *= r;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("trigamma: x must be positive and finite");
    }
    // Recurrence Psi'(x) = Psi'(x+1) + 1/x^2.
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    // Psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2n} / x^{2n+1}
    static const double c[] = {
        1.0 / 6.0,  -1.0 / 30.0,  1.0 / 42.0,  -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
    };
    const double r = 1.0 / (x * x);
    double series = 0.0;
    double t = r / x;
    for (double ci : c) {
        series += ci * t;
        t *= r;
    }
    return acc + 1.0 / x + 0.5 * r + series;
}

namespace {

// Lower regularized incomplete gamma P(a, x) by series expansion; valid
// and fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Upper regularized incomplete gamma Q(a, x) by Lentz's continued
// fraction; valid and fast for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
        throw std::domain_error("gamma_q: need a > 0, x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace mgnd
