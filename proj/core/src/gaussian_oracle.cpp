#include "fim/gaussian_oracle.hpp"

#include <cmath>

#include "fim/errors.hpp"

namespace fim {

double GaussianState::mean_norm2() const {
    double s = 0.0;
    for (double m : mean) s += m * m;
    return s;
}

Eigenpair eigenpair(double alpha, int dim) {
    if (alpha < 0.0) throw NegativeAlphaError("eigenpair: alpha must be non-negative");
    if (dim < 1) throw std::invalid_argument("eigenpair: dim must be >= 1");
    Eigenpair e;
    e.alpha = alpha;
    e.dim = dim;
    const double disc = std::sqrt((1.0 + 2.0 * alpha) * (1.0 + 2.0 * alpha) + 8.0 * alpha);
    // Rationalized roots: exact at alpha = 0 and stable for large alpha.
    e.sigma2 = 4.0 / (disc + 1.0 + 2.0 * alpha);
    e.k_bar = 2.0 / ((3.0 + 2.0 * alpha) + disc);
    e.r_bar = 8.0 / (((3.0 + 2.0 * alpha) + disc) * ((3.0 + 2.0 * alpha) + disc));
    e.lambda = std::pow(1.0 + alpha * (1.0 + 0.5 * e.sigma2), -0.5 * dim);
    e.unique = alpha > 0.0;
    return e;
}

GaussianState evaluate_on_gaussian(const GaussianState& state, double alpha) {
    if (!(state.mass > 0.0) || !(state.variance > 0.0))
        throw std::invalid_argument("evaluate_on_gaussian: invalid state");
    const double d = static_cast<double>(state.dim());
    const double denom = 1.0 + alpha * (1.0 + 0.5 * state.variance);
    GaussianState out;
    out.mean = state.mean;
    for (double& m : out.mean) m /= denom;
    out.variance = (1.0 + 0.5 * state.variance) / denom;
    out.mass = state.mass * std::exp(-0.5 * alpha * state.mean_norm2() / denom) /
               std::pow(denom, 0.5 * d);
    return out;
}

std::vector<GaussianState> gaussian_trajectory(const GaussianState& state0, double alpha, int n) {
    std::vector<GaussianState> traj;
    traj.reserve(static_cast<std::size_t>(n) + 1);
    traj.push_back(state0);
    for (int i = 0; i < n; ++i) traj.push_back(evaluate_on_gaussian(traj.back(), alpha));
    return traj;
}

Coefficients coefficients(double alpha, int n) {
    if (alpha < 0.0) throw NegativeAlphaError("coefficients: alpha must be non-negative");
    if (n < 1) throw std::invalid_argument("coefficients: n must be >= 1");
    Coefficients c;
    c.k.reserve(n);
    c.kappa.reserve(n + 1);
    c.kappa.push_back(1.0);
    c.k.push_back(1.0 / (2.0 * (1.0 + alpha)));
    c.kappa.push_back(c.k.back());
    for (int m = 2; m <= n; ++m) {
        c.k.push_back(1.0 / (3.0 + 2.0 * alpha - 2.0 * c.k.back()));
        c.kappa.push_back(c.kappa.back() * c.k.back());
    }
    return c;
}

TailBarriers tail_variance_barriers(double alpha, int n, double sigma_lower_1) {
    if (!(alpha > 0.0)) throw NegativeAlphaError("tail_variance_barriers: alpha must be positive");
    if (n < 1) throw std::invalid_argument("tail_variance_barriers: n must be >= 1");
    if (!(sigma_lower_1 > 0.0) || !(sigma_lower_1 < 1.0 / (1.0 + alpha)))
        throw InvalidLowerSeedError("tail_variance_barriers: lower seed outside (0, 1/(1+alpha))");
    TailBarriers b;
    b.upper.push_back(1.0 / alpha);
    b.lower.push_back(sigma_lower_1);
    for (int i = 1; i < n; ++i) {
        b.upper.push_back(1.0 / (alpha + 1.0 / (1.0 + 0.5 * b.upper.back())));
        b.lower.push_back(1.0 / (alpha + 1.0 / (1.0 + 0.5 * b.lower.back())));
    }
    return b;
}

double moment_bound_constant(double alpha, double eta) {
    if (!(alpha > 0.0)) throw NegativeAlphaError("moment_bound_constant: alpha must be positive");
    const double lo = 1.0 / (2.0 * (1.0 + alpha) * (1.0 + alpha));
    if (!(eta > lo) || !(eta < 1.0))
        throw EtaOutOfRangeError("moment_bound_constant: eta outside (1/(2(1+alpha)^2), 1)");
    const double gamma = 1.0 - std::pow(2.0 * eta * (1.0 + alpha) * (1.0 + alpha), -0.25);
    return 1.0 / (1.0 + alpha) +
           2.0 / (std::exp(1.0) * gamma * gamma) / (alpha * (1.0 + alpha));
}

}  // namespace fim
