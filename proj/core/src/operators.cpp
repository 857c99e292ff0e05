#include "fim/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fft.hpp"
#include "fim/errors.hpp"

namespace fim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double checked_mass(const GridDistribution& f, const char* who) {
    const double m = mass(f);
    if (!(m > 1e-300)) throw ZeroMassError(std::string(who) + ": zero-mass input");
    return m;
}

// Standard normal sampled on offsets m*dx, m = -(n-1)..n-1.
std::vector<double> unit_gaussian_kernel(std::size_t n, double dx) {
    std::vector<double> g(2 * n - 1);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = (static_cast<double>(i) - static_cast<double>(n - 1)) * dx;
        g[i] = norm * std::exp(-0.5 * x * x);
    }
    return g;
}

}  // namespace

double TrajectoryRecord::mass() const { return std::exp(log_mass); }

GridDistribution mixing_B(const GridDistribution& f) {
    const double m = checked_mass(f, "mixing_B");
    const std::size_t n = f.grid.n_points;
    const double dx = f.grid.dx;

    // (i) discrete self-convolution on the doubled support
    const std::vector<double> c = detail::convolve(f.values, f.values);

    // (ii) parental midpoint density M(u) = 2 C(2u): even indices of c
    std::vector<double> mid(n);
    for (std::size_t i = 0; i < n; ++i) mid[i] = 2.0 * c[2 * i] * dx;

    // (iii) smooth by the unit-variance mixing kernel
    const std::vector<double> g = unit_gaussian_kernel(n, dx);
    const std::vector<double> full = detail::convolve(g, mid);

    GridDistribution out;
    out.grid = f.grid;
    out.values.resize(n);
    const double scale = dx / m;
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = std::max(0.0, full[n - 1 + i] * scale);  // clamp FFT ringing
    return out;
}

GridDistribution apply_T(const GridDistribution& f, const ModelParams& params) {
    GridDistribution out = mixing_B(f);
    const double half_alpha = 0.5 * params.alpha;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double x = out.grid.point(k);
        out.values[k] *= params.beta * std::exp(-half_alpha * x * x);
    }
    return out;
}

GridDistribution selection_M(const GridDistribution& f, double alpha) {
    GridDistribution out = f;
    const double half_alpha = 0.5 * alpha;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double x = out.grid.point(k);
        out.values[k] *= std::exp(-half_alpha * x * x);
    }
    return normalize(out);
}

GridDistribution normalized_step_S(const GridDistribution& f, const ModelParams& params) {
    return normalize(apply_T(f, params));
}

namespace {

struct StepDiagnostics {
    double mean;
    double variance;
    double kl;
    double w2;
};

StepDiagnostics diagnose(const GridDistribution& profile,
                         const std::optional<GaussianState>& eigen_ref,
                         const GridDistribution* eigen_profile) {
    StepDiagnostics d{};
    d.mean = moment(profile, 1, false);
    d.variance = moment(profile, 2, true);
    if (eigen_ref) {
        d.kl = kl_to_gaussian(profile, eigen_ref->mean1(), eigen_ref->variance);
        d.w2 = wasserstein2(profile, *eigen_profile);
    } else {
        d.kl = kNaN;
        d.w2 = kNaN;
    }
    return d;
}

}  // namespace

IterateResult iterate(const GridDistribution& f0, const ModelParams& params, int n_iters,
                      const std::optional<GaussianState>& eigen_ref,
                      std::span<const int> snapshot_generations) {
    if (n_iters < 0) throw std::invalid_argument("iterate: n_iters must be >= 0");
    const double m0 = checked_mass(f0, "iterate");

    std::optional<GridDistribution> eigen_profile;
    std::optional<double> lambda_bar;
    if (eigen_ref) {
        eigen_profile = gaussian_profile(f0.grid, eigen_ref->mean1(), eigen_ref->variance);
        const double denom = 1.0 + params.alpha * (1.0 + 0.5 * eigen_ref->variance);
        lambda_bar = params.beta / std::sqrt(denom);
    }

    const auto wants_snapshot = [&](int n) {
        return std::find(snapshot_generations.begin(), snapshot_generations.end(), n) !=
               snapshot_generations.end();
    };

    IterateResult res;
    res.records.reserve(static_cast<std::size_t>(n_iters) + 1);

    GridDistribution profile = f0;
    for (double& v : profile.values) v /= m0;
    double log_mass = std::log(m0);

    {
        const StepDiagnostics d = diagnose(profile, eigen_ref, eigen_profile ? &*eigen_profile : nullptr);
        res.records.push_back({0, log_mass, kNaN, d.mean, d.variance, d.kl, d.w2, kNaN});
    }
    if (wants_snapshot(0)) res.snapshots.emplace_back(0, profile);

    for (int n = 1; n <= n_iters; ++n) {
        GridDistribution next;
        if (params.mode == GenerationMode::NonOverlapping) {
            next = apply_T(profile, params);
        } else {
            next = apply_T(profile, params);
            const double half_alpha = 0.5 * params.alpha;
            for (std::size_t k = 0; k < next.size(); ++k) {
                const double x = next.grid.point(k);
                next.values[k] += std::exp(-half_alpha * x * x) * profile.values[k];
            }
        }
        const double lambda = mass(next);  // profile had unit mass
        if (!(lambda > 1e-300))
            throw ZeroMassError("iterate: extinction at generation " + std::to_string(n));
        for (double& v : next.values) v /= lambda;
        profile = std::move(next);
        log_mass += std::log(lambda);

        const StepDiagnostics d = diagnose(profile, eigen_ref, eigen_profile ? &*eigen_profile : nullptr);
        const double eps = lambda_bar ? std::abs(lambda - *lambda_bar) : kNaN;
        res.records.push_back({n, log_mass, lambda, d.mean, d.variance, d.kl, d.w2, eps});
        if (wants_snapshot(n)) res.snapshots.emplace_back(n, profile);
    }

    res.final_profile = std::move(profile);
    return res;
}

double growth_rate_via_H(const GridDistribution& f, double alpha) {
    checked_mass(f, "growth_rate_via_H");
    const GridDistribution nu = normalize(f);
    const std::vector<double> c = detail::convolve(nu.values, nu.values);
    const double dx = nu.grid.dx;
    const double coeff = 0.5 * alpha / (1.0 + alpha);
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double u = 2.0 * nu.grid.x_min + static_cast<double>(i) * dx;
        const double half = 0.5 * u;
        s += std::exp(-coeff * half * half) * c[i];
    }
    return s * dx * dx / std::sqrt(1.0 + alpha);
}

}  // namespace fim
