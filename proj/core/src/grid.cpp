#include "fim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fim/errors.hpp"

namespace fim {

namespace {
constexpr double kZeroMassThreshold = 1e-300;
}

Grid::Grid(double x_min_, double x_max_, double dx_) : x_min(x_min_), x_max(x_max_), dx(dx_) {
    if (!(dx > 0.0)) throw std::invalid_argument("Grid: dx must be positive");
    if (!(x_min < x_max)) throw std::invalid_argument("Grid: x_min must be below x_max");
    n_points = static_cast<std::size_t>(std::llround((x_max - x_min) / dx)) + 1;
}

std::size_t Grid::index_of(double x) const {
    const double t = (x - x_min) / dx;
    const auto k = static_cast<long long>(std::llround(t));
    if (k < 0 || k >= static_cast<long long>(n_points)) return n_points;
    if (std::abs(t - static_cast<double>(k)) > 1e-9) return n_points;
    return static_cast<std::size_t>(k);
}

GridDistribution::GridDistribution(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.n_points)
        throw std::invalid_argument("GridDistribution: values/grid size mismatch");
}

void validate(const GridDistribution& f) {
    if (f.values.size() != f.grid.n_points)
        throw std::invalid_argument("GridDistribution: values/grid size mismatch");
    for (double v : f.values)
        if (!(v >= 0.0)) throw std::invalid_argument("GridDistribution: negative or NaN value");
}

double mass(const GridDistribution& f) {
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < f.values.size(); ++k) s += f.values[k];
    return s * f.grid.dx;
}

GridDistribution normalize(const GridDistribution& f) {
    const double m = mass(f);
    if (!(m > kZeroMassThreshold)) throw ZeroMassError("normalize: distribution has zero mass");
    GridDistribution out = f;
    for (double& v : out.values) v /= m;
    return out;
}

GridDistribution gaussian_profile(const Grid& grid, double mu, double sigma2) {
    if (!(sigma2 > 0.0)) throw NonPositiveVarianceError("gaussian_profile: sigma2 must be positive");
    std::vector<double> v(grid.n_points);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma2);
    const double inv2s = 0.5 / sigma2;
    for (std::size_t k = 0; k < grid.n_points; ++k) {
        const double d = grid.point(k) - mu;
        v[k] = norm * std::exp(-d * d * inv2s);
    }
    return {grid, std::move(v)};
}

double moment(const GridDistribution& f, int p, bool centered) {
    if (p < 0) throw std::invalid_argument("moment: order must be non-negative");
    const GridDistribution nu = normalize(f);
    double shift = 0.0;
    if (centered) {
        double m1 = 0.0;
        for (std::size_t k = 0; k + 1 < nu.values.size(); ++k) m1 += nu.grid.point(k) * nu.values[k];
        shift = m1 * nu.grid.dx;
    }
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < nu.values.size(); ++k)
        s += std::pow(nu.grid.point(k) - shift, p) * nu.values[k];
    return s * nu.grid.dx;
}

double exp_moment(const GridDistribution& f, double theta) {
    const GridDistribution nu = normalize(f);
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < nu.values.size(); ++k) {
        const double x = nu.grid.point(k);
        const double term = std::exp(theta * x * x) * nu.values[k];
        if (!std::isfinite(term))
            throw OverflowError("exp_moment: integrand overflow, theta too large for the grid tail");
        s += term;
    }
    const double out = s * nu.grid.dx;
    if (!std::isfinite(out)) throw OverflowError("exp_moment: result overflow");
    return out;
}

double kl_divergence(const GridDistribution& p, const GridDistribution& q) {
    if (!(p.grid == q.grid)) throw GridMismatchError("kl_divergence: grids differ");
    const GridDistribution pn = normalize(p);
    const GridDistribution qn = normalize(q);
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < pn.values.size(); ++k) {
        const double pk = pn.values[k];
        if (pk == 0.0) continue;  // 0 log 0 = 0
        const double qk = qn.values[k];
        if (qk == 0.0)
            throw SupportViolationError("kl_divergence: P positive where Q vanishes");
        s += pk * std::log(pk / qk);
    }
    return s * p.grid.dx;
}

double kl_to_gaussian(const GridDistribution& p, double mu, double sigma2) {
    if (!(sigma2 > 0.0)) throw NonPositiveVarianceError("kl_to_gaussian: sigma2 must be positive");
    const GridDistribution pn = normalize(p);
    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * sigma2);
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < pn.values.size(); ++k) {
        const double pk = pn.values[k];
        if (pk == 0.0) continue;
        const double d = pn.grid.point(k) - mu;
        const double logq = log_norm - 0.5 * d * d / sigma2;
        s += pk * (std::log(pk) - logq);
    }
    return s * p.grid.dx;
}

namespace {

// CDF at grid nodes under the left rectangle rule: starts at 0, ends at 1.
std::vector<double> left_cdf(const GridDistribution& nu) {
    std::vector<double> cdf(nu.values.size());
    double acc = 0.0;
    cdf[0] = 0.0;
    for (std::size_t k = 0; k + 1 < nu.values.size(); ++k) {
        acc += nu.values[k] * nu.grid.dx;
        cdf[k + 1] = acc;
    }
    cdf.back() = 1.0;
    return cdf;
}

}  // namespace

double wasserstein2(const GridDistribution& p, const GridDistribution& q) {
    if (!(p.grid == q.grid)) throw GridMismatchError("wasserstein2: grids differ");
    const GridDistribution pn = normalize(p);
    const GridDistribution qn = normalize(q);
    const std::vector<double> cp = left_cdf(pn);
    const std::vector<double> cq = left_cdf(qn);

    const auto invert = [](const Grid& g, const std::vector<double>& cdf, std::size_t& k, double u) {
        while (cdf[k + 1] < u) ++k;
        const double den = cdf[k + 1] - cdf[k];
        if (den <= 0.0) return g.point(k + 1);  // u hit a flat segment boundary exactly
        return g.point(k) + g.dx * (u - cdf[k]) / den;
    };

    const std::size_t mesh = 4 * p.grid.n_points;
    std::size_t ip = 0, iq = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < mesh; ++i) {
        const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(mesh);
        const double d = invert(p.grid, cp, ip, u) - invert(q.grid, cq, iq, u);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(mesh));
}

}  // namespace fim
