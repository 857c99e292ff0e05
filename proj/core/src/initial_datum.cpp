#include "fim/initial_datum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fim {

double StepDatum::density(double x) const {
    for (const Piece& p : pieces)
        if (x >= p.a && x < p.b) return p.height;
    return 0.0;
}

double GaussianDatum::density(double x) const {
    const double d = x - mean;
    return mass * std::exp(-0.5 * d * d / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

double datum_density(const InitialDatum& f, double x) {
    return std::visit([x](const auto& d) { return d.density(x); }, f);
}

double datum_log_density(const InitialDatum& f, double x) {
    if (const auto* step = std::get_if<StepDatum>(&f)) {
        const double v = step->density(x);
        return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    }
    const auto& g = std::get<GaussianDatum>(f);
    const double d = x - g.mean;
    return std::log(g.mass) - 0.5 * d * d / g.variance -
           0.5 * std::log(2.0 * std::numbers::pi * g.variance);
}

double datum_log_rescaled(const InitialDatum& f, double alpha, double x) {
    // e^{alpha x^2/2} F0(x) / G_{0,2}(x)
    return 0.5 * alpha * x * x + 0.25 * x * x + 0.5 * std::log(4.0 * std::numbers::pi) +
           datum_log_density(f, x);
}

GridDistribution sample_on_grid(const InitialDatum& f, const Grid& grid) {
    std::vector<double> v(grid.n_points);
    for (std::size_t k = 0; k < grid.n_points; ++k) v[k] = datum_density(f, grid.point(k));
    return {grid, std::move(v)};
}

StepDatum paper_step() {
    return StepDatum{{{-7.0, -3.0, 30.0}, {7.5, 12.5, 20.0}, {30.0, 40.0, 50.0}, {52.5, 57.5, 30.0}}};
}

}  // namespace fim
