#include "fim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fim/errors.hpp"
#include "fim/gaussian_oracle.hpp"
#include "fim/operators.hpp"

namespace fim {

RateFit fit_geometric_rate(std::span<const std::pair<int, double>> errors,
                           std::optional<std::pair<int, int>> window) {
    std::vector<std::pair<int, double>> pts(errors.begin(), errors.end());
    std::sort(pts.begin(), pts.end());
    if (window) {
        std::erase_if(pts, [&](const auto& p) {
            return p.first < window->first || p.first > window->second;
        });
    }
    for (const auto& [n, e] : pts)
        if (!(e > 0.0)) throw NonPositiveSequenceError("fit_geometric_rate: e_n must be positive");
    if (!window && pts.size() >= 6) {
        // Trailing noise floor.
        double emax = 0.0;
        for (const auto& [n, e] : pts) emax = std::max(emax, e);
        const double floor = 1e3 * std::numeric_limits<double>::epsilon() * emax;
        while (pts.size() > 5 && pts.back().second < floor) pts.pop_back();
        // Leading transient: drop until consecutive local slopes agree within 5%.
        auto local_slope = [&](std::size_t i) {
            return (std::log(pts[i + 1].second) - std::log(pts[i].second)) /
                   static_cast<double>(pts[i + 1].first - pts[i].first);
        };
        while (pts.size() > 6) {
            const double s0 = local_slope(0);
            const double s1 = local_slope(1);
            if (std::abs(s0 - s1) <= 0.05 * std::abs(s1)) break;
            pts.erase(pts.begin());
        }
    }
    if (pts.size() < 5) throw InsufficientPointsError("fit_geometric_rate: need >= 5 points");

    double sn = 0.0, sy = 0.0, snn = 0.0, sny = 0.0;
    for (const auto& [n, e] : pts) {
        const double x = static_cast<double>(n);
        const double y = std::log(e);
        sn += x;
        sy += y;
        snn += x * x;
        sny += x * y;
    }
    const double count = static_cast<double>(pts.size());
    const double slope = (count * sny - sn * sy) / (count * snn - sn * sn);
    const double intercept = (sy - slope * sn) / count;

    double rss = 0.0;
    for (const auto& [n, e] : pts) {
        const double r = std::log(e) - (intercept + slope * static_cast<double>(n));
        rss += r * r;
    }
    return {std::exp(slope), intercept, pts.front().first, pts.back().first,
            std::sqrt(rss / count)};
}

DiracGap dirac_selection_gap(double h, double eps, double alpha) {
    if (!(h > 0.0) || !(eps > 0.0) || !(eps < h))
        throw InvalidGeometryError("dirac_selection_gap: need 0 < eps < h");
    const auto m = [alpha](double x) { return 0.5 * alpha * x * x; };
    // p_eps written with the common factor e^{-m(-h+eps)} divided out, which
    // keeps it finite for strongly selected far-out atoms.
    const double p_eps = 1.0 / (1.0 + std::exp(m(h + eps) - m(-h + eps)));
    const double w2_out = std::sqrt(eps * eps + 4.0 * h * (h - eps) * (0.5 - p_eps));
    return {eps, w2_out, p_eps};
}

W2ContractionReport verify_w2_contraction(const GridDistribution& p, const GridDistribution& q) {
    W2ContractionReport rep;
    const double mean_p = moment(p, 1, false);
    const double mean_q = moment(q, 1, false);
    rep.means_matched = std::abs(mean_p - mean_q) <= 1e-8;
    const double w2_in = wasserstein2(p, q);
    const double w2_out = wasserstein2(mixing_B(p), mixing_B(q));
    rep.lhs = w2_out * w2_out;
    rep.rhs = rep.means_matched ? 0.5 * w2_in * w2_in : w2_in * w2_in;
    rep.ok = rep.lhs <= rep.rhs + 1e-6;
    return rep;
}

MomentBoundReport verify_moment_bounds(const GridDistribution& f, double alpha, double eta,
                                       double theta, double chi) {
    if (!(alpha > 0.0)) throw ParameterRangeError("verify_moment_bounds: alpha must be positive");
    if (!(theta >= 0.0) || !(theta < 0.5 * alpha))
        throw ParameterRangeError("verify_moment_bounds: need 0 <= theta < alpha/2");
    const double chi0 = (alpha / (1.0 + alpha)) * theta /
                        (2.0 * (1.0 + alpha - 2.0 * theta) * (alpha - 2.0 * theta));
    if (!(chi > chi0))
        throw ParameterRangeError("verify_moment_bounds: chi below its admissible threshold");

    MomentBoundReport rep;
    rep.M = moment_bound_constant(alpha, eta);

    ModelParams params{alpha, 1.0, GenerationMode::NonOverlapping};
    const GridDistribution s = normalized_step_S(f, params);
    const double quad_in = moment(f, 2, false);

    rep.quad_lhs = moment(s, 2, false);
    rep.quad_rhs = rep.M + eta * quad_in;
    rep.quad_slack = rep.quad_rhs - rep.quad_lhs;

    // delta solved so that the proof's chi-coefficient equals the supplied chi;
    // chi > chi0 puts it in (0,1).
    const double delta = 1.0 - chi0 / chi;
    rep.C = std::pow((1.0 + alpha) / (1.0 + alpha - 2.0 * theta), 0.5) *
            std::max(1.0 / delta, 1.0);
    rep.exp_lhs = exp_moment(s, theta);
    rep.exp_rhs = rep.C * (1.0 + std::exp(chi * quad_in));
    rep.exp_slack = rep.exp_rhs - rep.exp_lhs;

    rep.ok = rep.quad_slack >= -1e-9 && rep.exp_slack >= -1e-9;
    return rep;
}

double tail_fit_variance(const GridDistribution& f, double lo, double hi) {
    const GridDistribution nu = normalize(f);
    double su = 0.0, sv = 0.0, suu = 0.0, suv = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
        const double v = nu.values[k];
        if (v < lo || v > hi) continue;
        const double x = nu.grid.point(k);
        const double u = -0.5 * x * x;
        const double y = std::log(v);
        su += u;
        sv += y;
        suu += u * u;
        suv += u * y;
        ++count;
    }
    if (count < 5) throw InsufficientPointsError("tail_fit_variance: window has < 5 points");
    const double c = static_cast<double>(count);
    const double slope = (c * suv - su * sv) / (c * suu - su * su);
    if (!(slope > 0.0)) throw SolverError("tail_fit_variance: non-positive fitted slope");
    return 1.0 / slope;
}

}  // namespace fim
