#pragma once

#include <optional>
#include <span>
#include <utility>

#include "fim/grid.hpp"

namespace fim {

struct RateFit {
    double rate = 0.0;           // exp(slope) of the least-squares line
    double log_intercept = 0.0;  // value of the fit at n = 0
    int n_lo = 0;
    int n_hi = 0;
    double residual_rms = 0.0;
};

// Least-squares line through (n, log e_n). Without an explicit window the
// leading transient is dropped until consecutive local slopes agree within
// 5% and trailing points below 1e3 * eps * max(e) are discarded; at least
// five points are always kept.
RateFit fit_geometric_rate(std::span<const std::pair<int, double>> errors,
                           std::optional<std::pair<int, int>> window = std::nullopt);

struct DiracGap {
    double w2_in = 0.0;   // W2 of the inputs: epsilon
    double w2_out = 0.0;  // W2 after the normalized selection step
    double p_eps = 0.0;
};

// Exact two-atom computation of the selection step's Lipschitz blow-up:
// F1 = (d_{-h}+d_h)/2 against its eps-translate, m(x) = alpha x^2/2.
DiracGap dirac_selection_gap(double h, double eps, double alpha);

struct W2ContractionReport {
    double lhs = 0.0;  // W2(B[P], B[Q])^2
    double rhs = 0.0;  // W2(P,Q)^2 / 2 when means match, W2(P,Q)^2 otherwise
    bool means_matched = false;
    bool ok = false;
};

// Checks the mixing step's W2 contraction (matched centers of mass) or, when
// the means differ by more than 1e-8, plain non-expansiveness.
W2ContractionReport verify_w2_contraction(const GridDistribution& p, const GridDistribution& q);

struct MomentBoundReport {
    double quad_lhs = 0.0;
    double quad_rhs = 0.0;
    double quad_slack = 0.0;
    double exp_lhs = 0.0;
    double exp_rhs = 0.0;
    double exp_slack = 0.0;
    double M = 0.0;
    double C = 0.0;
    bool ok = false;
};

// Evaluates both sides of the quadratic- and exponential-moment bounds for
// the normalized step S. Preconditions: eta in (1/(2(1+alpha)^2), 1),
// theta < alpha/2, chi > (alpha/(1+alpha)) theta / (2(1+alpha-2theta)(alpha-2theta)).
MomentBoundReport verify_moment_bounds(const GridDistribution& f, double alpha, double eta,
                                       double theta, double chi);

// Least-squares slope of log F against -x^2/2 over the window where the
// normalized density lies in [lo, hi]; returns the implied variance.
double tail_fit_variance(const GridDistribution& f, double lo = 1e-12, double hi = 1e-4);

}  // namespace fim
