#pragma once

#include <vector>

namespace fim {

// Exact state of a Gaussian density m * G_{mu, sigma2 I_d}.
struct GaussianState {
    double mass = 1.0;
    std::vector<double> mean;  // d-vector
    double variance = 1.0;     // isotropic

    GaussianState() : mean(1, 0.0) {}
    GaussianState(double m, double mu, double s2) : mass(m), mean(1, mu), variance(s2) {}
    GaussianState(double m, std::vector<double> mu, double s2)
        : mass(m), mean(std::move(mu)), variance(s2) {}

    int dim() const { return static_cast<int>(mean.size()); }
    double mean_norm2() const;
    // Scalar mean, valid for d = 1.
    double mean1() const { return mean.at(0); }
};

struct Eigenpair {
    double alpha = 0.0;
    int dim = 1;
    double lambda = 1.0;  // growth factor
    double sigma2 = 2.0;  // equilibrium variance
    double k_bar = 0.5;   // limit of the contraction coefficients
    double r_bar = 0.5;   // variance relaxation ratio, 2*k_bar^2
    // alpha = 0 returns the translation-invariant limit pair (1, 2); the
    // equilibrium is then unique only up to translation.
    bool unique = true;
};

// Closed-form eigenpair. sigma2 solves 1/s = alpha + 1/(1+s/2); evaluated in
// rationalized form so alpha -> 0 is exact.
Eigenpair eigenpair(double alpha, int dim);

// One generation applied to an exact Gaussian state.
GaussianState evaluate_on_gaussian(const GaussianState& state, double alpha);

// n applications; returns n+1 states starting with state0.
std::vector<GaussianState> gaussian_trajectory(const GaussianState& state0, double alpha, int n);

struct Coefficients {
    std::vector<double> k;      // k[m] = k_{m+1}, m = 0..n-1
    std::vector<double> kappa;  // kappa[m] = k_1*...*k_m, kappa[0] = 1, m = 0..n
};

// k_1 = 1/(2(1+alpha)), k_m = 1/(3+2alpha-2k_{m-1}).
Coefficients coefficients(double alpha, int n);

struct TailBarriers {
    std::vector<double> upper;  // upper[i] = sigma_bar^2_{i+1}, upper[0] = 1/alpha
    std::vector<double> lower;  // lower[i] = sigma_under^2_{i+1}
};

// Barrier recursions 1/s_{n+1} = alpha + 1/(1+s_n/2) seeded at 1/alpha and at
// a caller-chosen value in (0, 1/(1+alpha)).
TailBarriers tail_variance_barriers(double alpha, int n, double sigma_lower_1);

// Constant M(alpha, eta) of the quadratic-moment bound
// int |x|^2 S[F] <= M + eta int |x|^2 F/||F||, with the symmetric choice
// gamma = delta = 1 - (2 eta (1+alpha)^2)^{-1/4}.
double moment_bound_constant(double alpha, double eta);

}  // namespace fim
