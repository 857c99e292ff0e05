#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fim {

// Uniform 1-D grid x_k = x_min + k*dx, 0 <= k < n_points.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    double dx = 0.0;
    std::size_t n_points = 0;

    Grid() = default;
    Grid(double x_min, double x_max, double dx);

    double point(std::size_t k) const { return x_min + static_cast<double>(k) * dx; }

    // Index of a value that is supposed to lie on the grid (within 1e-9*dx).
    // Returns n_points if it does not.
    std::size_t index_of(double x) const;

    bool operator==(const Grid& other) const {
        return x_min == other.x_min && x_max == other.x_max && dx == other.dx;
    }
};

// Non-negative density sampled on a grid.
struct GridDistribution {
    Grid grid;
    std::vector<double> values;

    GridDistribution() = default;
    GridDistribution(Grid g, std::vector<double> v);

    std::size_t size() const { return values.size(); }
};

// Throws if values/grid sizes disagree or any value is negative.
void validate(const GridDistribution& f);

// Left rectangle rule: sum_{k < n-1} values[k]*dx.
double mass(const GridDistribution& f);

// f / mass(f). Throws ZeroMassError below the 1e-300 extinction threshold.
GridDistribution normalize(const GridDistribution& f);

// Gaussian density with mean mu and variance sigma2 sampled on the grid.
GridDistribution gaussian_profile(const Grid& grid, double mu, double sigma2);

// p-th moment of the normalized density, optionally centered at its mean.
double moment(const GridDistribution& f, int p, bool centered);

// int e^{theta x^2} dnu for nu = normalize(f). Throws OverflowError when a
// term leaves the representable range (theta too large for the grid tail).
double exp_moment(const GridDistribution& f, double theta);

// Relative entropy D(P||Q) between the normalized densities. Grids must be
// identical and Q must be positive wherever P is.
double kl_divergence(const GridDistribution& p, const GridDistribution& q);

// D(P||G_{mu,sigma2}) with the Gaussian log-density evaluated in closed form,
// so the reference never underflows on wide grids.
double kl_to_gaussian(const GridDistribution& p, double mu, double sigma2);

// 1-D quadratic Wasserstein distance via quantile functions. The pseudo-
// inverse CDFs are evaluated on a uniform mesh of 4*n_points midpoints.
double wasserstein2(const GridDistribution& p, const GridDistribution& q);

}  // namespace fim
