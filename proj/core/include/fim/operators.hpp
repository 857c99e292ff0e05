#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fim/gaussian_oracle.hpp"
#include "fim/grid.hpp"

namespace fim {

enum class GenerationMode { NonOverlapping, Overlapping };

struct ModelParams {
    double alpha = 0.0;                                   // selection strength
    double beta = 1.0;                                    // birth/mortality ratio
    GenerationMode mode = GenerationMode::NonOverlapping;
};

// Per-generation record. Masses are tracked in log space; lambda, kl, w2 and
// eps_mass are NaN where undefined (n = 0, or no reference supplied).
struct TrajectoryRecord {
    int n = 0;
    double log_mass = 0.0;
    double lambda = 0.0;  // ||F_n|| / ||F_{n-1}||
    double mean = 0.0;
    double variance = 0.0;
    double kl_to_eigen = 0.0;
    double w2_to_eigen = 0.0;
    double eps_mass = 0.0;  // |lambda_n - lambda_bar|

    double mass() const;
};

// Infinitesimal mixing step B[F](x) = int int G(x-(x1+x2)/2) F F / ||F||.
// FFT path: self-convolution, even-index read-off of the parental midpoint
// density, convolution with the unit Gaussian. Linear (zero-padded), so mass
// is conserved up to grid truncation only.
GridDistribution mixing_B(const GridDistribution& f);

// T[F] = beta * e^{-alpha x^2/2} B[F].
GridDistribution apply_T(const GridDistribution& f, const ModelParams& params);

// e^{-alpha x^2/2} F / ||e^{-alpha x^2/2} F||.
GridDistribution selection_M(const GridDistribution& f, double alpha);

// normalize(apply_T(f)).
GridDistribution normalized_step_S(const GridDistribution& f, const ModelParams& params);

struct IterateResult {
    std::vector<TrajectoryRecord> records;                       // n = 0..n_iters
    GridDistribution final_profile;                              // unit mass
    std::vector<std::pair<int, GridDistribution>> snapshots;     // normalized profiles
};

// Runs F_n = T[F_{n-1}] (or the overlapping variant) for n_iters generations.
// Profiles are renormalized every step and the mass is accumulated in log
// space, so lambda_n stays meaningful long after the raw mass underflows.
IterateResult iterate(const GridDistribution& f0, const ModelParams& params, int n_iters,
                      const std::optional<GaussianState>& eigen_ref = std::nullopt,
                      std::span<const int> snapshot_generations = {});

// Mass ratio ||T[F]||/||F|| as the double integral of
// H(x1,x2) = (1+alpha)^{-1/2} exp(-alpha/(2(1+alpha)) |(x1+x2)/2|^2)
// against normalize(F) twice, evaluated via one FFT self-convolution.
double growth_rate_via_H(const GridDistribution& f, double alpha);

}  // namespace fim
