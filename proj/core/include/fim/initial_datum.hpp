#pragma once

#include <variant>
#include <vector>

#include "fim/grid.hpp"

namespace fim {

// Piecewise-constant datum: height on [a,b), zero elsewhere. Half-open
// intervals keep grid sampling exact when edges align with grid points.
struct StepDatum {
    struct Piece {
        double a;
        double b;
        double height;
    };
    std::vector<Piece> pieces;

    double density(double x) const;
};

struct GaussianDatum {
    double mass = 1.0;
    double mean = 0.0;
    double variance = 1.0;

    double density(double x) const;
};

using InitialDatum = std::variant<StepDatum, GaussianDatum>;

double datum_density(const InitialDatum& f, double x);

// log F0(x); -inf where the datum vanishes.
double datum_log_density(const InitialDatum& f, double x);

// log of the rescaled datum e^{alpha x^2/2} F0(x) / G_{0,2}(x).
double datum_log_rescaled(const InitialDatum& f, double alpha, double x);

GridDistribution sample_on_grid(const InitialDatum& f, const Grid& grid);

// The built-in `paper-step` preset: heights (30,20,50,30) on
// [-7,-3), [7.5,12.5), [30,40), [52.5,57.5).
StepDatum paper_step();

}  // namespace fim
