#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fim/grid.hpp"
#include "fim/initial_datum.hpp"
#include "fim/operators.hpp"

namespace fim {

// Everything a `simulate` run needs. Serialized as JSON; parse/serialize
// round-trips exactly.
struct ExperimentConfig {
    double alpha = 0.0;
    double beta = 1.0;
    GenerationMode mode = GenerationMode::NonOverlapping;
    double x_min = -15.0;
    double x_max = 60.0;
    double dx = 0.001;
    InitialDatum initial = paper_step();
    int n_iters = 0;
    std::vector<int> snapshot_generations;
    std::uint64_t seed = 0;
    std::string out_dir = "out";

    Grid grid() const { return Grid(x_min, x_max, dx); }
};

// Throws ConfigError with key context on malformed input.
ExperimentConfig parse_config_string(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& cfg);

// alpha = 0.015, paper-step, 150 generations, snapshots {0,1,2,3,4,7,150}.
ExperimentConfig weak_preset();
// alpha = 0.4, paper-step, 15 generations, snapshots {0,1,2,15}.
ExperimentConfig strong_preset();

}  // namespace fim
