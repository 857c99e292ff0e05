#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "fim/grid.hpp"
#include "fim/operators.hpp"

namespace fim {

// Shortest-faithful is not wanted here: file formats pin 17 significant
// digits so reruns are byte-comparable.
std::string format_g17(double v);

// Header `x,value`, one row per grid point.
void write_distribution_csv(const std::filesystem::path& path, const GridDistribution& f);
GridDistribution read_distribution_csv(const std::filesystem::path& path);

// Header `n,log_mass,lambda_n,mean,variance,kl,w2,eps_mass`.
void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryRecord> records);

}  // namespace fim
