#include "fim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "fim/errors.hpp"

namespace fim {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_distribution_csv(const std::filesystem::path& path, const GridDistribution& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "x,value\n";
    for (std::size_t k = 0; k < f.size(); ++k)
        out << format_g17(f.grid.point(k)) << ',' << format_g17(f.values[k]) << '\n';
}

GridDistribution read_distribution_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,value", 0) != 0)
        throw std::runtime_error(path.string() + ": expected `x,value` header");
    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(path.string() + ": malformed row `" + line + "`");
        xs.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    if (xs.size() < 2) throw std::runtime_error(path.string() + ": need at least two rows");
    const double dx = xs[1] - xs[0];
    Grid grid(xs.front(), xs.back(), dx);
    if (grid.n_points != xs.size())
        throw std::runtime_error(path.string() + ": rows do not form a uniform grid");
    GridDistribution f{grid, std::move(vs)};
    validate(f);
    return f;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryRecord> records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "n,log_mass,lambda_n,mean,variance,kl,w2,eps_mass\n";
    for (const TrajectoryRecord& r : records) {
        out << r.n << ',' << format_g17(r.log_mass) << ',' << format_g17(r.lambda) << ','
            << format_g17(r.mean) << ',' << format_g17(r.variance) << ',' << format_g17(r.kl_to_eigen)
            << ',' << format_g17(r.w2_to_eigen) << ',' << format_g17(r.eps_mass) << '\n';
    }
}

}  // namespace fim
