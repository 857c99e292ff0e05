#include "fim/config.hpp"

#include <fstream>

#include <json.hpp>

#include "fim/errors.hpp"

namespace fim {

namespace {

using nlohmann::json;

json initial_to_json(const InitialDatum& d) {
    json j;
    if (const auto* step = std::get_if<StepDatum>(&d)) {
        j["kind"] = "step";
        json pieces = json::array();
        for (const auto& p : step->pieces) pieces.push_back({p.a, p.b, p.height});
        j["pieces"] = pieces;
    } else {
        const auto& g = std::get<GaussianDatum>(d);
        j["kind"] = "gaussian";
        j["mass"] = g.mass;
        j["mean"] = g.mean;
        j["variance"] = g.variance;
    }
    return j;
}

InitialDatum initial_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "step") {
        StepDatum s;
        for (const auto& p : j.at("pieces")) {
            if (!p.is_array() || p.size() != 3)
                throw ConfigError("initial.pieces: each entry must be [a, b, height]");
            s.pieces.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
        }
        if (s.pieces.empty()) throw ConfigError("initial.pieces: must be non-empty");
        return s;
    }
    if (kind == "gaussian") {
        GaussianDatum g;
        g.mass = j.value("mass", 1.0);
        g.mean = j.at("mean").get<double>();
        g.variance = j.at("variance").get<double>();
        if (!(g.variance > 0.0)) throw ConfigError("initial.variance: must be positive");
        return g;
    }
    if (kind == "paper-step") return paper_step();
    throw ConfigError("initial.kind: expected step | gaussian | paper-step, got `" + kind + "`");
}

ExperimentConfig config_from_json(const json& j) {
    try {
        ExperimentConfig c;
        c.alpha = j.at("alpha").get<double>();
        if (c.alpha < 0.0) throw ConfigError("alpha: must be non-negative");
        c.beta = j.value("beta", 1.0);
        if (!(c.beta > 0.0)) throw ConfigError("beta: must be positive");
        const std::string mode = j.value("mode", std::string("non_overlapping"));
        if (mode == "non_overlapping")
            c.mode = GenerationMode::NonOverlapping;
        else if (mode == "overlapping")
            c.mode = GenerationMode::Overlapping;
        else
            throw ConfigError("mode: expected non_overlapping | overlapping, got `" + mode + "`");
        const json& g = j.at("grid");
        c.x_min = g.at("x_min").get<double>();
        c.x_max = g.at("x_max").get<double>();
        c.dx = g.at("dx").get<double>();
        if (!(c.dx > 0.0) || !(c.x_min < c.x_max))
            throw ConfigError("grid: need dx > 0 and x_min < x_max");
        c.initial = initial_from_json(j.at("initial"));
        c.n_iters = j.at("n_iters").get<int>();
        if (c.n_iters < 0) throw ConfigError("n_iters: must be non-negative");
        c.snapshot_generations = j.value("snapshot_generations", std::vector<int>{});
        c.seed = j.value("seed", std::uint64_t{0});
        c.out_dir = j.value("out_dir", std::string("out"));
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

}  // namespace

ExperimentConfig parse_config_string(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return config_from_json(j);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_string(text);
}

std::string serialize_config(const ExperimentConfig& cfg) {
    json j;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["mode"] = cfg.mode == GenerationMode::NonOverlapping ? "non_overlapping" : "overlapping";
    j["grid"] = {{"x_min", cfg.x_min}, {"x_max", cfg.x_max}, {"dx", cfg.dx}};
    j["initial"] = initial_to_json(cfg.initial);
    j["n_iters"] = cfg.n_iters;
    j["snapshot_generations"] = cfg.snapshot_generations;
    j["seed"] = cfg.seed;
    j["out_dir"] = cfg.out_dir;
    return j.dump(2) + "\n";
}

ExperimentConfig weak_preset() {
    ExperimentConfig c;
    c.alpha = 0.015;
    c.n_iters = 150;
    c.snapshot_generations = {0, 1, 2, 3, 4, 7, 150};
    c.out_dir = "out-weak";
    return c;
}

ExperimentConfig strong_preset() {
    ExperimentConfig c;
    c.alpha = 0.4;
    c.n_iters = 15;
    c.snapshot_generations = {0, 1, 2, 15};
    c.out_dir = "out-strong";
    return c;
}

}  // namespace fim
