#include "gkp/config.hpp"

#include <json.hpp>

#include <fstream>

namespace gkp {

namespace {

using nlohmann::json;

// keys are passed fully qualified ("solver.tol"); the lookup uses the last
// segment while diagnostics carry the full path
std::string leaf(const std::string& key) {
    const auto dot = key.rfind('.');
    return dot == std::string::npos ? key : key.substr(dot + 1);
}

double num_at(const json& j, const std::string& key, double fallback) {
    const std::string k = leaf(key);
    if (!j.contains(k)) return fallback;
    if (!j[k].is_number())
        throw ConfigError("config key " + key + ": expected a number");
    return j[k].get<double>();
}

int int_at(const json& j, const std::string& key, int fallback) {
    const std::string k = leaf(key);
    if (!j.contains(k)) return fallback;
    if (!j[k].is_number_integer())
        throw ConfigError("config key " + key + ": expected an integer");
    return j[k].get<int>();
}

const json& obj_at(const json& j, const std::string& key) {
    static const json empty = json::object();
    const std::string k = leaf(key);
    if (!j.contains(k)) return empty;
    if (!j[k].is_object())
        throw ConfigError("config key " + key + ": expected an object");
    return j[k];
}

std::array<double, 2> center_at(const json& j, const std::string& key) {
    const std::string k = leaf(key);
    if (!j.contains(k)) return {0.0, 0.0};
    const auto& c = j[k];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
        throw ConfigError("config key " + key + ": expected [x, y]");
    return {c[0].get<double>(), c[1].get<double>()};
}

Potential parse_potential(const json& root) {
    const json& p = obj_at(root, "potential");
    std::string type = "bump";
    if (p.contains("type")) {
        if (!p["type"].is_string())
            throw ConfigError("config key potential.type: expected a string");
        type = p["type"].get<std::string>();
    }
    const double base = num_at(p, "potential.base", 1.0);
    if (type == "constant") return Potential::constant(base);

    const double height = num_at(p, "potential.height", 1.0);
    const double sigma = num_at(p, "potential.sigma", 2.0);
    if (!(sigma > 0.0)) throw ConfigError("config key potential.sigma: must be positive");
    const auto c = center_at(p, "potential.center");
    if (type == "bump") return Potential::bump(base, height, sigma, c[0], c[1]);

    if (type == "two_bump") {
        const double height2 = num_at(p, "potential.height2", height);
        const double sigma2 = num_at(p, "potential.sigma2", sigma);
        if (!(sigma2 > 0.0)) throw ConfigError("config key potential.sigma2: must be positive");
        const auto c2 = center_at(p, "potential.center2");
        return Potential::two_bump(base, {height, sigma, c[0], c[1]},
                                   {height2, sigma2, c2[0], c2[1]});
    }
    throw ConfigError("config key potential.type: unknown type '" + type +
                      "' (expected constant, bump or two_bump)");
}

RunConfig parse_json(const json& root) {
    RunConfig cfg;

    const json& grid = obj_at(root, "grid");
    cfg.Lx = num_at(grid, "grid.Lx", cfg.Lx);
    cfg.Ly = num_at(grid, "grid.Ly", cfg.Ly);
    cfg.Nx = int_at(grid, "grid.Nx", cfg.Nx);
    cfg.Ny = int_at(grid, "grid.Ny", cfg.Ny);
    if (!(cfg.Lx > 0.0)) throw ConfigError("config key grid.Lx: must be positive");
    if (!(cfg.Ly > 0.0)) throw ConfigError("config key grid.Ly: must be positive");
    if (cfg.Nx < 4 || cfg.Nx % 2 != 0)
        throw ConfigError("config key grid.Nx: must be even and >= 4, got " +
                          std::to_string(cfg.Nx));
    if (cfg.Ny < 4 || cfg.Ny % 2 != 0)
        throw ConfigError("config key grid.Ny: must be even and >= 4, got " +
                          std::to_string(cfg.Ny));

    const json& model = obj_at(root, "model");
    cfg.p = num_at(model, "model.p", cfg.p);
    if (!(cfg.p > 0.0) || !(cfg.p < 4.0))
        throw ConfigError("config key model.p: must lie in (0, 4), got " +
                          std::to_string(cfg.p));

    cfg.potential = parse_potential(root);

    cfg.eps = num_at(root, "eps", cfg.eps);
    if (!(cfg.eps > 0.0)) throw ConfigError("config key eps: must be positive");

    const json& solver = obj_at(root, "solver");
    cfg.solver.gamma = num_at(solver, "solver.gamma", 0.0);
    if (cfg.solver.gamma != 0.0 && !(cfg.solver.gamma > 1.0))
        throw ConfigError("config key solver.gamma: must exceed 1 (or 0 for automatic)");
    cfg.solver.tol_residual = num_at(solver, "solver.tol", 1e-10);
    if (!(cfg.solver.tol_residual > 0.0))
        throw ConfigError("config key solver.tol: must be positive");
    cfg.solver.max_iter = int_at(solver, "solver.max_iter", 2000);
    if (cfg.solver.max_iter < 1)
        throw ConfigError("config key solver.max_iter: must be >= 1");
    cfg.solver.seeds = int_at(solver, "solver.seeds", 3);
    if (cfg.solver.seeds < 1) throw ConfigError("config key solver.seeds: must be >= 1");
    cfg.solver.descent_step = num_at(solver, "solver.step", 0.5);
    if (!(cfg.solver.descent_step > 0.0))
        throw ConfigError("config key solver.step: must be positive");
    cfg.solver.seed_width = num_at(solver, "solver.seed_width", 2.0);
    if (!(cfg.solver.seed_width > 0.0))
        throw ConfigError("config key solver.seed_width: must be positive");
    if (solver.contains("seed_kind")) {
        if (!solver["seed_kind"].is_string())
            throw ConfigError("config key solver.seed_kind: expected a string");
        const std::string k = solver["seed_kind"].get<std::string>();
        if (k == "gaussian_dx") cfg.solver.seed_kind = SeedKind::gaussian_dx;
        else if (k == "lump") cfg.solver.seed_kind = SeedKind::lump;
        else
            throw ConfigError("config key solver.seed_kind: unknown kind '" + k +
                              "' (expected gaussian_dx or lump)");
    }

    const json& sweep = obj_at(root, "sweep");
    if (sweep.contains("eps_list")) {
        if (!sweep["eps_list"].is_array())
            throw ConfigError("config key sweep.eps_list: expected an array");
        for (const auto& e : sweep["eps_list"]) {
            if (!e.is_number())
                throw ConfigError("config key sweep.eps_list: entries must be numbers");
            cfg.eps_list.push_back(e.get<double>());
        }
        for (size_t k = 0; k < cfg.eps_list.size(); ++k) {
            if (!(cfg.eps_list[k] > 0.0))
                throw ConfigError("config key sweep.eps_list: entries must be positive");
            if (k > 0 && !(cfg.eps_list[k] < cfg.eps_list[k - 1]))
                throw ConfigError("config key sweep.eps_list: must be strictly decreasing");
        }
    }
    cfg.tol_level = num_at(sweep, "sweep.tol_level", cfg.tol_level);
    cfg.tol_V = num_at(sweep, "sweep.tol_V", cfg.tol_V);
    if (!(cfg.tol_level > 0.0)) throw ConfigError("config key sweep.tol_level: must be positive");
    if (!(cfg.tol_V > 0.0)) throw ConfigError("config key sweep.tol_V: must be positive");

    const json& output = obj_at(root, "output");
    if (output.contains("dir")) {
        if (!output["dir"].is_string())
            throw ConfigError("config key output.dir: expected a string");
        cfg.out_dir = output["dir"].get<std::string>();
    }
    if (output.contains("write_fields")) {
        if (!output["write_fields"].is_boolean())
            throw ConfigError("config key output.write_fields: expected a boolean");
        cfg.write_fields = output["write_fields"].get<bool>();
    }

    if (root.contains("seed")) {
        const bool ok = root["seed"].is_number_unsigned() ||
                        (root["seed"].is_number_integer() && root["seed"].get<long long>() >= 0);
        if (!ok) throw ConfigError("config key seed: expected an unsigned integer");
        cfg.seed = root["seed"].get<std::uint64_t>();
    }
    cfg.solver.rng_seed = cfg.seed;

    const json& reg = obj_at(root, "regularity");
    cfg.qprime = num_at(reg, "regularity.qprime", cfg.qprime);
    if (cfg.p == 3.0 && (!(cfg.qprime > 1.0) || !(cfg.qprime < 1.5)))
        throw ConfigError("config key regularity.qprime: must lie in (1, 3/2) when p = 3");

    return cfg;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    try {
        return parse_json(root);
    } catch (const ConfigError&) {
        throw;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

} // namespace gkp
