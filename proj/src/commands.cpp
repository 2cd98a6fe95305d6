#include "gkp/commands.hpp"
#include "gkp/concentration.hpp"
#include "gkp/config.hpp"
#include "gkp/field_io.hpp"
#include "gkp/format.hpp"
#include "gkp/kernels.hpp"
#include "gkp/regularity.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace gkp {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

RunConfig load(const std::string& config_path, const CommandOptions& opts) {
    RunConfig cfg = parse_config_file(config_path);
    if (!opts.out_override.empty()) cfg.out_dir = opts.out_override;
    if (opts.seed_override) {
        cfg.seed = *opts.seed_override;
        cfg.solver.rng_seed = cfg.seed;
    }
    return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string());
    out << text;
}

ordered_json state_json(const Problem& P, const GroundState& gs) {
    ordered_json j;
    j["eps"] = P.eps;
    j["p"] = P.nl.p;
    j["c_eps"] = gs.c;
    j["residual"] = gs.residual;
    j["nehari_residual"] = gs.nehari_residual;
    j["iterations"] = gs.iterations;
    j["converged"] = gs.converged;
    j["stabilizing_factor"] = gs.last_S;
    const ArgMax am = find_argmax(gs.u);
    const auto refined = refine_argmax(gs.u, am);
    j["argmax"] = {{"x", gs.argmax_x}, {"y", gs.argmax_y}, {"value", gs.argmax_value},
                   {"refined_x", refined[0]}, {"refined_y", refined[1]}};
    double umin = gs.u.values[0], umax = gs.u.values[0];
    for (double v : gs.u.values) {
        umin = std::min(umin, v);
        umax = std::max(umax, v);
    }
    const double scale = std::max(std::abs(umin), std::abs(umax));
    std::string sign = "zero";
    if (scale > 0.0) {
        const bool has_pos = umax > 1e-8 * scale;
        const bool has_neg = umin < -1e-8 * scale;
        sign = has_pos && has_neg ? "sign-changing" : (has_pos ? "positive" : "negative");
    }
    j["sign_pattern"] = sign;
    j["min"] = umin;
    j["max"] = umax;
    j["kernel_backend"] = kernels::active_name();
    return j;
}

} // namespace

int cmd_solve(const std::string& config_path, const CommandOptions& opts) {
    RunConfig cfg;
    try {
        cfg = load(config_path, opts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        GridPtr grid = make_grid(cfg.Lx, cfg.Ly, cfg.Nx, cfg.Ny);
        Problem P = make_problem(grid, Nonlinearity(cfg.p), cfg.potential, cfg.eps);
        GroundState gs = solve_ground_state(P, cfg.solver);

        fs::create_directories(cfg.out_dir);
        if (cfg.write_fields) write_field((fs::path(cfg.out_dir) / "solution.gkp1").string(), gs.u);

        ordered_json summary = state_json(P, gs);
        summary["grid"] = {{"Lx", cfg.Lx}, {"Ly", cfg.Ly}, {"Nx", cfg.Nx}, {"Ny", cfg.Ny}};
        write_text(fs::path(cfg.out_dir) / "summary.json", summary.dump(2) + "\n");

        RegularityReport reg = regularity_report(P, gs.u, cfg.qprime);
        write_text(fs::path(cfg.out_dir) / "regularity.json", regularity_json(reg) + "\n");

        std::cout << "c_eps = " << format_g17(gs.c) << "  residual = " << format_g17(gs.residual)
                  << "  nehari = " << format_g17(gs.nehari_residual)
                  << "  iters = " << gs.iterations << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_sweep(const std::string& config_path, const CommandOptions& opts) {
    RunConfig cfg;
    try {
        cfg = load(config_path, opts);
        if (cfg.eps_list.empty())
            throw ConfigError("config key sweep.eps_list: required for the sweep command");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        GridPtr grid = make_grid(cfg.Lx, cfg.Ly, cfg.Nx, cfg.Ny);
        SweepOptions sopts;
        sopts.threads = opts.threads;
        SweepReport rep = sweep(grid, Nonlinearity(cfg.p), cfg.potential, cfg.eps_list,
                                cfg.solver, sopts);

        fs::create_directories(cfg.out_dir);
        write_text(fs::path(cfg.out_dir) / "sweep.csv", sweep_csv(rep));

        if (!rep.completed) {
            std::cerr << "solver failure: sweep aborted: " << rep.abort_reason
                      << " (partial report written)\n";
            return 2;
        }

        if (cfg.write_fields && !rep.states.empty())
            write_field((fs::path(cfg.out_dir) / "solution_last.gkp1").string(),
                        rep.states.back());

        // regularity of every converged state, one entry per row
        ordered_json regs = ordered_json::array();
        for (size_t k = 0; k < rep.states.size(); ++k) {
            Problem P = make_problem(grid, Nonlinearity(cfg.p), cfg.potential, rep.rows[k].eps);
            RegularityReport rr = regularity_report(P, rep.states[k], cfg.qprime);
            ordered_json entry = ordered_json::parse(regularity_json(rr));
            entry["eps"] = rep.rows[k].eps;
            regs.push_back(entry);
        }
        write_text(fs::path(cfg.out_dir) / "regularity_sweep.json", regs.dump(2) + "\n");

        if (!rep.grid_adequate)
            std::cout << "warning: grid resolution below the adequacy rule ("
                      << rep.nodes_per_core << " nodes across the wave core, want >= 8)\n";

        ConcentrationVerdict v = check_concentration(rep, cfg.tol_level, cfg.tol_V);
        ordered_json vj;
        vj["pass"] = v.pass;
        vj["valid"] = v.valid;
        vj["pass_level"] = v.pass_level;
        vj["pass_V"] = v.pass_V;
        vj["pass_regime"] = v.pass_regime;
        vj["margin_level"] = v.margin_level;
        vj["margin_V"] = v.margin_V;
        vj["margin_regime"] = v.margin_regime;
        vj["c0"] = rep.c0;
        vj["c_inf"] = rep.c_inf;
        vj["V0"] = rep.V0;
        vj["Vinf"] = rep.Vinf;
        vj["core_width"] = rep.core_width;
        vj["nodes_per_core"] = rep.nodes_per_core;
        vj["grid_adequate"] = rep.grid_adequate;
        vj["detail"] = v.detail;
        write_text(fs::path(cfg.out_dir) / "verdict.json", vj.dump(2) + "\n");

        std::cout << "c0 = " << format_g17(rep.c0) << "  c_inf = " << format_g17(rep.c_inf) << "\n";
        for (const auto& row : rep.rows)
            std::cout << "eps = " << format_g17(row.eps) << "  c_eps = " << format_g17(row.c_eps)
                      << "  V(eps q) = " << format_g17(row.V_at_scaled_argmax) << "\n";
        if (!v.pass) {
            std::cerr << "concentration verdict failed: " << v.detail << "\n";
            return 3;
        }
        std::cout << "concentration verdict: pass\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_check(const std::string& config_path, const CommandOptions& opts) {
    RunConfig cfg;
    try {
        cfg = load(config_path, opts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        bool ok = true;
        Nonlinearity nl(cfg.p);
        if (!nl.regularity_guaranteed())
            std::cout << "warning: existence-only regime p not in (1,4), "
                         "regularity unguaranteed (p = " << cfg.p << ")\n";

        std::vector<double> ts = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        for (int k = 0; k < 32; ++k) {
            double t = dist(rng);
            if (t != 0.0) ts.push_back(t);
        }
        HypothesisReport hrep = check_h(nl, ts);
        std::cout << "(h1)-(h4): " << (hrep.pass ? "pass" : "FAIL")
                  << "  worst (h3) margin = " << format_g17(hrep.worst_margin) << "\n";
        if (!hrep.pass) {
            std::cout << "  " << hrep.detail << "\n";
            ok = false;
        }

        PotentialReport vrep = check_V(cfg.potential);
        std::cout << "(V1)-(V2): V0 = " << format_g17(vrep.V0)
                  << "  Vinf = " << format_g17(vrep.Vinf) << "  "
                  << (vrep.pass ? "pass" : "FAIL") << "\n";
        if (!vrep.pass) {
            std::cout << "  " << vrep.detail << "\n";
            ok = false;
        }

        // finite-difference check of the derivative pairing on a small grid
        GridPtr grid = make_grid(10.0, 10.0, 16, 16);
        Problem P = make_problem(grid, nl, cfg.potential, cfg.eps);
        auto random_admissible = [&]() {
            Field f(grid);
            std::uniform_real_distribution<double> amp(-1.0, 1.0);
            for (auto& v : f.values) v = amp(rng);
            return project_x_derivative(deriv_x(f));
        };
        const Field u = random_admissible();
        double worst = 0.0;
        const double delta = 1e-5;
        for (int k = 0; k < 5; ++k) {
            const Field v = random_admissible();
            Field up = u, um = u;
            axpy_field(up, delta, v);
            axpy_field(um, -delta, v);
            const double fd = (energy(P, up) - energy(P, um)) / (2.0 * delta);
            const double pr = pairing(P, u, v);
            const double rel = std::abs(fd - pr) / std::max(1e-30, std::abs(pr));
            worst = std::max(worst, rel);
        }
        const bool grad_ok = worst < 1e-6;
        std::cout << "gradient finite-difference check: worst relative error = "
                  << format_g17(worst) << "  " << (grad_ok ? "pass" : "FAIL") << "\n";
        ok = ok && grad_ok;

        return ok ? 0 : 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

int cmd_export(const std::string& field_path, const std::string& out_dir) {
    try {
        Field f = read_field(field_path);
        fs::create_directories(out_dir);
        const Grid& g = *f.grid;
        std::string csv = "x,y,u\n";
        for (int j = 0; j < g.Ny; ++j)
            for (int i = 0; i < g.Nx; ++i)
                csv += format_g17(g.x[i]) + ',' + format_g17(g.y[j]) + ',' +
                       format_g17(f.values[g.index(i, j)]) + '\n';
        write_text(fs::path(out_dir) / "field.csv", csv);
        std::cout << "wrote " << (fs::path(out_dir) / "field.csv").string() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gkp
