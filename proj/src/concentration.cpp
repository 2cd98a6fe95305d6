#include "gkp/concentration.hpp"
#include "gkp/format.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace gkp {

ArgMax find_argmax(const Field& u) {
    if (max_abs_field(u) == 0.0) throw Error("find_argmax: zero field");
    return argmax_abs(u);
}

std::array<double, 2> refine_argmax(const Field& u, const ArgMax& node) {
    const Grid& g = *u.grid;
    auto wrap = [](int v, int n) { return ((v % n) + n) % n; };
    auto a = [&](int i, int j) {
        return std::abs(u.values[g.index(wrap(i, g.Nx), wrap(j, g.Ny))]);
    };
    auto offset = [](double lo, double mid, double hi) {
        const double d = lo - 2.0 * mid + hi;
        if (d >= 0.0) return 0.0; // flat or non-concave fit
        double o = 0.5 * (lo - hi) / d;
        return std::clamp(o, -0.5, 0.5);
    };
    const double ox = offset(a(node.i - 1, node.j), a(node.i, node.j), a(node.i + 1, node.j));
    const double oy = offset(a(node.i, node.j - 1), a(node.i, node.j), a(node.i, node.j + 1));
    return {node.x + ox * g.dx, node.y + oy * g.dy};
}

namespace {

// Nearest node to the scaled potential maximum; warm starts recenter there.
std::pair<int, int> potential_argmax_node(const Problem& P) {
    const Grid& g = *P.grid;
    const auto vmax = P.pot.argmax();
    const double tx = vmax[0] / P.eps, ty = vmax[1] / P.eps;
    auto nearest = [](double t, double lo, double d, int n) {
        int k = static_cast<int>(std::lround((t - lo) / d));
        return ((k % n) + n) % n;
    };
    return {nearest(tx, g.x[0], g.dx, g.Nx), nearest(ty, g.y[0], g.dy, g.Ny)};
}

} // namespace

SweepReport sweep(const GridPtr& grid, const Nonlinearity& nl, const Potential& pot,
                  const std::vector<double>& eps_list, const SolverConfig& cfg,
                  const SweepOptions& opts) {
    if (eps_list.empty()) throw ConfigError("sweep.eps_list: must be nonempty");
    for (size_t k = 0; k < eps_list.size(); ++k) {
        if (!(eps_list[k] > 0.0))
            throw ConfigError("sweep.eps_list: entries must be positive");
        if (k > 0 && !(eps_list[k] < eps_list[k - 1]))
            throw ConfigError("sweep.eps_list: must be strictly decreasing");
    }

    SweepReport rep;
    rep.V0 = pot.V0();
    rep.Vinf = pot.Vinf();

    auto c0_job = [&] { return solve_constant(rep.V0, grid, nl, cfg); };
    auto cinf_job = [&] { return level_constant(rep.Vinf, grid, nl, cfg); };
    try {
        GroundState ref;
        if (opts.threads >= 2 && rep.V0 != rep.Vinf) {
            auto f0 = std::async(std::launch::async, c0_job);
            auto finf = std::async(std::launch::async, cinf_job);
            ref = f0.get();
            rep.c_inf = finf.get();
        } else {
            ref = c0_job();
            rep.c_inf = (rep.V0 == rep.Vinf) ? ref.c : cinf_job();
        }
        rep.c0 = ref.c;
        rep.core_width = core_width_x(ref.u);
        rep.nodes_per_core = rep.core_width / grid->dx;
        rep.grid_adequate = rep.nodes_per_core >= 8.0;
    } catch (const SolverError& e) {
        rep.abort_reason = std::string("reference level: ") + e.what();
        return rep;
    }

    Field prev;
    bool have_prev = false;
    for (double eps : eps_list) {
        Problem P = make_problem(grid, nl, pot, eps);
        GroundState gs;
        bool solved = false;
        if (have_prev && opts.warm_start) {
            try {
                const auto [ti, tj] = potential_argmax_node(P);
                const ArgMax cur = argmax_abs(prev);
                Field warm = shift_nodes(prev, ti - cur.i, tj - cur.j);
                warm = nehari_project(P, warm).projected;
                gs = solve_from(P, cfg, warm);
                solved = gs.converged;
            } catch (const Error&) {
                solved = false;
            }
        }
        if (!solved) {
            try {
                gs = solve_ground_state(P, cfg);
                solved = gs.converged;
            } catch (const SolverError& e) {
                rep.abort_reason = "eps=" + format_g17(eps) + ": " + e.what();
                return rep;
            }
        }
        if (!solved) {
            rep.abort_reason = "eps=" + format_g17(eps) + ": solve did not converge";
            return rep;
        }

        SweepRow row;
        row.eps = eps;
        row.c_eps = gs.c;
        row.qx = gs.argmax_x;
        row.qy = gs.argmax_y;
        row.V_at_scaled_argmax = pot.value(eps * gs.argmax_x, eps * gs.argmax_y);
        row.residual = gs.residual;
        row.iters = gs.iterations;
        row.below_c_inf = gs.c < rep.c_inf;
        row.argmax_interior = std::abs(gs.argmax_x) <= 0.45 * grid->Lx &&
                              std::abs(gs.argmax_y) <= 0.45 * grid->Ly;
        rep.rows.push_back(row);

        prev = std::move(gs.u);
        have_prev = true;
        if (opts.keep_states) rep.states.push_back(prev);
    }
    rep.completed = true;
    return rep;
}

ConcentrationVerdict check_concentration(const SweepReport& r, double tol_level, double tol_V) {
    if (r.rows.size() < 3) throw Error("check_concentration: need at least 3 sweep rows");
    for (size_t k = 1; k < r.rows.size(); ++k)
        if (!(r.rows[k].eps < r.rows[k - 1].eps))
            throw Error("check_concentration: rows must be sorted by decreasing eps");

    ConcentrationVerdict v;
    const SweepRow& last = r.rows.back();
    std::ostringstream msg;

    if (!(r.V0 > r.Vinf)) {
        msg << "no concentration regime (V0 <= Vinf); ";
    }
    for (const auto& row : r.rows)
        if (!row.argmax_interior) {
            v.valid = false;
            msg << "run invalid: scaled argmax at the box boundary (eps=" << row.eps << "); ";
            break;
        }

    v.margin_level = std::abs(last.c_eps - r.c0) / r.c0;
    v.pass_level = v.margin_level <= tol_level;
    if (!v.pass_level)
        msg << "level gap |c_eps - c0|/c0 = " << v.margin_level << " > " << tol_level << "; ";

    v.margin_V = (r.V0 - last.V_at_scaled_argmax) / r.V0;
    v.pass_V = v.margin_V <= tol_V;
    if (!v.pass_V)
        msg << "potential gap (V0 - V(eps q))/V0 = " << v.margin_V << " > " << tol_V << "; ";

    v.margin_regime = (r.c_inf - last.c_eps) / r.c0;
    v.pass_regime = last.c_eps < r.c_inf;
    if (!v.pass_regime) msg << "c_eps >= c_inf at the smallest eps; ";

    v.pass = v.valid && v.pass_level && v.pass_V && v.pass_regime && r.V0 > r.Vinf;
    v.detail = msg.str();
    return v;
}

std::string sweep_csv(const SweepReport& r) {
    std::string out = "eps,c_eps,qx,qy,V_at_eps_q,residual,iters\n";
    for (const auto& row : r.rows) {
        out += format_g17(row.eps) + ',' + format_g17(row.c_eps) + ',' + format_g17(row.qx) +
               ',' + format_g17(row.qy) + ',' + format_g17(row.V_at_scaled_argmax) + ',' +
               format_g17(row.residual) + ',' + std::to_string(row.iters) + '\n';
    }
    return out;
}

} // namespace gkp
