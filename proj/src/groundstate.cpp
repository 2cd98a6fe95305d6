#include "gkp/groundstate.hpp"
#include "gkp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace gkp {

Field fixed_point_map(const Problem& P, const Field& u) {
    return apply_K(P, nonlinear_rhs(P, u));
}

Field make_seed_at(const Problem& P, const SolverConfig& cfg, double cx, double cy) {
    const Grid& g = *P.grid;
    Field f(P.grid);
    const double w2 = cfg.seed_width * cfg.seed_width;
    for (int j = 0; j < g.Ny; ++j) {
        const double dy = g.y[j] - cy;
        for (int i = 0; i < g.Nx; ++i) {
            const double dx = g.x[i] - cx;
            const double e = std::exp(-(dx * dx + dy * dy) / w2);
            f.values[g.index(i, j)] = (cfg.seed_kind == SeedKind::gaussian_dx)
                                          ? -2.0 * dx / w2 * e          // d/dx exp(-r^2/w^2)
                                          : (1.0 - 2.0 * dx * dx / w2) * e; // d/dx [x exp(-r^2/w^2)]
        }
    }
    return project_x_derivative(f);
}

Field make_seed(const Problem& P, const SolverConfig& cfg) {
    const auto vmax = P.pot.argmax();
    return make_seed_at(P, cfg, vmax[0] / P.eps, vmax[1] / P.eps);
}

Field perturb_field(const Field& f, double amplitude, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> noise(-amplitude, amplitude);
    Field out = f;
    for (auto& v : out.values) v *= 1.0 + noise(rng);
    return project_x_derivative(out);
}

Field perturb_field_xnorm(const Field& f, double rel_xnorm, std::uint64_t rng_seed) {
    const Grid& g = *f.grid;
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    Field raw(f.grid);
    for (auto& v : raw.values) v = amp(rng);
    SpectralField N = forward(raw);
    for (int j = 0; j < g.Ny; ++j) {
        const int n = (j < g.Ny / 2) ? j : j - g.Ny;
        for (int i = 0; i < g.Nx; ++i) {
            const int m = (i < g.Nx / 2) ? i : i - g.Nx;
            if (i == 0 || std::abs(m) > g.Nx / 8 || std::abs(n) > g.Ny / 8) N.at(i, j) = 0.0;
        }
    }
    Field noise = inverse(N);
    const double nn = x_norm(noise);
    if (nn == 0.0) return f;
    Field out = f;
    axpy_field(out, rel_xnorm * x_norm(f) / nn, noise);
    return out;
}

namespace {

// Residual, Nehari defect, energy and argmax of the current iterate.
GroundState finalize_state(const Problem& P, const SolverConfig& cfg, Field u, int iterations) {
    GroundState gs;
    SpectralField U = P.plan->forward(u);
    const double n2 = x_inner_weighted(U, U, P.xw);
    if (!(n2 > 0.0)) throw SolverError("solver: zero state");

    Field K = fixed_point_map(P, u);
    SpectralField KU = P.plan->forward(K);
    const double uk = x_inner_weighted(U, KU, P.xw);
    kernels::axpy(reinterpret_cast<double*>(KU.coeffs.data()), -1.0,
                  reinterpret_cast<const double*>(U.coeffs.data()), 2 * KU.coeffs.size());
    const double d2 = x_inner_weighted(KU, KU, P.xw);
    gs.residual = std::sqrt(std::max(d2, 0.0) / n2);
    gs.last_S = n2 / uk;

    gs.nehari_residual = std::abs(n2 - nonlinear_pair_term(P, u)) / n2;
    gs.c = energy(P, u);
    const ArgMax am = argmax_abs(u);
    gs.argmax_x = am.x;
    gs.argmax_y = am.y;
    gs.argmax_value = am.value;
    gs.iterations = iterations;
    gs.converged =
        gs.residual <= cfg.tol_residual && gs.nehari_residual <= kNehariTol && gs.c > 0.0;
    gs.u = std::move(u);
    return gs;
}

} // namespace

GroundState petviashvili(const Problem& P, const SolverConfig& cfg, const Field& init) {
    require_same_grid(P.grid, init.grid, "petviashvili");
    const double gamma = cfg.gamma > 0.0 ? cfg.gamma : (P.nl.p + 1.0) / P.nl.p;

    Field u = init;
    SpectralField U = P.plan->forward(u);
    if (zero_column_violation(U, false) > kTolMean)
        throw SolverError("petviashvili: seed leaves the admissible subspace");
    double n2 = x_inner_weighted(U, U, P.xw);
    if (!(n2 > 0.0)) throw SolverError("petviashvili: bad seed (zero field)");
    if (!(nonlinear_pair_term(P, u) > 0.0))
        throw SolverError("petviashvili: bad seed (integral V h(u)u must be positive)");

    double prev_res = std::numeric_limits<double>::infinity();
    int growth_streak = 0;

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        SpectralField KU = P.plan->forward(nonlinear_rhs(P, u));
        apply_table_in_place(KU, P.phi1_tab);

        const double uk = x_inner_weighted(U, KU, P.xw);
        const double S = n2 / uk;
        if (!(S > 0.0) || !std::isfinite(S))
            throw SolverError("petviashvili: stabilizing factor nonpositive (bad seed)");

        // fixed-point residual of the current iterate
        SpectralField D = KU;
        kernels::axpy(reinterpret_cast<double*>(D.coeffs.data()), -1.0,
                      reinterpret_cast<const double*>(U.coeffs.data()), 2 * D.coeffs.size());
        const double res = std::sqrt(std::max(x_inner_weighted(D, D, P.xw), 0.0) / n2);

        if (res <= cfg.tol_residual) {
            GroundState gs = finalize_state(P, cfg, std::move(u), iter);
            gs.last_S = S;
            return gs;
        }
        if (res > prev_res) {
            if (++growth_streak >= 50)
                throw SolverError(
                    "petviashvili: diverged (residual grew over 50 consecutive steps)");
        } else {
            growth_streak = 0;
        }
        prev_res = res;

        const double factor = std::pow(S, gamma);
        U = std::move(KU);
        kernels::scale(reinterpret_cast<double*>(U.coeffs.data()), factor, 2 * U.coeffs.size());
        u = P.plan->inverse(U);
        n2 = x_inner_weighted(U, U, P.xw);
    }
    return finalize_state(P, cfg, std::move(u), cfg.max_iter);
}

namespace {

double fp_residual(const Problem& P, const Field& u) {
    SpectralField U = P.plan->forward(u);
    const double n2 = x_inner_weighted(U, U, P.xw);
    SpectralField KU = P.plan->forward(fixed_point_map(P, u));
    kernels::axpy(reinterpret_cast<double*>(KU.coeffs.data()), -1.0,
                  reinterpret_cast<const double*>(U.coeffs.data()), 2 * KU.coeffs.size());
    return std::sqrt(std::max(x_inner_weighted(KU, KU, P.xw), 0.0) / n2);
}

} // namespace

GroundState refine_descent(const Problem& P, const SolverConfig& cfg, const Field& u0) {
    Field u = nehari_project(P, u0).projected;
    double I = energy(P, u);
    double step = cfg.descent_step;
    int iters = 0;

    // Armijo-safeguarded descent with Barzilai-Borwein step lengths (plain
    // steps crawl along the near-zero translation modes of the wave). Once
    // energy decreases fall below the rounding floor of I the merit switches
    // to the fixed-point residual: trial steps stay projected onto the
    // manifold, so the Nehari value holds to round-off while the residual
    // contracts (step 1 is the projected Picard map).
    Field u_prev, g_prev;
    bool have_prev = false;
    bool energy_phase = true;
    int stagnant = 0;

    for (; iters < cfg.max_iter; ++iters) {
        Field g = gradient(P, u);
        SpectralField G = P.plan->forward(g);
        SpectralField U = P.plan->forward(u);
        const double gn2 = x_inner_weighted(G, G, P.xw);
        const double un2 = x_inner_weighted(U, U, P.xw);
        const double res = std::sqrt(gn2 / un2);
        if (res <= cfg.tol_residual) break;

        double s = step;
        if (energy_phase && have_prev) {
            SpectralField DU = P.plan->forward(subtract(u, u_prev));
            SpectralField DG = P.plan->forward(subtract(g, g_prev));
            const double num = x_inner_weighted(DU, DU, P.xw);
            const double den = x_inner_weighted(DU, DG, P.xw);
            if (den > 0.0 && std::isfinite(num / den))
                s = std::clamp(num / den, 1e-8, 1e8);
        }

        bool accepted = false;
        if (energy_phase) {
            for (int halvings = 0; halvings <= 30; ++halvings) {
                Field trial = u;
                axpy_field(trial, -s, g);
                double In;
                Field projected;
                try {
                    projected = nehari_project(P, trial).projected;
                    In = energy(P, projected);
                } catch (const Error&) {
                    s *= 0.5; // stepped past the manifold; shorten
                    continue;
                }
                if (In <= I - 1e-4 * s * gn2) {
                    u_prev = std::move(u);
                    g_prev = std::move(g);
                    have_prev = true;
                    u = std::move(projected);
                    I = In;
                    step = s;
                    accepted = true;
                    break;
                }
                s *= 0.5;
            }
            if (!accepted) {
                if (1e-4 * s * gn2 > 1e-15 * std::max(std::abs(I), 1.0))
                    throw SolverError("refine_descent: line search failed after 30 halvings");
                energy_phase = false; // decreases no longer certifiable in I
            }
        }
        if (!energy_phase && !accepted) {
            double sr = 1.0;
            if (have_prev) {
                SpectralField DU = P.plan->forward(subtract(u, u_prev));
                SpectralField DG = P.plan->forward(subtract(g, g_prev));
                const double num = x_inner_weighted(DU, DU, P.xw);
                const double den = x_inner_weighted(DU, DG, P.xw);
                if (den > 0.0 && std::isfinite(num / den))
                    sr = std::max(1.0, std::clamp(num / den, 1e-8, 1e8));
            }
            for (int halvings = 0; halvings <= 40; ++halvings) {
                Field trial = u;
                axpy_field(trial, -sr, g);
                try {
                    Field projected = nehari_project(P, trial).projected;
                    const double rt = fp_residual(P, projected);
                    if (rt < res) {
                        stagnant = (rt > 0.999 * res) ? stagnant + 1 : 0;
                        u_prev = std::move(u);
                        g_prev = g;
                        have_prev = true;
                        u = std::move(projected);
                        accepted = true;
                        break;
                    }
                } catch (const Error&) {
                }
                sr *= 0.5;
            }
            if (!accepted || stagnant >= 25) break; // residual floor reached
        }
    }
    return finalize_state(P, cfg, std::move(u), iters);
}

GroundState solve_from(const Problem& P, const SolverConfig& cfg, const Field& init) {
    GroundState first = petviashvili(P, cfg, init);
    GroundState refined = refine_descent(P, cfg, first.u);
    refined.iterations += first.iterations;
    return refined;
}

GroundState solve_ground_state(const Problem& P, const SolverConfig& cfg) {
    GroundState best;
    bool have = false;
    std::string last_error = "no seeds attempted";
    const int n_seeds = std::max(1, cfg.seeds);
    const Field base = make_seed(P, cfg);
    for (int k = 0; k < n_seeds; ++k) {
        Field init = (k == 0) ? base : perturb_field(base, 0.1, cfg.rng_seed + k);
        try {
            GroundState gs = solve_from(P, cfg, init);
            if (gs.converged && (!have || gs.c < best.c)) {
                best = std::move(gs);
                have = true;
            } else if (!gs.converged) {
                last_error = "seed " + std::to_string(k) + " did not converge";
            }
        } catch (const Error& e) {
            // a failed seed only disqualifies itself
            last_error = e.what();
        }
    }
    if (!have) throw SolverError("solve_ground_state: no seed converged (" + last_error + ")");
    return best;
}

double level(const Problem& P, const SolverConfig& cfg) {
    return solve_ground_state(P, cfg).c;
}

GroundState solve_constant(double V_value, const GridPtr& grid, const Nonlinearity& nl,
                           const SolverConfig& cfg) {
    if (!(V_value > 0.0)) throw ConfigError("solve_constant: potential value must be positive");
    Problem P = make_problem(grid, nl, Potential::constant(V_value), 1.0);
    return solve_ground_state(P, cfg);
}

double level_constant(double V_value, const GridPtr& grid, const Nonlinearity& nl,
                      const SolverConfig& cfg) {
    return solve_constant(V_value, grid, nl, cfg).c;
}

double core_width_x(const Field& u) {
    const Grid& g = *u.grid;
    const ArgMax am = argmax_abs(u);
    const double half = std::abs(am.value) / 2.0;
    auto above = [&](int off) {
        const int i = ((am.i + off) % g.Nx + g.Nx) % g.Nx;
        return std::abs(u.values[g.index(i, am.j)]) >= half;
    };
    int count = 1;
    for (int off = 1; off < g.Nx && above(off); ++off) ++count;
    for (int off = -1; off > -g.Nx && above(off); --off) ++count;
    return std::min(count, g.Nx) * g.dx;
}

} // namespace gkp
