#pragma once

#include "gkp/energy.hpp"

#include <cstdint>

namespace gkp {

// Nehari residual certified on converged states.
inline constexpr double kNehariTol = 1e-8;

enum class SeedKind {
    gaussian_dx, // d/dx of a Gaussian blob: odd in x about the center
    lump,        // d/dx of x*Gaussian: even in x, lump-like with side lobes
};

struct SolverConfig {
    double gamma = 0.0;         // Petviashvili exponent; 0 selects (p+1)/p
    double tol_residual = 1e-10;
    int max_iter = 2000;
    double descent_step = 0.5;
    int seeds = 3;              // best Nehari value over this many seeds
    double seed_width = 2.0;
    SeedKind seed_kind = SeedKind::lump;
    std::uint64_t rng_seed = 42;
};

struct GroundState {
    Field u;
    double c = 0.0;               // I_eps at u
    double residual = 1.0;        // ||u - K[Vh(u)]||_X / ||u||_X
    double nehari_residual = 1.0; // |I'(u)u| / ||u||_X^2
    double argmax_x = 0.0, argmax_y = 0.0, argmax_value = 0.0;
    int iterations = 0;
    bool converged = false;
    double last_S = 0.0; // stabilizing factor at termination; -> 1 at a solution
};

// K[V h(u)]; fixed points are discrete solutions of the stationary equation.
Field fixed_point_map(const Problem& P, const Field& u);

// Analytic seed of the configured family centered at the scaled potential
// maximum, projected onto the x-derivative subspace.
Field make_seed(const Problem& P, const SolverConfig& cfg);
Field make_seed_at(const Problem& P, const SolverConfig& cfg, double cx, double cy);

// Multiplicative noise of the given relative amplitude, re-projected.
Field perturb_field(const Field& f, double amplitude, std::uint64_t rng_seed);

// Additive smooth (band-limited) noise scaled to the given fraction of
// ||f||_X; the faithful notion of a small perturbation in this space.
Field perturb_field_xnorm(const Field& f, double rel_xnorm, std::uint64_t rng_seed);

// u_{n+1} = S_n^gamma K[V h(u_n)] with S_n = (u_n,u_n)/(u_n, K[V h(u_n)]).
// Throws SolverError on zero/inadmissible seeds, nonpositive S_n, or
// residual growth over 50 consecutive steps; returns converged=false when
// max_iter runs out.
GroundState petviashvili(const Problem& P, const SolverConfig& cfg, const Field& init);

// Nehari-constrained descent: X-gradient step + projection with Armijo
// backtracking; the Nehari value never increases. Throws SolverError when
// the line search fails away from a stationary point.
GroundState refine_descent(const Problem& P, const SolverConfig& cfg, const Field& u0);

// Full pipeline for one seed: Petviashvili then descent refinement.
GroundState solve_from(const Problem& P, const SolverConfig& cfg, const Field& init);

// Best Nehari value over cfg.seeds seeds (first the analytic seed, then
// perturbed copies). Throws SolverError if no seed converges.
GroundState solve_ground_state(const Problem& P, const SolverConfig& cfg);

// Ground state for a constant potential of the given value; level_constant
// returns just its level c.
GroundState solve_constant(double V_value, const GridPtr& grid, const Nonlinearity& nl,
                           const SolverConfig& cfg);
double level_constant(double V_value, const GridPtr& grid, const Nonlinearity& nl,
                      const SolverConfig& cfg);

// Full width at half maximum of |u| along x through the argmax row
// (periodic wrap); the wave-core scale used by the grid-adequacy rule.
double core_width_x(const Field& u);

// c_eps of the problem (best over seeds).
double level(const Problem& P, const SolverConfig& cfg);

} // namespace gkp
