#pragma once

#include "gkp/fft.hpp"
#include "gkp/model.hpp"
#include "gkp/spectral_ops.hpp"

namespace gkp {

// One variational problem instance: grid + model + scaling eps, with the
// scaled potential samples and the multiplier/weight tables cached.
struct Problem {
    GridPtr grid;
    Nonlinearity nl;
    Potential pot;
    double eps = 1.0;

    PlanPtr plan;
    std::vector<double> Veps;     // V(eps*x, eps*y) at grid nodes
    std::vector<double> phi1_tab; // phi1 on the wavenumber lattice
    std::vector<double> xw;       // X-norm weights
};

Problem make_problem(GridPtr grid, Nonlinearity nl, Potential pot, double eps);

// V(eps x) h(u) sampled on the grid.
Field nonlinear_rhs(const Problem& P, const Field& u);

// K[g] = inverse(phi1 * forward(g)); the Riesz map of the right-hand side,
// i.e. (K[g], v)_X = integral g v for v in the x-derivative subspace.
Field apply_K(const Problem& P, const Field& g);

// I_eps(u) = 0.5 ||u||_X^2 - integral V(eps x) H(u)
double energy(const Problem& P, const Field& u);

// I'_eps(u)v = (u, v)_X - integral V(eps x) h(u) v
double pairing(const Problem& P, const Field& u, const Field& v);

// X-Riesz representative of I'_eps(u): u - K[V h(u)].
Field gradient(const Problem& P, const Field& u);

// integral V(eps x) h(u) u  (== (p+2) * integral V H(u) for the power family)
double nonlinear_pair_term(const Problem& P, const Field& u);

struct NehariResult {
    double t_star = 0.0;
    Field projected;
    double pairing_residual = 0.0; // |I'(t*u)(t*u)|
};

// Scale factor t* > 0 with I'(t*u)(t*u) = 0. Closed form for the power
// family; throws when the ray never crosses the manifold.
NehariResult nehari_project(const Problem& P, const Field& u);

// Independent scalar route: bracketing + bisection + Newton polish using
// only h evaluations. Agrees with the closed form for the power family.
double nehari_t_bisect(const Problem& P, const Field& u);

} // namespace gkp
