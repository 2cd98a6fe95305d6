#include "gkp/energy.hpp"
#include "gkp/kernels.hpp"

#include <cmath>

namespace gkp {

Problem make_problem(GridPtr grid, Nonlinearity nl, Potential pot, double eps) {
    if (!(eps > 0.0)) throw ConfigError("eps: must be positive");
    Problem P{std::move(grid), nl, std::move(pot), eps, nullptr, {}, {}, {}};
    P.plan = plan_for(*P.grid);
    const Grid& g = *P.grid;
    P.Veps.resize(static_cast<size_t>(g.size()));
    for (int j = 0; j < g.Ny; ++j)
        for (int i = 0; i < g.Nx; ++i)
            P.Veps[g.index(i, j)] = P.pot.value(eps * g.x[i], eps * g.y[j]);
    P.phi1_tab = build_symbol_table(g, phi1);
    P.xw = xnorm_weight_table(g);
    return P;
}

Field nonlinear_rhs(const Problem& P, const Field& u) {
    require_same_grid(P.grid, u.grid, "nonlinear_rhs");
    Field out(u.grid);
    std::vector<double> hu(u.values.size());
    kernels::h_pow(hu.data(), u.values.data(), P.nl.p, hu.size());
    kernels::mul(out.values.data(), P.Veps.data(), hu.data(), hu.size());
    return out;
}

Field apply_K(const Problem& P, const Field& g) {
    SpectralField G = P.plan->forward(g);
    apply_table_in_place(G, P.phi1_tab);
    return P.plan->inverse(G);
}

namespace {

void require_admissible(const SpectralField& U, const char* op) {
    const double bad = zero_column_violation(U, /*include_mean=*/false);
    if (bad > kTolMean)
        throw Error(std::string(op) + ": field leaves the admissible subspace "
                    "(xi1=0 column at relative magnitude " + std::to_string(bad) + ")");
}

double potential_H_term(const Problem& P, const Field& u) {
    std::vector<double> Hu(u.values.size());
    kernels::H_pow(Hu.data(), u.values.data(), P.nl.p, Hu.size());
    return u.grid->cell_area() * kernels::dot(P.Veps.data(), Hu.data(), Hu.size());
}

} // namespace

double energy(const Problem& P, const Field& u) {
    require_same_grid(P.grid, u.grid, "energy");
    SpectralField U = P.plan->forward(u);
    require_admissible(U, "energy");
    const double n2 = x_inner_weighted(U, U, P.xw);
    return 0.5 * n2 - potential_H_term(P, u);
}

double pairing(const Problem& P, const Field& u, const Field& v) {
    require_same_grid(P.grid, u.grid, "pairing");
    require_same_grid(P.grid, v.grid, "pairing");
    SpectralField U = P.plan->forward(u);
    SpectralField V = P.plan->forward(v);
    require_admissible(U, "pairing");
    require_admissible(V, "pairing");
    const double ip = x_inner_weighted(U, V, P.xw);
    Field rhs = nonlinear_rhs(P, u);
    return ip - quadrature_dot(rhs, v);
}

Field gradient(const Problem& P, const Field& u) {
    Field K = apply_K(P, nonlinear_rhs(P, u));
    Field out = u;
    kernels::axpy(out.values.data(), -1.0, K.values.data(), out.values.size());
    return out;
}

double nonlinear_pair_term(const Problem& P, const Field& u) {
    Field rhs = nonlinear_rhs(P, u);
    return quadrature_dot(rhs, u);
}

NehariResult nehari_project(const Problem& P, const Field& u) {
    SpectralField U = P.plan->forward(u);
    require_admissible(U, "nehari_project");
    const double n2 = x_inner_weighted(U, U, P.xw);
    if (!(n2 > 0.0)) throw Error("nehari_project: u must be nonzero");
    const double denom = nonlinear_pair_term(P, u);
    if (!(denom > 0.0))
        throw Error("nehari_project: ray never crosses Nehari manifold "
                    "(integral V h(u) u = " + std::to_string(denom) + ")");
    // Power family: integral V h(tu)(tu) = t^(p+2) integral V h(u)u.
    const double t = std::pow(n2 / denom, 1.0 / P.nl.p);
    NehariResult r;
    r.t_star = t;
    r.projected = u;
    scale_field(r.projected, t);
    r.pairing_residual = std::abs(t * t * n2 - std::pow(t, P.nl.p + 2.0) * denom);
    return r;
}

double nehari_t_bisect(const Problem& P, const Field& u) {
    SpectralField U = P.plan->forward(u);
    require_admissible(U, "nehari_t_bisect");
    const double n2 = x_inner_weighted(U, U, P.xw);
    if (!(n2 > 0.0)) throw Error("nehari_t_bisect: u must be nonzero");

    // psi(t) = ||u||^2 - t^{-2} integral V h(tu)(tu); decreasing in t by (h4).
    auto nl_term = [&](double t) {
        const Grid& g = *P.grid;
        double s = 0.0;
        for (size_t i = 0; i < u.values.size(); ++i) {
            const double tu = t * u.values[i];
            s += P.Veps[i] * P.nl.h(tu) * tu;
        }
        return s * g.cell_area();
    };
    auto psi = [&](double t) { return n2 - nl_term(t) / (t * t); };

    double lo = 1e-8, hi = 1e8;
    if (!(psi(lo) > 0.0) || !(psi(hi) < 0.0))
        throw Error("nehari_t_bisect: no sign change on [1e-8, 1e8]");
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        const double mid = std::sqrt(lo * hi);
        (psi(mid) > 0.0 ? lo : hi) = mid;
    }
    // Newton polish on phi(t) = t^2 psi(t) = t^2||u||^2 - integral V h(tu)tu.
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        const double phi = t * t * n2 - nl_term(t);
        double dphi = 2.0 * t * n2;
        const Grid& g = *P.grid;
        double s = 0.0;
        for (size_t i = 0; i < u.values.size(); ++i) {
            const double ui = u.values[i];
            const double tu = t * ui;
            s += P.Veps[i] * (P.nl.h_prime(tu) * tu + P.nl.h(tu)) * ui;
        }
        dphi -= s * g.cell_area();
        if (dphi == 0.0) break;
        const double step = phi / dphi;
        t -= step;
        if (std::abs(step) < 1e-15 * t) break;
    }
    if (!(t > 0.0)) throw Error("nehari_t_bisect: polish left the positive ray");
    return t;
}

} // namespace gkp
