#include "gkp/groundstate.hpp"
#include "gkp/regularity.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>

using namespace gkp;

namespace {

// one converged state shared across the cases
const Problem& solved_problem() {
    static Problem P = make_problem(make_grid(30.0, 30.0, 64, 64), Nonlinearity(1.0),
                                    Potential::constant(1.0), 1.0);
    return P;
}

const GroundState& solved_state() {
    static GroundState gs = [] {
        SolverConfig cfg;
        cfg.seeds = 1;
        return solve_from(solved_problem(), cfg, make_seed(solved_problem(), cfg));
    }();
    return gs;
}

} // namespace

TEST_CASE("multiplier recovery of u_xx and u_y at a solved state") {
    const Problem& P = solved_problem();
    const GroundState& gs = solved_state();
    REQUIRE(gs.converged);

    Field zero(P.grid);
    CHECK(max_abs_field(recover_uxx(zero, zero)) == 0.0);

    Field g = assemble_g(P, gs.u);
    Field uxx_direct = deriv_xx(gs.u);
    Field uxx_rec = recover_uxx(gs.u, g);
    double num = 0.0, den = 0.0;
    for (size_t k = 0; k < uxx_direct.values.size(); ++k) {
        const double d = uxx_rec.values[k] - uxx_direct.values[k];
        num += d * d;
        den += uxx_direct.values[k] * uxx_direct.values[k];
    }
    CHECK(std::sqrt(num / den) < 1e-6);

    double max_imag = 1.0;
    Field uy_direct = deriv_y(gs.u);
    Field uy_rec = recover_uy(gs.u, g, &max_imag);
    num = den = 0.0;
    for (size_t k = 0; k < uy_direct.values.size(); ++k) {
        const double d = uy_rec.values[k] - uy_direct.values[k];
        num += d * d;
        den += uy_direct.values[k] * uy_direct.values[k];
    }
    CHECK(std::sqrt(num / den) < 1e-6);
    CHECK(max_imag < 1e-10 * max_abs_field(gs.u));
}

TEST_CASE("lq_norm basics") {
    auto g = make_grid(10.0, 10.0, 16, 16);
    Field zero(g);
    CHECK(lq_norm(zero, 2.0) == 0.0);
    CHECK_THROWS_AS(lq_norm(zero, 0.5), Error);

    Field spike(g);
    spike.at(3, 7) = 1.0;
    for (double q : {1.0, 2.0, 3.0, 6.0})
        CHECK(lq_norm(spike, q) ==
              doctest::Approx(std::pow(g->cell_area(), 1.0 / q)).epsilon(1e-12));

    // embedding direction on the solved state: L2 norm below the X norm
    const GroundState& gs = solved_state();
    CHECK(lq_norm(gs.u, 2.0) <= x_norm(gs.u));
}

TEST_CASE("decay_profile rings") {
    auto g = make_grid(20.0, 20.0, 64, 64);
    Field bump(g);
    for (int j = 0; j < g->Ny; ++j)
        for (int i = 0; i < g->Nx; ++i) {
            const double r2 = g->x[i] * g->x[i] + g->y[j] * g->y[j];
            bump.at(i, j) = r2 < 4.0 ? (4.0 - r2) : 0.0; // compact support
        }
    auto rings = decay_profile(bump, 8);
    REQUIRE(rings.size() == 8);
    for (size_t k = 1; k < rings.size(); ++k) CHECK(rings[k].radius > rings[k - 1].radius);
    CHECK(rings.back().radius == doctest::Approx(10.0));
    // outer rings are exactly zero for compact support
    for (size_t k = 2; k < rings.size(); ++k) CHECK(rings[k].max_abs == 0.0);

    // solved state: monotone tail beyond the core with 10% slack
    const GroundState& gs = solved_state();
    auto solved_rings = decay_profile(gs.u, 8);
    for (size_t k = 3; k < solved_rings.size(); ++k)
        CHECK(solved_rings[k].max_abs <= 1.1 * solved_rings[k - 1].max_abs);
}

TEST_CASE("spectral tail separates smooth fields from noise") {
    auto g = make_grid(10.0, 10.0, 32, 32);
    Field smooth(g);
    for (int j = 0; j < g->Ny; ++j)
        for (int i = 0; i < g->Nx; ++i)
            smooth.at(i, j) = std::cos(2.0 * std::numbers::pi * g->x[i] / g->Lx);
    CHECK(spectral_tail_fraction(smooth) < 1e-20);

    Field noise = oracle::random_field(g, 77);
    CHECK(spectral_tail_fraction(noise) > 0.1);
}

TEST_CASE("regularity report exponents and serialization") {
    const Problem& P = solved_problem();
    const GroundState& gs = solved_state();
    RegularityReport r = regularity_report(P, gs.u);
    CHECK(r.qprime == doctest::Approx(3.0)); // 6/(p+1) at p = 1
    CHECK(r.lq_norms.size() == 5);
    for (const auto& [q, n] : r.lq_norms) {
        CHECK(n > 0.0);
        CHECK(std::isfinite(n));
    }
    CHECK(r.norm_uxx_qp > 0.0);
    CHECK(r.norm_uy_qp > 0.0);
    CHECK(r.norm_ux_qp > 0.0);
    CHECK(r.recover_uxx_relerr < 1e-6);
    CHECK(r.recover_uy_relerr < 1e-6);

    auto parsed = nlohmann::json::parse(regularity_json(r));
    CHECK(parsed.contains("lq_norms"));
    CHECK(parsed["lq_norms"].contains("L6"));
    CHECK(parsed["decay_rings"].size() == 8);
    CHECK(parsed["deriv_norms"].contains("uxx"));

    // p = 3 takes the user exponent, constrained to (1, 3/2)
    Problem P3 = make_problem(P.grid, Nonlinearity(3.0), Potential::constant(1.0), 1.0);
    RegularityReport r3 = regularity_report(P3, gs.u, 1.4);
    CHECK(r3.qprime == doctest::Approx(1.4));
    CHECK_THROWS_AS(regularity_report(P3, gs.u, 1.6), ConfigError);

    // p = 2 ignores the p=3 override
    Problem P2 = make_problem(P.grid, Nonlinearity(2.0), Potential::constant(1.0), 1.0);
    CHECK(regularity_report(P2, gs.u, 1.4).qprime == doctest::Approx(2.0));
}
