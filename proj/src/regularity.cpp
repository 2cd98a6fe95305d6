#include "gkp/regularity.hpp"
#include "gkp/kernels.hpp"

#include <json.hpp>

#include <cmath>

namespace gkp {

Field assemble_g(const Problem& P, const Field& u) {
    Field g = nonlinear_rhs(P, u);
    scale_field(g, -1.0);
    return g;
}

Field recover_uxx(const Field& u, const Field& g) {
    require_same_grid(u.grid, g.grid, "recover_uxx");
    SpectralField G = forward(g);
    apply_table_in_place(G, build_symbol_table(*g.grid, phi2));
    return inverse(G);
}

Field recover_uy(const Field& u, const Field& g, double* max_imag) {
    require_same_grid(u.grid, g.grid, "recover_uy");
    SpectralField G = forward(g);
    const Grid& gr = *g.grid;
    for (int j = 0; j < gr.Ny; ++j) {
        for (int i = 0; i < gr.Nx; ++i) {
            auto& c = G.at(i, j);
            // ky-Nyquist row has no conjugate partner under the odd symbol;
            // drop it like any first y-derivative
            if (j == gr.Ny / 2) {
                c = 0.0;
                continue;
            }
            const double s = phi3(gr.kx[i], gr.ky[j]);
            c = std::complex<double>(s * c.imag(), -s * c.real()); // times -i*phi3
        }
    }
    return inverse(G, max_imag);
}

double lq_norm(const Field& u, double q) {
    if (!(q >= 1.0)) throw Error("lq_norm: q must be >= 1");
    double s = 0.0;
    for (double v : u.values) s += std::pow(std::abs(v), q);
    return std::pow(s * u.grid->cell_area(), 1.0 / q);
}

std::vector<DecayRing> decay_profile(const Field& u, int n_rings) {
    if (n_rings < 1) throw Error("decay_profile: need at least one ring");
    const Grid& g = *u.grid;
    const ArgMax c = argmax_abs(u);
    const double rmax = 0.5 * std::min(g.Lx, g.Ly);

    std::vector<DecayRing> rings(static_cast<size_t>(n_rings));
    for (int k = 0; k < n_rings; ++k) rings[k].radius = rmax * (k + 1) / n_rings;

    for (int j = 0; j < g.Ny; ++j) {
        double dy = std::abs(g.y[j] - c.y);
        dy = std::min(dy, g.Ly - dy);
        for (int i = 0; i < g.Nx; ++i) {
            double dx = std::abs(g.x[i] - c.x);
            dx = std::min(dx, g.Lx - dx);
            const double d = std::max(dx, dy);
            int k = static_cast<int>(std::ceil(d / rmax * n_rings)) - 1;
            if (k < 0) k = 0;
            if (k >= n_rings) k = n_rings - 1;
            const double v = std::abs(u.values[g.index(i, j)]);
            if (v > rings[k].max_abs) rings[k].max_abs = v;
        }
    }
    return rings;
}

double spectral_tail_fraction(const Field& u) {
    const Grid& g = *u.grid;
    SpectralField U = forward(u);
    const auto w = xnorm_weight_table(g);
    double total = 0.0, tail = 0.0;
    for (int j = 0; j < g.Ny; ++j) {
        const int n = (j < g.Ny / 2) ? j : j - g.Ny;
        for (int i = 0; i < g.Nx; ++i) {
            const int m = (i < g.Nx / 2) ? i : i - g.Nx;
            const double e = w[g.index(i, j)] * std::norm(U.at(i, j));
            total += e;
            if (std::abs(m) >= g.Nx / 4 || std::abs(n) >= g.Ny / 4) tail += e;
        }
    }
    return total > 0.0 ? tail / total : 0.0;
}

RegularityReport regularity_report(const Problem& P, const Field& u, double qprime_p3) {
    RegularityReport r;
    for (double q : {1.0, 2.0, 3.0, 4.0, 6.0}) r.lq_norms.emplace_back(q, lq_norm(u, q));

    if (P.nl.p == 3.0) {
        if (!(qprime_p3 > 1.0) || !(qprime_p3 < 1.5))
            throw ConfigError("regularity.qprime: must lie in (1, 3/2) for p = 3");
        r.qprime = qprime_p3;
    } else {
        r.qprime = 6.0 / (P.nl.p + 1.0);
    }

    const Field uxx = deriv_xx(u);
    const Field uy = deriv_y(u);
    const Field ux = deriv_x(u);
    r.norm_uxx_qp = lq_norm(uxx, r.qprime);
    r.norm_uy_qp = lq_norm(uy, r.qprime);
    r.norm_ux_qp = lq_norm(ux, r.qprime);

    const Field g = assemble_g(P, u);
    const Field ruxx = recover_uxx(u, g);
    const Field ruy = recover_uy(u, g, &r.recover_uy_max_imag);
    auto rel_l2 = [](const Field& a, const Field& b) {
        double num = 0.0, den = 0.0;
        for (size_t k = 0; k < a.values.size(); ++k) {
            const double d = a.values[k] - b.values[k];
            num += d * d;
            den += b.values[k] * b.values[k];
        }
        return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    };
    r.recover_uxx_relerr = rel_l2(ruxx, uxx);
    r.recover_uy_relerr = rel_l2(ruy, uy);

    r.decay = decay_profile(u, 8);
    r.spectral_tail = spectral_tail_fraction(u);
    return r;
}

std::string regularity_json(const RegularityReport& r) {
    nlohmann::ordered_json j;
    for (const auto& [q, n] : r.lq_norms)
        j["lq_norms"]["L" + std::to_string(static_cast<int>(q))] = n;
    j["qprime"] = r.qprime;
    j["deriv_norms"] = {{"uxx", r.norm_uxx_qp}, {"uy", r.norm_uy_qp}, {"ux", r.norm_ux_qp}};
    auto rings = nlohmann::ordered_json::array();
    for (const auto& ring : r.decay)
        rings.push_back({{"radius", ring.radius}, {"max_abs", ring.max_abs}});
    j["decay_rings"] = rings;
    j["spectral_tail"] = r.spectral_tail;
    j["recover"] = {{"uxx_relerr", r.recover_uxx_relerr},
                    {"uy_relerr", r.recover_uy_relerr},
                    {"uy_max_imag", r.recover_uy_max_imag}};
    return j.dump(2);
}

} // namespace gkp
