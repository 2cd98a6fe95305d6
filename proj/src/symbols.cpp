#include "gkp/symbols.hpp"
#include "gkp/kernels.hpp"

namespace gkp {

double phi1(double xi1, double xi2) {
    if (xi1 == 0.0) return 0.0;
    const double a = xi1 * xi1;
    return a / (a + xi2 * xi2 + a * a);
}

double phi2(double xi1, double xi2) {
    if (xi1 == 0.0) return 0.0;
    const double a = xi1 * xi1;
    return a * a / (a + xi2 * xi2 + a * a);
}

double phi3(double xi1, double xi2) {
    if (xi1 == 0.0) return 0.0;
    const double a = xi1 * xi1;
    return a * xi2 / (a + xi2 * xi2 + a * a);
}

std::vector<double> build_symbol_table(const Grid& g, const Symbol& s) {
    std::vector<double> t(static_cast<size_t>(g.size()));
    for (int j = 0; j < g.Ny; ++j)
        for (int i = 0; i < g.Nx; ++i)
            t[g.index(i, j)] = s(g.kx[i], g.ky[j]);
    return t;
}

SpectralField apply_symbol(const SpectralField& F, const Symbol& s) {
    return apply_table(F, build_symbol_table(*F.grid, s));
}

SpectralField apply_table(const SpectralField& F, const std::vector<double>& table) {
    SpectralField out = F;
    apply_table_in_place(out, table);
    return out;
}

void apply_table_in_place(SpectralField& F, const std::vector<double>& table) {
    if (table.size() != F.coeffs.size()) throw Error("apply_table: table size mismatch");
    kernels::cmul_table(F.coeffs.data(), table.data(), F.coeffs.size());
}

} // namespace gkp
