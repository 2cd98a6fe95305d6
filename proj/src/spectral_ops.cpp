#include "gkp/spectral_ops.hpp"
#include "gkp/kernels.hpp"

#include <cmath>

namespace gkp {

double zero_column_violation(const SpectralField& F, bool include_mean) {
    const Grid& g = *F.grid;
    double col = 0.0;
    for (int j = include_mean ? 0 : 1; j < g.Ny; ++j)
        col = std::max(col, std::abs(F.at(0, j)));
    double all = 0.0;
    for (const auto& c : F.coeffs) all = std::max(all, std::abs(c));
    if (all == 0.0) return 0.0;
    return col / all;
}

namespace {

// c *= i*k with the Nyquist bin dropped.
void mul_ik_axis_x(SpectralField& F) {
    const Grid& g = *F.grid;
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            auto& c = F.at(i, j);
            if (i == g.Nx / 2) {
                c = 0.0;
                continue;
            }
            const double k = g.kx[i];
            c = std::complex<double>(-k * c.imag(), k * c.real());
        }
    }
}

void mul_ik_axis_y(SpectralField& F) {
    const Grid& g = *F.grid;
    for (int j = 0; j < g.Ny; ++j) {
        const double k = g.ky[j];
        for (int i = 0; i < g.Nx; ++i) {
            auto& c = F.at(i, j);
            if (j == g.Ny / 2) {
                c = 0.0;
                continue;
            }
            c = std::complex<double>(-k * c.imag(), k * c.real());
        }
    }
}

} // namespace

Field deriv_x(const Field& f) {
    SpectralField F = forward(f);
    mul_ik_axis_x(F);
    return inverse(F);
}

Field deriv_y(const Field& f) {
    SpectralField F = forward(f);
    mul_ik_axis_y(F);
    return inverse(F);
}

Field deriv_xx(const Field& f) {
    SpectralField F = forward(f);
    const Grid& g = *f.grid;
    for (int j = 0; j < g.Ny; ++j)
        for (int i = 0; i < g.Nx; ++i)
            F.at(i, j) *= -g.kx[i] * g.kx[i];
    return inverse(F);
}

Field x_antiderivative(const Field& f, double tol_mean) {
    SpectralField F = forward(f);
    const double bad = zero_column_violation(F, /*include_mean=*/true);
    if (bad > tol_mean)
        throw Error("x_antiderivative: input is not an x-derivative "
                    "(xi1=0 column at relative magnitude " + std::to_string(bad) + ")");
    const Grid& g = *f.grid;
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            auto& c = F.at(i, j);
            if (i == 0 || i == g.Nx / 2) {
                c = 0.0;
                continue;
            }
            const double k = g.kx[i];
            // divide by i*k == multiply by -i/k
            c = std::complex<double>(c.imag() / k, -c.real() / k);
        }
    }
    return inverse(F);
}

std::vector<double> xnorm_weight_table(const Grid& g) {
    std::vector<double> w(static_cast<size_t>(g.size()));
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            const double k1 = g.kx[i], k2 = g.ky[j];
            w[g.index(i, j)] = (i == 0) ? 1.0 : 1.0 + k1 * k1 + (k2 * k2) / (k1 * k1);
        }
    }
    return w;
}

namespace {

void require_uy_admissible(const SpectralField& F, const char* op) {
    const double bad = zero_column_violation(F, /*include_mean=*/false);
    if (bad > kTolMean)
        throw Error(std::string(op) + ": field leaves the admissible subspace "
                    "(xi1=0 column at relative magnitude " + std::to_string(bad) + ")");
}

} // namespace

double x_inner_weighted(const SpectralField& U, const SpectralField& V,
                        const std::vector<double>& w) {
    require_same_grid(U.grid, V.grid, "x_inner");
    return U.grid->parseval_weight() *
           kernels::cdot_weighted(U.coeffs.data(), V.coeffs.data(), w.data(), U.coeffs.size());
}

double x_inner(const SpectralField& U, const SpectralField& V) {
    require_uy_admissible(U, "x_inner");
    require_uy_admissible(V, "x_inner");
    return x_inner_weighted(U, V, xnorm_weight_table(*U.grid));
}

double x_norm(const SpectralField& U) {
    require_uy_admissible(U, "x_norm");
    const double q = x_inner_weighted(U, U, xnorm_weight_table(*U.grid));
    return std::sqrt(std::max(q, 0.0));
}

double x_inner(const Field& u, const Field& v) {
    require_same_grid(u.grid, v.grid, "x_inner");
    return x_inner(forward(u), forward(v));
}

double x_norm(const Field& u) { return x_norm(forward(u)); }

double quadrature(const Field& f) {
    return f.grid->cell_area() * kernels::sum(f.values.data(), f.values.size());
}

double quadrature_dot(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid, "quadrature_dot");
    return f.grid->cell_area() * kernels::dot(f.values.data(), g.values.data(), f.values.size());
}

Field project_x_derivative(const Field& f) {
    SpectralField F = forward(f);
    const Grid& g = *f.grid;
    for (int j = 0; j < g.Ny; ++j) F.at(0, j) = 0.0;
    return inverse(F);
}

Field shift_nodes(const Field& f, int si, int sj) {
    const Grid& g = *f.grid;
    Field out(f.grid);
    const int nx = g.Nx, ny = g.Ny;
    auto wrap = [](int v, int n) { return ((v % n) + n) % n; };
    for (int j = 0; j < ny; ++j) {
        const int js = wrap(j - sj, ny);
        for (int i = 0; i < nx; ++i)
            out.values[g.index(i, j)] = f.values[g.index(wrap(i - si, nx), js)];
    }
    return out;
}

ArgMax argmax_abs(const Field& f) {
    const Grid& g = *f.grid;
    ArgMax best;
    double bm = -1.0;
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            const double v = std::abs(f.values[g.index(i, j)]);
            if (v > bm) {
                bm = v;
                best.i = i;
                best.j = j;
            }
        }
    }
    best.x = g.x[best.i];
    best.y = g.y[best.j];
    best.value = f.values[g.index(best.i, best.j)];
    return best;
}

void scale_field(Field& f, double a) { kernels::scale(f.values.data(), a, f.values.size()); }

void axpy_field(Field& y, double a, const Field& x) {
    require_same_grid(y.grid, x.grid, "axpy");
    kernels::axpy(y.values.data(), a, x.values.data(), y.values.size());
}

Field subtract(const Field& a, const Field& b) {
    require_same_grid(a.grid, b.grid, "subtract");
    Field out = a;
    kernels::axpy(out.values.data(), -1.0, b.values.data(), out.values.size());
    return out;
}

double max_abs_field(const Field& f) {
    return kernels::max_abs(f.values.data(), f.values.size());
}

} // namespace gkp
