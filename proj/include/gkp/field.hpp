#pragma once

#include "gkp/errors.hpp"
#include "gkp/grid.hpp"

#include <complex>
#include <vector>

namespace gkp {

// Real-space samples, row-major with x the fast axis: values[j*Nx + i].
struct Field {
    GridPtr grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}
    Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid->size())
            throw Error("field: sample count does not match grid");
    }
    double& at(int i, int j) { return values[grid->index(i, j)]; }
    double at(int i, int j) const { return values[grid->index(i, j)]; }
};

// Complex Fourier coefficients in the same (ky outer, kx inner) layout.
// Conjugate symmetry coeffs(-k) == conj(coeffs(k)) holds whenever the field
// represents real data; operations that could break it take the real part
// on inversion and report the discarded imaginary magnitude.
struct SpectralField {
    GridPtr grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    explicit SpectralField(GridPtr g) : grid(std::move(g)), coeffs(grid->size(), 0.0) {}
    std::complex<double>& at(int i, int j) { return coeffs[grid->index(i, j)]; }
    std::complex<double> at(int i, int j) const { return coeffs[grid->index(i, j)]; }
};

inline void require_same_grid(const GridPtr& a, const GridPtr& b, const char* op) {
    if (a == b) return;
    if (a && b && a->compatible(*b)) return;
    throw Error(std::string(op) + ": grid mismatch");
}

} // namespace gkp
