#pragma once

#include "gkp/fft.hpp"
#include "gkp/symbols.hpp"

namespace gkp {

// Relative admissibility tolerance for the xi1 = 0 column; a field is
// treated as an x-derivative when its column coefficients are below this
// fraction of the largest coefficient.
inline constexpr double kTolMean = 1e-10;

// max(|F(0,ky)|) over the column, relative to max|F|; include_mean controls
// whether the (0,0) coefficient participates. Zero field reports 0.
double zero_column_violation(const SpectralField& F, bool include_mean);

// Spectral derivatives. Odd derivatives zero the Nyquist mode so results
// stay real; the even second derivative keeps it.
Field deriv_x(const Field& f);
Field deriv_y(const Field& f);
Field deriv_xx(const Field& f);

// D_x^-1: coefficient division by i*xi1, the xi1 = 0 column (and Nyquist)
// set to zero. Rejects inputs whose column magnitudes exceed tol_mean
// relative — such inputs are not x-derivatives of anything on the grid.
Field x_antiderivative(const Field& f, double tol_mean = kTolMean);

// Weight (|xi|^2 + xi1^4)/xi1^2 = 1 + xi1^2 + xi2^2/xi1^2 of the X-inner
// product per spectral bin; the xi1 = 0 column carries weight 1 (the u*v
// term only).
std::vector<double> xnorm_weight_table(const Grid& g);

// (u,v)_X computed spectrally; both arguments must satisfy the u_y
// admissibility condition (zero column away from the mean).
double x_inner(const Field& u, const Field& v);
double x_norm(const Field& u);
double x_inner(const SpectralField& U, const SpectralField& V);
double x_norm(const SpectralField& U);
// Hot-path variant with the caller's precomputed weight table.
double x_inner_weighted(const SpectralField& U, const SpectralField& V,
                        const std::vector<double>& w);

// Trapezoid quadrature on the periodic box (spectrally accurate for smooth
// periodic integrands).
double quadrature(const Field& f);
double quadrature_dot(const Field& f, const Field& g);

// Projection onto the discrete x-derivative subspace: zeroes the whole
// xi1 = 0 column. Seeds and test fields go through this once.
Field project_x_derivative(const Field& f);

// Circular node shift by (si, sj); exact on the periodic lattice.
Field shift_nodes(const Field& f, int si, int sj);

// Node maximizing |f|; ties resolved to the lexicographically smallest
// (y-index, x-index). value is the signed sample there.
struct ArgMax {
    int i = 0, j = 0;
    double x = 0.0, y = 0.0;
    double value = 0.0;
};
ArgMax argmax_abs(const Field& f);

// In-place field algebra (kernel-dispatched).
void scale_field(Field& f, double a);
void axpy_field(Field& y, double a, const Field& x);
Field subtract(const Field& a, const Field& b);
double max_abs_field(const Field& f);

} // namespace gkp
