#pragma once

// Independent oracles for the spectral machinery: plain O(N^2 * N^2) DFT
// sums and a Kahan-compensated quadrature loop. Deliberately kept free of
// the library's transform and kernel paths.

#include "gkp/field.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace oracle {

inline gkp::SpectralField dft_forward(const gkp::Field& f) {
    const gkp::Grid& g = *f.grid;
    gkp::SpectralField F(f.grid);
    const double tx = 2.0 * std::numbers::pi / g.Nx;
    const double ty = 2.0 * std::numbers::pi / g.Ny;
    for (int q = 0; q < g.Ny; ++q) {
        for (int p = 0; p < g.Nx; ++p) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i) {
                    const double phase = tx * p * i + ty * q * j;
                    acc += f.values[g.index(i, j)] *
                           std::complex<double>(std::cos(phase), -std::sin(phase));
                }
            F.at(p, q) = acc;
        }
    }
    return F;
}

inline gkp::Field dft_inverse(const gkp::SpectralField& F) {
    const gkp::Grid& g = *F.grid;
    gkp::Field f(F.grid);
    const double tx = 2.0 * std::numbers::pi / g.Nx;
    const double ty = 2.0 * std::numbers::pi / g.Ny;
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            std::complex<double> acc = 0.0;
            for (int q = 0; q < g.Ny; ++q)
                for (int p = 0; p < g.Nx; ++p) {
                    const double phase = tx * p * i + ty * q * j;
                    acc += F.at(p, q) * std::complex<double>(std::cos(phase), std::sin(phase));
                }
            f.values[g.index(i, j)] = acc.real() / (double(g.Nx) * g.Ny);
        }
    }
    return f;
}

// trapezoid quadrature with compensated summation
inline double quad(const gkp::Field& f) {
    double s = 0.0, c = 0.0;
    for (double v : f.values) {
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s * f.grid->cell_area();
}

inline double quad_product(const gkp::Field& a, const gkp::Field& b) {
    double s = 0.0, c = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) {
        const double y = a.values[k] * b.values[k] - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s * a.grid->cell_area();
}

inline gkp::Field random_field(const gkp::GridPtr& g, std::uint64_t seed, double amp = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-amp, amp);
    gkp::Field f(g);
    for (auto& v : f.values) v = dist(rng);
    return f;
}

} // namespace oracle
