#pragma once

#include <memory>
#include <vector>

namespace gkp {

// Periodic computational box [-Lx/2, Lx/2) x [-Ly/2, Ly/2) sampled on a
// uniform Nx x Ny lattice, x the fast axis. Wavenumbers use the standard
// signed FFT ordering m = 0, 1, ..., N/2-1, -N/2, ..., -1 scaled by 2*pi/L,
// so kx[0] = 0 and the Nyquist mode sits at index N/2.
struct Grid {
    double Lx = 0.0, Ly = 0.0;
    int Nx = 0, Ny = 0;
    double dx = 0.0, dy = 0.0;
    std::vector<double> kx, ky; // angular wavenumber tables
    std::vector<double> x, y;   // node coordinates

    int size() const { return Nx * Ny; }
    int index(int i, int j) const { return j * Nx + i; }
    double cell_area() const { return dx * dy; }
    // Weight of one spectral bin in the trapezoid quadrature of u*v,
    // matching the unnormalized-forward DFT convention.
    double parseval_weight() const {
        return Lx * Ly / (double(Nx) * Ny * Nx * Ny);
    }
    bool compatible(const Grid& o) const {
        return Nx == o.Nx && Ny == o.Ny && Lx == o.Lx && Ly == o.Ly;
    }
};

using GridPtr = std::shared_ptr<const Grid>;

// Throws ConfigError on odd or < 4 sample counts and non-positive lengths.
GridPtr make_grid(double Lx, double Ly, int Nx, int Ny);

} // namespace gkp
