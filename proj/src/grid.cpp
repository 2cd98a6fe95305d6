#include "gkp/grid.hpp"
#include "gkp/errors.hpp"

#include <cmath>
#include <numbers>

namespace gkp {

GridPtr make_grid(double Lx, double Ly, int Nx, int Ny) {
    if (!(Lx > 0.0) || !(Ly > 0.0))
        throw ConfigError("grid: box lengths must be positive (got Lx=" +
                          std::to_string(Lx) + ", Ly=" + std::to_string(Ly) + ")");
    if (Nx < 4 || Ny < 4)
        throw ConfigError("grid: sample counts must be >= 4 (got Nx=" +
                          std::to_string(Nx) + ", Ny=" + std::to_string(Ny) + ")");
    if (Nx % 2 != 0)
        throw ConfigError("grid: Nx must be even (got " + std::to_string(Nx) + ")");
    if (Ny % 2 != 0)
        throw ConfigError("grid: Ny must be even (got " + std::to_string(Ny) + ")");

    auto g = std::make_shared<Grid>();
    g->Lx = Lx;
    g->Ly = Ly;
    g->Nx = Nx;
    g->Ny = Ny;
    g->dx = Lx / Nx;
    g->dy = Ly / Ny;

    const double two_pi = 2.0 * std::numbers::pi;
    g->kx.resize(Nx);
    for (int i = 0; i < Nx; ++i) {
        int m = (i < Nx / 2) ? i : i - Nx;
        g->kx[i] = two_pi * m / Lx;
    }
    g->ky.resize(Ny);
    for (int j = 0; j < Ny; ++j) {
        int m = (j < Ny / 2) ? j : j - Ny;
        g->ky[j] = two_pi * m / Ly;
    }

    g->x.resize(Nx);
    for (int i = 0; i < Nx; ++i) g->x[i] = -0.5 * Lx + i * g->dx;
    g->y.resize(Ny);
    for (int j = 0; j < Ny; ++j) g->y[j] = -0.5 * Ly + j * g->dy;

    return g;
}

} // namespace gkp
