#pragma once

#include "gkp/groundstate.hpp"

#include <string>
#include <vector>

namespace gkp {

// Grid node maximizing |u|. Throws on the zero field.
ArgMax find_argmax(const Field& u);

// Sub-grid refinement: separable parabola fit through the 3x3 neighborhood
// of the argmax node (periodic wrap). Reported separately from the node.
std::array<double, 2> refine_argmax(const Field& u, const ArgMax& node);

struct SweepRow {
    double eps = 0.0;
    double c_eps = 0.0;
    double qx = 0.0, qy = 0.0;        // argmax of |u| in solver coordinates
    double V_at_scaled_argmax = 0.0;  // V(eps * q)
    double residual = 0.0;
    int iters = 0;
    bool below_c_inf = false;         // existence regime c_eps < c_inf
    bool argmax_interior = true;      // inside the central 90% of the box
};

struct SweepReport {
    std::vector<SweepRow> rows; // sorted by decreasing eps
    std::vector<Field> states; // converged solutions, parallel to rows (when kept)
    double c0 = 0.0, c_inf = 0.0;
    double V0 = 0.0, Vinf = 0.0;
    // core scale of the constant-V0 reference solution and the resulting
    // advisory resolution check (>= 8 nodes across the core)
    double core_width = 0.0;
    double nodes_per_core = 0.0;
    bool grid_adequate = false;
    bool completed = false;
    std::string abort_reason;
};

struct SweepOptions {
    bool warm_start = true;
    bool keep_states = true;
    int threads = 1; // >= 2 solves c0 and c_inf concurrently
};

// Solves each eps (largest first), warm-starting from the previous solution
// recentered at the scaled potential maximum and reprojected onto the
// Nehari manifold. A non-converged solve stops the sweep with the partial
// rows kept and abort_reason set.
SweepReport sweep(const GridPtr& grid, const Nonlinearity& nl, const Potential& pot,
                  const std::vector<double>& eps_list, const SolverConfig& cfg,
                  const SweepOptions& opts = {});

struct ConcentrationVerdict {
    bool pass = false;
    bool valid = true;        // false when a scaled argmax touched the boundary
    bool pass_level = false;  // |c_min - c0| <= tol_level * c0
    bool pass_V = false;      // V0 - V(eps_min q) <= tol_V * V0
    bool pass_regime = false; // c_min < c_inf
    double margin_level = 0.0;
    double margin_V = 0.0;
    double margin_regime = 0.0;
    std::string detail;
};

// Requires >= 3 rows from a completed sweep of a potential with V0 > Vinf.
ConcentrationVerdict check_concentration(const SweepReport& r, double tol_level, double tol_V);

// CSV with header eps,c_eps,qx,qy,V_at_eps_q,residual,iters and
// 17-significant-digit floats.
std::string sweep_csv(const SweepReport& r);

} // namespace gkp
