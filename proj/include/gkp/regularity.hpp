#pragma once

#include "gkp/energy.hpp"

#include <string>
#include <vector>

namespace gkp {

// Stationary-equation right-hand side with its native sign: g = -V(eps x) h(u).
Field assemble_g(const Problem& P, const Field& u);

// Multiplier reconstructions of derivatives of a solved state from g alone:
// u_xx via phi2, u_y via -i*phi3. Both agree with direct spectral
// differentiation of u at solutions; *max_imag reports the discarded
// imaginary part of the u_y route.
Field recover_uxx(const Field& u, const Field& g);
Field recover_uy(const Field& u, const Field& g, double* max_imag = nullptr);

// (integral |u|^q dx dy)^(1/q) by trapezoid quadrature; q >= 1.
double lq_norm(const Field& u, double q);

struct DecayRing {
    double radius = 0.0;  // outer Chebyshev radius of the ring
    double max_abs = 0.0; // max |u| over the ring
};

// Concentric square rings (periodic wrap distance) around the argmax of
// |u|; the last ring touches the box boundary.
std::vector<DecayRing> decay_profile(const Field& u, int n_rings);

// Fraction of the X-norm energy carried by modes in the top half of the
// wavenumber range on either axis (|m| >= Nx/4 or |n| >= Ny/4).
double spectral_tail_fraction(const Field& u);

struct RegularityReport {
    std::vector<std::pair<double, double>> lq_norms; // q in {1,2,3,4,6}
    double qprime = 0.0;                             // 6/(p+1), user choice at p = 3
    double norm_uxx_qp = 0.0, norm_uy_qp = 0.0, norm_ux_qp = 0.0;
    std::vector<DecayRing> decay;
    double spectral_tail = 0.0;
    double recover_uxx_relerr = 0.0; // against direct spectral derivatives
    double recover_uy_relerr = 0.0;
    double recover_uy_max_imag = 0.0;
};

// qprime_p3 applies only when p == 3 and must lie in (1, 3/2).
RegularityReport regularity_report(const Problem& P, const Field& u, double qprime_p3 = 1.4);

std::string regularity_json(const RegularityReport& r);

} // namespace gkp
