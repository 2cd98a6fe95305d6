#pragma once

#include "gkp/errors.hpp"

#include <array>
#include <string>
#include <vector>

namespace gkp {

// Power-family nonlinearity h(t) = |t|^p t with primitive H(t) = |t|^(p+2)/(p+2).
// p in (0, 4); the regularity theory needs p in (1, 4), smaller p is accepted
// in an existence-only regime.
struct Nonlinearity {
    double p = 2.0;

    explicit Nonlinearity(double p_) : p(p_) {
        if (!(p > 0.0) || !(p < 4.0))
            throw ConfigError("model.p: exponent must lie in (0, 4), got " + std::to_string(p_));
    }

    double theta() const { return p + 2.0; }
    bool regularity_guaranteed() const { return p > 1.0 && p < 4.0; }

    double h(double t) const;
    double h_prime(double t) const;  // (p+1)|t|^p
    double h_second(double t) const; // p(p+1)|t|^(p-1) sgn(t), 0 at t = 0
    double H(double t) const;
};

struct HypothesisReport {
    bool pass = true;
    double worst_margin = 0.0; // most negative slack seen
    std::string detail;
};

// (h3) theta*H(t) <= h(t)t with theta = p+2 (equality for the power family)
// and (h4) strict monotonicity of h(t)/|t| over the sorted samples.
HypothesisReport check_h(const Nonlinearity& n, const std::vector<double>& sample_ts);

enum class PotentialKind { constant, bump, two_bump };

struct BumpParams {
    double height = 1.0;
    double sigma = 1.0;
    double cx = 0.0, cy = 0.0;
};

// V(x,y) = base + sum of Gaussian bumps; analytic max V0, limit Vinf = base,
// closed-form derivative bounds. V >= 0 requires base >= 0 and heights that
// do not dip below it (checked by check_V, not the constructor, so that
// deliberately broken models are expressible in validation runs).
struct Potential {
    PotentialKind kind = PotentialKind::constant;
    double base = 1.0;
    std::vector<BumpParams> bumps;

    static Potential constant(double c);
    static Potential bump(double base, double height, double sigma, double cx = 0.0, double cy = 0.0);
    static Potential two_bump(double base, const BumpParams& a, const BumpParams& b);

    bool is_constant() const { return kind == PotentialKind::constant; }
    double value(double x, double y) const;
    std::array<double, 2> grad(double x, double y) const;
    std::array<double, 4> hess(double x, double y) const; // row-major 2x2

    double V0() const;   // analytic global max
    double Vinf() const; // analytic limit at infinity
    // Where the analytic max sits (origin for constant).
    std::array<double, 2> argmax() const;
    double grad_bound() const;
    double hess_bound() const;
};

struct PotentialReport {
    double V0 = 0.0, Vinf = 0.0;
    bool v2_holds = false;      // Vinf < V0
    bool nonnegative = false;   // V >= 0 on the sample lattice
    bool pass = false;
    std::string detail;
};

PotentialReport check_V(const Potential& P);

} // namespace gkp
