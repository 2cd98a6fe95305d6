#include "gkp/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gkp {

double Nonlinearity::h(double t) const {
    double a = std::abs(t);
    if (a == 0.0) return 0.0;
    return std::pow(a, p) * t;
}

double Nonlinearity::h_prime(double t) const {
    double a = std::abs(t);
    if (a == 0.0) return 0.0;
    return (p + 1.0) * std::pow(a, p);
}

double Nonlinearity::h_second(double t) const {
    if (t == 0.0) return 0.0; // limit for p > 1; documented convention at p = 1
    double s = t > 0.0 ? 1.0 : -1.0;
    return p * (p + 1.0) * std::pow(std::abs(t), p - 1.0) * s;
}

double Nonlinearity::H(double t) const {
    double a = std::abs(t);
    if (a == 0.0) return 0.0;
    return std::pow(a, p + 2.0) / (p + 2.0);
}

HypothesisReport check_h(const Nonlinearity& n, const std::vector<double>& sample_ts) {
    HypothesisReport rep;
    std::ostringstream msg;
    const double theta = n.theta();

    double worst = 0.0;
    for (double t : sample_ts) {
        if (t == 0.0) continue;
        const double lhs = theta * n.H(t);
        const double rhs = n.h(t) * t;
        const double margin = rhs - lhs; // >= 0 required, 0 for the power family
        worst = std::min(worst, margin);
        if (lhs <= 0.0) {
            rep.pass = false;
            msg << "(h3) theta*H(t) not positive at t=" << t << "; ";
        }
        if (margin < -1e-12 * std::max(1.0, std::abs(rhs))) {
            rep.pass = false;
            msg << "(h3) violated at t=" << t << " margin=" << margin << "; ";
        }
    }

    // (h4): h(t)/|t| strictly increasing over sorted nonzero samples.
    std::vector<double> ts;
    for (double t : sample_ts)
        if (t != 0.0) ts.push_back(t);
    std::sort(ts.begin(), ts.end());
    for (size_t i = 1; i < ts.size(); ++i) {
        const double a = n.h(ts[i - 1]) / std::abs(ts[i - 1]);
        const double b = n.h(ts[i]) / std::abs(ts[i]);
        if (!(b > a)) {
            rep.pass = false;
            msg << "(h4) h(t)/|t| not increasing between t=" << ts[i - 1]
                << " and t=" << ts[i] << "; ";
        }
    }

    rep.worst_margin = worst;
    rep.detail = msg.str();
    return rep;
}

Potential Potential::constant(double c) {
    Potential P;
    P.kind = PotentialKind::constant;
    P.base = c;
    return P;
}

Potential Potential::bump(double base, double height, double sigma, double cx, double cy) {
    if (!(sigma > 0.0)) throw ConfigError("potential.sigma: must be positive");
    Potential P;
    P.kind = PotentialKind::bump;
    P.base = base;
    P.bumps.push_back({height, sigma, cx, cy});
    return P;
}

Potential Potential::two_bump(double base, const BumpParams& a, const BumpParams& b) {
    if (!(a.sigma > 0.0) || !(b.sigma > 0.0))
        throw ConfigError("potential.sigma: must be positive");
    Potential P;
    P.kind = PotentialKind::two_bump;
    P.base = base;
    P.bumps.push_back(a);
    P.bumps.push_back(b);
    return P;
}

double Potential::value(double x, double y) const {
    double v = base;
    for (const auto& b : bumps) {
        const double dx = x - b.cx, dy = y - b.cy;
        v += b.height * std::exp(-(dx * dx + dy * dy) / (b.sigma * b.sigma));
    }
    return v;
}

std::array<double, 2> Potential::grad(double x, double y) const {
    std::array<double, 2> g{0.0, 0.0};
    for (const auto& b : bumps) {
        const double dx = x - b.cx, dy = y - b.cy;
        const double s2 = b.sigma * b.sigma;
        const double e = b.height * std::exp(-(dx * dx + dy * dy) / s2);
        g[0] += -2.0 * dx / s2 * e;
        g[1] += -2.0 * dy / s2 * e;
    }
    return g;
}

std::array<double, 4> Potential::hess(double x, double y) const {
    std::array<double, 4> hs{0.0, 0.0, 0.0, 0.0};
    for (const auto& b : bumps) {
        const double dx = x - b.cx, dy = y - b.cy;
        const double s2 = b.sigma * b.sigma;
        const double e = b.height * std::exp(-(dx * dx + dy * dy) / s2);
        hs[0] += e * (4.0 * dx * dx / (s2 * s2) - 2.0 / s2);
        hs[3] += e * (4.0 * dy * dy / (s2 * s2) - 2.0 / s2);
        const double xy = e * 4.0 * dx * dy / (s2 * s2);
        hs[1] += xy;
        hs[2] += xy;
    }
    return hs;
}

double Potential::V0() const {
    if (is_constant()) return base;
    // Peaks of Gaussian sums sit at (or extremely near) the bump centers for
    // the shipped well-separated models; take the best center.
    double best = base;
    for (const auto& b : bumps) best = std::max(best, value(b.cx, b.cy));
    return best;
}

double Potential::Vinf() const { return base; }

std::array<double, 2> Potential::argmax() const {
    if (is_constant()) return {0.0, 0.0};
    double best = -1e300;
    std::array<double, 2> at{0.0, 0.0};
    for (const auto& b : bumps) {
        const double v = value(b.cx, b.cy);
        if (v > best) {
            best = v;
            at = {b.cx, b.cy};
        }
    }
    return at;
}

double Potential::grad_bound() const {
    // sup|grad of one Gaussian| = |a| sqrt(2/e) / sigma; sum over bumps.
    double s = 0.0;
    for (const auto& b : bumps)
        s += std::abs(b.height) * std::sqrt(2.0 / std::exp(1.0)) / b.sigma;
    return s;
}

double Potential::hess_bound() const {
    // each entry of one Gaussian Hessian is bounded by 2|a|/sigma^2
    double s = 0.0;
    for (const auto& b : bumps) s += 2.0 * std::abs(b.height) / (b.sigma * b.sigma);
    return s;
}

PotentialReport check_V(const Potential& P) {
    PotentialReport rep;
    rep.V0 = P.V0();
    rep.Vinf = P.Vinf();
    rep.v2_holds = !P.is_constant() && rep.Vinf < rep.V0;

    rep.nonnegative = true;
    double span = 1.0;
    for (const auto& b : P.bumps) {
        span = std::max(span, std::abs(b.cx) + 6.0 * b.sigma);
        span = std::max(span, std::abs(b.cy) + 6.0 * b.sigma);
    }
    const int n = 101;
    for (int j = 0; j < n && rep.nonnegative; ++j)
        for (int i = 0; i < n; ++i) {
            const double x = -span + 2.0 * span * i / (n - 1);
            const double y = -span + 2.0 * span * j / (n - 1);
            if (P.value(x, y) < 0.0) {
                rep.nonnegative = false;
                break;
            }
        }

    std::ostringstream msg;
    if (!rep.nonnegative) msg << "V dips below zero on the sample lattice; ";
    if (P.is_constant())
        msg << "constant potential: V0 == Vinf, no concentration regime; ";
    else if (!rep.v2_holds)
        msg << "(V2) fails: Vinf >= V0; ";
    rep.detail = msg.str();
    rep.pass = rep.nonnegative && rep.v2_holds;
    return rep;
}

} // namespace gkp
