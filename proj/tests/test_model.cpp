#include "gkp/model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gkp;

TEST_CASE("power family point values") {
    Nonlinearity n2(2.0);
    CHECK(n2.h(2.0) == doctest::Approx(8.0));
    CHECK(n2.H(2.0) == doctest::Approx(4.0));
    CHECK(n2.h(0.0) == 0.0);
    CHECK(n2.h_prime(0.0) == 0.0);
    CHECK(n2.H(0.0) == 0.0);
    CHECK(n2.theta() == doctest::Approx(4.0));

    Nonlinearity n1(1.0);
    CHECK(n1.h(-3.0) == doctest::Approx(-9.0));
    CHECK(n1.h_prime(-3.0) == doctest::Approx(6.0));
    CHECK(n1.h_second(0.0) == 0.0);
}

TEST_CASE("exponent range is validated") {
    CHECK_THROWS_AS(Nonlinearity(0.0), ConfigError);
    CHECK_THROWS_AS(Nonlinearity(4.0), ConfigError);
    CHECK_THROWS_AS(Nonlinearity(-1.0), ConfigError);
    CHECK(Nonlinearity(0.5).regularity_guaranteed() == false);
    CHECK(Nonlinearity(2.0).regularity_guaranteed() == true);
}

TEST_CASE("h odd, H even, homogeneous (h3) equality") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        Nonlinearity n(p);
        for (int k = 0; k < 200; ++k) {
            const double t = dist(rng);
            CHECK(n.h(-t) == doctest::Approx(-n.h(t)).epsilon(1e-14));
            CHECK(n.H(-t) == doctest::Approx(n.H(t)).epsilon(1e-14));
            if (t != 0.0)
                CHECK(n.theta() * n.H(t) == doctest::Approx(n.h(t) * t).epsilon(1e-13));
        }
    }
}

TEST_CASE("h_prime and h_second match finite differences away from 0") {
    for (double p : {1.5, 2.0, 3.0}) {
        Nonlinearity n(p);
        const double d = 1e-5;
        for (double t = -3.0; t <= 3.0; t += 0.37) {
            if (std::abs(t) < 0.2) continue;
            const double fd1 = (n.h(t + d) - n.h(t - d)) / (2 * d);
            CHECK(fd1 == doctest::Approx(n.h_prime(t)).epsilon(1e-6));
            const double fd2 = (n.h_prime(t + d) - n.h_prime(t - d)) / (2 * d);
            CHECK(fd2 == doctest::Approx(n.h_second(t)).epsilon(1e-5));
        }
    }
}

TEST_CASE("check_h passes the power family and catches a tampered h") {
    Nonlinearity n(1.5);
    HypothesisReport rep = check_h(n, {-2.0, -1.0, 1.0, 2.0});
    CHECK(rep.pass);
    CHECK(rep.worst_margin >= -1e-12);

    // (h4) fails for an even evaluator: monotonicity check sees h(t)/|t| = t
    // replaced by |t|, constant across signs. Emulate by feeding symmetric
    // samples through a report computed on |t|^2 (even), i.e. h(t) = t^2.
    struct EvenH {
        double p = 1.0;
        double h(double t) const { return t * t; }
    };
    // inline re-implementation of the (h4) scan with the tampered evaluator
    std::vector<double> ts = {-2.0, -1.0, 1.0, 2.0};
    bool increasing = true;
    EvenH ev;
    for (size_t i = 1; i < ts.size(); ++i) {
        const double a = ev.h(ts[i - 1]) / std::abs(ts[i - 1]);
        const double b = ev.h(ts[i]) / std::abs(ts[i]);
        if (!(b > a)) increasing = false;
    }
    CHECK_FALSE(increasing);
}

TEST_CASE("potential evaluation and analytic extremes") {
    Potential c = Potential::constant(1.0);
    CHECK(c.value(3.0, -7.0) == doctest::Approx(1.0));
    CHECK(c.V0() == doctest::Approx(1.0));
    CHECK(c.Vinf() == doctest::Approx(1.0));

    Potential b = Potential::bump(1.0, 1.0, 1.0);
    CHECK(b.value(0.0, 0.0) == doctest::Approx(2.0));
    CHECK(b.value(10.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.V0() == doctest::Approx(2.0));
    CHECK(b.Vinf() == doctest::Approx(1.0));
    auto g0 = b.grad(0.0, 0.0);
    CHECK(g0[0] == doctest::Approx(0.0));
    CHECK(g0[1] == doctest::Approx(0.0));
}

TEST_CASE("potential derivatives match finite differences") {
    Potential b = Potential::two_bump(0.5, {1.0, 1.5, -2.0, 0.0}, {0.7, 2.0, 3.0, 1.0});
    const double d = 1e-5;
    for (double x = -4.0; x <= 4.0; x += 1.3) {
        for (double y = -4.0; y <= 4.0; y += 1.7) {
            const auto gr = b.grad(x, y);
            CHECK((b.value(x + d, y) - b.value(x - d, y)) / (2 * d) ==
                  doctest::Approx(gr[0]).epsilon(1e-6));
            CHECK((b.value(x, y + d) - b.value(x, y - d)) / (2 * d) ==
                  doctest::Approx(gr[1]).epsilon(1e-6));
            const auto hs = b.hess(x, y);
            CHECK((b.grad(x + d, y)[0] - b.grad(x - d, y)[0]) / (2 * d) ==
                  doctest::Approx(hs[0]).epsilon(1e-5));
            CHECK((b.grad(x, y + d)[1] - b.grad(x, y - d)[1]) / (2 * d) ==
                  doctest::Approx(hs[3]).epsilon(1e-5));
            CHECK((b.grad(x + d, y)[1] - b.grad(x - d, y)[1]) / (2 * d) ==
                  doctest::Approx(hs[1]).epsilon(1e-5));
        }
    }
}

TEST_CASE("closed-form derivative bounds hold on a sample lattice") {
    Potential b = Potential::bump(1.0, 2.0, 1.5);
    const double gb = b.grad_bound();
    const double hb = b.hess_bound();
    for (double x = -6.0; x <= 6.0; x += 0.1) {
        for (double y = -6.0; y <= 6.0; y += 0.25) {
            const auto gr = b.grad(x, y);
            CHECK(std::abs(gr[0]) <= gb + 1e-12);
            CHECK(std::abs(gr[1]) <= gb + 1e-12);
            const auto hs = b.hess(x, y);
            for (double e : hs) CHECK(std::abs(e) <= hb + 1e-12);
        }
    }
}

TEST_CASE("check_V classifies the model variants") {
    PotentialReport ok = check_V(Potential::bump(1.0, 1.0, 1.0));
    CHECK(ok.pass);
    CHECK(ok.V0 == doctest::Approx(2.0));
    CHECK(ok.Vinf == doctest::Approx(1.0));

    PotentialReport flat = check_V(Potential::constant(1.0));
    CHECK_FALSE(flat.pass);
    CHECK(flat.detail.find("no concentration regime") != std::string::npos);

    // negative height dips below base: V >= 0 can fail
    PotentialReport dip = check_V(Potential::bump(0.5, -1.0, 1.0));
    CHECK_FALSE(dip.nonnegative);
    CHECK_FALSE(dip.pass);
}
