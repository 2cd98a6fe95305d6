#include "gkp/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace gkp;

namespace {

std::vector<double> random_vec(size_t n, std::uint64_t seed, double amp = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-amp, amp);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

std::vector<std::complex<double>> random_cvec(size_t n, std::uint64_t seed) {
    auto re = random_vec(n, seed);
    auto im = random_vec(n, seed + 1);
    std::vector<std::complex<double>> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = {re[i], im[i]};
    return v;
}

} // namespace

TEST_CASE("scalar and SIMD lanes agree") {
    if (!kernels::supported(kernels::Backend::avx2)) {
        MESSAGE("avx2 lane unavailable on this host; dispatch covered by scalar only");
        return;
    }
    const auto& s = kernels::table(kernels::Backend::scalar);
    const auto& v = kernels::table(kernels::Backend::avx2);

    // odd length exercises the vector remainder
    const size_t n = 1037;
    const auto a = random_vec(n, 10);
    const auto b = random_vec(n, 11);

    SUBCASE("scale") {
        auto x1 = a, x2 = a;
        s.scale(x1.data(), 1.7, n);
        v.scale(x2.data(), 1.7, n);
        for (size_t i = 0; i < n; ++i) CHECK(x1[i] == x2[i]);
    }
    SUBCASE("axpy") {
        auto y1 = b, y2 = b;
        s.axpy(y1.data(), -0.3, a.data(), n);
        v.axpy(y2.data(), -0.3, a.data(), n);
        for (size_t i = 0; i < n; ++i)
            CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
    SUBCASE("mul") {
        std::vector<double> o1(n), o2(n);
        s.mul(o1.data(), a.data(), b.data(), n);
        v.mul(o2.data(), a.data(), b.data(), n);
        for (size_t i = 0; i < n; ++i) CHECK(o1[i] == o2[i]);
    }
    SUBCASE("reductions") {
        CHECK(s.dot(a.data(), b.data(), n) ==
              doctest::Approx(v.dot(a.data(), b.data(), n)).epsilon(1e-12));
        CHECK(s.sum(a.data(), n) == doctest::Approx(v.sum(a.data(), n)).epsilon(1e-12));
        CHECK(s.max_abs(a.data(), n) == v.max_abs(a.data(), n));
    }
    SUBCASE("complex kernels") {
        auto c1 = random_cvec(n, 20);
        auto c2 = c1;
        const auto t = random_vec(n, 21);
        s.cmul_table(c1.data(), t.data(), n);
        v.cmul_table(c2.data(), t.data(), n);
        for (size_t i = 0; i < n; ++i) {
            CHECK(c1[i].real() == c2[i].real());
            CHECK(c1[i].imag() == c2[i].imag());
        }
        const auto d1 = random_cvec(n, 22);
        const auto d2 = random_cvec(n, 23);
        const auto w = random_vec(n, 24, 5.0);
        CHECK(s.cdot_weighted(d1.data(), d2.data(), w.data(), n) ==
              doctest::Approx(v.cdot_weighted(d1.data(), d2.data(), w.data(), n))
                  .epsilon(1e-12));
    }
    SUBCASE("nonlinearity lanes for p = 1, 2, 3 and generic p") {
        for (double p : {1.0, 2.0, 3.0, 1.5, 2.7}) {
            std::vector<double> h1(n), h2(n), H1(n), H2(n);
            s.h_pow(h1.data(), a.data(), p, n);
            v.h_pow(h2.data(), a.data(), p, n);
            s.H_pow(H1.data(), a.data(), p, n);
            v.H_pow(H2.data(), a.data(), p, n);
            for (size_t i = 0; i < n; ++i) {
                CHECK(h1[i] == doctest::Approx(h2[i]).epsilon(1e-14));
                CHECK(H1[i] == doctest::Approx(H2[i]).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("h_pow and H_pow match the definitions") {
    const auto u = random_vec(257, 42, 3.0);
    for (double p : {1.0, 2.0, 3.0, 1.5}) {
        std::vector<double> h(u.size()), H(u.size());
        kernels::h_pow(h.data(), u.data(), p, u.size());
        kernels::H_pow(H.data(), u.data(), p, u.size());
        for (size_t i = 0; i < u.size(); ++i) {
            const double a = std::abs(u[i]);
            CHECK(h[i] == doctest::Approx(std::pow(a, p) * u[i]).epsilon(1e-13));
            CHECK(H[i] == doctest::Approx(std::pow(a, p + 2.0) / (p + 2.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("backend selection is sticky and reversible") {
    const auto before = kernels::active();
    kernels::select(kernels::Backend::scalar);
    CHECK(kernels::active() == kernels::Backend::scalar);
    if (kernels::supported(kernels::Backend::avx2)) {
        kernels::select(kernels::Backend::avx2);
        CHECK(kernels::active() == kernels::Backend::avx2);
    }
    kernels::select(before);
}
