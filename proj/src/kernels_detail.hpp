#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

// Scalar reference kernels. The AVX2 lane falls back to these for remainders
// and for non-integer exponents.
namespace gkp::kernels::detail {

inline void scale_scalar(double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

inline void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

inline void mul_scalar(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

inline double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

inline double sum_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

inline double max_abs_scalar(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::abs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

inline void cmul_table_scalar(std::complex<double>* c, const double* t, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) c[i] *= t[i];
}

inline double cdot_weighted_scalar(const std::complex<double>* a, const std::complex<double>* b,
                                   const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
    return s;
}

// h(t) = |t|^p t. Integer exponents avoid pow entirely.
inline void h_pow_scalar(double* out, const double* u, double p, std::size_t n) {
    if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = std::abs(u[i]) * u[i];
    } else if (p == 2.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = u[i] * u[i] * u[i];
    } else if (p == 3.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double a = std::abs(u[i]);
            out[i] = a * a * a * u[i];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double a = std::abs(u[i]);
            out[i] = (a == 0.0) ? 0.0 : std::pow(a, p) * u[i];
        }
    }
}

// H(t) = |t|^(p+2)/(p+2), the primitive of h.
inline void H_pow_scalar(double* out, const double* u, double p, std::size_t n) {
    const double inv = 1.0 / (p + 2.0);
    if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double a = std::abs(u[i]);
            out[i] = a * a * a * inv;
        }
    } else if (p == 2.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double a2 = u[i] * u[i];
            out[i] = a2 * a2 * inv;
        }
    } else if (p == 3.0) {
        for (std::size_t i = 0; i < n; ++i) {
            double a = std::abs(u[i]);
            double a2 = a * a;
            out[i] = a2 * a2 * a * inv;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double a = std::abs(u[i]);
            out[i] = (a == 0.0) ? 0.0 : std::pow(a, p + 2.0) * inv;
        }
    }
}

} // namespace gkp::kernels::detail
