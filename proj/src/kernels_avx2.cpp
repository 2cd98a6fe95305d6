#include "gkp/kernels.hpp"
#include "kernels_detail.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

namespace gkp::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// [t0, t1, _, _] -> [t0, t0, t1, t1]; pairs a real table with interleaved
// complex data.
inline __m256d expand_pair(const double* t) {
    __m256d v = _mm256_castpd128_pd256(_mm_loadu_pd(t));
    return _mm256_permute4x64_pd(v, 0x50);
}

void scale_avx2(double* x, double a, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
    for (; i < n; ++i) x[i] *= a;
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void mul_avx2(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

double max_abs_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d m2 = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(m2, _mm_unpackhi_pd(m2, m2)));
    for (; i < n; ++i) {
        double v = std::abs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

void cmul_table_avx2(std::complex<double>* c, const double* t, std::size_t n) {
    double* d = reinterpret_cast<double*>(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vc = _mm256_loadu_pd(d + 2 * i);
        _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(vc, expand_pair(t + i)));
    }
    for (; i < n; ++i) c[i] *= t[i];
}

double cdot_weighted_avx2(const std::complex<double>* a, const std::complex<double>* b,
                          const double* w, std::size_t n) {
    const double* da = reinterpret_cast<const double*>(a);
    const double* db = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(da + 2 * i), _mm256_loadu_pd(db + 2 * i));
        acc = _mm256_fmadd_pd(expand_pair(w + i), prod, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
    return s;
}

void h_pow_avx2(double* out, const double* u, double p, std::size_t n) {
    std::size_t i = 0;
    if (p == 1.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(u + i);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(abs_pd(v), v));
        }
    } else if (p == 2.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(u + i);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(v, v), v));
        }
    } else if (p == 3.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(u + i);
            __m256d a = abs_pd(v);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(a, a), a), v));
        }
    } else {
        detail::h_pow_scalar(out, u, p, n);
        return;
    }
    detail::h_pow_scalar(out + i, u + i, p, n - i);
}

void H_pow_avx2(double* out, const double* u, double p, std::size_t n) {
    std::size_t i = 0;
    const __m256d inv = _mm256_set1_pd(1.0 / (p + 2.0));
    if (p == 1.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d a = abs_pd(_mm256_loadu_pd(u + i));
            _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(a, a), a), inv));
        }
    } else if (p == 2.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(u + i);
            __m256d v2 = _mm256_mul_pd(v, v);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(v2, v2), inv));
        }
    } else if (p == 3.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d a = abs_pd(_mm256_loadu_pd(u + i));
            __m256d a2 = _mm256_mul_pd(a, a);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(a2, a2), a), inv));
        }
    } else {
        detail::H_pow_scalar(out, u, p, n);
        return;
    }
    detail::H_pow_scalar(out + i, u + i, p, n - i);
}

} // namespace

const VTable* avx2_vtable() {
    static const VTable t = {
        "avx2",
        &scale_avx2,
        &axpy_avx2,
        &mul_avx2,
        &dot_avx2,
        &sum_avx2,
        &max_abs_avx2,
        &cmul_table_avx2,
        &cdot_weighted_avx2,
        &h_pow_avx2,
        &H_pow_avx2,
    };
    return &t;
}

} // namespace gkp::kernels

#else

namespace gkp::kernels {
const VTable* avx2_vtable() { return nullptr; }
} // namespace gkp::kernels

#endif
