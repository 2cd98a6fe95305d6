#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops behind the spectral and energy operations:
// scalar reference kernels plus an AVX2 lane selected at runtime. The two
// lanes are equivalence-tested; reductions may differ by summation order
// only (a few ulps). Set GKP_KERNELS=scalar|avx2 to force a lane.
namespace gkp::kernels {

enum class Backend { scalar, avx2 };

struct VTable {
    const char* name;
    void (*scale)(double* x, double a, std::size_t n);                    // x *= a
    void (*axpy)(double* y, double a, const double* x, std::size_t n);    // y += a*x
    void (*mul)(double* out, const double* a, const double* b, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*max_abs)(const double* a, std::size_t n);
    // c[i] *= t[i], t real
    void (*cmul_table)(std::complex<double>* c, const double* t, std::size_t n);
    // sum_i w[i] * Re(a[i] * conj(b[i]))
    double (*cdot_weighted)(const std::complex<double>* a, const std::complex<double>* b,
                            const double* w, std::size_t n);
    // out = |u|^p * u  and  out = |u|^(p+2)/(p+2); vector lanes for p = 1, 2, 3
    void (*h_pow)(double* out, const double* u, double p, std::size_t n);
    void (*H_pow)(double* out, const double* u, double p, std::size_t n);
};

bool supported(Backend b);
const VTable& table(Backend b); // throws Error when unsupported
Backend active();
void select(Backend b);         // throws Error when unsupported
const char* active_name();

void scale(double* x, double a, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void mul(double* out, const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double max_abs(const double* a, std::size_t n);
void cmul_table(std::complex<double>* c, const double* t, std::size_t n);
double cdot_weighted(const std::complex<double>* a, const std::complex<double>* b,
                     const double* w, std::size_t n);
void h_pow(double* out, const double* u, double p, std::size_t n);
void H_pow(double* out, const double* u, double p, std::size_t n);

} // namespace gkp::kernels
