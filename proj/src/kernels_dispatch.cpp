#include "gkp/kernels.hpp"
#include "gkp/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace gkp::kernels {

const VTable* scalar_vtable();
#ifdef GKP_HAVE_AVX2_BUILD
const VTable* avx2_vtable();
#else
static const VTable* avx2_vtable() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const VTable* resolve(Backend b) {
    switch (b) {
    case Backend::scalar: return scalar_vtable();
    case Backend::avx2: return (avx2_vtable() && cpu_has_avx2()) ? avx2_vtable() : nullptr;
    }
    return nullptr;
}

std::atomic<const VTable*> g_active{nullptr};
std::once_flag g_init;

void init_active() {
    const VTable* t = nullptr;
    if (const char* env = std::getenv("GKP_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) t = resolve(Backend::scalar);
        else if (std::strcmp(env, "avx2") == 0) t = resolve(Backend::avx2);
    }
    if (!t) t = resolve(Backend::avx2);
    if (!t) t = resolve(Backend::scalar);
    g_active.store(t, std::memory_order_release);
}

inline const VTable& act() {
    const VTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        std::call_once(g_init, init_active);
        t = g_active.load(std::memory_order_acquire);
    }
    return *t;
}

} // namespace

bool supported(Backend b) { return resolve(b) != nullptr; }

const VTable& table(Backend b) {
    const VTable* t = resolve(b);
    if (!t) throw Error("kernels: backend not supported on this host");
    return *t;
}

Backend active() {
    return std::strcmp(act().name, "avx2") == 0 ? Backend::avx2 : Backend::scalar;
}

void select(Backend b) {
    const VTable* t = resolve(b);
    if (!t) throw Error("kernels: backend not supported on this host");
    std::call_once(g_init, init_active); // keep later resets well-ordered
    g_active.store(t, std::memory_order_release);
}

const char* active_name() { return act().name; }

void scale(double* x, double a, std::size_t n) { act().scale(x, a, n); }
void axpy(double* y, double a, const double* x, std::size_t n) { act().axpy(y, a, x, n); }
void mul(double* out, const double* a, const double* b, std::size_t n) { act().mul(out, a, b, n); }
double dot(const double* a, const double* b, std::size_t n) { return act().dot(a, b, n); }
double sum(const double* a, std::size_t n) { return act().sum(a, n); }
double max_abs(const double* a, std::size_t n) { return act().max_abs(a, n); }
void cmul_table(std::complex<double>* c, const double* t, std::size_t n) { act().cmul_table(c, t, n); }
double cdot_weighted(const std::complex<double>* a, const std::complex<double>* b,
                     const double* w, std::size_t n) {
    return act().cdot_weighted(a, b, w, n);
}
void h_pow(double* out, const double* u, double p, std::size_t n) { act().h_pow(out, u, p, n); }
void H_pow(double* out, const double* u, double p, std::size_t n) { act().H_pow(out, u, p, n); }

} // namespace gkp::kernels
