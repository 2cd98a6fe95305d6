#include "gkp/fft.hpp"
#include "gkp/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace gkp {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

struct TransformPlan::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

TransformPlan::TransformPlan(int Nx, int Ny) : impl_(new Impl), nx_(Nx), ny_(Ny) {
    std::vector<std::complex<double>> a(static_cast<size_t>(Nx) * Ny);
    std::vector<std::complex<double>> b(a.size());
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    std::lock_guard<std::mutex> lock(planner_mutex());
    // Row-major with x fast => FFTW dims (Ny, Nx). FFTW_UNALIGNED lets the
    // plans run on arbitrary caller buffers via the new-array interface.
    impl_->fwd = fftw_plan_dft_2d(Ny, Nx, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    impl_->bwd = fftw_plan_dft_2d(Ny, Nx, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!impl_->fwd || !impl_->bwd) throw Error("fft: plan creation failed");
}

TransformPlan::~TransformPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

SpectralField TransformPlan::forward(const Field& f) const {
    if (f.grid->Nx != nx_ || f.grid->Ny != ny_) throw Error("forward: grid mismatch");
    const size_t n = f.values.size();
    std::vector<std::complex<double>> in(n);
    for (size_t i = 0; i < n; ++i) in[i] = f.values[i];
    SpectralField F(f.grid);
    fftw_execute_dft(impl_->fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(F.coeffs.data()));
    return F;
}

Field TransformPlan::inverse(const SpectralField& F, double* max_imag) const {
    if (F.grid->Nx != nx_ || F.grid->Ny != ny_) throw Error("inverse: grid mismatch");
    const size_t n = F.coeffs.size();
    std::vector<std::complex<double>> in(F.coeffs);
    std::vector<std::complex<double>> out(n);
    fftw_execute_dft(impl_->bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double norm = 1.0 / (double(nx_) * ny_);
    Field f(F.grid);
    double mi = 0.0;
    for (size_t i = 0; i < n; ++i) {
        f.values[i] = out[i].real() * norm;
        double im = std::abs(out[i].imag()) * norm;
        if (im > mi) mi = im;
    }
    if (max_imag) *max_imag = mi;
    return f;
}

PlanPtr plan_for(const Grid& g) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, PlanPtr> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(g.Nx, g.Ny);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<const TransformPlan>(g.Nx, g.Ny);
    cache.emplace(key, p);
    return p;
}

SpectralField forward(const Field& f) { return plan_for(*f.grid)->forward(f); }

Field inverse(const SpectralField& F, double* max_imag) {
    return plan_for(*F.grid)->inverse(F, max_imag);
}

} // namespace gkp
