#pragma once

#include "gkp/field.hpp"

#include <memory>

namespace gkp {

// 2D complex transform pair for one grid size. Convention: forward is the
// plain unnormalized sum over samples, inverse divides by Nx*Ny, so
// inverse(forward(f)) == f to round-off and the Parseval weight is
// Lx*Ly/(Nx*Ny)^2 (Grid::parseval_weight).
//
// Plans are immutable after construction and execute on per-call buffers,
// so one plan may serve concurrent transforms. Plan creation itself is
// serialized internally (the FFTW planner is not thread-safe).
class TransformPlan {
public:
    explicit TransformPlan(int Nx, int Ny);
    ~TransformPlan();
    TransformPlan(const TransformPlan&) = delete;
    TransformPlan& operator=(const TransformPlan&) = delete;

    SpectralField forward(const Field& f) const;
    // Real part of the inverse transform; *max_imag receives the largest
    // discarded imaginary magnitude when non-null.
    Field inverse(const SpectralField& F, double* max_imag = nullptr) const;

    int nx() const { return nx_; }
    int ny() const { return ny_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int nx_, ny_;
};

using PlanPtr = std::shared_ptr<const TransformPlan>;

// Process-wide plan cache keyed by grid size.
PlanPtr plan_for(const Grid& g);

SpectralField forward(const Field& f);
Field inverse(const SpectralField& F, double* max_imag = nullptr);

} // namespace gkp
