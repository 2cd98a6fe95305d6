#include "gkp/kernels.hpp"
#include "kernels_detail.hpp"

namespace gkp::kernels {

const VTable* scalar_vtable() {
    using namespace detail;
    static const VTable t = {
        "scalar",
        &scale_scalar,
        &axpy_scalar,
        &mul_scalar,
        &dot_scalar,
        &sum_scalar,
        &max_abs_scalar,
        &cmul_table_scalar,
        &cdot_weighted_scalar,
        &h_pow_scalar,
        &H_pow_scalar,
    };
    return &t;
}

} // namespace gkp::kernels
