#pragma once

#include "gkp/field.hpp"

#include <string>

namespace gkp {

// GKP1 binary field file: magic "GKP1", little-endian u32 Nx, u32 Ny,
// f64 Lx, f64 Ly, then Nx*Ny f64 samples row-major (y outer, x inner).
// Roundtrips bit-exactly.
void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

} // namespace gkp
