#pragma once

#include "gkp/field.hpp"

#include <functional>
#include <vector>

namespace gkp {

// Rational multiplier symbols of the stationary operator. Denominator
// |xi|^2 + xi1^4; all three vanish identically on the xi1 = 0 column
// (including the origin), the convention used throughout for the
// antiderivative subspace.
double phi1(double xi1, double xi2); // xi1^2 / (|xi|^2 + xi1^4)
double phi2(double xi1, double xi2); // xi1^4 / (|xi|^2 + xi1^4)  == xi1^2 * phi1
double phi3(double xi1, double xi2); // xi1^2 xi2 / (|xi|^2 + xi1^4) == xi2 * phi1

using Symbol = std::function<double(double, double)>;

// Symbol sampled on the grid's wavenumber lattice, (ky outer, kx inner).
std::vector<double> build_symbol_table(const Grid& g, const Symbol& s);

// Pointwise coefficient multiplication. Real even symbols (phi1, phi2)
// preserve conjugate symmetry; for phi3 the caller applies the -i factor
// (see regularity.hpp) to land back on a real field.
SpectralField apply_symbol(const SpectralField& F, const Symbol& s);
SpectralField apply_table(const SpectralField& F, const std::vector<double>& table);
void apply_table_in_place(SpectralField& F, const std::vector<double>& table);

} // namespace gkp
