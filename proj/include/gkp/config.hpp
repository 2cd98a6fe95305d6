#pragma once

#include "gkp/groundstate.hpp"

#include <string>
#include <vector>

namespace gkp {

// Everything the CLI drives, parsed from the JSON config. Every malformed
// or out-of-range entry raises ConfigError naming the offending key.
struct RunConfig {
    double Lx = 40.0, Ly = 40.0;
    int Nx = 128, Ny = 128;

    double p = 2.0;
    Potential potential = Potential::bump(1.0, 1.0, 2.0);
    double eps = 1.0;

    SolverConfig solver;

    std::vector<double> eps_list; // sweep only
    double tol_level = 0.1;       // verdict tolerances
    double tol_V = 0.05;

    std::string out_dir = "out";
    std::uint64_t seed = 42;
    double qprime = 1.4; // regularity exponent when p == 3
    bool write_fields = true;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text); // for tests

} // namespace gkp
