#pragma once

#include <cstdio>
#include <string>

namespace gkp {

// 17 significant digits: decimal text that roundtrips IEEE doubles exactly.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace gkp
