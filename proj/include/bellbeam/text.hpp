#pragma once

#include <cstdio>
#include <string>

namespace bellbeam {

// All machine-readable output carries 12 significant digits.
inline std::string to_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace bellbeam
