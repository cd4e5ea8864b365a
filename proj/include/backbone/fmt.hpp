#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace backbone {

// One textual form for every real value we emit (TSV, DOT, summaries):
// %.12g, C locale, "nan"/"inf" spelled out — so identical runs produce
// byte-identical files.
inline std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace backbone
