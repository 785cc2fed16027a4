#include "indexforge/common.hpp"

#include <cstdio>

namespace indexforge {

std::string format_display(double x) {
    double r = round_display(x);
    if (r == 0.0) r = 0.0;  // normalize -0.0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", r);
    return buf;
}

double mean_of_present(const std::vector<MaybeValue>& values, const std::string& location) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& v : values) {
        if (v) {
            sum += *v;
            ++n;
        }
    }
    if (n == 0) throw StructuralError(location, "all entries MISSING");
    return sum / static_cast<double>(n);
}

}  // namespace indexforge
