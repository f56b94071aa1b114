#include "coldlink/io_format.hpp"

#include <charconv>
#include <cmath>

namespace coldlink::io {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0; // normalize -0
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::scientific, 8);
    return std::string(buf, ptr);
}

} // namespace coldlink::io
