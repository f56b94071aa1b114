#pragma once

#include <string>

namespace coldlink::io {

/// Locale-free scientific formatting with 9 significant digits, used for
/// every floating-point field in CSV/JSON reports so identical inputs
/// serialize byte-identically.
std::string format_double(double value);

} // namespace coldlink::io
