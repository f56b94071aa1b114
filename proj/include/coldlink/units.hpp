#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace coldlink::units {

// Dimension expected by the caller. Frequencies used as energies (e.g. a
// Josephson energy quoted in GHz) are converted with Planck's constant by
// the Energy dimension.
enum class Dimension {
    Dimensionless,
    Frequency,   // Hz
    Temperature, // K
    Length,      // m
    Capacitance, // F
    Inductance,  // H
    Energy,      // J (accepts J or a frequency suffix, value*h)
    Time,        // s
};

/// Parse "16.3 pF", "200MHz", "10 mK", "1e5" ... into an SI value.
/// Throws coldlink::config_error on malformed input or a suffix that does
/// not match the expected dimension.
double parse_value(std::string_view text, Dimension dim);

/// Parse a plain number with optional engineering suffix where the
/// dimension is unknown; returns the SI value and no dimension checking.
std::optional<double> try_parse_number(std::string_view text);

std::string trim(std::string_view text);

} // namespace coldlink::units
