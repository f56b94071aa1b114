#include "coldlink/units.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

namespace coldlink::units {

namespace {

struct Suffix {
    Dimension dim;
    double scale;
};

// Suffix tables are case-sensitive where SI prefixes collide (mK vs MK)
// but tolerate the common "ghz"/"mhz" lowercase spellings for frequency.
const std::map<std::string, Suffix, std::less<>>& suffix_table() {
    static const std::map<std::string, Suffix, std::less<>> table = {
        {"Hz", {Dimension::Frequency, 1.0}},
        {"kHz", {Dimension::Frequency, 1e3}},
        {"MHz", {Dimension::Frequency, 1e6}},
        {"GHz", {Dimension::Frequency, 1e9}},
        {"hz", {Dimension::Frequency, 1.0}},
        {"khz", {Dimension::Frequency, 1e3}},
        {"mhz", {Dimension::Frequency, 1e6}},
        {"ghz", {Dimension::Frequency, 1e9}},
        {"K", {Dimension::Temperature, 1.0}},
        {"mK", {Dimension::Temperature, 1e-3}},
        {"uK", {Dimension::Temperature, 1e-6}},
        {"m", {Dimension::Length, 1.0}},
        {"mm", {Dimension::Length, 1e-3}},
        {"cm", {Dimension::Length, 1e-2}},
        {"km", {Dimension::Length, 1e3}},
        {"F", {Dimension::Capacitance, 1.0}},
        {"uF", {Dimension::Capacitance, 1e-6}},
        {"nF", {Dimension::Capacitance, 1e-9}},
        {"pF", {Dimension::Capacitance, 1e-12}},
        {"fF", {Dimension::Capacitance, 1e-15}},
        {"H", {Dimension::Inductance, 1.0}},
        {"uH", {Dimension::Inductance, 1e-6}},
        {"nH", {Dimension::Inductance, 1e-9}},
        {"pH", {Dimension::Inductance, 1e-12}},
        {"J", {Dimension::Energy, 1.0}},
        {"s", {Dimension::Time, 1.0}},
        {"ms", {Dimension::Time, 1e-3}},
        {"us", {Dimension::Time, 1e-6}},
        {"ns", {Dimension::Time, 1e-9}},
    };
    return table;
}

const char* dimension_name(Dimension dim) {
    switch (dim) {
    case Dimension::Dimensionless: return "dimensionless";
    case Dimension::Frequency: return "frequency";
    case Dimension::Temperature: return "temperature";
    case Dimension::Length: return "length";
    case Dimension::Capacitance: return "capacitance";
    case Dimension::Inductance: return "inductance";
    case Dimension::Energy: return "energy";
    case Dimension::Time: return "time";
    }
    return "?";
}

} // namespace

std::string trim(std::string_view text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

std::optional<double> try_parse_number(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

double parse_value(std::string_view text, Dimension dim) {
    const std::string s = trim(text);
    if (s.empty()) throw config_error("empty value");

    // Split trailing alphabetic suffix from the numeric part.
    std::size_t split = s.size();
    while (split > 0 && (std::isalpha(static_cast<unsigned char>(s[split - 1])))) --split;
    const std::string num_part = trim(s.substr(0, split));
    const std::string suffix = trim(s.substr(split));

    double value = 0.0;
    {
        auto [ptr, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), value);
        // Reject "1e" style fragments where the exponent letter was eaten as suffix.
        if (ec != std::errc{} || ptr != num_part.data() + num_part.size() || num_part.empty())
            throw config_error("cannot parse number in '" + s + "'");
    }
    if (suffix.empty()) {
        return value;
    }

    const auto& table = suffix_table();
    auto it = table.find(suffix);
    if (it == table.end())
        throw config_error("unknown unit suffix '" + suffix + "' in '" + s + "'");

    const Suffix& sfx = it->second;
    if (sfx.dim == dim) {
        return value * sfx.scale;
    }
    // Energies are commonly quoted as E/h in frequency units.
    if (dim == Dimension::Energy && sfx.dim == Dimension::Frequency) {
        return value * sfx.scale * constants::planck;
    }
    throw config_error(std::string("unit '") + suffix + "' is not a " + dimension_name(dim) +
                       " in '" + s + "'");
}

} // namespace coldlink::units
