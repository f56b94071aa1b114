#pragma once

#include <stdexcept>
#include <string>

namespace coldlink {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument outside an operation's mathematical domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Malformed or physically inconsistent netlist.
class netlist_error : public error {
public:
    explicit netlist_error(const std::string& what) : error(what) {}
};

/// Invalid scenario configuration; message lists section/key names.
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

} // namespace coldlink
