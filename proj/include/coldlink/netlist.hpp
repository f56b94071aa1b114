#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coldlink {

enum class BranchKind { Capacitor, Inductor, Junction };

struct Branch {
    std::string id;
    std::string from;
    std::string to;
    BranchKind kind = BranchKind::Capacitor;
    double value = 0.0; // F, H, or Josephson energy in J
};

/// Lumped-element circuit description. The distinguished ground node is
/// named "gnd" (aliases "ground" and "0" are normalized at parse time).
/// Exactly one branch is the junction branch; it sets the phase reference
/// for zero-point fluctuations and carries the Josephson energy, but
/// contributes no linear admittance (the ATS saddle point cancels it).
struct Netlist {
    std::vector<std::string> nodes; // non-ground nodes, insertion order
    std::vector<Branch> branches;
    std::string junction_id;

    const Branch& junction_branch() const;
    int node_index(std::string_view name) const; // -1 for ground

    /// Checks structural invariants: positive element values, exactly one
    /// junction branch, every node connected to ground, every node with a
    /// capacitive path to ground. Throws netlist_error.
    void validate() const;

    /// Parses the line-oriented netlist format:
    ///   branch = {from, to, kind(C|L|J), value, unit[, id]}
    ///   junction = <branch-id>
    /// plus optional [pump] section consumed by callers via parse_file's
    /// sibling in scenario code. Braces are optional; '#' starts a comment.
    static Netlist parse(std::string_view text);
    static Netlist parse_file(const std::string& path);
};

bool is_ground_name(std::string_view name);

} // namespace coldlink
