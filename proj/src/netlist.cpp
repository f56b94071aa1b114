#include "coldlink/netlist.hpp"

#include "coldlink/errors.hpp"
#include "coldlink/units.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coldlink {

bool is_ground_name(std::string_view name) {
    return name == "gnd" || name == "ground" || name == "0";
}

const Branch& Netlist::junction_branch() const {
    for (const auto& b : branches)
        if (b.id == junction_id) return b;
    throw netlist_error("junction branch '" + junction_id + "' not found");
}

int Netlist::node_index(std::string_view name) const {
    if (is_ground_name(name)) return -1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return static_cast<int>(i);
    throw netlist_error("unknown node '" + std::string(name) + "'");
}

void Netlist::validate() const {
    if (branches.empty()) throw netlist_error("netlist has no branches");

    int junction_count = 0;
    for (const auto& b : branches) {
        if (b.kind == BranchKind::Junction) ++junction_count;
        if (b.value <= 0.0)
            throw netlist_error("branch '" + b.id + "' has non-positive value");
        if (b.from == b.to)
            throw netlist_error("branch '" + b.id + "' connects a node to itself");
    }
    if (junction_count != 1)
        throw netlist_error("netlist must mark exactly one junction branch, found " +
                            std::to_string(junction_count));
    if (junction_branch().kind != BranchKind::Junction)
        throw netlist_error("junction id '" + junction_id + "' is not a J branch");

    // Connectivity to ground through C or L elements (the junction branch
    // is a linear open at the saddle point and does not count).
    std::set<std::string> reached;
    std::vector<std::string> frontier = {"gnd"};
    auto canon = [](std::string_view n) {
        return is_ground_name(n) ? std::string("gnd") : std::string(n);
    };
    reached.insert("gnd");
    while (!frontier.empty()) {
        const std::string cur = frontier.back();
        frontier.pop_back();
        for (const auto& b : branches) {
            if (b.kind == BranchKind::Junction) continue;
            const std::string u = canon(b.from), v = canon(b.to);
            if (u == cur && !reached.count(v)) { reached.insert(v); frontier.push_back(v); }
            if (v == cur && !reached.count(u)) { reached.insert(u); frontier.push_back(u); }
        }
    }
    for (const auto& n : nodes)
        if (!reached.count(n))
            throw netlist_error("node '" + n + "' has no C/L path to ground");
}

namespace {

BranchKind parse_kind(const std::string& token, int line_no) {
    if (token == "C" || token == "c") return BranchKind::Capacitor;
    if (token == "L" || token == "l") return BranchKind::Inductor;
    if (token == "J" || token == "j") return BranchKind::Junction;
    throw netlist_error("line " + std::to_string(line_no) + ": unknown branch kind '" +
                        token + "' (expected C, L, or J)");
}

std::vector<std::string> split_fields(std::string body) {
    // strip optional braces
    std::string s = units::trim(body);
    if (!s.empty() && s.front() == '{') s.erase(s.begin());
    if (!s.empty() && s.back() == '}') s.pop_back();
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(units::trim(field));
    return out;
}

} // namespace

Netlist Netlist::parse(std::string_view text) {
    Netlist nl;
    std::set<std::string> seen_nodes;
    std::set<std::string> seen_ids;
    int auto_id = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool in_other_section = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string s = units::trim(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            // [netlist] is ours; any other section (e.g. [pump]) belongs to callers.
            in_other_section = units::trim(s) != "[netlist]";
            continue;
        }
        if (in_other_section) continue;

        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw netlist_error("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = units::trim(s.substr(0, eq));
        const std::string value = units::trim(s.substr(eq + 1));

        if (key == "branch") {
            auto fields = split_fields(value);
            // {from, to, kind, value, unit[, id]} -- unit may also be glued
            // to the value ("16.3 pF" as one field).
            if (fields.size() < 4 || fields.size() > 6)
                throw netlist_error("line " + std::to_string(line_no) +
                                    ": branch needs {from, to, kind, value, unit[, id]}");
            Branch b;
            b.from = fields[0];
            b.to = fields[1];
            b.kind = parse_kind(fields[2], line_no);
            std::string value_text = fields[3];
            std::size_t next = 4;
            if (fields.size() >= 5) {
                // decide whether field 4 is a unit or an id
                const std::string f4 = fields[4];
                const bool f4_is_unit = [&] {
                    try {
                        units::parse_value(fields[3] + " " + f4,
                                           b.kind == BranchKind::Capacitor ? units::Dimension::Capacitance
                                           : b.kind == BranchKind::Inductor ? units::Dimension::Inductance
                                                                            : units::Dimension::Energy);
                        return true;
                    } catch (const config_error&) {
                        return false;
                    }
                }();
                if (f4_is_unit) {
                    value_text = fields[3] + " " + f4;
                    next = 5;
                }
            }
            b.id = next < fields.size() ? fields[next] : "b" + std::to_string(++auto_id);
            try {
                b.value = units::parse_value(
                    value_text, b.kind == BranchKind::Capacitor ? units::Dimension::Capacitance
                                : b.kind == BranchKind::Inductor ? units::Dimension::Inductance
                                                                 : units::Dimension::Energy);
            } catch (const config_error& e) {
                throw netlist_error("line " + std::to_string(line_no) + ": " + e.what());
            }
            if (seen_ids.count(b.id))
                throw netlist_error("line " + std::to_string(line_no) + ": duplicate branch id '" +
                                    b.id + "'");
            seen_ids.insert(b.id);
            for (const auto* node : {&b.from, &b.to}) {
                if (!is_ground_name(*node) && !seen_nodes.count(*node)) {
                    seen_nodes.insert(*node);
                    nl.nodes.push_back(*node);
                }
            }
            nl.branches.push_back(std::move(b));
        } else if (key == "junction") {
            if (!nl.junction_id.empty())
                throw netlist_error("line " + std::to_string(line_no) + ": duplicate junction line");
            nl.junction_id = value;
        } else {
            throw netlist_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (nl.junction_id.empty()) {
        // default to the unique J branch when present
        for (const auto& b : nl.branches)
            if (b.kind == BranchKind::Junction) {
                if (!nl.junction_id.empty())
                    throw netlist_error("multiple J branches require an explicit junction line");
                nl.junction_id = b.id;
            }
    }
    nl.validate();
    return nl;
}

Netlist Netlist::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw netlist_error("cannot open netlist file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

} // namespace coldlink
