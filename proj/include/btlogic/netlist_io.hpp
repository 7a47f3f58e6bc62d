#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "btlogic/netlist.hpp"

namespace bt {

// Netlist interchange format, version 1 ("btnl 1"). A file holds one or more
// netlist blocks (definitions before use) and a final "top <name>" line.
// Component ordering is canonicalized on write so files are byte-stable.

std::string write_netlist_string(const Netlist& n);
void write_netlist(const Netlist& n, const std::filesystem::path& path);

Netlist read_netlist_string(std::string_view text, std::string_view origin = "<string>");
Netlist read_netlist(const std::filesystem::path& path);

/// Canonical-serialization equality (same hierarchy, nets, components).
bool structurally_equal(const Netlist& a, const Netlist& b);

} // namespace bt
