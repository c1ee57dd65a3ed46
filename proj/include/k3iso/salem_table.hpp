#pragma once

#include <string>
#include <vector>

#include "k3iso/zpoly.hpp"

namespace k3iso {

struct SalemTableEntry {
    std::string name;
    ZPoly S;
    std::string approx_root;
    std::string provenance;
};

// JSON lines: {"name", "coeffs" (ascending), "approx_root", "provenance"}; blank lines skipped.
std::vector<SalemTableEntry> load_salem_table(const std::string& path);
SalemTableEntry parse_table_line(const std::string& line);
std::string default_table_path();
const SalemTableEntry& find_entry(const std::vector<SalemTableEntry>& t, const std::string& name);

struct TableCheck {
    std::string entry;
    std::string check;
    bool ok = false;
    std::string expected;
    std::string computed;
};

struct TableReport {
    std::vector<TableCheck> checks;
    bool ok() const;
    std::vector<TableCheck> failures() const;
};

TableReport validate_table(const std::vector<SalemTableEntry>& entries);

// Exact value of a plain decimal literal such as "-1.25".
QNum parse_decimal(const std::string& s);

}  // namespace k3iso
