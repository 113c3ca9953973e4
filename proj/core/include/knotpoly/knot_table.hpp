#pragma once

/**
 * @file knot_table.hpp
 * @brief Named reference knots and links with their published Conway polynomials.
 *
 * The table file is a JSON array of objects
 *
 *     {"name": string, "pd": string, "conway": string, "components": int}
 *
 * where `pd` follows the parse_pd() grammar and `conway` the parse_poly()
 * grammar.
 */

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/skein.hpp"

namespace knotpoly {

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KnotTableEntry {
    std::string name;
    std::string pd;
    std::string conway;
    int components = 1;
};

class KnotTable {
public:
    KnotTable() = default;
    explicit KnotTable(std::vector<KnotTableEntry> entries) : entries_(std::move(entries)) {}

    /// Throws TableError on I/O, JSON or schema problems.
    static KnotTable load(const std::filesystem::path& path);
    static KnotTable from_json(std::string_view text);

    const std::vector<KnotTableEntry>& entries() const noexcept { return entries_; }
    const KnotTableEntry* find(std::string_view name) const;
    /// Throws TableError when the entry is missing.
    const KnotTableEntry& at(std::string_view name) const;

    Diagram diagram(std::string_view name) const;
    IntPoly published(std::string_view name) const;

    /// Overwrites an entry's published polynomial text (fault injection).
    void set_conway(std::string_view name, std::string conway);

private:
    std::vector<KnotTableEntry> entries_;
};

/// Outcome of recomputing one entry with the skein engine.
struct EntryCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool passed = false;
};

/// Recomputes every entry. Parse failures are reported, not thrown.
std::vector<EntryCheck> validate(const KnotTable& table, SkeinContext& ctx);

/// $KNOT_TABLE when set; otherwise the source-tree table if present,
/// otherwise the installed copy.
std::filesystem::path default_table_path();

}  // namespace knotpoly
