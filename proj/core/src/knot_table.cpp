#include "knotpoly/knot_table.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotpoly {

KnotTable KnotTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open knot table " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_json(buf.str());
    } catch (const TableError& e) {
        throw TableError(path.string() + ": " + e.what());
    }
}

KnotTable KnotTable::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TableError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw TableError("knot table must be a JSON array");

    std::vector<KnotTableEntry> entries;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& obj = doc[i];
        auto field = [&](const char* key) -> const nlohmann::json& {
            if (!obj.is_object() || !obj.contains(key)) {
                throw TableError("entry " + std::to_string(i) + " lacks field '" + key + "'");
            }
            return obj.at(key);
        };
        try {
            entries.push_back({field("name").get<std::string>(), field("pd").get<std::string>(),
                               field("conway").get<std::string>(), field("components").get<int>()});
        } catch (const nlohmann::json::type_error& e) {
            throw TableError("entry " + std::to_string(i) + ": " + e.what());
        }
    }
    return KnotTable(std::move(entries));
}

const KnotTableEntry* KnotTable::find(std::string_view name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

const KnotTableEntry& KnotTable::at(std::string_view name) const {
    if (const auto* e = find(name)) return *e;
    throw TableError("knot table has no entry '" + std::string(name) + "'");
}

Diagram KnotTable::diagram(std::string_view name) const { return parse_pd(at(name).pd); }

IntPoly KnotTable::published(std::string_view name) const { return parse_poly(at(name).conway); }

void KnotTable::set_conway(std::string_view name, std::string conway) {
    for (auto& e : entries_) {
        if (e.name == name) {
            e.conway = std::move(conway);
            return;
        }
    }
    throw TableError("knot table has no entry '" + std::string(name) + "'");
}

std::vector<EntryCheck> validate(const KnotTable& table, SkeinContext& ctx) {
    std::vector<EntryCheck> out;
    for (const auto& e : table.entries()) {
        EntryCheck c{e.name, e.conway, "", false};
        try {
            IntPoly expected = parse_poly(e.conway);
            Diagram d = parse_pd(e.pd);
            IntPoly computed = conway(d, ctx);
            c.expected = format_poly(expected);
            c.computed = format_poly(computed);
            if (static_cast<int>(d.component_count()) != e.components) {
                c.computed += " (" + std::to_string(d.component_count()) + " components, table says " +
                              std::to_string(e.components) + ")";
            }
            c.passed = c.expected == c.computed;
        } catch (const std::exception& ex) {
            c.computed = std::string("error: ") + ex.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::filesystem::path default_table_path() {
    if (const char* env = std::getenv("KNOT_TABLE"); env && *env) return env;
    std::filesystem::path source{KNOTPOLY_SOURCE_TABLE};
    if (std::filesystem::exists(source)) return source;
    return KNOTPOLY_INSTALL_TABLE;
}

}  // namespace knotpoly
