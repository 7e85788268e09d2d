#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tw/pd.hpp"

// Named diagram catalogs (CSV or JSON), the bundled default catalog, and the
// per-diagram result records kept in an append-only cache.

namespace tw {

struct CatalogEntry {
    std::string name;
    std::string pd;
    std::optional<bool> alternating;
    std::optional<int> known_width;
    std::optional<int> known_genus;
    std::string source;

    LinkDiagram diagram() const { return LinkDiagram::parse(pd); }
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    const CatalogEntry* find(const std::string& name) const;
};

// file may be .json (array of objects) or .csv (name,pd,alternating);
// invalid rows are collected into bad_rows and skipped
Catalog load_catalog_file(const std::string& path, std::vector<std::string>* bad_rows = nullptr);
Catalog parse_catalog_json(const std::string& text);
Catalog parse_catalog_csv(const std::string& text, std::vector<std::string>* bad_rows = nullptr);
std::string catalog_to_json(const Catalog& c);

// the generated default catalog: torus and twist families, rational diagrams
// from positive continued fractions, a pretzel, and seeded random diagrams
Catalog built_in_catalog();

struct ResultRecord {
    std::string canonical_pd;
    std::string name;
    int V = 0, E = 0, F = 0, chi = 0;
    int genus = 0, width = 0;
    long long state_count = 0;
    int Delta = 0, delta = 0;
    std::string tool_version;
    std::string timestamp;

    std::string to_json(bool with_timestamp = true) const;
};

// full pipeline for a connected knot diagram; checks width = genus + 1
ResultRecord compute_record(const LinkDiagram& d, const std::string& name = "");

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tw
