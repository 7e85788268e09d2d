#include "tw/catalog.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tw/generate.hpp"
#include "tw/planemap.hpp"
#include "tw/skein.hpp"
#include "tw/states.hpp"
#include "tw/tait.hpp"
#include "tw/turaev.hpp"

namespace tw {

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const CatalogEntry& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

CatalogEntry entry_from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.pd = j.at("pd").get<std::string>();
    if (j.contains("alternating") && !j["alternating"].is_null())
        e.alternating = j["alternating"].get<bool>();
    if (j.contains("known_width") && !j["known_width"].is_null())
        e.known_width = j["known_width"].get<int>();
    if (j.contains("known_genus") && !j["known_genus"].is_null())
        e.known_genus = j["known_genus"].get<int>();
    if (j.contains("source")) e.source = j["source"].get<std::string>();
    return e;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

Catalog parse_catalog_json(const std::string& text) {
    Catalog c;
    nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& item : j) {
        CatalogEntry e = entry_from_json(item);
        e.diagram();  // validates
        c.entries.push_back(std::move(e));
    }
    return c;
}

Catalog parse_catalog_csv(const std::string& text, std::vector<std::string>* bad_rows) {
    Catalog c;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("name,", 0) == 0) continue;  // optional header row
        }
        std::vector<std::string> f = split_csv_line(line);
        try {
            if (f.size() < 2) throw parse_error("need name,pd[,alternating]", 0);
            CatalogEntry e;
            e.name = f[0];
            e.pd = f[1];
            if (f.size() > 2 && !f[2].empty()) e.alternating = f[2] == "1" || f[2] == "true";
            e.diagram();  // validates
            c.entries.push_back(std::move(e));
        } catch (const std::exception& ex) {
            if (bad_rows) bad_rows->push_back(line + "  # " + ex.what());
        }
    }
    return c;
}

Catalog load_catalog_file(const std::string& path, std::vector<std::string>* bad_rows) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open catalog file " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return parse_catalog_csv(ss.str(), bad_rows);
    return parse_catalog_json(ss.str());
}

std::string catalog_to_json(const Catalog& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CatalogEntry& e : c.entries) {
        nlohmann::json j = {{"name", e.name}, {"pd", e.pd}, {"source", e.source}};
        if (e.alternating) j["alternating"] = *e.alternating;
        if (e.known_width) j["known_width"] = *e.known_width;
        if (e.known_genus) j["known_genus"] = *e.known_genus;
        arr.push_back(j);
    }
    return arr.dump(1);
}

namespace {

void push_entry(Catalog& c, std::map<std::string, bool>& seen_pds, std::string name,
                const LinkDiagram& d, std::string source) {
    std::string pd = d.canonical();
    if (seen_pds.count(pd)) return;
    seen_pds[pd] = true;
    CatalogEntry e;
    e.name = std::move(name);
    e.pd = pd;
    e.source = std::move(source);
    e.alternating = is_alternating_diagram(d);
    if (*e.alternating && !d.is_split()) {
        e.known_genus = 0;
        e.known_width = 1;
    }
    c.entries.push_back(std::move(e));
}

long long rational_key(long long p, long long q) {
    // p/q, p/q' with q q' = 1 mod p are the same knot; q -> p - q mirrors it,
    // and the tables do not separate mirrors
    long long q1 = ((q % p) + p) % p;
    long long inv = 1;
    for (long long x = 1; x < p; ++x)
        if ((x * q1) % p == 1) {
            inv = x;
            break;
        }
    long long best = std::min(std::min(q1, inv), std::min(p - q1, p - inv));
    return p * 1000000 + best;
}

// A reduced alternating diagram realizes the crossing number, and through
// seven crossings the determinant separates the table knots.
std::string table_name(int crossings, long long det) {
    static const std::map<std::pair<int, long long>, std::string> names = {
        {{3, 3}, "3_1"},  {{4, 5}, "4_1"},  {{5, 5}, "5_1"},  {{5, 7}, "5_2"},
        {{6, 9}, "6_1"},  {{6, 11}, "6_2"}, {{6, 13}, "6_3"}, {{7, 7}, "7_1"},
        {{7, 11}, "7_2"}, {{7, 13}, "7_3"}, {{7, 15}, "7_4"}, {{7, 17}, "7_5"},
        {{7, 19}, "7_6"}, {{7, 21}, "7_7"}};
    auto it = names.find({crossings, det});
    return it == names.end() ? std::string() : it->second;
}

}  // namespace

Catalog built_in_catalog() {
    Catalog c;
    std::map<std::string, bool> seen;
    std::map<long long, bool> seen_fraction;

    auto add_rational = [&](const std::vector<int>& cf, const std::string& forced_name) {
        long long p = 0, q = 0;
        LinkDiagram d = rational_diagram(cf, &p, &q);
        if (p % 2 == 0 || p <= 1) return;  // links and unknots
        if (!d.is_knot() || !is_reduced(d)) return;
        long long key = rational_key(p, q);
        if (seen_fraction.count(key)) return;
        std::string name = forced_name;
        if (name.empty()) name = table_name(d.crossing_count(), p);
        if (name.empty())
            name = "rational_" + std::to_string(p) + "_" + std::to_string(q) + "_c" +
                   std::to_string(d.crossing_count());
        std::size_t before = c.entries.size();
        push_entry(c, seen, name, d,
                   "rational tangle closure, fraction " + std::to_string(p) + "/" +
                       std::to_string(q));
        if (c.entries.size() > before) seen_fraction[key] = true;
    };

    // named families whose determinant alone would not pin the table name
    add_rational({9}, "9_1");       // (2,9) torus knot
    add_rational({2, 6}, "8_1");    // twist knots
    add_rational({2, 7}, "9_2");

    // everything rational with up to nine crossings
    for (int total = 3; total <= 9; ++total) {
        std::vector<int> cf;
        std::function<void(int)> gen = [&](int left) {
            if (left == 0) {
                add_rational(cf, "");
                return;
            }
            for (int a = 1; a <= left; ++a) {
                cf.push_back(a);
                gen(left - a);
                cf.pop_back();
            }
        };
        gen(total);
    }

    // non-alternating entries: the torus knot in its table form and as a
    // braid closure, plus an alternating pretzel
    push_entry(c, seen, "8_19", standard_8_19_diagram(), "(3,4) torus knot, table diagram");
    {
        CatalogEntry& e = c.entries.back();
        e.known_genus = 1;
        e.known_width = 2;
    }
    push_entry(c, seen, "torus_3_4_braid", torus_3_4_braid(), "torus braid (sigma1 sigma2)^4");
    push_entry(c, seen, "pretzel_3_3_3", pretzel_diagram({3, 3, 3}), "pretzel (3,3,3)");

    // seeded random diagrams: reduced alternating ones and mixed ones
    std::mt19937_64 rng(20240817u);
    int alt_made = 0;
    while (alt_made < 12) {
        LinkDiagram d = random_knot_diagram(rng, 5, 9);
        LinkDiagram alt = make_alternating(d);
        if (!is_reduced(alt)) continue;
        std::string name = "random_alt_" + std::to_string(alt.crossing_count()) + "_" +
                           std::to_string(alt_made);
        std::size_t before = c.entries.size();
        push_entry(c, seen, name, alt, "random reduced alternating diagram, seed 20240817");
        if (c.entries.size() > before) ++alt_made;
    }
    int mixed_made = 0;
    while (mixed_made < 12) {
        LinkDiagram d = random_knot_diagram(rng, 4, 9);
        if (is_alternating_diagram(d)) continue;
        std::string name = "random_" + std::to_string(d.crossing_count()) + "_" +
                           std::to_string(mixed_made);
        std::size_t before = c.entries.size();
        push_entry(c, seen, name, d, "random diagram, seed 20240817");
        if (c.entries.size() > before) ++mixed_made;
    }
    return c;
}

ResultRecord compute_record(const LinkDiagram& d, const std::string& name) {
    ResultRecord r;
    r.canonical_pd = d.canonical();
    r.name = name;
    r.tool_version = kToolVersion;
    TuraevReport t = turaev_report(d);
    r.V = t.V;
    r.E = t.E;
    r.F = t.F;
    r.chi = t.chi;
    if (!d.is_knot()) throw invariant_error("result records need a knot diagram");
    r.genus = t.genus.at(0);
    StateSummary s = analyze_states(d);
    r.width = s.width;
    r.state_count = s.state_count;
    r.Delta = s.table.Delta2 / 2;
    r.delta = s.table.delta2 / 2;
    if (r.width != r.genus + 1)
        throw invariant_error("width " + std::to_string(r.width) + " != genus+1 " +
                              std::to_string(r.genus + 1) + " on " + r.canonical_pd);
    auto now = std::chrono::system_clock::now();
    r.timestamp = std::to_string(
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count());
    return r;
}

std::string ResultRecord::to_json(bool with_timestamp) const {
    nlohmann::json j = {{"pd", canonical_pd}, {"name", name},       {"V", V},
                        {"E", E},             {"F", F},             {"chi", chi},
                        {"genus", genus},     {"width", width},     {"state_count", state_count},
                        {"Delta", Delta},     {"delta", delta},     {"tool_version", tool_version}};
    if (with_timestamp) j["timestamp"] = timestamp;
    return j.dump();
}

}  // namespace tw
