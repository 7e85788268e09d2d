#include "tw/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tw/catalog.hpp"
#include "tw/planemap.hpp"
#include "tw/skein.hpp"
#include "tw/states.hpp"
#include "tw/tait.hpp"
#include "tw/turaev.hpp"

namespace fs = std::filesystem;

namespace tw {

namespace {

std::string cache_dir_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TWIDTH_CACHE_DIR")) return env;
    return ".twidth-cache";
}

Catalog load_active_catalog(const std::string& catalog_flag, const std::string& cache_dir) {
    if (!catalog_flag.empty()) return load_catalog_file(catalog_flag);
    fs::path cached = fs::path(cache_dir) / "catalog.json";
    if (fs::exists(cached)) return load_catalog_file(cached.string());
    return built_in_catalog();
}

LinkDiagram resolve_input(const std::string& text, const Catalog& catalog, std::string* name_out) {
    if (text.rfind("PD", 0) == 0 || text.rfind("U", 0) == 0) return LinkDiagram::parse(text);
    const CatalogEntry* e = catalog.find(text);
    if (!e) throw parse_error("no catalog entry named '" + text + "'", 0);
    if (name_out) *name_out = e->name;
    return e->diagram();
}

std::set<std::string> existing_record_keys(const fs::path& records) {
    std::set<std::string> keys;
    std::ifstream in(records);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.contains("pd")) keys.insert(j["pd"].get<std::string>());
    }
    return keys;
}

void append_records(const fs::path& dir, const std::vector<std::string>& lines) {
    fs::create_directories(dir);
    fs::path file = dir / "results.jsonl";
    // the jsonl cache is append-only under an exclusive lock
    std::ofstream out(file, std::ios::app);
    static std::mutex process_lock;
    std::lock_guard<std::mutex> guard(process_lock);
    for (const std::string& l : lines) out << l << '\n';
}

// ---- verify checks ----------------------------------------------------

struct CheckOutcome {
    long long passed = 0, failed = 0;
    std::vector<std::string> repro;
    void fail(const std::string& what) {
        ++failed;
        if (repro.size() < 20) repro.push_back(what);
    }
};

using CheckFn = void (*)(const CatalogEntry&, const LinkDiagram&, CheckOutcome&);

void check_eta_identity(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    // the per-state identity 2(A-M) = eta is asserted inside the enumeration
    try {
        analyze_states(d);
        ++out.passed;
    } catch (const std::exception& ex) {
        out.fail(e.name + " " + d.canonical() + "  # " + ex.what());
    }
}

void check_width_genus(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    int w = width(d);
    int g = d.crossing_count() ? turaev_genus_diagram(d) : 0;
    if (w == g + 1)
        ++out.passed;
    else
        out.fail(e.name + " " + d.canonical() + "  # width=" + std::to_string(w) +
                 " genus=" + std::to_string(g));
}

void check_state_count_oracle(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    if (d.crossing_count() == 0) {
        ++out.passed;
        return;
    }
    PlaneMap m(d);
    auto [t1, t2] = labeled_tait_graphs(m);
    long long trees1 = spanning_tree_count(t1);
    long long trees2 = spanning_tree_count(t2);
    long long states = analyze_states(d).state_count;
    if (trees1 == trees2 && trees1 == states)
        ++out.passed;
    else
        out.fail(e.name + " " + d.canonical() + "  # states=" + std::to_string(states) +
                 " trees=" + std::to_string(trees1) + "/" + std::to_string(trees2));
}

void check_euler_char_symmetry(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    Laurent p = graded_euler_characteristic(analyze_states(d).table);
    long long at1 = p.eval_at_one();
    if (p.palindromic() && (at1 == 1 || at1 == -1))
        ++out.passed;
    else
        out.fail(e.name + " " + d.canonical() + "  # poly=" + p.str());
}

void check_marked_edge_invariance(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    int w0 = width(d, 1);
    for (int arc = 2; arc <= d.arc_count(); ++arc) {
        if (width(d, arc) != w0) {
            out.fail(e.name + " " + d.canonical() + "  # marked arc " + std::to_string(arc));
            return;
        }
    }
    ++out.passed;
}

void check_crossing_change(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    int w0 = width(d);
    for (int k = 0; k < d.crossing_count(); ++k) {
        int predicted = predict_width_change(d, k);
        int actual = width(d.with_crossing_changed(k)) - w0;
        if (predicted != actual) {
            out.fail(e.name + " " + d.canonical() + "  # site=" + std::to_string(k) +
                     " predicted=" + std::to_string(predicted) + " actual=" + std::to_string(actual));
            return;
        }
    }
    ++out.passed;
}

void check_genus_change(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    int g0 = d.crossing_count() ? turaev_genus_diagram(d) : 0;
    for (int k = 0; k < d.crossing_count(); ++k) {
        int predicted = predict_genus_change(d, k);
        int actual = turaev_genus_diagram(d.with_crossing_changed(k)) - g0;
        if (predicted != actual) {
            out.fail(e.name + " " + d.canonical() + "  # site=" + std::to_string(k) +
                     " predicted=" + std::to_string(predicted) + " actual=" + std::to_string(actual));
            return;
        }
    }
    ++out.passed;
}

void check_skein(const CatalogEntry& e, const LinkDiagram& d, CheckOutcome& out) {
    for (int k = 0; k < d.crossing_count(); ++k) {
        SkeinResiduals r = skein_check(d, k);
        CircleCounts c = skein_circle_counts(skein_quadruple(d, k));
        if (!r.all_zero() || !c.identities_hold()) {
            out.fail(e.name + " " + d.canonical() + "  # site=" + std::to_string(k) +
                     " residuals=(" + std::to_string(r.chi) + "," + std::to_string(r.g) + "," +
                     std::to_string(r.w) + ")");
            return;
        }
    }
    ++out.passed;
}

const std::vector<std::pair<std::string, CheckFn>> kChecks = {
    {"marked-edge-invariance", check_marked_edge_invariance},
    {"eta-identity", check_eta_identity},
    {"width-genus", check_width_genus},
    {"crossing-change", check_crossing_change},
    {"genus-change", check_genus_change},
    {"skein", check_skein},
    {"euler-char-symmetry", check_euler_char_symmetry},
    {"state-count-oracle", check_state_count_oracle},
};

int cmd_verify(const Catalog& catalog, const std::vector<std::string>& selected, int jobs,
               std::ostream& out) {
    std::vector<std::pair<std::string, CheckFn>> active;
    for (const auto& [name, fn] : kChecks)
        if (selected.empty() || std::find(selected.begin(), selected.end(), name) != selected.end())
            active.push_back({name, fn});
    if (active.empty()) throw parse_error("no known checks selected", 0);

    std::vector<std::vector<CheckOutcome>> results(
        catalog.entries.size(), std::vector<CheckOutcome>(active.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= catalog.entries.size()) return;
            LinkDiagram d = catalog.entries[i].diagram();
            for (std::size_t c = 0; c < active.size(); ++c) {
                try {
                    active[c].second(catalog.entries[i], d, results[i][c]);
                } catch (const std::exception& ex) {
                    results[i][c].fail(catalog.entries[i].name + "  # " + ex.what());
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_ok = true;
    for (std::size_t c = 0; c < active.size(); ++c) {
        long long pass = 0, fail = 0;
        std::vector<std::string> repro;
        for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
            pass += results[i][c].passed;
            fail += results[i][c].failed;
            for (const std::string& r : results[i][c].repro) repro.push_back(r);
        }
        out << "check " << active[c].first << ": " << pass << " passed, " << fail << " failed\n";
        for (const std::string& r : repro) out << "  FAIL " << r << '\n';
        all_ok = all_ok && fail == 0;
    }
    return all_ok ? 0 : 3;
}

std::string report_text(const ResultRecord& r) {
    std::ostringstream out;
    out << "diagram:      " << r.canonical_pd << '\n';
    if (!r.name.empty()) out << "name:         " << r.name << '\n';
    out << "crossings:    " << r.E << '\n'
        << "V,E,F:        " << r.V << "," << r.E << "," << r.F << '\n'
        << "chi:          " << r.chi << '\n'
        << "genus:        " << r.genus << '\n'
        << "states:       " << r.state_count << '\n'
        << "width:        " << r.width << "  (diagonals " << r.delta << ".." << r.Delta << ")\n";
    return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kauffman-state width and Turaev-surface genus of link diagrams"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string input, cache_flag, catalog_flag, what = "all", file;
    std::string checks_flag;
    bool as_text = false, as_json = false;
    int marked_edge = 0, site = -1, jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 2;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("input", input, "PD expression or catalog name")->required();
        sub->add_option("--cache-dir", cache_flag, "cache directory (env TWIDTH_CACHE_DIR)");
        sub->add_option("--catalog", catalog_flag, "catalog file overriding the built-in one");
    };

    CLI::App* report = app.add_subcommand("report", "invariants of one diagram");
    add_common(report, true);
    report->add_flag("--text", as_text, "human-readable output");
    report->add_flag("--json", as_json, "JSON output (default)");
    report->add_option("--marked-edge", marked_edge, "marked arc for the state complex");

    CLI::App* table = app.add_subcommand("table", "bigrading table of a knot diagram");
    add_common(table, true);
    table->add_flag("--text", as_text, "matrix layout, Alexander rows / Maslov columns");
    table->add_flag("--json", as_json, "JSON output (default)");
    table->add_option("--marked-edge", marked_edge, "marked arc for the state complex");

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites over a catalog");
    add_common(verify, false);
    verify->add_option("file", file, "catalog file (defaults to the active catalog)");
    verify->add_option("--checks", checks_flag, "comma-separated list of checks");
    verify->add_option("--jobs", jobs, "worker threads");

    CLI::App* skein = app.add_subcommand("skein", "skein quadruple report at a crossing");
    add_common(skein, true);
    skein->add_option("--site", site, "crossing index (default: all crossings)");

    CLI::App* ingest = app.add_subcommand("ingest", "validate a catalog file into the cache");
    add_common(ingest, false);
    ingest->add_option("file", file, "CSV (name,pd,alternating) or JSON array")->required();

    CLI::App* exportdot = app.add_subcommand("export-dot", "DOT export of the graphs");
    add_common(exportdot, true);
    exportdot->add_option("--what", what, "tait | ribbon-a | ribbon-b | all");

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const std::string cache_dir = cache_dir_path(cache_flag);
    try {
        Catalog catalog = load_active_catalog(catalog_flag, cache_dir);

        if (report->parsed()) {
            std::string name;
            LinkDiagram d = resolve_input(input, catalog, &name);
            if (!d.is_knot()) {
                // links get the normalized invariants; the state complex needs a knot
                TuraevReport t = turaev_report(d);
                nlohmann::json j = nlohmann::json::parse(t.to_json());
                j["pd"] = d.canonical();
                j["w_bar"] = normalized_width(d);
                j["g_bar"] = normalized_genus(d);
                out << j.dump() << '\n';
                return 0;
            }
            ResultRecord r = compute_record(d, name);
            out << (as_text ? report_text(r) : r.to_json() + "\n");
            fs::path dir(cache_dir);
            if (!existing_record_keys(dir / "results.jsonl").count(r.canonical_pd))
                append_records(dir, {r.to_json()});
            return 0;
        }
        if (table->parsed()) {
            LinkDiagram d = resolve_input(input, catalog, nullptr);
            BigradingTable t = bigrading_table(d, marked_edge);
            out << (as_text ? t.to_text() : t.to_json() + "\n");
            return 0;
        }
        if (verify->parsed()) {
            Catalog active = file.empty() ? catalog : load_catalog_file(file);
            std::vector<std::string> selected;
            std::stringstream ss(checks_flag);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) selected.push_back(item);
            return cmd_verify(active, selected, jobs, out);
        }
        if (skein->parsed()) {
            LinkDiagram d = resolve_input(input, catalog, nullptr);
            if (site >= 0) {
                out << skein_report_json(d, site) << '\n';
            } else {
                out << "[";
                for (int k = 0; k < d.crossing_count(); ++k)
                    out << (k ? ",\n " : "") << skein_report_json(d, k);
                out << "]\n";
            }
            return 0;
        }
        if (ingest->parsed()) {
            std::vector<std::string> bad;
            Catalog loaded = load_catalog_file(file, &bad);
            std::set<std::string> names;
            for (const CatalogEntry& e : loaded.entries)
                if (!names.insert(e.name).second)
                    throw parse_error("duplicate catalog name " + e.name, 0);
            fs::create_directories(cache_dir);
            {
                std::ofstream cat(fs::path(cache_dir) / "catalog.json");
                cat << catalog_to_json(loaded) << '\n';
            }
            std::set<std::string> known = existing_record_keys(fs::path(cache_dir) / "results.jsonl");
            std::vector<std::string> fresh;
            long long skipped = 0;
            for (const CatalogEntry& e : loaded.entries) {
                LinkDiagram d = e.diagram();
                if (!d.is_knot()) continue;
                ResultRecord r = compute_record(d, e.name);
                if (known.count(r.canonical_pd)) {
                    ++skipped;
                    continue;
                }
                known.insert(r.canonical_pd);
                fresh.push_back(r.to_json());
            }
            append_records(cache_dir, fresh);
            out << "ingested " << loaded.entries.size() << " entries (" << bad.size()
                << " rejected rows), " << fresh.size() << " new records, " << skipped
                << " already cached\n";
            for (const std::string& b : bad) err << "rejected: " << b << '\n';
            return 0;
        }
        if (exportdot->parsed()) {
            LinkDiagram d = resolve_input(input, catalog, nullptr);
            if (d.is_split()) throw parse_error("DOT export needs a non-split diagram", 0);
            if (what == "tait" || what == "all") {
                PlaneMap m(d);
                auto [t1, t2] = labeled_tait_graphs(m);
                out << to_dot(t1, "tait_black") << to_dot(t2, "tait_white");
            }
            if (what == "ribbon-a" || what == "all")
                out << ribbon_graph(d, Splice::A).to_dot("ribbon_A");
            if (what == "ribbon-b" || what == "all")
                out << ribbon_graph(d, Splice::B).to_dot("ribbon_B");
            return 0;
        }
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const invariant_error& e) {
        err << "internal cross-check failed: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace tw
