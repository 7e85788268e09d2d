#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tw/catalog.hpp"
#include "tw/cli.hpp"
#include "tw/generate.hpp"
#include "tw/skein.hpp"
#include "tw/tait.hpp"

using namespace tw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("twtest-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("the built-in catalog is large, valid and named uniquely") {
    Catalog c = built_in_catalog();
    CHECK(c.entries.size() >= 84);
    std::set<std::string> names;
    int alternating = 0;
    for (const CatalogEntry& e : c.entries) {
        CHECK(names.insert(e.name).second);
        LinkDiagram d = e.diagram();  // validates
        CHECK(d.crossing_count() <= 9);
        CHECK(d.is_knot());
        if (e.alternating && *e.alternating) ++alternating;
    }
    CHECK(alternating >= 60);
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2",
                             "7_3", "7_4", "7_5", "7_6", "7_7", "8_1", "8_19", "9_1", "9_2"}) {
        const CatalogEntry* e = c.find(name);
        REQUIRE(e != nullptr);
        CHECK(e->diagram().is_knot());
    }
    // the named table entries declare their expectations
    CHECK(c.find("8_19")->known_width == 2);
    CHECK(c.find("8_19")->known_genus == 1);
    CHECK(c.find("4_1")->alternating == true);
    CHECK(c.find("4_1")->known_width == 1);
}

TEST_CASE("named rational entries carry the right determinants") {
    Catalog c = built_in_catalog();
    struct Row {
        const char* name;
        int crossings;
        long long det;
    };
    for (const Row& r : {Row{"3_1", 3, 3}, Row{"4_1", 4, 5}, Row{"5_1", 5, 5}, Row{"5_2", 5, 7},
                         Row{"6_1", 6, 9}, Row{"6_2", 6, 11}, Row{"6_3", 6, 13}, Row{"7_1", 7, 7},
                         Row{"7_4", 7, 15}, Row{"7_7", 7, 21}, Row{"8_1", 8, 13},
                         Row{"9_1", 9, 9}, Row{"9_2", 9, 15}}) {
        const CatalogEntry* e = c.find(r.name);
        REQUIRE(e != nullptr);
        LinkDiagram d = e->diagram();
        CHECK(d.crossing_count() == r.crossings);
        CHECK(is_alternating_diagram(d));
        CHECK(is_reduced(d));
        PlaneMap m(d);
        auto [t1, t2] = labeled_tait_graphs(m);
        CHECK(spanning_tree_count(t1) == r.det);
    }
}

TEST_CASE("csv parsing keeps good rows and reports bad ones") {
    std::string csv =
        "name,pd,alternating\n"
        "trefoil,\"PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]\",1\n"
        "broken,\"PD[X(1,2,3)]\",0\n"
        "kink,\"PD[X(1,1,2,2)]\",1\n";
    std::vector<std::string> bad;
    Catalog c = parse_catalog_csv(csv, &bad);
    CHECK(c.entries.size() == 2);
    CHECK(bad.size() == 1);
    CHECK(c.entries[0].name == "trefoil");
    CHECK(c.entries[0].alternating == true);
}

TEST_CASE("json catalog round-trips") {
    Catalog c;
    CatalogEntry e;
    e.name = "kink";
    e.pd = "PD[X(1,1,2,2)]";
    e.alternating = true;
    e.source = "test";
    c.entries.push_back(e);
    Catalog back = parse_catalog_json(catalog_to_json(c));
    REQUIRE(back.entries.size() == 1);
    CHECK(back.entries[0].name == "kink");
    CHECK(back.entries[0].alternating == true);
}

TEST_CASE("compute_record checks the width-genus identity") {
    ResultRecord r = compute_record(standard_8_19_diagram(), "8_19");
    CHECK(r.V == 3);
    CHECK(r.E == 8);
    CHECK(r.F == 5);
    CHECK(r.genus == 1);
    CHECK(r.width == 2);
    CHECK(r.state_count == 27);
    CHECK(r.Delta == 3);
    CHECK(r.delta == 2);
    std::string j = r.to_json(false);
    CHECK(j.find("\"timestamp\"") == std::string::npos);
    CHECK(j.find("\"width\":2") != std::string::npos);
}

TEST_CASE("cli report on a PD and on a catalog name") {
    TempDir tmp;
    std::string out;
    int code = cli({"report", "PD[X(1,1,2,2)]", "--cache-dir", tmp.path.string()}, &out);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["width"] == 1);
    CHECK(j["genus"] == 0);
    CHECK(j["state_count"] == 1);

    code = cli({"report", "8_19", "--cache-dir", tmp.path.string()}, &out);
    CHECK(code == 0);
    j = nlohmann::json::parse(out);
    CHECK(j["width"] == 2);
    CHECK(j["genus"] == 1);
    CHECK(j["state_count"] == 27);

    code = cli({"report", "4_1", "--cache-dir", tmp.path.string()}, &out);
    CHECK(code == 0);
    j = nlohmann::json::parse(out);
    CHECK(j["width"] == 1);
    CHECK(j["genus"] == 0);
}

TEST_CASE("cli exit codes: 2 for bad input, 0 for success") {
    TempDir tmp;
    std::string out, err;
    CHECK(cli({"report", "PD[X(1,2,3)]", "--cache-dir", tmp.path.string()}, &out, &err) == 2);
    CHECK(cli({"report", "no_such_name", "--cache-dir", tmp.path.string()}, &out, &err) == 2);
    CHECK(cli({"nonsense"}, &out, &err) == 2);
    CHECK(cli({"table", "U", "--cache-dir", tmp.path.string()}, &out, &err) == 0);
}

TEST_CASE("cli report is byte-stable modulo the timestamp") {
    TempDir tmp;
    std::string first, second;
    cli({"report", "8_19", "--cache-dir", tmp.path.string()}, &first);
    cli({"report", "8_19", "--cache-dir", tmp.path.string()}, &second);
    CHECK(first == second);  // timestamps live only in the cache records
}

TEST_CASE("cli table text matches the published matrix") {
    std::string out;
    int code = cli({"table", "8_19", "--text"}, &out);
    CHECK(code == 0);
    CHECK(out ==
          "A\\M\t-6\t-5\t-4\t-3\t-2\t-1\t0\n"
          "-3\t1\t.\t.\t.\t.\t.\t.\n"
          "-2\t.\t2\t1\t.\t.\t.\t.\n"
          "-1\t.\t.\t3\t3\t.\t.\t.\n"
          "0\t.\t.\t.\t3\t4\t.\t.\n"
          "1\t.\t.\t.\t.\t3\t3\t.\n"
          "2\t.\t.\t.\t.\t.\t2\t1\n"
          "3\t.\t.\t.\t.\t.\t.\t1\n");
}

TEST_CASE("cli skein emits residual-free quadruples") {
    std::string out;
    int code = cli({"skein", "PD[X(1,1,2,2)]", "--site", "0"}, &out);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["residuals"]["chi"] == 0);
    CHECK(j["L_zero"]["pd"] == "U+U");
}

TEST_CASE("cli ingest is idempotent and keeps valid rows") {
    TempDir tmp;
    fs::path file = tmp.path / "cat.csv";
    {
        std::ofstream f(file);
        f << "name,pd,alternating\n"
             "trefoil,\"PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]\",1\n"
             "bad,\"PD[X(9,9,9,9)]\",0\n"
             "kink,\"PD[X(1,1,2,2)]\",1\n";
    }
    std::string out, err;
    int code = cli({"ingest", file.string(), "--cache-dir", tmp.path.string()}, &out, &err);
    CHECK(code == 0);
    CHECK(out.find("2 entries") != std::string::npos);
    CHECK(out.find("1 rejected") != std::string::npos);
    CHECK(out.find("2 new records") != std::string::npos);

    std::ifstream records(tmp.path / "results.jsonl");
    int lines = 0;
    std::string line;
    while (std::getline(records, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 2);

    // re-ingesting adds nothing
    code = cli({"ingest", file.string(), "--cache-dir", tmp.path.string()}, &out, &err);
    CHECK(code == 0);
    CHECK(out.find("0 new records") != std::string::npos);
    std::ifstream again(tmp.path / "results.jsonl");
    int lines2 = 0;
    while (std::getline(again, line))
        if (!line.empty()) ++lines2;
    CHECK(lines2 == 2);
}

TEST_CASE("cli verify runs selected checks over a small catalog") {
    TempDir tmp;
    fs::path file = tmp.path / "cat.json";
    {
        Catalog small;
        for (const char* n : {"3_1", "4_1", "8_19"}) {
            const CatalogEntry* e = built_in_catalog().find(n);
            REQUIRE(e);
            small.entries.push_back(*e);
        }
        std::ofstream f(file);
        f << catalog_to_json(small);
    }
    std::string out;
    int code = cli({"verify", file.string(), "--checks", "width-genus,skein,state-count-oracle",
                    "--jobs", "2"},
                   &out);
    CHECK(code == 0);
    CHECK(out.find("check width-genus: 3 passed, 0 failed") != std::string::npos);
    CHECK(out.find("check skein: 3 passed, 0 failed") != std::string::npos);
}

TEST_CASE("cli export-dot emits all four graphs") {
    std::string out;
    int code = cli({"export-dot", "3_1"}, &out);
    CHECK(code == 0);
    CHECK(out.find("graph tait_black") != std::string::npos);
    CHECK(out.find("graph tait_white") != std::string::npos);
    CHECK(out.find("graph ribbon_A") != std::string::npos);
    CHECK(out.find("graph ribbon_B") != std::string::npos);
}

TEST_CASE("cli report on a link falls back to normalized invariants") {
    std::string out;
    int code = cli({"report", "U+U"}, &out);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["w_bar"] == 0);
    CHECK(j["g_bar"] == -1);
    CHECK(j["chi"] == 4);
}
