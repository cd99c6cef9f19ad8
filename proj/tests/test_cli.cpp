#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "quadchrom/io.hpp"

namespace fs = std::filesystem;
using quadchrom::io::json;

namespace {

#ifndef QUADCHROM_BIN
#define QUADCHROM_BIN "quadchrom"
#endif

int run(const std::string& args) {
    std::string cmd = std::string(QUADCHROM_BIN) + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("quadchrom_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate, analyze, witness and export round trip") {
    TempDir tmp;
    std::string grid = tmp.file("grid.json");
    REQUIRE(run("generate --family projective-grid --m 2 --n 3 --out " + grid) == 0);

    json loaded = quadchrom::io::load_json_file(grid);
    CHECK(loaded.at("vertices").size() == 10);

    std::string report = tmp.file("report.json");
    CHECK(run("analyze " + grid + " --betti --bipartite --chromatic --out " + report) == 0);
    json rep = quadchrom::io::load_json_file(report);
    CHECK(rep.at("betti") == json({1, 1, 1}));
    CHECK(rep.at("bipartite").at("bipartite") == false);
    CHECK(rep.at("chromatic").at("value") == 4);
    CHECK(rep.at("chromatic").at("exact") == true);

    std::string wit = tmp.file("wit.json");
    CHECK(run("witness " + grid + " --enumerate 4 --limit 20 --out " + wit) == 0);
    json w = quadchrom::io::load_json_file(wit);
    CHECK(w.at("colorings_total").get<int>() == 20);
    CHECK(w.at("rainbow_found").get<int>() == 20);

    std::string dot = tmp.file("g.dot");
    CHECK(run("export " + grid + " --dot --out " + dot) == 0);
    CHECK(slurp(dot).find("graph quadchrom {") == 0);
}

TEST_CASE("scaffold bundle and clique analysis") {
    TempDir tmp;
    std::string dir = tmp.file("sc1");
    REQUIRE(run("generate --family rp3-scaffold --k 1 --out " + dir) == 0);
    for (const char* name : {"boundary_sphere.json", "annulus_1.json", "rho.json",
                             "quotient_two_complex.json", "quotient_graph.json", "labels.json"})
        CHECK(fs::exists(fs::path(dir) / name));

    CHECK(run("analyze " + dir + "/quotient_graph.json --clique 4") == 0);
    // A K5 does not exist for k = 1: the check fails with a nonzero exit.
    CHECK(run("analyze " + dir + "/quotient_graph.json --clique 5") == 1);
}

TEST_CASE("bad inputs produce nonzero exits") {
    TempDir tmp;
    CHECK(run("generate --family nonsense --out " + tmp.file("x.json")) != 0);
    CHECK(run("analyze " + tmp.file("missing.json") + " --betti") != 0);

    std::string broken = tmp.file("broken.json");
    std::ofstream(broken) << "{\"dimension\": 1, \"vertices\": [\"a\"], \"cells\": {\"1\": "
                             "[{\"id\": \"e\", \"facets\": [\"a\"], \"vertices\": [\"a\", "
                             "\"a\"]}]}}";
    CHECK(run("analyze " + broken + " --betti") != 0);
}

TEST_CASE("generation is deterministic byte for byte") {
    TempDir tmp;
    std::string a = tmp.file("a.json"), b = tmp.file("b.json");
    REQUIRE(run("generate --family torus-grid --dims 3,3 --out " + a) == 0);
    REQUIRE(run("generate --family torus-grid --dims 3,3 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    std::string r1 = tmp.file("r1.json"), r2 = tmp.file("r2.json");
    REQUIRE(run("analyze " + a + " --betti --ring-conditions --out " + r1) == 0);
    REQUIRE(run("analyze " + a + " --betti --ring-conditions --out " + r2) == 0);
    CHECK(slurp(r1) == slurp(r2));
}

TEST_CASE("witness with an explicit coloring file and improper rejection") {
    TempDir tmp;
    std::string rp2 = tmp.file("rp2.json");
    REQUIRE(run("generate --family rp-cube-quotient --d 2 --out " + rp2) == 0);

    // Build a proper coloring file for the K4 skeleton by id.
    json cj;
    cj["K"] = 4;
    json colors = json::object();
    json loaded = quadchrom::io::load_json_file(rp2);
    int next = 1;
    for (const auto& v : loaded.at("vertices")) colors[v.get<std::string>()] = next++;
    cj["colors"] = colors;
    std::string cfile = tmp.file("coloring.json");
    quadchrom::io::write_json_file(cfile, cj);
    CHECK(run("witness " + rp2 + " --coloring " + cfile) == 0);

    // Monochromatic edge: rejected.
    json badj = cj;
    badj["colors"][loaded.at("vertices").at(0).get<std::string>()] = 2;
    std::string bad = tmp.file("bad.json");
    quadchrom::io::write_json_file(bad, badj);
    CHECK(run("witness " + rp2 + " --coloring " + bad) == 2);
}

TEST_CASE("witness reports when no proper coloring exists") {
    TempDir tmp;
    std::string rp2 = tmp.file("rp2.json");
    REQUIRE(run("generate --family rp-cube-quotient --d 2 --out " + rp2) == 0);
    std::string out = tmp.file("w3.json");
    CHECK(run("witness " + rp2 + " --enumerate 3 --limit 10 --out " + out) == 0);
    json w = quadchrom::io::load_json_file(out);
    CHECK(w.at("no_proper_coloring") == true);
    CHECK(w.at("chromatic").at("value") == 4);
}

TEST_CASE("bounds report for a projective grid") {
    TempDir tmp;
    std::string grid = tmp.file("grid.json");
    REQUIRE(run("generate --family projective-grid --m 1 --n 3 --out " + grid) == 0);
    std::string report = tmp.file("bounds.json");
    CHECK(run("analyze " + grid + " --bounds --out " + report) == 0);
    json rep = quadchrom::io::load_json_file(report);
    CHECK(rep.at("bounds").at("euler_genus") == 1);
    CHECK(rep.at("bounds").at("heawood") == 6);
    CHECK(rep.at("bounds").at("hutchinson") == 4);
}
