#include <stdexcept>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "quadchrom/builders.hpp"
#include "quadchrom/complex.hpp"
#include "quadchrom/graph.hpp"

using namespace quadchrom;

namespace {

Graph complete_graph(int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("k" + std::to_string(i));
    Graph g(ids);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph cycle_graph(int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
    Graph g(ids);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("r" + std::to_string(i));
    Graph g(ids);
    std::bernoulli_distribution edge(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) g.add_edge(a, b);
    return g;
}

bool witness_is_valid_odd_cycle(const Graph& g, const CycleWitness& w) {
    if (w.vertices.size() < 3 || w.vertices.size() % 2 == 0) return false;
    std::set<VertexIndex> seen(w.vertices.begin(), w.vertices.end());
    if (seen.size() != w.vertices.size()) return false;
    for (auto [a, b] : w.edges())
        if (!g.adjacent(a, b)) return false;
    return true;
}

}  // namespace

TEST_CASE("bipartiteness basics") {
    Graph edge({"a", "b"});
    edge.add_edge(0, 1);
    CHECK(is_bipartite(edge).bipartite);

    auto k4 = is_bipartite(complete_graph(4));
    CHECK(!k4.bipartite);
    REQUIRE(k4.odd_cycle.has_value());
    CHECK(k4.odd_cycle->vertices.size() == 3);
    CHECK(witness_is_valid_odd_cycle(complete_graph(4), *k4.odd_cycle));
}

TEST_CASE("bipartite witnesses are valid on random graphs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 14), 0.3);
        auto res = is_bipartite(g);
        if (res.bipartite) {
            for (auto [a, b] : g.edges()) CHECK(res.side[a] != res.side[b]);
        } else {
            REQUIRE(res.odd_cycle.has_value());
            CHECK(witness_is_valid_odd_cycle(g, *res.odd_cycle));
        }
    }
}

TEST_CASE("clique search") {
    auto k4 = contains_clique(complete_graph(4), 4);
    REQUIRE(k4.has_value());
    CHECK(*k4 == std::vector<VertexIndex>{0, 1, 2, 3});

    CHECK(!contains_clique(cycle_graph(5), 3).has_value());
    CHECK(max_clique(complete_graph(6)).size() == 6);
    CHECK(max_clique(cycle_graph(5)).size() == 2);

    // The witness is lexicographically least: remove vertex 0 from one K4.
    Graph g({"a", "b", "c", "d", "e"});
    // K4 on {1,2,3,4} and a K3 on {0,1,2}
    for (int a = 1; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    auto c3 = contains_clique(g, 3);
    REQUIRE(c3.has_value());
    CHECK(*c3 == std::vector<VertexIndex>{0, 1, 2});
}

TEST_CASE("chromatic number of small graphs") {
    auto k4 = chromatic_number(complete_graph(4));
    CHECK(k4.exact);
    CHECK(k4.value == 4);
    CHECK(k4.lower_bound == 4);
    CHECK(check_proper(complete_graph(4), k4.coloring));

    auto c5 = chromatic_number(cycle_graph(5));
    CHECK(c5.exact);
    CHECK(c5.value == 3);

    auto c6 = chromatic_number(cycle_graph(6));
    CHECK(c6.exact);
    CHECK(c6.value == 2);
}

TEST_CASE("chromatic number matches a brute-force oracle on random graphs") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.45);
        // Oracle: try all assignments with up to n colors, smallest k first.
        int oracle = n;
        for (int k = 1; k <= n; ++k) {
            bool found = false;
            std::vector<int> color(n, 1);
            while (true) {
                bool proper = true;
                for (auto [a, b] : g.edges())
                    if (color[a] == color[b]) proper = false;
                if (proper) {
                    found = true;
                    break;
                }
                int i = 0;
                while (i < n && color[i] == k) color[i++] = 1;
                if (i == n) break;
                ++color[i];
            }
            if (found) {
                oracle = k;
                break;
            }
        }
        auto res = chromatic_number(g);
        CHECK(res.exact);
        CHECK(res.value == oracle);
        CHECK(check_proper(g, res.coloring));
        CHECK(res.lower_bound >= static_cast<int>(max_clique(g).size()));
    }
}

TEST_CASE("chromatic number of generated skeletons") {
    CubicalComplex t3 = torus_grid({3, 3, 3});
    auto res = chromatic_number(one_skeleton_graph(t3).graph);
    CHECK(res.exact);
    CHECK(res.value == 3);

    CubicalComplex rp2 = rp_cube_quotient(2);
    auto res2 = chromatic_number(one_skeleton_graph(rp2).graph);
    CHECK(res2.exact);
    CHECK(res2.value == 4);  // K4 skeleton
}

TEST_CASE("canonical coloring enumeration") {
    std::vector<Coloring> out;
    auto sink = [&](const Coloring& c) {
        out.push_back(c);
        return true;
    };
    CHECK(enumerate_proper_colorings(complete_graph(3), 3, 100, sink) == 1);
    out.clear();

    Graph path({"a", "b", "c"});
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(enumerate_proper_colorings(path, 2, 100, sink) == 1);
    out.clear();

    CHECK(enumerate_proper_colorings(complete_graph(4), 4, 100, sink) == 1);
    out.clear();

    // Every emitted coloring is proper and canonical.
    std::mt19937 rng(91);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        std::size_t count = enumerate_proper_colorings(g, 3, 500, [&](const Coloring& c) {
            CHECK(check_proper(g, c));
            CHECK(c.color[0] == 1);
            return true;
        });
        (void)count;
    }

    // The limit is honored.
    Graph empty5({"a", "b", "c", "d", "e"});
    CHECK(enumerate_proper_colorings(empty5, 4, 7, sink) == 7);
    CHECK_THROWS_AS(enumerate_proper_colorings(empty5, 7, 10, sink), std::invalid_argument);
}

TEST_CASE("check_proper") {
    Graph k4 = complete_graph(4);
    Coloring good{4, {1, 2, 3, 4}};
    CHECK(check_proper(k4, good));
    Coloring mono{4, {1, 1, 3, 4}};
    CHECK(!check_proper(k4, mono));
    Coloring bad{3, {1, 2, 3, 4}};
    CHECK_THROWS_AS(check_proper(k4, bad), std::invalid_argument);
}

TEST_CASE("bound formulas against a floating-point oracle") {
    CHECK(heawood_bound(1) == 6);
    CHECK(heawood_bound(2) == 7);
    CHECK(hutchinson_bound(1) == 4);
    CHECK_THROWS_AS(heawood_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(hutchinson_bound(0), std::invalid_argument);

    for (long long k = 1; k <= 2000; ++k) {
        long double h = (7.0L + std::sqrt(24.0L * k + 1.0L)) / 2.0L;
        long double u = (5.0L + std::sqrt(16.0L * k - 7.0L)) / 2.0L;
        CHECK(heawood_bound(k) == static_cast<int>(std::floor(h + 1e-12L)));
        CHECK(hutchinson_bound(k) == static_cast<int>(std::floor(u + 1e-12L)));
    }
}

TEST_CASE("chromatic number equals clique number on complete graphs") {
    for (int n = 1; n <= 7; ++n) {
        Graph g = complete_graph(n);
        auto res = chromatic_number(g);
        CHECK(res.exact);
        CHECK(res.value == n);
        CHECK(max_clique(g).size() == static_cast<std::size_t>(n));
    }
}
