#include <set>
#include <stdexcept>

#include "doctest.h"
#include "quadchrom/builders.hpp"
#include "quadchrom/homology.hpp"

using namespace quadchrom;

TEST_CASE("projective grid counts follow the closed formulas") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 6; ++n) {
            if (m == 1 && n == 2) continue;
            CubicalComplex cx = projective_grid_rp2(m, n);
            CHECK(cx.cell_count(0) == static_cast<std::size_t>(1 + 2 * n * (m - 1) + n));
            CHECK(cx.cell_count(1) == static_cast<std::size_t>(2 * n + 4 * n * (m - 1)));
            CHECK(cx.cell_count(2) == static_cast<std::size_t>(n + 2 * n * (m - 1)));
            CHECK(euler_characteristic(cx) == 1);
            CHECK(validate(cx).ok());
            QuadReport q = check_quadrangulation(cx);
            CHECK(q.faces_are_quads);
            CHECK(q.closed_surface);
            CHECK(is_bipartite(one_skeleton_graph(cx).graph).bipartite == (n % 2 == 0));
        }
    CHECK_THROWS_AS(projective_grid_rp2(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(projective_grid_rp2(0, 3), std::invalid_argument);
}

TEST_CASE("projective grid (1,3) is the K4 model") {
    CubicalComplex cx = projective_grid_rp2(1, 3);
    CHECK(cx.cell_count(0) == 4);
    CHECK(cx.cell_count(1) == 6);
    CHECK(cx.cell_count(2) == 3);
    Graph g = one_skeleton_graph(cx).graph;
    CHECK(g.edge_count() == 6);
    auto res = chromatic_number(g);
    CHECK(res.exact);
    CHECK(res.value == 4);
}

TEST_CASE("projective grid (2,3) is 4-chromatic") {
    CubicalComplex cx = projective_grid_rp2(2, 3);
    CHECK(betti_numbers(cx) == std::vector<int>{1, 1, 1});
    auto res = chromatic_number(one_skeleton_graph(cx).graph);
    CHECK(res.exact);
    CHECK(res.value == 4);
}

TEST_CASE("projective grid (1,4) is bipartite and 2-chromatic") {
    CubicalComplex cx = projective_grid_rp2(1, 4);
    auto bip = is_bipartite(one_skeleton_graph(cx).graph);
    CHECK(bip.bipartite);
    auto res = chromatic_number(one_skeleton_graph(cx).graph);
    CHECK(res.exact);
    CHECK(res.value == 2);
}

TEST_CASE("torus grids have product cell counts") {
    CubicalComplex t2 = torus_grid({3, 3});
    CHECK(t2.cell_count(0) == 9);
    CHECK(t2.cell_count(1) == 18);
    CHECK(t2.cell_count(2) == 9);

    CubicalComplex t3 = torus_grid({3, 3, 3});
    CHECK(t3.cell_count(0) == 27);
    CHECK(t3.cell_count(1) == 81);
    CHECK(t3.cell_count(2) == 81);
    CHECK(t3.cell_count(3) == 27);
    CHECK(validate(t3).ok());
    CHECK(validate(t3).directed_coherent);
    CHECK(check_quadrangulation(t3).closed_pseudo_manifold);

    CHECK_THROWS_AS(torus_grid({2, 3}), std::invalid_argument);

    // Coordinate-sum coloring is proper with 3 colors.
    Graph g = one_skeleton_graph(t3).graph;
    Coloring c;
    c.num_colors = 3;
    c.color.resize(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const std::string& id = g.vertex_id(v);  // "v(i,j,k)"
        int sum = (id[2] - '0') + (id[4] - '0') + (id[6] - '0');
        c.color[v] = sum % 3 + 1;
    }
    CHECK(check_proper(g, c));
}

TEST_CASE("sphere and projective cube models") {
    CHECK(euler_characteristic(sphere_cube_boundary(2)) == 2);
    CHECK(validate(sphere_cube_boundary(3)).ok());
    CHECK(validate(sphere_cube_boundary(3)).directed_coherent);
    CHECK_THROWS_AS(sphere_cube_boundary(4), std::invalid_argument);
    CHECK(betti_numbers(rp_cube_quotient(3)) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("scaffold boundary sphere") {
    for (int k = 1; k <= 3; ++k) {
        ScaffoldOutput out = rp3_scaffold(k);
        int n = 2 * k + 1;
        const CubicalComplex& s = out.boundary_sphere;
        CHECK(s.cell_count(0) == static_cast<std::size_t>(6 * n + 2));
        CHECK(s.cell_count(1) == static_cast<std::size_t>(12 * n));
        CHECK(s.cell_count(2) == static_cast<std::size_t>(6 * n));
        CHECK(euler_characteristic(s) == 2);
        CHECK(validate(s).ok());
        QuadReport q = check_quadrangulation(s);
        CHECK(q.faces_are_quads);
        CHECK(q.closed_surface);
        CHECK(is_bipartite(one_skeleton_graph(s).graph).bipartite);
    }
}

TEST_CASE("scaffold symmetry is a fixed-point-free involutive automorphism") {
    for (int k = 1; k <= 3; ++k) {
        ScaffoldOutput out = rp3_scaffold(k);
        const CubicalComplex& s = out.boundary_sphere;
        const CellInvolution& rho = out.rho;
        for (int dim = 0; dim <= 2; ++dim) {
            CHECK(rho.maps[dim].size() == s.cell_count(dim));  // total on the sphere
            for (auto& [a, b] : rho.maps[dim]) {
                CHECK(a != b);
                CHECK(*rho.image(dim, b) == a);
            }
        }
        // quotient_by_involution performs the incidence checks; it must accept rho.
        CHECK_NOTHROW(quotient_by_involution(s, rho));
    }
}

TEST_CASE("scaffold annuli are coherent bipartite quadrangulated annuli") {
    ScaffoldOutput out = rp3_scaffold(2);
    int n = 5;
    CHECK(out.annuli.size() == 2);
    for (const CubicalComplex& a : out.annuli) {
        CHECK(a.cell_count(0) == static_cast<std::size_t>(4 * n));
        CHECK(a.cell_count(1) == static_cast<std::size_t>(6 * n));
        CHECK(a.cell_count(2) == static_cast<std::size_t>(2 * n));
        CHECK(euler_characteristic(a) == 0);
        ValidationReport rep = validate(a);
        CHECK(rep.ok());
        CHECK(rep.directed_coherent);
        CHECK(check_quadrangulation(a).faces_are_quads);
        CHECK(is_bipartite(one_skeleton_graph(a).graph).bipartite);
    }
}

TEST_CASE("scaffold quotient graph for k = 1") {
    ScaffoldOutput out = rp3_scaffold(1);
    CHECK(out.quotient_graph.vertex_count() == 10);
    CHECK(out.quotient_graph.edge_count() == 24);
    CHECK(validate(out.quotient_two_complex).ok());
    CHECK(!check_quadrangulation(out.quotient_two_complex).closed_surface);

    // K4 on v0, v1, v2, v3.
    const Graph& g = out.quotient_graph;
    std::vector<VertexIndex> vs;
    for (const std::string& id : {"v0", "v1", "v2", "v3"}) vs.push_back(*g.find_vertex(id));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) CHECK(g.adjacent(vs[i], vs[j]));

    auto clique = contains_clique(g, 4);
    CHECK(clique.has_value());
}

TEST_CASE("scaffold quotient graph for k = 2 contains K6") {
    ScaffoldOutput out = rp3_scaffold(2);
    CHECK(out.quotient_graph.vertex_count() == 16);
    auto clique = contains_clique(out.quotient_graph, 6);
    REQUIRE(clique.has_value());
    std::set<std::string> ids;
    for (VertexIndex v : *clique) ids.insert(out.quotient_graph.vertex_id(v));
    CHECK(ids == std::set<std::string>{"v0", "v1", "v2", "v3", "v4", "v5"});
    CHECK(out.labels.at("v0") == "v~0");
}

TEST_CASE("scaffold quotient two-complex is an intermediate, not a closed surface") {
    ScaffoldOutput out = rp3_scaffold(1);
    const CubicalComplex& q = out.quotient_two_complex;
    int n = 3, k = 1;
    CHECK(q.cell_count(0) == static_cast<std::size_t>(3 * n + 1));
    CHECK(q.cell_count(1) == static_cast<std::size_t>(6 * n + 2 * n * k));
    CHECK(q.cell_count(2) == static_cast<std::size_t>(3 * n + 2 * n * k));
}

TEST_CASE("scaffold quotient graphs stay simple for larger twists") {
    for (int k = 2; k <= 3; ++k) {
        ScaffoldOutput out = rp3_scaffold(k);
        int n = 2 * k + 1;
        OneSkeleton sk = one_skeleton_graph(out.quotient_two_complex);
        CHECK(!sk.had_parallel_edges);  // distinct twists give distinct classes
        CHECK(!sk.had_loops);
        CHECK(out.quotient_graph.edge_count() == static_cast<std::size_t>(6 * n + 2 * n * k));
    }
}
