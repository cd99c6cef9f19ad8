#include "quadchrom/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quadchrom {

int edge_class_of(int a, int b) {
    if (a == b || a < 1 || b < 1 || a > 4 || b > 4)
        throw std::invalid_argument("edge_class_of: colors must be distinct and within 1..4");
    if (a > b) std::swap(a, b);
    if (a == 1) return b;
    // Complementary pair: {2,3} -> E_4, {2,4} -> E_3, {3,4} -> E_2.
    return 9 - a - b;
}

namespace {

void require_proper_le4(const Graph& g, const Coloring& c) {
    if (!check_proper(g, c)) throw std::invalid_argument("coloring is not proper");
    for (int col : c.color)
        if (col > 4) throw std::invalid_argument("coloring uses more than 4 colors");
}

}  // namespace

EdgeClassPartition edge_classes(const Graph& g, const Coloring& c) {
    require_proper_le4(g, c);
    EdgeClassPartition out;
    for (auto [a, b] : g.edges())
        out.classes[edge_class_of(c.color[a], c.color[b]) - 2].emplace_back(a, b);
    return out;
}

CochainZ2 class_cochain(const CubicalComplex& cx, const Coloring& c, int t) {
    if (t < 2 || t > 4) throw std::invalid_argument("class_cochain: t must be 2, 3 or 4");
    Graph g = one_skeleton_graph(cx).graph;
    require_proper_le4(g, c);
    CochainZ2 a = make_cochain(cx, 1);
    for (CellIndex e = 0; e < cx.cell_count(1); ++e) {
        const Cube& edge = cx.cell(1, e);
        if (edge.vertices[0] == edge.vertices[1]) continue;
        if (edge_class_of(c.color[edge.vertices[0]], c.color[edge.vertices[1]]) == t)
            a.support.set(e, true);
    }
    return a;
}

std::map<int, int> verify_parity(const Graph& g, const Coloring& c, const CycleWitness& gamma) {
    require_proper_le4(g, c);
    if (gamma.vertices.size() < 3) throw std::invalid_argument("verify_parity: not a cycle");
    std::map<int, int> parity{{2, 0}, {3, 0}, {4, 0}};
    for (auto [a, b] : gamma.edges()) {
        if (!g.adjacent(a, b)) throw std::invalid_argument("verify_parity: gamma is not a cycle");
        parity[edge_class_of(c.color[a], c.color[b])] ^= 1;
    }
    return parity;
}

std::map<int, int> verify_parity(const CubicalComplex& cx, const Coloring& c,
                                 const CycleWitness& gamma) {
    return verify_parity(one_skeleton_graph(cx).graph, c, gamma);
}

CurveSet curves_2d(const CubicalComplex& cx, const Coloring& c, int t) {
    if (cx.dimension() != 2) throw std::invalid_argument("curves_2d: complex must be a surface");
    QuadReport q = check_quadrangulation(cx);
    if (!q.faces_are_quads || !q.closed_surface)
        throw std::invalid_argument("curves_2d: need a closed quadrangulated surface");
    CochainZ2 marked = class_cochain(cx, c, t);

    CurveSet out;
    // For each marked edge, the (face, partner edge) pairs its chords induce.
    std::map<CellIndex, std::vector<std::pair<CellIndex, CellIndex>>> links;

    for (CellIndex f = 0; f < cx.cell_count(2); ++f) {
        const Cube& face = cx.cell(2, f);
        std::vector<int> slots;
        for (int s = 0; s < 4; ++s)
            if (marked.support.get(face.facets[s])) slots.push_back(s);
        if (slots.empty()) continue;
        if (slots.size() % 2 != 0)
            throw std::invalid_argument("curves_2d: face '" + face.id +
                                        "' meets an odd number of marked edges");
        CurveSet::FaceChords fc;
        fc.face = f;
        if (slots.size() == 2) {
            fc.chords.emplace_back(slots[0], slots[1]);
        } else {
            // All four slots marked: the fixed non-crossing pairing.
            fc.chords.emplace_back(0, 2);
            fc.chords.emplace_back(1, 3);
        }
        for (auto [s1, s2] : fc.chords) {
            CellIndex e1 = face.facets[s1], e2 = face.facets[s2];
            links[e1].emplace_back(f, e2);
            links[e2].emplace_back(f, e1);
        }
        out.resolutions.push_back(std::move(fc));
    }

    // Each marked edge lies in exactly two faces and so carries exactly two
    // chord ends; walking chord to chord assembles the closed curves.
    std::set<std::pair<CellIndex, CellIndex>> used;  // (edge, face) pairs consumed
    for (auto& [start_edge, conns] : links) {
        for (auto& [start_face, partner0] : conns) {
            (void)partner0;
            if (used.count({start_edge, start_face})) continue;
            std::vector<CurveSet::Step> walk;
            CellIndex e = start_edge;
            CellIndex f = start_face;
            while (!used.count({e, f})) {
                used.insert({e, f});
                walk.push_back({e, f});
                // Cross face f along its chord from e; both chord ends are steps.
                CellIndex next_e = e;
                for (auto& [ff, other] : links[e])
                    if (ff == f) {
                        next_e = other;
                        break;
                    }
                used.insert({next_e, f});
                walk.push_back({next_e, f});
                // Leave through the partner edge into its other face.
                CellIndex next_f = f;
                for (auto& [ff, other] : links[next_e])
                    if (ff != f) {
                        next_f = ff;
                        break;
                    }
                e = next_e;
                f = next_f;
            }
            if (!walk.empty()) out.curves.push_back(std::move(walk));
        }
    }
    return out;
}

namespace {

// Facet slots in cyclic order around a quad boundary: d1f, d2b, d1b, d2f.
int cyclic_position(int slot) {
    static const int pos[4] = {0, 2, 3, 1};
    return pos[slot];
}

bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b) {
    int a1 = cyclic_position(a.first), a2 = cyclic_position(a.second);
    int b1 = cyclic_position(b.first), b2 = cyclic_position(b.second);
    if (a1 > a2) std::swap(a1, a2);
    bool inside1 = a1 < b1 && b1 < a2;
    bool inside2 = a1 < b2 && b2 < a2;
    return inside1 != inside2;
}

}  // namespace

int curve_crossings(const CurveSet& a, const CurveSet& b) {
    int crossings = 0;
    for (const auto& fa : a.resolutions)
        for (const auto& fb : b.resolutions) {
            if (fa.face != fb.face) continue;
            for (auto ca : fa.chords)
                for (auto cb : fb.chords)
                    if (chords_interleave(ca, cb)) ++crossings;
        }
    return crossings;
}

namespace {

std::optional<CellIndex> find_rainbow_cell(const CubicalComplex& cx, const Coloring& c, int dim) {
    if (dim > cx.dimension()) return std::nullopt;
    for (CellIndex i = 0; i < cx.cell_count(dim); ++i) {
        std::set<int> colors;
        for (CellIndex v : cx.cell(dim, i).vertices) colors.insert(c.color[v]);
        if (colors.size() >= 4) return i;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CellIndex> find_rainbow_face(const CubicalComplex& cx, const Coloring& c) {
    return find_rainbow_cell(cx, c, 2);
}

std::optional<CellIndex> find_rainbow_cube(const CubicalComplex& cx, const Coloring& c) {
    return find_rainbow_cell(cx, c, 3);
}

CertificateReport youngs_certificate(const CubicalComplex& cx, const Coloring& c) {
    CertificateReport rep;
    Graph g = one_skeleton_graph(cx).graph;
    require_proper_le4(g, c);
    rep.proper = true;
    {
        std::set<int> used(c.color.begin(), c.color.end());
        rep.colors_used = static_cast<int>(used.size());
    }

    auto bip = is_bipartite(g);
    rep.skeleton_bipartite = bip.bipartite;
    if (!bip.bipartite) {
        rep.odd_cycle = bip.odd_cycle;
        rep.odd_cycle_parity = verify_parity(g, c, *bip.odd_cycle);
    }

    std::array<CochainZ2, 3> alpha = {class_cochain(cx, c, 2), class_cochain(cx, c, 3),
                                      class_cochain(cx, c, 4)};
    for (int t = 2; t <= 4; ++t) {
        CertificateReport::ClassInfo info;
        info.t = t;
        info.cocycle = is_cocycle(alpha[t - 2]);
        info.nontrivial = info.cocycle && class_is_nontrivial(alpha[t - 2]);
        rep.classes.push_back(info);
    }

    bool all_cocycles =
        rep.classes[0].cocycle && rep.classes[1].cocycle && rep.classes[2].cocycle;
    bool cup_pair_nontrivial = false;
    bool triple_nontrivial = false;
    if (all_cocycles && cx.dimension() >= 2) {
        CupEvaluator ev(cx);
        for (int i = 2; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                CertificateReport::CupInfo info;
                info.t1 = i;
                info.t2 = j;
                CochainZ2 prod = ev.cup(alpha[i - 2], alpha[j - 2]);
                info.nontrivial = is_cocycle(prod) && class_is_nontrivial(prod);
                cup_pair_nontrivial |= info.nontrivial;
                rep.cups.push_back(info);
            }
        if (cx.dimension() >= 3) {
            CochainZ2 triple = ev.cup(ev.cup(alpha[0], alpha[1]), alpha[2]);
            CertificateReport::CupInfo info;
            info.nontrivial = is_cocycle(triple) && class_is_nontrivial(triple);
            triple_nontrivial = info.nontrivial;
            rep.triple_cup = info;
        }
    }

    auto face = find_rainbow_face(cx, c);
    if (face) rep.rainbow_face = cx.cell(2, *face).id;
    if (cx.dimension() >= 3) {
        auto cube = find_rainbow_cube(cx, c);
        if (cube) rep.rainbow_cube = cx.cell(3, *cube).id;
    }

    QuadReport quad = check_quadrangulation(cx);
    if (quad.closed_pseudo_manifold && cx.dimension() >= 2) rep.ring = ring_conditions(cx);

    // A nontrivial cup class must be witnessed by a rainbow cell whenever
    // the theory promises one; otherwise it is a hypothesis failure, not a
    // contradiction.
    if (cx.dimension() == 2 && cup_pair_nontrivial && !rep.rainbow_face) {
        rep.consistent = false;
        rep.notes.push_back("nontrivial cup pair without a rainbow face");
    }
    if (cx.dimension() >= 3 && cup_pair_nontrivial && rep.ring && rep.ring->cond1 &&
        !rep.rainbow_face) {
        rep.consistent = false;
        rep.notes.push_back("nontrivial cup pair with condition (1) but no rainbow face");
    }
    if (cx.dimension() == 3 && triple_nontrivial && !rep.rainbow_cube) {
        rep.consistent = false;
        rep.notes.push_back("nontrivial triple cup without a rainbow cube");
    }

    if (rep.skeleton_bipartite)
        rep.notes.push_back("skeleton is bipartite; no obstruction expected");
    if (rep.colors_used < 4) rep.notes.push_back("fewer than 4 colors used");
    if (rep.ring && !rep.ring->cond2)
        rep.notes.push_back("ring condition (2) fails; the obstruction does not apply");

    return rep;
}

}  // namespace quadchrom
