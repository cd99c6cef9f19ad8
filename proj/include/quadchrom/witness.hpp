#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadchrom/complex.hpp"
#include "quadchrom/graph.hpp"
#include "quadchrom/homology.hpp"

namespace quadchrom {

/// For a proper coloring with colors in {1..4}, every edge falls into
/// exactly one class: E_t holds the edges colored {1,t} or by the
/// complementary pair.
struct EdgeClassPartition {
    // classes[t-2] lists the vertex pairs (a < b) of E_t, t = 2, 3, 4.
    std::array<std::vector<std::pair<VertexIndex, VertexIndex>>, 3> classes;
};

/// Class index t in {2,3,4} of an edge from its endpoint colors.
int edge_class_of(int color_a, int color_b);

/// Throws on an improper coloring or one using colors outside 1..4.
EdgeClassPartition edge_classes(const Graph& g, const Coloring& c);

/// Degree-1 cochain indicating the E_t 1-cells of the complex.
/// A cocycle on quadrangulations: every face meets E_t evenly.
CochainZ2 class_cochain(const CubicalComplex& cx, const Coloring& c, int t);

/// |E(gamma) n E_t| mod 2 for t = 2, 3, 4. For an odd cycle under a proper
/// coloring with at most 4 colors all three parities are 1.
std::map<int, int> verify_parity(const Graph& g, const Coloring& c, const CycleWitness& gamma);
std::map<int, int> verify_parity(const CubicalComplex& cx, const Coloring& c,
                                 const CycleWitness& gamma);

/// Closed curve systems dual to E_t on a closed quadrangulated surface:
/// chords join E_t edge midpoints inside each face, four-midpoint faces use
/// the fixed non-crossing pairing (direction-1 front with direction-2
/// front, direction-1 back with direction-2 back).
struct CurveSet {
    struct Step {
        CellIndex edge;  // 1-cell whose midpoint the curve passes
        CellIndex face;  // 2-cell the chord crosses
    };
    std::vector<std::vector<Step>> curves;  // each closed

    struct FaceChords {
        CellIndex face;
        // Chord endpoints as facet slot numbers (0 = d1 front, 1 = d1 back,
        // 2 = d2 front, 3 = d2 back).
        std::vector<std::pair<int, int>> chords;
    };
    std::vector<FaceChords> resolutions;  // faces with at least one chord
};

CurveSet curves_2d(const CubicalComplex& cx, const Coloring& c, int t);

/// Number of faces in which a chord of `a` crosses a chord of `b`
/// (chord endpoints interleave around the quad boundary).
int curve_crossings(const CurveSet& a, const CurveSet& b);

/// First cell (in cell order) whose vertices carry four distinct colors.
std::optional<CellIndex> find_rainbow_face(const CubicalComplex& cx, const Coloring& c);
std::optional<CellIndex> find_rainbow_cube(const CubicalComplex& cx, const Coloring& c);

/// Everything the coloring obstruction machinery can check for one proper
/// coloring, bundled with a consistency verdict. Expectations that depend
/// on failed hypotheses (bipartite skeleton, ring condition failures) are
/// reported as notes, never as contradictions.
struct CertificateReport {
    bool proper = false;
    int colors_used = 0;
    bool skeleton_bipartite = false;
    std::optional<CycleWitness> odd_cycle;
    std::map<int, int> odd_cycle_parity;  // t -> parity, when an odd cycle exists

    struct ClassInfo {
        int t = 0;
        bool cocycle = false;
        bool nontrivial = false;
    };
    std::vector<ClassInfo> classes;  // t = 2, 3, 4

    struct CupInfo {
        int t1 = 0, t2 = 0;   // 0 cup degree encodes the triple product as (0,0)
        bool nontrivial = false;
    };
    std::vector<CupInfo> cups;            // pairs (2,3), (2,4), (3,4)
    std::optional<CupInfo> triple_cup;    // dimension >= 3 only

    std::optional<std::string> rainbow_face;
    std::optional<std::string> rainbow_cube;

    std::optional<RingConditions> ring;   // only for closed pseudo-manifolds

    bool consistent = true;
    std::vector<std::string> notes;
};

/// Runs the full pipeline for one proper coloring with at most 4 colors.
CertificateReport youngs_certificate(const CubicalComplex& cx, const Coloring& c);

}  // namespace quadchrom
