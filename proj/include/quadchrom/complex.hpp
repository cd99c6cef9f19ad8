#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quadchrom/gf2.hpp"
#include "quadchrom/graph.hpp"

namespace quadchrom {

using CellIndex = std::uint32_t;

/// One abstract cube. A k-cube lists its 2k facets in slot order
/// (direction-1 front, direction-1 back, ..., direction-k front,
/// direction-k back) and its 2^k vertices indexed by binary words in
/// counting order, the direction-1 bit being most significant.
struct Cube {
    std::string id;
    std::vector<CellIndex> facets;    // indices into the (k-1)-cells
    std::vector<CellIndex> vertices;  // indices into the 0-cells
};

/// Finite cubical complex with abstract cells and directed facet lists.
/// Distinct cells may share a vertex set (antipodal quotients need this),
/// so cells are identified by index, never by their vertices.
/// Immutable once built; all operations on it are pure.
class CubicalComplex {
public:
    explicit CubicalComplex(int dimension);

    int dimension() const { return dimension_; }

    CellIndex add_vertex(const std::string& id);

    /// Adds a k-cube. Checks index ranges and arity; deeper structural
    /// invariants are the validator's job so that readers can load a broken
    /// file and report on it.
    CellIndex add_cell(int dim, const std::string& id, std::vector<CellIndex> facets,
                       std::vector<CellIndex> vertices);

    std::size_t cell_count(int dim) const;
    const Cube& cell(int dim, CellIndex i) const { return cells_[dim][i]; }
    const std::vector<Cube>& cells(int dim) const { return cells_[dim]; }
    std::optional<CellIndex> find(int dim, const std::string& id) const;

    const std::string& vertex_label(CellIndex v) const;
    void set_vertex_label(CellIndex v, const std::string& label);

private:
    int dimension_;
    std::vector<std::vector<Cube>> cells_;
    std::vector<std::unordered_map<std::string, CellIndex>> index_;
    std::vector<std::string> vertex_labels_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    /// Distinct cells of equal dimension sharing one vertex set. Allowed,
    /// but worth knowing about.
    bool generalized_cells = false;
    /// True when every facet record equals the induced sub-tuple on the
    /// nose (no cube symmetry needed anywhere). Cup products take the fast
    /// cubical route exactly in this case.
    bool directed_coherent = false;
    bool ok() const { return violations.empty(); }
};

/// Checks facet arity, vertex-tuple consistency (up to cube symmetry),
/// embeddedness of closed cells, and dd = 0 over GF(2).
ValidationReport validate(const CubicalComplex& cx);

/// Subcomplex of all cells of dimension <= k; identifiers preserved.
CubicalComplex skeleton(const CubicalComplex& cx, int k);

/// Rows indexed by (k-1)-cells, columns by k-cells, entries are facet
/// multiplicities mod 2.
gf2::Matrix boundary_matrix(const CubicalComplex& cx, int k);

long long euler_characteristic(const CubicalComplex& cx);

/// Euler genus 2 - euler characteristic; requires a closed surface complex.
int euler_genus_surface(const CubicalComplex& cx);

struct QuadReport {
    bool faces_are_quads = false;         // every 2-cell a 4-cycle on distinct vertices
    bool closed_surface = false;          // dim 2: each edge in exactly two faces
    bool closed_pseudo_manifold = false;  // each (d-1)-cell in exactly two d-cells
    std::vector<std::string> notes;
};
QuadReport check_quadrangulation(const CubicalComplex& cx);

struct OneSkeleton {
    Graph graph;
    bool had_parallel_edges = false;
    bool had_loops = false;
};

/// Simple graph on the 0-cells; parallel 1-cells collapse, loops are
/// flagged and dropped.
OneSkeleton one_skeleton_graph(const CubicalComplex& cx);

/// Partial fixed-point-free involution on cells, one map per dimension.
struct CellInvolution {
    std::vector<std::unordered_map<CellIndex, CellIndex>> maps;

    std::optional<CellIndex> image(int dim, CellIndex i) const;
};

/// Merges cells identified by the involution; facet lists are rewritten to
/// class representatives, cells outside the domain are carried over.
/// Throws std::invalid_argument on fixed cells, incidence inconsistencies,
/// or a domain that is not facet-closed.
CubicalComplex quotient_by_involution(const CubicalComplex& cx, const CellInvolution& inv);

namespace detail {

/// Position map between two tuples of the same 2^k distinct vertices:
/// induced[p] == record[perm(p)] where perm is a signed permutation of the
/// cube (axis permutation plus per-axis flips). Nullopt when the tuples are
/// not related by a cube symmetry.
struct FrameMap {
    std::vector<int> axis;    // axis[i] = recorded direction of induced direction i (0-based)
    std::vector<bool> flip;   // flip[i]: front/back swapped along induced direction i
    bool identity() const;
};
std::optional<FrameMap> frame_correspondence(const std::vector<CellIndex>& record,
                                             const std::vector<CellIndex>& induced);

/// Sub-tuple of a 2^k-tuple with the bit of `direction` (1-based) fixed.
std::vector<CellIndex> subtuple(const std::vector<CellIndex>& tuple, int k, int direction,
                                int side);

/// True when every facet record equals its induced sub-tuple exactly.
bool directed_coherent(const CubicalComplex& cx);

}  // namespace detail

}  // namespace quadchrom
