#include "quadchrom/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace quadchrom {

CubicalComplex::CubicalComplex(int dimension) : dimension_(dimension) {
    if (dimension < 0) throw std::invalid_argument("complex dimension must be >= 0");
    cells_.resize(dimension + 1);
    index_.resize(dimension + 1);
}

CellIndex CubicalComplex::add_vertex(const std::string& id) {
    if (index_[0].count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    CellIndex i = static_cast<CellIndex>(cells_[0].size());
    cells_[0].push_back(Cube{id, {}, {i}});
    index_[0][id] = i;
    vertex_labels_.push_back(id);
    return i;
}

CellIndex CubicalComplex::add_cell(int dim, const std::string& id,
                                   std::vector<CellIndex> facets,
                                   std::vector<CellIndex> vertices) {
    if (dim < 1 || dim > dimension_)
        throw std::invalid_argument("cell dimension out of range for id: " + id);
    if (index_[dim].count(id))
        throw std::invalid_argument("duplicate cell id in dimension " + std::to_string(dim) +
                                    ": " + id);
    for (CellIndex f : facets)
        if (f >= cells_[dim - 1].size())
            throw std::invalid_argument("facet index out of range in cell: " + id);
    for (CellIndex v : vertices)
        if (v >= cells_[0].size())
            throw std::invalid_argument("vertex index out of range in cell: " + id);
    CellIndex i = static_cast<CellIndex>(cells_[dim].size());
    cells_[dim].push_back(Cube{id, std::move(facets), std::move(vertices)});
    index_[dim][id] = i;
    return i;
}

std::size_t CubicalComplex::cell_count(int dim) const {
    if (dim < 0 || dim > dimension_) return 0;
    return cells_[dim].size();
}

std::optional<CellIndex> CubicalComplex::find(int dim, const std::string& id) const {
    if (dim < 0 || dim > dimension_) return std::nullopt;
    auto it = index_[dim].find(id);
    if (it == index_[dim].end()) return std::nullopt;
    return it->second;
}

const std::string& CubicalComplex::vertex_label(CellIndex v) const { return vertex_labels_[v]; }

void CubicalComplex::set_vertex_label(CellIndex v, const std::string& label) {
    vertex_labels_[v] = label;
}

namespace detail {

bool FrameMap::identity() const {
    for (std::size_t i = 0; i < axis.size(); ++i)
        if (axis[i] != static_cast<int>(i) || flip[i]) return false;
    return true;
}

std::optional<FrameMap> frame_correspondence(const std::vector<CellIndex>& record,
                                             const std::vector<CellIndex>& induced) {
    if (record.size() != induced.size()) return std::nullopt;
    std::size_t n = record.size();
    int k = 0;
    while ((std::size_t(1) << k) < n) ++k;
    if ((std::size_t(1) << k) != n) return std::nullopt;

    std::map<CellIndex, std::size_t> pos;
    for (std::size_t p = 0; p < n; ++p) {
        if (pos.count(record[p])) return std::nullopt;  // not an embedded tuple
        pos[record[p]] = p;
    }

    auto locate = [&](CellIndex v) -> std::optional<std::size_t> {
        auto it = pos.find(v);
        if (it == pos.end()) return std::nullopt;
        return it->second;
    };

    auto base = locate(induced[0]);
    if (!base) return std::nullopt;

    FrameMap fm;
    fm.axis.resize(k);
    fm.flip.resize(k);
    std::vector<bool> hit(k, false);
    for (int i = 0; i < k; ++i) {
        std::size_t p = std::size_t(1) << (k - 1 - i);  // only induced bit i set
        auto q = locate(induced[p]);
        if (!q) return std::nullopt;
        std::size_t diff = *q ^ *base;
        if (diff == 0 || (diff & (diff - 1)) != 0) return std::nullopt;  // must be one bit
        int bit = 0;
        while (!((diff >> bit) & 1)) ++bit;
        int rec_dir = k - 1 - bit;
        if (hit[rec_dir]) return std::nullopt;
        hit[rec_dir] = true;
        fm.axis[i] = rec_dir;
        fm.flip[i] = (*base >> bit) & 1;  // base already on the back side => flipped
    }
    // Verify the full map, not just the generators.
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t q = 0;
        for (int i = 0; i < k; ++i) {
            bool b = (p >> (k - 1 - i)) & 1;
            if (fm.flip[i]) b = !b;
            if (b) q |= std::size_t(1) << (k - 1 - fm.axis[i]);
        }
        if (record[q] != induced[p]) return std::nullopt;
    }
    return fm;
}

std::vector<CellIndex> subtuple(const std::vector<CellIndex>& tuple, int k, int direction,
                                int side) {
    std::vector<CellIndex> out;
    out.reserve(tuple.size() / 2);
    int bit = k - direction;  // direction 1 is the most significant bit
    for (std::size_t p = 0; p < tuple.size(); ++p)
        if (((p >> bit) & 1) == static_cast<std::size_t>(side)) out.push_back(tuple[p]);
    return out;
}

bool directed_coherent(const CubicalComplex& cx) {
    for (int k = 1; k <= cx.dimension(); ++k)
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            const Cube& c = cx.cell(k, i);
            if (c.facets.size() != static_cast<std::size_t>(2 * k)) return false;
            if (c.vertices.size() != (std::size_t(1) << k)) return false;
            for (int dir = 1; dir <= k; ++dir)
                for (int side = 0; side < 2; ++side) {
                    const Cube& f = cx.cell(k - 1, c.facets[2 * (dir - 1) + side]);
                    if (f.vertices != subtuple(c.vertices, k, dir, side)) return false;
                }
        }
    return true;
}

}  // namespace detail

namespace {

std::string cell_name(const CubicalComplex& cx, int dim, CellIndex i) {
    return "dim " + std::to_string(dim) + " cell '" + cx.cell(dim, i).id + "'";
}

}  // namespace

ValidationReport validate(const CubicalComplex& cx) {
    ValidationReport rep;
    rep.directed_coherent = true;
    auto fail = [&](const std::string& s) { rep.violations.push_back(s); };

    for (int k = 1; k <= cx.dimension(); ++k) {
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            const Cube& c = cx.cell(k, i);
            if (c.facets.size() != static_cast<std::size_t>(2 * k)) {
                fail(cell_name(cx, k, i) + ": expected " + std::to_string(2 * k) +
                     " facets, got " + std::to_string(c.facets.size()));
                continue;
            }
            if (c.vertices.size() != (std::size_t(1) << k)) {
                fail(cell_name(cx, k, i) + ": expected " + std::to_string(1 << k) +
                     " vertices, got " + std::to_string(c.vertices.size()));
                continue;
            }
            std::set<CellIndex> distinct(c.vertices.begin(), c.vertices.end());
            if (distinct.size() != c.vertices.size()) {
                fail(cell_name(cx, k, i) + ": vertex tuple has repeats (cell not embedded)");
                continue;
            }
            for (int dir = 1; dir <= k; ++dir) {
                for (int side = 0; side < 2; ++side) {
                    const Cube& f = cx.cell(k - 1, c.facets[2 * (dir - 1) + side]);
                    auto sub = detail::subtuple(c.vertices, k, dir, side);
                    auto fm = detail::frame_correspondence(f.vertices, sub);
                    if (!fm) {
                        fail(cell_name(cx, k, i) + ": facet slot (" + std::to_string(dir) +
                             "," + std::to_string(side) + ") = '" + f.id +
                             "' does not match the induced sub-tuple");
                    } else if (!fm->identity()) {
                        rep.directed_coherent = false;
                    }
                }
            }
        }
    }

    // dd = 0 over GF(2).
    for (int k = 2; k <= cx.dimension(); ++k) {
        gf2::Matrix low = boundary_matrix(cx, k - 1);
        gf2::Matrix high = boundary_matrix(cx, k);
        for (CellIndex c = 0; c < cx.cell_count(k); ++c) {
            gf2::Vector col(high.rows());
            for (std::size_t r = 0; r < high.rows(); ++r) col.set(r, high.get(r, c));
            if (low.apply(col).any())
                fail("dd != 0 at " + cell_name(cx, k, c));
        }
    }

    // Distinct cells sharing a vertex set are legal but flagged.
    for (int k = 1; k <= cx.dimension() && !rep.generalized_cells; ++k) {
        std::set<std::vector<CellIndex>> seen;
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            std::vector<CellIndex> key = cx.cell(k, i).vertices;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) {
                rep.generalized_cells = true;
                break;
            }
        }
    }

    if (!rep.ok()) rep.directed_coherent = false;
    return rep;
}

CubicalComplex skeleton(const CubicalComplex& cx, int k) {
    if (k < 0 || k > cx.dimension()) throw std::invalid_argument("skeleton: k out of range");
    CubicalComplex out(k);
    for (CellIndex v = 0; v < cx.cell_count(0); ++v) {
        out.add_vertex(cx.cell(0, v).id);
        out.set_vertex_label(v, cx.vertex_label(v));
    }
    for (int d = 1; d <= k; ++d)
        for (CellIndex i = 0; i < cx.cell_count(d); ++i) {
            const Cube& c = cx.cell(d, i);
            out.add_cell(d, c.id, c.facets, c.vertices);
        }
    return out;
}

gf2::Matrix boundary_matrix(const CubicalComplex& cx, int k) {
    if (k < 1 || k > cx.dimension())
        throw std::invalid_argument("boundary_matrix: k out of range");
    gf2::Matrix m(cx.cell_count(k - 1), cx.cell_count(k));
    for (CellIndex c = 0; c < cx.cell_count(k); ++c)
        for (CellIndex f : cx.cell(k, c).facets) m.flip(f, c);  // multiset mod 2
    return m;
}

long long euler_characteristic(const CubicalComplex& cx) {
    long long e = 0;
    for (int k = 0; k <= cx.dimension(); ++k)
        e += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cx.cell_count(k));
    return e;
}

namespace {

// Number of top-cell facet slots referencing each (d-1)-cell.
std::vector<int> top_incidence(const CubicalComplex& cx) {
    int d = cx.dimension();
    std::vector<int> count(cx.cell_count(d - 1), 0);
    for (CellIndex c = 0; c < cx.cell_count(d); ++c)
        for (CellIndex f : cx.cell(d, c).facets) ++count[f];
    return count;
}

}  // namespace

int euler_genus_surface(const CubicalComplex& cx) {
    if (cx.dimension() != 2)
        throw std::invalid_argument("euler_genus_surface: not a surface complex");
    for (int c : top_incidence(cx))
        if (c != 2)
            throw std::invalid_argument("euler_genus_surface: complex is not a closed surface");
    return static_cast<int>(2 - euler_characteristic(cx));
}

QuadReport check_quadrangulation(const CubicalComplex& cx) {
    QuadReport rep;
    int d = cx.dimension();

    if (d >= 2) {
        rep.faces_are_quads = true;
        for (CellIndex i = 0; i < cx.cell_count(2); ++i) {
            const Cube& f = cx.cell(2, i);
            std::set<CellIndex> vs(f.vertices.begin(), f.vertices.end());
            if (vs.size() != 4) {
                rep.faces_are_quads = false;
                rep.notes.push_back("2-cell '" + f.id + "' does not have 4 distinct vertices");
                continue;
            }
            // The four facet edges must form a single 4-cycle on those vertices.
            std::map<CellIndex, int> deg;
            std::set<std::pair<CellIndex, CellIndex>> seen_edges;
            bool good = f.facets.size() == 4;
            for (CellIndex e : f.facets) {
                const Cube& edge = cx.cell(1, e);
                CellIndex a = edge.vertices[0], b = edge.vertices[1];
                if (a == b || !vs.count(a) || !vs.count(b)) {
                    good = false;
                    break;
                }
                if (!seen_edges.insert({std::min(a, b), std::max(a, b)}).second) {
                    good = false;
                    break;
                }
                ++deg[a];
                ++deg[b];
            }
            if (good)
                for (auto& [v, n] : deg)
                    if (n != 2) good = false;
            if (!good) {
                rep.faces_are_quads = false;
                rep.notes.push_back("2-cell '" + f.id + "' is not bounded by a 4-cycle");
            }
        }
    }

    if (d >= 1 && cx.cell_count(d) > 0) {
        bool closed = true;
        for (int c : top_incidence(cx))
            if (c != 2) closed = false;
        rep.closed_pseudo_manifold = closed;
        if (d == 2) rep.closed_surface = closed;
        if (!closed)
            rep.notes.push_back("some codimension-1 cell is not in exactly two top cells");
    }
    return rep;
}

OneSkeleton one_skeleton_graph(const CubicalComplex& cx) {
    std::vector<std::string> ids;
    ids.reserve(cx.cell_count(0));
    for (CellIndex v = 0; v < cx.cell_count(0); ++v) ids.push_back(cx.cell(0, v).id);
    OneSkeleton out{Graph(std::move(ids)), false, false};
    for (CellIndex e = 0; e < cx.cell_count(1); ++e) {
        const Cube& c = cx.cell(1, e);
        CellIndex a = c.vertices[0], b = c.vertices[1];
        if (a == b) {
            out.had_loops = true;
            continue;
        }
        if (!out.graph.add_edge(a, b)) out.had_parallel_edges = true;
    }
    return out;
}

std::optional<CellIndex> CellInvolution::image(int dim, CellIndex i) const {
    if (dim < 0 || dim >= static_cast<int>(maps.size())) return std::nullopt;
    auto it = maps[dim].find(i);
    if (it == maps[dim].end()) return std::nullopt;
    return it->second;
}

CubicalComplex quotient_by_involution(const CubicalComplex& cx, const CellInvolution& inv) {
    int d = cx.dimension();

    // Structural checks: self-inverse, fixed-point-free, domain stays in domain.
    for (int k = 0; k <= d && k < static_cast<int>(inv.maps.size()); ++k) {
        for (auto& [a, b] : inv.maps[k]) {
            if (a >= cx.cell_count(k) || b >= cx.cell_count(k))
                throw std::invalid_argument("involution references a missing cell");
            if (a == b)
                throw std::invalid_argument("involution fixes " + cell_name(cx, k, a));
            auto back = inv.image(k, b);
            if (!back || *back != a)
                throw std::invalid_argument("involution is not self-inverse at " +
                                            cell_name(cx, k, a));
            if (k >= 1) {
                for (CellIndex f : cx.cell(k, a).vertices)
                    if (!inv.image(0, f))
                        throw std::invalid_argument(
                            "involution domain is not closed under faces at " +
                            cell_name(cx, k, a));
                for (CellIndex f : cx.cell(k, a).facets)
                    if (!inv.image(k - 1, f))
                        throw std::invalid_argument(
                            "involution maps a cell whose facet is outside the identified "
                            "region: " + cell_name(cx, k, a));
            }
        }
    }

    // Incidence compatibility: the image's recorded structure must be the
    // mapped structure up to a cube symmetry, slot for slot.
    for (int k = 1; k <= d && k < static_cast<int>(inv.maps.size()); ++k) {
        for (auto& [a, b] : inv.maps[k]) {
            const Cube& ca = cx.cell(k, a);
            const Cube& cb = cx.cell(k, b);
            std::vector<CellIndex> mapped;
            mapped.reserve(ca.vertices.size());
            for (CellIndex v : ca.vertices) mapped.push_back(*inv.image(0, v));
            auto fm = detail::frame_correspondence(cb.vertices, mapped);
            if (!fm)
                throw std::invalid_argument("involution breaks the vertex tuple at " +
                                            cell_name(cx, k, a));
            for (int dir = 1; dir <= k; ++dir)
                for (int side = 0; side < 2; ++side) {
                    CellIndex fa = ca.facets[2 * (dir - 1) + side];
                    int rd = fm->axis[dir - 1];
                    int rs = fm->flip[dir - 1] ? 1 - side : side;
                    CellIndex fb = cb.facets[2 * rd + rs];
                    if (*inv.image(k - 1, fa) != fb)
                        throw std::invalid_argument("involution incidence inconsistency at " +
                                                    cell_name(cx, k, a));
                }
        }
    }

    // Representative: the lower index of each orbit.
    auto rep_of = [&](int k, CellIndex i) -> CellIndex {
        auto im = inv.image(k, i);
        return (im && *im < i) ? *im : i;
    };

    std::vector<std::vector<CellIndex>> newindex(d + 1);
    CubicalComplex out(d);
    for (int k = 0; k <= d; ++k) {
        newindex[k].assign(cx.cell_count(k), 0);
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            if (rep_of(k, i) != i) continue;
            const Cube& c = cx.cell(k, i);
            if (k == 0) {
                newindex[0][i] = out.add_vertex(c.id);
                out.set_vertex_label(newindex[0][i], cx.vertex_label(i));
            } else {
                std::vector<CellIndex> facets, vertices;
                facets.reserve(c.facets.size());
                vertices.reserve(c.vertices.size());
                for (CellIndex f : c.facets) facets.push_back(newindex[k - 1][rep_of(k - 1, f)]);
                for (CellIndex v : c.vertices) vertices.push_back(newindex[0][rep_of(0, v)]);
                newindex[k][i] = out.add_cell(k, c.id, std::move(facets), std::move(vertices));
            }
        }
    }
    return out;
}

}  // namespace quadchrom
