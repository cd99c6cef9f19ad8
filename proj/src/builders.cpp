#include "quadchrom/builders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace quadchrom {

namespace {

// --- pattern complexes ------------------------------------------------------
// Cells of [0,1]^axes are strings over {0,1,*}; '*' marks a free axis.
// Direction i of a cell is its i-th '*' reading left to right; the front
// facet sets it to '0', the back facet to '1'. Vertex tuples enumerate the
// free axes in binary counting order, first '*' most significant. This
// yields a strictly coherent directed structure.

std::vector<std::string> patterns_with_stars(int axes, int stars) {
    std::vector<std::string> out;
    std::vector<std::string> stack{std::string()};
    while (!stack.empty()) {
        std::string s = stack.back();
        stack.pop_back();
        if (static_cast<int>(s.size()) == axes) {
            if (std::count(s.begin(), s.end(), '*') == stars) out.push_back(s);
            continue;
        }
        for (char c : {'1', '0', '*'}) stack.push_back(s + c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string pattern_vertex(const std::string& pat, std::size_t word) {
    std::string v = pat;
    int stars = static_cast<int>(std::count(pat.begin(), pat.end(), '*'));
    int seen = 0;
    for (char& c : v)
        if (c == '*') {
            c = (word >> (stars - 1 - seen)) & 1 ? '1' : '0';
            ++seen;
        }
    return v;
}

std::string pattern_facet(const std::string& pat, int direction, int side) {
    std::string f = pat;
    int seen = 0;
    for (char& c : f)
        if (c == '*' && ++seen == direction) {
            c = side ? '1' : '0';
            break;
        }
    return f;
}

CubicalComplex pattern_complex(int axes, int max_dim, bool include_pattern_all_free) {
    CubicalComplex cx(max_dim);
    for (const std::string& v : patterns_with_stars(axes, 0)) cx.add_vertex(v);
    for (int k = 1; k <= max_dim; ++k) {
        for (const std::string& pat : patterns_with_stars(axes, k)) {
            if (!include_pattern_all_free && k == axes) continue;
            std::vector<CellIndex> facets, vertices;
            for (int dir = 1; dir <= k; ++dir)
                for (int side = 0; side < 2; ++side)
                    facets.push_back(*cx.find(k - 1, pattern_facet(pat, dir, side)));
            for (std::size_t w = 0; w < (std::size_t(1) << k); ++w)
                vertices.push_back(*cx.find(0, pattern_vertex(pat, w)));
            cx.add_cell(k, pat, std::move(facets), std::move(vertices));
        }
    }
    return cx;
}

}  // namespace

CubicalComplex solid_cube(int d) {
    if (d < 0) throw std::invalid_argument("solid_cube: d must be >= 0");
    return pattern_complex(d, d, true);
}

CubicalComplex sphere_cube_boundary(int d) {
    if (d != 2 && d != 3) throw std::invalid_argument("sphere_cube_boundary: d must be 2 or 3");
    return pattern_complex(d + 1, d, false);
}

CellInvolution antipodal_involution(const CubicalComplex& cx) {
    CellInvolution inv;
    inv.maps.resize(cx.dimension() + 1);
    for (int k = 0; k <= cx.dimension(); ++k) {
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            std::string id = cx.cell(k, i).id;
            for (char& c : id) {
                if (c == '0')
                    c = '1';
                else if (c == '1')
                    c = '0';
            }
            auto j = cx.find(k, id);
            if (!j) throw std::invalid_argument("antipodal_involution: not a pattern complex");
            inv.maps[k][i] = *j;
        }
    }
    return inv;
}

CubicalComplex rp_cube_quotient(int d) {
    CubicalComplex sphere = sphere_cube_boundary(d);
    return quotient_by_involution(sphere, antipodal_involution(sphere));
}

CubicalComplex torus_grid(const std::vector<int>& dims) {
    int d = static_cast<int>(dims.size());
    if (d < 1 || d > 4) throw std::invalid_argument("torus_grid: need 1 to 4 dimensions");
    for (int n : dims)
        if (n < 3) throw std::invalid_argument("torus_grid: every dimension must be >= 3");

    CubicalComplex cx(d);

    std::vector<int> coord(d, 0);
    long long total = 1;
    for (int n : dims) total *= n;

    auto coord_str = [&](const std::vector<int>& c) {
        std::string s;
        for (int i = 0; i < d; ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s;
    };
    auto axes_str = [&](unsigned mask) {
        static const char* names = "xyzw";
        std::string s;
        for (int i = 0; i < d; ++i)
            if (mask >> i & 1) s += names[i];
        return s;
    };
    auto cell_id = [&](unsigned mask, const std::vector<int>& c) {
        if (mask == 0) return "v(" + coord_str(c) + ")";
        return axes_str(mask) + "(" + coord_str(c) + ")";
    };
    auto unrank = [&](long long r) {
        std::vector<int> c(d);
        for (int i = d - 1; i >= 0; --i) {
            c[i] = static_cast<int>(r % dims[i]);
            r /= dims[i];
        }
        return c;
    };

    for (long long r = 0; r < total; ++r) cx.add_vertex(cell_id(0, unrank(r)));

    // k-cells: a base vertex plus a set of k free axes.
    for (int k = 1; k <= d; ++k) {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<int> ax;
            for (int i = 0; i < d; ++i)
                if (mask >> i & 1) ax.push_back(i);
            for (long long r = 0; r < total; ++r) {
                std::vector<int> base = unrank(r);
                std::vector<CellIndex> facets, vertices;
                for (int dir = 1; dir <= k; ++dir) {
                    unsigned sub = mask & ~(1u << ax[dir - 1]);
                    std::vector<int> fb = base;
                    facets.push_back(*cx.find(k - 1, cell_id(sub, fb)));
                    fb[ax[dir - 1]] = (fb[ax[dir - 1]] + 1) % dims[ax[dir - 1]];
                    facets.push_back(*cx.find(k - 1, cell_id(sub, fb)));
                }
                for (std::size_t w = 0; w < (std::size_t(1) << k); ++w) {
                    std::vector<int> vc = base;
                    for (int i = 0; i < k; ++i)
                        if (w >> (k - 1 - i) & 1)
                            vc[ax[i]] = (vc[ax[i]] + 1) % dims[ax[i]];
                    vertices.push_back(*cx.find(0, cell_id(0, vc)));
                }
                cx.add_cell(k, cell_id(mask, base), std::move(facets), std::move(vertices));
            }
        }
    }
    return cx;
}

CubicalComplex projective_grid_rp2(int m, int n) {
    if (m < 1 || n < 2) throw std::invalid_argument("projective_grid_rp2: need m >= 1, n >= 2");
    if (m == 1 && n == 2)
        throw std::invalid_argument("projective_grid_rp2: (1,2) degenerates (face with repeated "
                                    "vertices)");

    CubicalComplex cx(2);

    // Vertices: hub, full rings 1..m-1 of size 2n, outer ring classes of size n.
    auto ring_size = [&](int r) { return r == m ? n : 2 * n; };
    auto wid = [&](int r, int j) {
        return "w" + std::to_string(r) + "," + std::to_string(((j % ring_size(r)) + ring_size(r)) % ring_size(r));
    };
    cx.add_vertex("h");
    for (int r = 1; r <= m; ++r)
        for (int j = 0; j < ring_size(r); ++j) cx.add_vertex(wid(r, j));

    auto v = [&](const std::string& id) { return *cx.find(0, id); };

    // Edges. Ring r edge j runs from w(r,j) to w(r,j+1); for the outer ring
    // there are n classes. Spokes join the hub to even vertices of ring 1;
    // radial edges join consecutive rings at equal angle.
    auto ring_edge_id = [&](int r, int j) {
        int wrap = r == m ? n : 2 * n;
        return "r" + std::to_string(r) + "," + std::to_string(((j % wrap) + wrap) % wrap);
    };
    for (int r = 1; r <= m; ++r) {
        int count = r == m ? n : 2 * n;
        for (int j = 0; j < count; ++j)
            cx.add_cell(1, ring_edge_id(r, j), {v(wid(r, j)), v(wid(r, j + 1))},
                        {v(wid(r, j)), v(wid(r, j + 1))});
    }
    auto spoke_id = [&](int i) { return "s" + std::to_string(((i % n) + n) % n); };
    for (int i = 0; i < n; ++i)
        cx.add_cell(1, spoke_id(i), {v("h"), v(wid(1, 2 * i))}, {v("h"), v(wid(1, 2 * i))});
    auto radial_id = [&](int r, int j) {
        return "d" + std::to_string(r) + "," + std::to_string(((j % (2 * n)) + 2 * n) % (2 * n));
    };
    for (int r = 1; r < m; ++r)
        for (int j = 0; j < 2 * n; ++j)
            cx.add_cell(1, radial_id(r, j), {v(wid(r, j)), v(wid(r + 1, j))},
                        {v(wid(r, j)), v(wid(r + 1, j))});

    auto e = [&](const std::string& id) { return *cx.find(1, id); };

    // Hub quads (h, w1_{2i}, w1_{2i+1}, w1_{2i+2}); tuple chosen so every slot
    // matches an edge record up to orientation.
    for (int i = 0; i < n; ++i) {
        std::vector<CellIndex> tuple = {v(wid(1, 2 * i)), v(wid(1, 2 * i + 1)), v("h"),
                                        v(wid(1, 2 * i + 2))};
        std::vector<CellIndex> facets = {e(ring_edge_id(1, 2 * i)), e(spoke_id(i + 1)),
                                         e(spoke_id(i)), e(ring_edge_id(1, 2 * i + 1))};
        cx.add_cell(2, "fh" + std::to_string(i), std::move(facets), std::move(tuple));
    }
    // Radial quads between ring r and r+1.
    for (int r = 1; r < m; ++r)
        for (int j = 0; j < 2 * n; ++j) {
            std::vector<CellIndex> tuple = {v(wid(r, j)), v(wid(r, j + 1)), v(wid(r + 1, j)),
                                            v(wid(r + 1, j + 1))};
            std::vector<CellIndex> facets = {e(ring_edge_id(r, j)), e(ring_edge_id(r + 1, j)),
                                             e(radial_id(r, j)), e(radial_id(r, j + 1))};
            cx.add_cell(2, "fr" + std::to_string(r) + "," + std::to_string(j), std::move(facets),
                        std::move(tuple));
        }
    return cx;
}

namespace {

// --- scaffold helpers -------------------------------------------------------

struct ScaffoldNames {
    int n;
    int two_n;

    // Positions 1..2n along the primary ring: odd -> v_{(t+1)/2}, even -> u_{t/2}.
    std::string P(int t) const {
        t = wrap(t);
        return t % 2 ? "v" + std::to_string((t + 1) / 2) : "u" + std::to_string(t / 2);
    }
    std::string Q(int t) const { return "-" + P(t); }
    std::string M(int t) const { return "m" + std::to_string(wrap(t)); }
    int wrap(int t) const { return ((t - 1) % two_n + two_n) % two_n + 1; }
    int wrapn(int j) const { return ((j - 1) % n + n) % n + 1; }
};

void add_edge_cell(CubicalComplex& cx, const std::string& id, const std::string& a,
                   const std::string& b) {
    CellIndex ia = *cx.find(0, a), ib = *cx.find(0, b);
    cx.add_cell(1, id, {ia, ib}, {ia, ib});
}

// Quad with tuple (t00, t01, t10, t11) and facet slots given by edge ids.
void add_quad(CubicalComplex& cx, const std::string& id, const std::string& d1f,
              const std::string& d1b, const std::string& d2f, const std::string& d2b,
              const std::string& t00, const std::string& t01, const std::string& t10,
              const std::string& t11) {
    cx.add_cell(2, id,
                {*cx.find(1, d1f), *cx.find(1, d1b), *cx.find(1, d2f), *cx.find(1, d2b)},
                {*cx.find(0, t00), *cx.find(0, t01), *cx.find(0, t10), *cx.find(0, t11)});
}

CubicalComplex build_boundary_sphere(const ScaffoldNames& sn) {
    CubicalComplex cx(2);
    int n = sn.n, two_n = sn.two_n;

    cx.add_vertex("v0");
    for (int j = 1; j <= n; ++j) cx.add_vertex("v" + std::to_string(j));
    for (int j = 1; j <= n; ++j) cx.add_vertex("u" + std::to_string(j));
    cx.add_vertex("-v0");
    for (int j = 1; j <= n; ++j) cx.add_vertex("-v" + std::to_string(j));
    for (int j = 1; j <= n; ++j) cx.add_vertex("-u" + std::to_string(j));
    for (int t = 1; t <= two_n; ++t) cx.add_vertex(sn.M(t));

    for (int t = 1; t <= two_n; ++t) add_edge_cell(cx, "P" + std::to_string(t), sn.P(t), sn.P(t + 1));
    for (int t = 1; t <= two_n; ++t) add_edge_cell(cx, "Q" + std::to_string(t), sn.Q(t), sn.Q(t + 1));
    for (int j = 1; j <= n; ++j) add_edge_cell(cx, "cv" + std::to_string(j), "v0", "v" + std::to_string(j));
    for (int j = 1; j <= n; ++j)
        add_edge_cell(cx, "-cv" + std::to_string(j), "-v0", "-v" + std::to_string(j));
    for (int t = 1; t <= two_n; ++t) add_edge_cell(cx, "pm" + std::to_string(t), sn.P(t), sn.M(t));
    for (int t = 1; t <= two_n; ++t)
        add_edge_cell(cx, "qm" + std::to_string(t), sn.M(t), sn.Q(t + n));
    for (int t = 1; t <= two_n; ++t)
        add_edge_cell(cx, "mm" + std::to_string(t), sn.M(t), sn.M(t + 1));

    auto s = [](int x) { return std::to_string(x); };
    // Caps: (v0, v_j, u_j, v_{j+1}) around each pole.
    for (int j = 1; j <= n; ++j) {
        int jn = sn.wrapn(j + 1);
        add_quad(cx, "capP" + s(j), "cv" + s(j), "P" + s(2 * j), "cv" + s(jn), "P" + s(2 * j - 1),
                 "v0", "v" + s(j), "v" + s(jn), "u" + s(j));
        add_quad(cx, "capQ" + s(j), "-cv" + s(j), "Q" + s(2 * j), "-cv" + s(jn), "Q" + s(2 * j - 1),
                 "-v0", "-v" + s(j), "-v" + s(jn), "-u" + s(j));
    }
    // Equatorial band: two rings of quads around the middle ring.
    for (int t = 1; t <= two_n; ++t) {
        int t1 = sn.wrap(t + 1);
        add_quad(cx, "aP" + s(t), "P" + s(t), "mm" + s(t), "pm" + s(t), "pm" + s(t1),
                 sn.P(t), sn.P(t + 1), sn.M(t), sn.M(t + 1));
        add_quad(cx, "aQ" + s(t), "mm" + s(t), "Q" + s(sn.wrap(t + n)), "qm" + s(t), "qm" + s(t1),
                 sn.M(t), sn.M(t + 1), sn.Q(t + n), sn.Q(t + n + 1));
    }
    return cx;
}

CellInvolution build_rho(const CubicalComplex& sphere, const ScaffoldNames& sn) {
    CellInvolution inv;
    inv.maps.resize(3);
    auto pair_ids = [&](int dim, const std::string& a, const std::string& b) {
        auto ia = sphere.find(dim, a), ib = sphere.find(dim, b);
        if (!ia || !ib) throw std::logic_error("rho: missing cell " + a + " / " + b);
        inv.maps[dim][*ia] = *ib;
        inv.maps[dim][*ib] = *ia;
    };
    auto s = [](int x) { return std::to_string(x); };
    int n = sn.n, two_n = sn.two_n;

    pair_ids(0, "v0", "-v0");
    for (int j = 1; j <= n; ++j) pair_ids(0, "v" + s(j), "-v" + s(j));
    for (int j = 1; j <= n; ++j) pair_ids(0, "u" + s(j), "-u" + s(j));
    for (int t = 1; t <= n; ++t) pair_ids(0, "m" + s(t), "m" + s(t + n));

    for (int t = 1; t <= two_n; ++t) pair_ids(1, "P" + s(t), "Q" + s(t));
    for (int j = 1; j <= n; ++j) pair_ids(1, "cv" + s(j), "-cv" + s(j));
    for (int t = 1; t <= two_n; ++t) pair_ids(1, "pm" + s(t), "qm" + s(sn.wrap(t + n)));
    for (int t = 1; t <= n; ++t) pair_ids(1, "mm" + s(t), "mm" + s(t + n));

    for (int j = 1; j <= n; ++j) pair_ids(2, "capP" + s(j), "capQ" + s(j));
    for (int t = 1; t <= two_n; ++t) pair_ids(2, "aP" + s(t), "aQ" + s(sn.wrap(t + n)));
    return inv;
}

CubicalComplex build_annulus(const ScaffoldNames& sn, int twist) {
    CubicalComplex cx(2);
    int n = sn.n, two_n = sn.two_n;
    auto s = [](int x) { return std::to_string(x); };

    for (int j = 1; j <= n; ++j) cx.add_vertex("v" + s(j));
    for (int j = 1; j <= n; ++j) cx.add_vertex("u" + s(j));
    for (int j = 1; j <= n; ++j) cx.add_vertex("-v" + s(j));
    for (int j = 1; j <= n; ++j) cx.add_vertex("-u" + s(j));

    for (int t = 1; t <= two_n; ++t) add_edge_cell(cx, "P" + s(t), sn.P(t), sn.P(t + 1));
    for (int t = 1; t <= two_n; ++t) add_edge_cell(cx, "Q" + s(t), sn.Q(t), sn.Q(t + 1));
    std::string A = "A" + s(twist);
    for (int j = 1; j <= n; ++j)
        add_edge_cell(cx, A + ":sv" + s(j), "v" + s(j), "-v" + s(sn.wrapn(j + twist)));
    for (int j = 1; j <= n; ++j)
        add_edge_cell(cx, A + ":su" + s(j), "u" + s(j), "-u" + s(sn.wrapn(j + twist)));

    for (int j = 1; j <= n; ++j) {
        int ji = sn.wrapn(j + twist);
        int j1 = sn.wrapn(j + 1);
        int j1i = sn.wrapn(j + 1 + twist);
        // Face (v_j, u_j, -u_{j+i}, -v_{j+i}).
        add_quad(cx, A + ":f1" + s(j), "P" + s(2 * j - 1), "Q" + s(2 * ji - 1), A + ":sv" + s(j),
                 A + ":su" + s(j), "v" + s(j), "u" + s(j), "-v" + s(ji), "-u" + s(ji));
        // Face (u_j, v_{j+1}, -v_{j+1+i}, -u_{j+i}).
        add_quad(cx, A + ":f2" + s(j), "P" + s(2 * j), "Q" + s(2 * ji), A + ":su" + s(j),
                 A + ":sv" + s(j1), "u" + s(j), "v" + s(j1), "-u" + s(ji), "-v" + s(j1i));
    }
    return cx;
}

// Sphere plus all annuli in one complex, sharing the P/Q cells.
CubicalComplex build_union(const CubicalComplex& sphere, const std::vector<CubicalComplex>& annuli) {
    CubicalComplex cx(2);
    for (CellIndex i = 0; i < sphere.cell_count(0); ++i) cx.add_vertex(sphere.cell(0, i).id);
    for (int k = 1; k <= 2; ++k)
        for (CellIndex i = 0; i < sphere.cell_count(k); ++i) {
            const Cube& c = sphere.cell(k, i);
            cx.add_cell(k, c.id, c.facets, c.vertices);
        }
    for (const CubicalComplex& a : annuli) {
        for (int k = 1; k <= 2; ++k)
            for (CellIndex i = 0; i < a.cell_count(k); ++i) {
                const Cube& c = a.cell(k, i);
                if (cx.find(k, c.id)) continue;  // shared P/Q edges
                std::vector<CellIndex> facets, vertices;
                for (CellIndex f : c.facets) facets.push_back(*cx.find(k - 1, a.cell(k - 1, f).id));
                for (CellIndex v : c.vertices) vertices.push_back(*cx.find(0, a.cell(0, v).id));
                cx.add_cell(k, c.id, std::move(facets), std::move(vertices));
            }
    }
    return cx;
}

}  // namespace

ScaffoldOutput rp3_scaffold(int k) {
    if (k < 1) throw std::invalid_argument("rp3_scaffold: k must be >= 1");
    int n = 2 * k + 1;
    ScaffoldNames sn{n, 2 * n};

    ScaffoldOutput out{CubicalComplex(2), {}, {}, CubicalComplex(2), Graph(), {}};
    out.boundary_sphere = build_boundary_sphere(sn);
    out.rho = build_rho(out.boundary_sphere, sn);
    for (int i = 1; i <= k; ++i) out.annuli.push_back(build_annulus(sn, i));

    CubicalComplex all = build_union(out.boundary_sphere, out.annuli);

    // Extend rho by id lookup to the union complex (domain: sphere cells only).
    CellInvolution rho_union;
    rho_union.maps.resize(3);
    for (int dim = 0; dim <= 2; ++dim)
        for (auto& [a, b] : out.rho.maps[dim]) {
            CellIndex ua = *all.find(dim, out.boundary_sphere.cell(dim, a).id);
            CellIndex ub = *all.find(dim, out.boundary_sphere.cell(dim, b).id);
            rho_union.maps[dim][ua] = ub;
        }
    out.quotient_two_complex = quotient_by_involution(all, rho_union);
    out.quotient_graph = one_skeleton_graph(out.quotient_two_complex).graph;

    auto s = [](int x) { return std::to_string(x); };
    out.labels["v0"] = "v~0";
    for (int j = 1; j <= n; ++j) out.labels["v" + s(j)] = "v~" + s(j);
    for (int j = 1; j <= n; ++j) out.labels["u" + s(j)] = "u~" + s(j);
    for (int t = 1; t <= n; ++t) out.labels["m" + s(t)] = "m~" + s(t);
    return out;
}

}  // namespace quadchrom
