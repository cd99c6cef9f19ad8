#include "quadchrom/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace quadchrom {

namespace {

void require_degree(const CubicalComplex& cx, int degree) {
    if (degree < 0 || degree > cx.dimension())
        throw std::invalid_argument("degree out of range for complex");
}

void require_same_complex(const CochainZ2& a, const CochainZ2& b) {
    if (a.complex != b.complex || a.complex == nullptr)
        throw std::invalid_argument("cochains live on different complexes");
}

int env_threads() {
    const char* s = std::getenv("QUADCHROM_THREADS");
    if (!s) return 1;
    int n = std::atoi(s);
    return n < 1 ? 1 : n;
}

// Deterministic parallel map over [0, n): each index writes its own slot.
template <typename F>
void parallel_for(std::size_t n, const F& f) {
    int threads = env_threads();
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ChainZ2 make_chain(const CubicalComplex& cx, int degree) {
    require_degree(cx, degree);
    return ChainZ2{&cx, degree, gf2::Vector(cx.cell_count(degree))};
}

CochainZ2 make_cochain(const CubicalComplex& cx, int degree) {
    require_degree(cx, degree);
    return CochainZ2{&cx, degree, gf2::Vector(cx.cell_count(degree))};
}

std::vector<int> betti_numbers(const CubicalComplex& cx) {
    int d = cx.dimension();
    std::vector<std::size_t> rk(d + 2, 0);  // rk[k] = rank of the k-th boundary map
    for (int k = 1; k <= d; ++k) rk[k] = gf2::rank(boundary_matrix(cx, k));
    std::vector<int> betti(d + 1);
    for (int k = 0; k <= d; ++k) {
        std::size_t kernel = cx.cell_count(k) - rk[k];
        betti[k] = static_cast<int>(kernel - rk[k + 1]);
    }
    return betti;
}

ChainZ2 boundary(const ChainZ2& z) {
    const CubicalComplex& cx = *z.complex;
    if (z.degree < 1) throw std::invalid_argument("boundary: degree must be >= 1");
    ChainZ2 out = make_chain(cx, z.degree - 1);
    out.support = boundary_matrix(cx, z.degree).apply(z.support);
    return out;
}

CochainZ2 coboundary(const CochainZ2& a) {
    const CubicalComplex& cx = *a.complex;
    if (a.degree >= cx.dimension())
        throw std::invalid_argument("coboundary: degree must be < dimension");
    CochainZ2 out = make_cochain(cx, a.degree + 1);
    for (CellIndex c = 0; c < cx.cell_count(a.degree + 1); ++c) {
        int v = 0;
        for (CellIndex f : cx.cell(a.degree + 1, c).facets) v ^= a.support.get(f) ? 1 : 0;
        out.support.set(c, v);
    }
    return out;
}

bool is_cycle(const ChainZ2& z) {
    if (z.degree == 0) return true;
    return !boundary_matrix(*z.complex, z.degree).apply(z.support).any();
}

bool is_boundary(const ChainZ2& z) {
    const CubicalComplex& cx = *z.complex;
    if (z.degree == cx.dimension()) return !z.support.any();
    return gf2::solve(boundary_matrix(cx, z.degree + 1), z.support).has_value();
}

bool is_cocycle(const CochainZ2& a) {
    if (a.degree == a.complex->dimension()) return true;
    return !coboundary(a).support.any();
}

bool is_coboundary(const CochainZ2& a) {
    const CubicalComplex& cx = *a.complex;
    if (a.degree == 0) return !a.support.any();
    // delta_{k-1} as a matrix: rows are k-cells, columns are (k-1)-cells.
    return gf2::solve(boundary_matrix(cx, a.degree).transposed(), a.support).has_value();
}

int pairing(const CochainZ2& a, const ChainZ2& z) {
    if (a.complex != z.complex || a.degree != z.degree)
        throw std::invalid_argument("pairing: degree or complex mismatch");
    return static_cast<int>(gf2::Vector::and_popcount(a.support, z.support) & 1);
}

ChainZ2 fundamental_class(const CubicalComplex& cx) {
    ChainZ2 z = make_chain(cx, cx.dimension());
    for (CellIndex i = 0; i < cx.cell_count(cx.dimension()); ++i) z.support.set(i, true);
    return z;
}

// ---------------------------------------------------------------------------
// Cubical route: the Serre diagonal on directed cubes. Valid exactly when the
// recorded frames glue coherently (validate() reports this), which holds for
// grid-like models. Quotients of spheres by the antipodal map admit no such
// global frame, hence the subdivision route below.
// ---------------------------------------------------------------------------

namespace {

// Iterated facet: fix every direction in `mask` (bit i = direction i+1) to
// `side`, processing high directions first so lower indices stay put.
CellIndex descend(const CubicalComplex& cx, int dim, CellIndex cell, unsigned mask, int side) {
    for (int dir = dim; dir >= 1; --dir) {
        if (!(mask >> (dir - 1) & 1u)) continue;
        cell = cx.cell(dim, cell).facets[2 * (dir - 1) + side];
        --dim;
    }
    return cell;
}

}  // namespace

CochainZ2 cup_product_cubical(const CochainZ2& a, const CochainZ2& b) {
    require_same_complex(a, b);
    const CubicalComplex& cx = *a.complex;
    int p = a.degree, q = b.degree, n = p + q;
    if (n > cx.dimension()) throw std::invalid_argument("cup product: degree overflow");

    CochainZ2 out = make_cochain(cx, n);
    std::vector<char> bits(cx.cell_count(n), 0);
    parallel_for(cx.cell_count(n), [&](std::size_t c) {
        int val = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != p) continue;
            // Front face keeps the directions in `mask` free, fixes the rest
            // at 0; back face keeps the complement, fixes `mask` at 1.
            CellIndex left = descend(cx, n, static_cast<CellIndex>(c), ~mask & ((1u << n) - 1), 0);
            CellIndex right = descend(cx, n, static_cast<CellIndex>(c), mask, 1);
            val ^= (a.support.get(left) && b.support.get(right)) ? 1 : 0;
        }
        bits[c] = static_cast<char>(val);
    });
    for (std::size_t c = 0; c < bits.size(); ++c) out.support.set(c, bits[c]);
    return out;
}

// ---------------------------------------------------------------------------
// Subdivision route. Work in the order complex of the face poset: simplices
// are flags of cells. Two explicit chain maps are built cell by cell with
// deterministic GF(2) solves inside closed cubes:
//   s   : cellular chains -> flag chains   (a chain-level section)
//   psi : flag chains     -> cellular chains
// Both are carried by closed cells, and psi(s(e)) = e holds exactly because
// a closed cube supports no nonzero cycles in positive degrees. The product
// is a(psi(front)) * b(psi(back)) summed over the flags of s(cell) - the
// Alexander-Whitney product transported back. It is unital and satisfies
// the Leibniz rule on the nose on every regular complex.
// ---------------------------------------------------------------------------

namespace {

struct CellRef {
    int dim;
    CellIndex idx;
    auto operator<=>(const CellRef&) const = default;
};

using Flag = std::vector<CellRef>;  // cells with strictly increasing dimensions

// Faces of a closed cell, as a sorted list, plus local boundary matrices.
struct LocalClosure {
    std::vector<std::vector<CellIndex>> cells;            // per dim, sorted global indices
    std::vector<std::map<CellIndex, std::size_t>> local;  // global -> local per dim
    std::vector<gf2::Matrix> bnd;                         // bnd[k]: rows (k-1)-cells, cols k-cells
};

// Simplices of the order complex of a closed cell, grouped by flag length.
struct LocalFlags {
    std::vector<std::vector<Flag>> flags;          // [length] -> sorted flags
    std::vector<std::map<Flag, std::size_t>> pos;  // flag -> index
    std::vector<gf2::Matrix> bnd;                  // bnd[L]: rows length L-1, cols length L
};

}  // namespace

struct CupTransport::Impl {
    const CubicalComplex* cx;
    // s maps each cell to a set of full flags of that cell.
    std::vector<std::vector<std::vector<Flag>>> s;  // [dim][cell] -> flags
    mutable std::map<Flag, gf2::Vector> psi_memo;   // flag -> global chain of degree len-1

    explicit Impl(const CubicalComplex& complex) : cx(&complex) { build(); }

    std::set<CellRef> closure(CellRef c) const {
        std::set<CellRef> out;
        std::vector<CellRef> todo{c};
        while (!todo.empty()) {
            CellRef r = todo.back();
            todo.pop_back();
            if (!out.insert(r).second) continue;
            if (r.dim == 0) continue;
            for (CellIndex f : cx->cell(r.dim, r.idx).facets)
                todo.push_back(CellRef{r.dim - 1, f});
        }
        return out;
    }

    LocalClosure local_closure(CellRef top) const {
        LocalClosure lc;
        lc.cells.resize(top.dim + 1);
        lc.local.resize(top.dim + 1);
        for (CellRef r : closure(top)) lc.cells[r.dim].push_back(r.idx);
        for (int k = 0; k <= top.dim; ++k) {
            std::sort(lc.cells[k].begin(), lc.cells[k].end());
            for (std::size_t i = 0; i < lc.cells[k].size(); ++i) lc.local[k][lc.cells[k][i]] = i;
        }
        lc.bnd.resize(top.dim + 1);
        for (int k = 1; k <= top.dim; ++k) {
            gf2::Matrix m(lc.cells[k - 1].size(), lc.cells[k].size());
            for (std::size_t c = 0; c < lc.cells[k].size(); ++c)
                for (CellIndex f : cx->cell(k, lc.cells[k][c]).facets)
                    m.flip(lc.local[k - 1].at(f), c);
            lc.bnd[k] = std::move(m);
        }
        return lc;
    }

    LocalFlags local_flags(CellRef top) const {
        auto cls = closure(top);
        std::vector<CellRef> sorted(cls.begin(), cls.end());
        // Expand flags by appending cells of strictly higher dimension whose
        // closure contains the current endpoint.
        std::map<CellRef, std::set<CellRef>> closure_of;
        for (CellRef r : sorted) closure_of[r] = closure(r);

        LocalFlags lf;
        lf.flags.resize(top.dim + 2);
        lf.pos.resize(top.dim + 2);
        for (CellRef r : sorted) lf.flags[1].push_back(Flag{r});
        for (int len = 2; len <= top.dim + 1; ++len) {
            for (const Flag& f : lf.flags[len - 1])
                for (CellRef r : sorted) {
                    if (r.dim <= f.back().dim) continue;
                    if (closure_of[r].count(f.back())) {
                        Flag g = f;
                        g.push_back(r);
                        lf.flags[len].push_back(std::move(g));
                    }
                }
            std::sort(lf.flags[len].begin(), lf.flags[len].end());
        }
        for (int len = 1; len <= top.dim + 1; ++len)
            for (std::size_t i = 0; i < lf.flags[len].size(); ++i) lf.pos[len][lf.flags[len][i]] = i;

        lf.bnd.resize(top.dim + 2);
        for (int len = 2; len <= top.dim + 1; ++len) {
            gf2::Matrix m(lf.flags[len - 1].size(), lf.flags[len].size());
            for (std::size_t c = 0; c < lf.flags[len].size(); ++c) {
                const Flag& f = lf.flags[len][c];
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    Flag sub;
                    for (std::size_t i = 0; i < f.size(); ++i)
                        if (i != drop) sub.push_back(f[i]);
                    m.flip(lf.pos[len - 1].at(sub), c);
                }
            }
            lf.bnd[len] = std::move(m);
        }
        return lf;
    }

    void build() {
        int d = cx->dimension();
        s.resize(d + 1);
        for (int k = 0; k <= d; ++k) s[k].resize(cx->cell_count(k));
        for (CellIndex v = 0; v < cx->cell_count(0); ++v)
            s[0][v] = {Flag{CellRef{0, v}}};

        for (int k = 1; k <= d; ++k) {
            for (CellIndex e = 0; e < cx->cell_count(k); ++e) {
                CellRef top{k, e};
                LocalFlags lf = local_flags(top);
                // Right-hand side: s applied to the boundary of e.
                gf2::Vector rhs(lf.flags[k].size());
                for (CellIndex f : cx->cell(k, e).facets)
                    for (const Flag& fl : s[k - 1][f]) rhs.flip(lf.pos[k].at(fl));
                auto x = gf2::solve(lf.bnd[k + 1], rhs);
                if (!x)
                    throw std::logic_error("cup transport: section solve failed at cell '" +
                                           cx->cell(k, e).id + "'");
                std::vector<Flag> chain;
                for (std::size_t i : x->set_bits()) chain.push_back(lf.flags[k + 1][i]);
                s[k][e] = std::move(chain);
            }
        }
    }

    // psi of a flag: a chain of degree len-1 supported in the closure of the
    // flag's top cell, built so that psi is a chain map.
    const gf2::Vector& psi(const Flag& flag) const {
        auto it = psi_memo.find(flag);
        if (it != psi_memo.end()) return it->second;

        int deg = static_cast<int>(flag.size()) - 1;
        gf2::Vector out(cx->cell_count(deg));
        if (deg == 0) {
            // Base point of a cell: the first vertex of its record.
            CellRef c = flag[0];
            CellIndex bp = c.dim == 0 ? c.idx : cx->cell(c.dim, c.idx).vertices[0];
            out.set(bp, true);
        } else {
            CellRef top = flag.back();
            LocalClosure lc = local_closure(top);
            // Boundary requirement: psi of the flag's boundary.
            gf2::Vector rhs(lc.cells[deg - 1].size());
            for (std::size_t drop = 0; drop < flag.size(); ++drop) {
                Flag sub;
                for (std::size_t i = 0; i < flag.size(); ++i)
                    if (i != drop) sub.push_back(flag[i]);
                const gf2::Vector& part = psi(sub);
                for (std::size_t g : part.set_bits()) rhs.flip(lc.local[deg - 1].at(g));
            }
            auto x = gf2::solve(lc.bnd[deg], rhs);
            if (!x) throw std::logic_error("cup transport: psi solve failed");
            for (std::size_t i : x->set_bits()) out.set(lc.cells[deg][i], true);
        }
        return psi_memo.emplace(flag, std::move(out)).first->second;
    }
};

CupTransport::CupTransport(const CubicalComplex& cx) : impl_(std::make_unique<Impl>(cx)) {}
CupTransport::~CupTransport() = default;
CupTransport::CupTransport(CupTransport&&) noexcept = default;
CupTransport& CupTransport::operator=(CupTransport&&) noexcept = default;

CochainZ2 CupTransport::cup(const CochainZ2& a, const CochainZ2& b) const {
    require_same_complex(a, b);
    const CubicalComplex& cx = *a.complex;
    if (a.complex != impl_->cx)
        throw std::invalid_argument("cup transport built for a different complex");
    int p = a.degree, q = b.degree, n = p + q;
    if (n > cx.dimension()) throw std::invalid_argument("cup product: degree overflow");

    CochainZ2 out = make_cochain(cx, n);
    for (CellIndex c = 0; c < cx.cell_count(n); ++c) {
        int val = 0;
        for (const Flag& flag : impl_->s[n][c]) {
            Flag front(flag.begin(), flag.begin() + p + 1);
            Flag back(flag.begin() + p, flag.end());
            int av = static_cast<int>(gf2::Vector::and_popcount(a.support, impl_->psi(front)) & 1);
            int bv = static_cast<int>(gf2::Vector::and_popcount(b.support, impl_->psi(back)) & 1);
            val ^= av & bv;
        }
        out.support.set(c, val);
    }
    return out;
}

CochainZ2 cup_product_subdivision(const CochainZ2& a, const CochainZ2& b) {
    require_same_complex(a, b);
    CupTransport tr(*a.complex);
    return tr.cup(a, b);
}

CupEvaluator::CupEvaluator(const CubicalComplex& cx) : coherent_(detail::directed_coherent(cx)) {
    if (!coherent_) transport_.emplace(cx);
}

CochainZ2 CupEvaluator::cup(const CochainZ2& a, const CochainZ2& b) const {
    return coherent_ ? cup_product_cubical(a, b) : transport_->cup(a, b);
}

CochainZ2 cup_product(const CochainZ2& a, const CochainZ2& b) {
    require_same_complex(a, b);
    CupEvaluator ev(*a.complex);
    return ev.cup(a, b);
}

CohomologyBasis cohomology_basis(const CubicalComplex& cx, int k) {
    require_degree(cx, k);
    int d = cx.dimension();

    std::vector<gf2::Vector> cocycles;
    if (k == d) {
        std::size_t n = cx.cell_count(k);
        for (std::size_t i = 0; i < n; ++i) {
            gf2::Vector v(n);
            v.set(i, true);
            cocycles.push_back(std::move(v));
        }
    } else {
        cocycles = gf2::kernel_basis(boundary_matrix(cx, k + 1).transposed());
    }

    // Reduce the cocycle space against the coboundary image by incremental
    // elimination; surviving kernel vectors represent a basis of H^k.
    std::vector<std::pair<std::size_t, gf2::Vector>> pivots;  // (pivot bit, reduced vector)
    auto reduce_add = [&](gf2::Vector v) -> bool {
        for (auto& [bit, w] : pivots)
            if (v.get(bit)) v ^= w;
        if (!v.any()) return false;
        pivots.emplace_back(v.set_bits().front(), std::move(v));
        return true;
    };
    if (k >= 1) {
        gf2::Matrix db = boundary_matrix(cx, k);  // delta_{k-1} columns = its rows
        for (std::size_t r = 0; r < db.rows(); ++r) reduce_add(db.row(r));
    }

    CohomologyBasis basis;
    basis.degree = k;
    for (auto& v : cocycles) {
        gf2::Vector candidate = v;
        if (reduce_add(std::move(candidate))) {
            CochainZ2 rep = make_cochain(cx, k);
            rep.support = v;
            basis.classes.push_back(std::move(rep));
        }
    }
    return basis;
}

bool class_is_nontrivial(const CochainZ2& a) {
    if (!is_cocycle(a)) throw std::invalid_argument("class_is_nontrivial: input is not a cocycle");
    return !is_coboundary(a);
}

RingConditions ring_conditions(const CubicalComplex& cx) {
    int d = cx.dimension();
    if (d < 2) throw std::invalid_argument("ring_conditions: dimension must be >= 2");
    QuadReport quad = check_quadrangulation(cx);
    if (!quad.closed_pseudo_manifold)
        throw std::invalid_argument("ring_conditions: complex is not a closed pseudo-manifold");

    CupEvaluator ev(cx);
    auto span = [&](const CohomologyBasis& basis) {
        std::vector<CochainZ2> out;
        std::size_t m = basis.classes.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            CochainZ2 v = make_cochain(cx, basis.degree);
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) v.support ^= basis.classes[i].support;
            out.push_back(std::move(v));
        }
        return out;
    };

    RingConditions rc;

    auto h_dm2 = span(cohomology_basis(cx, d - 2));
    auto h_2 = span(cohomology_basis(cx, 2));
    rc.cond1 = true;
    for (const auto& alpha : h_dm2) {
        bool hit = false;
        for (const auto& beta : h_2)
            if (class_is_nontrivial(ev.cup(alpha, beta))) {
                hit = true;
                break;
            }
        if (!hit) {
            rc.cond1 = false;
            break;
        }
    }

    auto h_1 = span(cohomology_basis(cx, 1));
    rc.cond2 = true;
    for (const auto& alpha : h_1) {
        for (const auto& beta : h_1)
            if (!class_is_nontrivial(ev.cup(alpha, beta))) {
                rc.cond2 = false;
                break;
            }
        if (!rc.cond2) break;
    }
    return rc;
}

}  // namespace quadchrom
