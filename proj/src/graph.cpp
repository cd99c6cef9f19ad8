#include "quadchrom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace quadchrom {

Graph::Graph(std::vector<std::string> vertex_ids)
    : ids_(std::move(vertex_ids)), adj_(ids_.size()) {}

bool Graph::add_edge(VertexIndex a, VertexIndex b) {
    if (a >= ids_.size() || b >= ids_.size()) throw std::invalid_argument("add_edge: bad vertex");
    if (a == b) return false;
    auto& na = adj_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
    return true;
}

bool Graph::adjacent(VertexIndex a, VertexIndex b) const {
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& id) const {
    for (VertexIndex v = 0; v < ids_.size(); ++v)
        if (ids_[v] == id) return v;
    return std::nullopt;
}

std::vector<std::pair<VertexIndex, VertexIndex>> Graph::edges() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    out.reserve(edge_count_);
    for (VertexIndex a = 0; a < adj_.size(); ++a)
        for (VertexIndex b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<VertexIndex, VertexIndex>> CycleWitness::edges() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    return out;
}

BipartiteCheck is_bipartite(const Graph& g) {
    std::size_t n = g.vertex_count();
    BipartiteCheck out;
    out.side.assign(n, -1);
    std::vector<VertexIndex> parent(n, 0);
    std::vector<int> depth(n, 0);

    for (VertexIndex root = 0; root < n; ++root) {
        if (out.side[root] != -1) continue;
        out.side[root] = 0;
        parent[root] = root;
        depth[root] = 0;
        std::deque<VertexIndex> queue{root};
        while (!queue.empty()) {
            VertexIndex u = queue.front();
            queue.pop_front();
            for (VertexIndex v : g.neighbors(u)) {
                if (out.side[v] == -1) {
                    out.side[v] = 1 - out.side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    // Conflict edge; join the two tree paths at their meeting point.
                    std::vector<VertexIndex> pu{u}, pv{v};
                    VertexIndex a = u, b = v;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        pu.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        pv.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        pu.push_back(a);
                        pv.push_back(b);
                    }
                    CycleWitness w;
                    w.vertices = pu;  // u ... meet
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
                        w.vertices.push_back(*it);
                    out.bipartite = false;
                    out.odd_cycle = std::move(w);
                    out.side.clear();
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

namespace {

// Lexicographic depth-first clique search over increasing vertex indices.
bool clique_search(const Graph& g, std::size_t size, std::vector<VertexIndex>& current,
                   const std::vector<VertexIndex>& candidates) {
    if (current.size() == size) return true;
    if (current.size() + candidates.size() < size) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        VertexIndex v = candidates[i];
        std::vector<VertexIndex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        current.push_back(v);
        if (clique_search(g, size, current, next)) return true;
        current.pop_back();
    }
    return false;
}

void bron_kerbosch(const Graph& g, std::vector<VertexIndex>& r, std::vector<VertexIndex> p,
                   std::vector<VertexIndex> x, std::vector<VertexIndex>& best) {
    if (p.empty() && x.empty()) {
        if (r.size() > best.size()) best = r;
        return;
    }
    if (r.size() + p.size() <= best.size()) return;
    // Pivot: vertex of P u X with the most neighbours in P, lowest index wins.
    VertexIndex pivot = 0;
    std::size_t bestdeg = 0;
    bool have = false;
    for (const auto& pool : {p, x})
        for (VertexIndex u : pool) {
            std::size_t deg = 0;
            for (VertexIndex w : p)
                if (g.adjacent(u, w)) ++deg;
            if (!have || deg > bestdeg) {
                have = true;
                bestdeg = deg;
                pivot = u;
            }
        }
    std::vector<VertexIndex> ext;
    for (VertexIndex v : p)
        if (!g.adjacent(pivot, v)) ext.push_back(v);
    for (VertexIndex v : ext) {
        std::vector<VertexIndex> np, nx;
        for (VertexIndex w : p)
            if (g.adjacent(v, w)) np.push_back(w);
        for (VertexIndex w : x)
            if (g.adjacent(v, w)) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), best);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::optional<std::vector<VertexIndex>> contains_clique(const Graph& g, std::size_t size) {
    std::vector<VertexIndex> current;
    std::vector<VertexIndex> all(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (clique_search(g, size, current, all)) return current;
    return std::nullopt;
}

std::vector<VertexIndex> max_clique(const Graph& g) {
    std::vector<VertexIndex> r, best;
    std::vector<VertexIndex> p(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) p[v] = v;
    bron_kerbosch(g, r, std::move(p), {}, best);
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;  // colors allowed
    std::vector<int> color;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    long long steps = 0;

    explicit ColorSearch(const Graph& graph, int colors,
                         std::chrono::steady_clock::time_point dl)
        : g(graph), k(colors), color(graph.vertex_count(), 0), deadline(dl) {}

    bool out_of_time() {
        if ((++steps & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
            timed_out = true;
        return timed_out;
    }

    // DSATUR vertex choice: highest saturation, then highest degree, then index.
    int pick() const {
        int best = -1;
        std::size_t best_sat = 0, best_deg = 0;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            if (color[v]) continue;
            std::vector<bool> seen(k + 1, false);
            std::size_t sat = 0, deg = g.neighbors(v).size();
            for (VertexIndex u : g.neighbors(v))
                if (color[u] && !seen[color[u]]) {
                    seen[color[u]] = true;
                    ++sat;
                }
            if (best == -1 || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (out_of_time()) return false;
        if (colored == static_cast<int>(g.vertex_count())) return true;
        int v = pick();
        std::vector<bool> banned(k + 1, false);
        for (VertexIndex u : g.neighbors(static_cast<VertexIndex>(v)))
            if (color[u]) banned[color[u]] = true;
        int limit = std::min(k, max_used + 1);  // new colors in increasing order
        for (int c = 1; c <= limit; ++c) {
            if (banned[c]) continue;
            color[v] = c;
            if (solve(colored + 1, std::max(max_used, c))) return true;
            color[v] = 0;
            if (timed_out) return false;
        }
        return false;
    }
};

Coloring greedy_dsatur(const Graph& g) {
    std::size_t n = g.vertex_count();
    Coloring c;
    c.color.assign(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        int best = -1;
        std::size_t best_sat = 0, best_deg = 0;
        for (VertexIndex v = 0; v < n; ++v) {
            if (c.color[v]) continue;
            std::vector<bool> seen(n + 2, false);
            std::size_t sat = 0;
            for (VertexIndex u : g.neighbors(v))
                if (c.color[u] && !seen[c.color[u]]) {
                    seen[c.color[u]] = true;
                    ++sat;
                }
            std::size_t deg = g.neighbors(v).size();
            if (best == -1 || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::vector<bool> banned(n + 2, false);
        for (VertexIndex u : g.neighbors(static_cast<VertexIndex>(best)))
            if (c.color[u]) banned[c.color[u]] = true;
        int col = 1;
        while (banned[col]) ++col;
        c.color[best] = col;
        c.num_colors = std::max(c.num_colors, col);
    }
    return c;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, std::chrono::milliseconds budget) {
    ChromaticResult res;
    if (g.vertex_count() == 0) {
        res.exact = true;
        res.value = 0;
        res.lower_bound = 0;
        res.lower_bound_kind = "exhaustion";
        return res;
    }
    auto deadline = std::chrono::steady_clock::now() + budget;

    std::vector<VertexIndex> clique = max_clique(g);
    int lb = static_cast<int>(clique.size());
    Coloring upper = greedy_dsatur(g);
    int ub = upper.num_colors;

    res.lower_bound = lb;
    res.lower_bound_kind = "clique";
    res.coloring = upper;
    res.value = ub;

    // Tighten from below: try k = lb, lb+1, ... until a k-coloring exists.
    for (int k = lb; k < ub; ++k) {
        ColorSearch search(g, k, deadline);
        if (search.solve(0, 0)) {
            Coloring c;
            c.num_colors = k;
            c.color = search.color;
            res.coloring = c;
            res.value = k;
            res.exact = true;
            return res;
        }
        if (search.timed_out) {
            res.exact = false;  // value stays a valid upper bound
            return res;
        }
        // k-coloring exhaustively ruled out; the bound is now certified.
        res.lower_bound = k + 1;
        res.lower_bound_kind = (k + 1 > lb) ? "exhaustion" : "clique";
    }
    res.exact = true;
    res.value = ub;
    return res;
}

std::size_t enumerate_proper_colorings(const Graph& g, int num_colors, std::size_t limit,
                                       const std::function<bool(const Coloring&)>& emit) {
    if (num_colors < 1 || num_colors > 6)
        throw std::invalid_argument("enumerate_proper_colorings: colors must be in 1..6");
    std::size_t n = g.vertex_count();
    std::size_t emitted = 0;
    if (n == 0) return 0;

    std::vector<int> color(n, 0);
    // Canonical order: vertices by index, vertex 0 fixed to color 1, a new
    // color may only be one more than the largest used so far.
    std::function<bool(std::size_t, int)> rec = [&](std::size_t v, int max_used) -> bool {
        if (emitted >= limit) return false;
        if (v == n) {
            Coloring c;
            c.num_colors = num_colors;
            c.color = color;
            ++emitted;
            return emit(c) && emitted < limit;
        }
        std::vector<bool> banned(num_colors + 1, false);
        for (VertexIndex u : g.neighbors(static_cast<VertexIndex>(v)))
            if (u < v) banned[color[u]] = true;
        int limit_color = std::min(num_colors, max_used + 1);
        for (int c = 1; c <= limit_color; ++c) {
            if (banned[c]) continue;
            color[v] = c;
            if (!rec(v + 1, std::max(max_used, c))) {
                color[v] = 0;
                return false;
            }
            color[v] = 0;
        }
        return true;
    };
    rec(0, 0);
    return emitted;
}

bool check_proper(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.vertex_count())
        throw std::invalid_argument("check_proper: coloring size mismatch");
    for (int col : c.color)
        if (col < 1 || col > c.num_colors)
            throw std::invalid_argument("check_proper: color out of range");
    for (auto [a, b] : g.edges())
        if (c.color[a] == c.color[b]) return false;
    return true;
}

namespace {

unsigned long long isqrt_u64(unsigned long long x) {
    if (x == 0) return 0;
    unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

int heawood_bound(long long genus) {
    if (genus < 1) throw std::invalid_argument("heawood_bound: genus must be >= 1");
    unsigned long long s = isqrt_u64(24ull * genus + 1);
    return static_cast<int>((7 + s) / 2);
}

int hutchinson_bound(long long genus) {
    if (genus < 1) throw std::invalid_argument("hutchinson_bound: genus must be >= 1");
    unsigned long long s = isqrt_u64(16ull * genus - 7);
    return static_cast<int>((5 + s) / 2);
}

}  // namespace quadchrom
