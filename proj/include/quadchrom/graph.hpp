#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace quadchrom {

using VertexIndex = std::uint32_t;

/// Simple undirected graph: no loops, no parallel edges, sorted adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertex_ids);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    /// Inserts the edge; returns false for loops and duplicates.
    bool add_edge(VertexIndex a, VertexIndex b);

    bool adjacent(VertexIndex a, VertexIndex b) const;
    const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adj_[v]; }

    const std::string& vertex_id(VertexIndex v) const { return ids_[v]; }
    std::optional<VertexIndex> find_vertex(const std::string& id) const;

    /// All edges as (a, b) with a < b, sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<VertexIndex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Proper colorings use colors 1..num_colors.
struct Coloring {
    int num_colors = 0;
    std::vector<int> color;  // indexed by vertex
};

/// A closed cycle given by its vertex sequence (no repeats).
struct CycleWitness {
    std::vector<VertexIndex> vertices;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;
    bool odd() const { return vertices.size() % 2 == 1; }
};

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> side;                   // 0/1 per vertex when bipartite
    std::optional<CycleWitness> odd_cycle;   // present when not bipartite
};

/// BFS 2-coloring; on failure the witness is a genuine simple odd cycle.
BipartiteCheck is_bipartite(const Graph& g);

/// Lexicographically least clique of the requested size, if one exists.
std::optional<std::vector<VertexIndex>> contains_clique(const Graph& g, std::size_t size);

/// Exact maximum clique (Bron-Kerbosch with pivoting), deterministic.
std::vector<VertexIndex> max_clique(const Graph& g);

struct ChromaticResult {
    bool exact = false;       // false: budget ran out, value is an upper bound only
    int value = 0;
    Coloring coloring;        // proper coloring with `value` colors
    int lower_bound = 0;
    std::string lower_bound_kind;  // "clique" or "exhaustion"
};

/// Exact chromatic number by DSATUR-ordered branch and bound.
/// Guaranteed practical for graphs up to ~64 vertices; deterministic.
ChromaticResult chromatic_number(const Graph& g,
                                 std::chrono::milliseconds budget = std::chrono::milliseconds(60000));

/// Streams canonical proper colorings (vertex 0 gets color 1, new colors are
/// introduced in increasing order). Stops after `limit` emissions or when the
/// callback returns false. Returns the number of colorings emitted.
std::size_t enumerate_proper_colorings(const Graph& g, int num_colors, std::size_t limit,
                                       const std::function<bool(const Coloring&)>& emit);

/// Throws std::invalid_argument when a color is outside 1..num_colors.
bool check_proper(const Graph& g, const Coloring& c);

/// floor((7 + sqrt(24k+1)) / 2), integer arithmetic only. Requires k >= 1.
int heawood_bound(long long genus);
/// floor((5 + sqrt(16k-7)) / 2), integer arithmetic only. Requires k >= 1.
int hutchinson_bound(long long genus);

}  // namespace quadchrom
