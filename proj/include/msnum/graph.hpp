#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msnum/gf2.hpp"

// Simple undirected labeled graphs with bit-row adjacency, graph6 / edge-list
// parsing, and the local-complementation family of transforms.

namespace msnum {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset;  // byte offset into the input
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    bool has_edge(std::size_t u, std::size_t v) const;
    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);
    void toggle_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t v) const;
    // Adjacency row of v: bit u set iff {u,v} is an edge.
    const gf2::BitVector& neighbors(std::size_t v) const;

    gf2::BitMatrix adjacency_matrix() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(std::size_t v) const;
    void check_edge_ends(std::size_t u, std::size_t v) const;

    std::vector<gf2::BitVector> adj_;
};

// graph6 per McKay's format; an optional ">>graph6<<" header is tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n" then whitespace-separated 0-based pairs "u v"; duplicates idempotent.
Graph parse_edge_list(std::string_view text);

// Keeps vertices of `keep` (relabeled in increasing order) and internal edges.
Graph induced_subgraph(const Graph& g, std::vector<std::size_t> keep);

struct Bipartition {
    std::vector<std::size_t> side_a;
    std::vector<std::size_t> side_b;
};

// BFS 2-coloring; nullopt iff the graph contains an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Toggles every edge inside the neighborhood of v.
Graph local_complement(const Graph& g, std::size_t v);

// ((G^u)^v)^u; defined only when {u,v} is an edge.
Graph pivot(const Graph& g, std::size_t u, std::size_t v);

// Pivot on {u,v}, then delete both endpoints.
Graph pivot_minor_delete(const Graph& g, std::size_t u, std::size_t v);

bool is_tree(const Graph& g);

// Minimum vertex cover size of a tree, by rooted DP. Rejects non-trees.
std::size_t tree_vertex_cover_number(const Graph& g);

}  // namespace msnum
