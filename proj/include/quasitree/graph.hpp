#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quasitree/error.hpp"

namespace quasitree {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates in place, returning the canonical set.
VertexSet make_vertex_set(std::vector<Vertex> members);

bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// into a single edge.
    /// Throws Error{SelfLoop} or Error{VertexOutOfRange}.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    /// Local id -> parent id.
    std::vector<Vertex> to_parent;
    /// Parent id -> local id, or -1 when the vertex was not kept.
    std::vector<Vertex> to_local;

    VertexSet lift(const VertexSet& local) const;
    VertexSet lower(const VertexSet& parent) const;
};

/// G[W]. Local ids follow the order of W. Throws Error{VertexOutOfRange}.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// { v not in X : |N(v) ∩ X| >= s }.
VertexSet neighbours_at_least(const Graph& g, const VertexSet& x, int s);

/// Vertices adjacent to every member of X.
inline VertexSet common_neighbours(const Graph& g, const VertexSet& x) {
    return neighbours_at_least(g, x, static_cast<int>(x.size()));
}

struct DegeneracyOrder {
    int degeneracy = 0;
    /// Deletion order: each vertex has at most `degeneracy` neighbours later on.
    std::vector<Vertex> order;
};

/// Repeated minimum-degree deletion, ties broken by smallest id.
DegeneracyOrder degeneracy_order(const Graph& g);

}  // namespace quasitree
