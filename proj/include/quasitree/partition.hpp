#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/treedec.hpp"

namespace quasitree {

/// Rooted tree stored as a parent array; parent[root] == -1.
struct RootedTree {
    std::vector<int> parent;
    int root = 0;

    int num_nodes() const { return static_cast<int>(parent.size()); }

    /// Empty when the parent array is not a single tree rooted at `root`.
    std::vector<int> depths() const;
    std::vector<std::vector<int>> children() const;
    /// Nodes in BFS order from the root; siblings by node id.
    std::vector<int> bfs_order() const;
    /// True when `a` is a proper ancestor of `x`.
    bool is_ancestor(int a, int x) const;
    /// Max over nodes of (children + has-parent).
    int max_degree() const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Bags B_x indexed by the nodes of a rooted tree, plus for each vertex v the
/// other endpoints of its up-edge set E_v.
struct QuasiTreePartition {
    RootedTree tree;
    std::vector<VertexSet> bags;
    std::vector<VertexSet> up_edges;

    /// node_of[v] = the node whose bag holds v. Assumes the bags partition V(G).
    std::vector<int> node_of(int n) const;

    friend bool operator==(const QuasiTreePartition&, const QuasiTreePartition&) = default;
};

struct QtpReport {
    bool valid = false;
    int quasiness = 0;
    int width = 0;
    int degree = 0;
    bool clean = false;
    /// heavy_children[x]: children y of x with |N(B_y) ∩ (bags strictly shallower than y)| >= s_heavy.
    std::vector<int> heavy_children;
    int max_heavy_children = 0;
    std::vector<std::string> violations;
};

/// Recomputes every property of Q against G from scratch.
QtpReport validate_qtp(const Graph& g, const QuasiTreePartition& q, int s_heavy = 1);

/// |N(B_y) ∩ ⋃{B_q : depth(q) < depth(y)}| for every node y (0 at the root).
std::vector<int> upward_neighbourhood_sizes(const Graph& g, const QuasiTreePartition& q);

struct Loads {
    std::vector<VertexSet> loads;
    int weight = 0;
};

/// Loads C_x and weight, by the definitional double loop.
/// Throws Error{NotClean} unless Q is valid and clean.
Loads loads_and_weight(const Graph& g, const QuasiTreePartition& q);

/// B̂_root = B_root and B̂_x = B_x ∪ B_parent(x) ∪ C_x. Throws Error{NotClean}.
TreeDecomposition to_treedec(const Graph& g, const QuasiTreePartition& q);

struct VerticalPathPolicy {
    enum class Mode { Auto, Exhaustive, Sampled };
    Mode mode = Mode::Auto;
    /// Largest |X| enumerated in exhaustive mode.
    int max_set_size = 3;
    /// Auto picks exhaustive up to this many vertices.
    int exhaustive_vertex_limit = 14;
    int samples = 1000;
    std::uint64_t seed = 0;
};

struct VerticalPathReport {
    bool exhaustive = false;
    std::int64_t tested = 0;
    std::int64_t skipped = 0;
    std::vector<VertexSet> failures;

    bool passed() const { return failures.empty(); }
};

/// For every examined X with at least `threshold` common neighbours, checks
/// that the nodes whose bags meet X lie on one vertical path.
VerticalPathReport vertical_path_check(const Graph& g, const QuasiTreePartition& q, int threshold,
                                       const VerticalPathPolicy& policy = {});

/// True when the nodes are pairwise comparable under the ancestor relation.
bool on_one_vertical_path(const RootedTree& tree, std::vector<int> nodes);

}  // namespace quasitree
