#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quasitree/graph.hpp"

namespace quasitree {

/// A tree on nodes 0..bags.size()-1 with one bag per node.
struct TreeDecomposition {
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<VertexSet> bags;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    /// max bag size - 1 (and -1 for an empty decomposition).
    int width() const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct TreedecReport {
    bool valid = false;
    int width = -1;
    std::vector<std::string> violations;
};

/// Checks that the node edges form a tree and the three decomposition clauses:
/// vertex coverage, edge coverage, and connectivity of each vertex's bags.
/// Failures are reported, never thrown.
TreedecReport validate_treedec(const Graph& g, const TreeDecomposition& d);

enum class EliminationStrategy { MinDegree, MinFill };

/// Decomposition from a greedy elimination ordering. Always valid, no
/// optimality guarantee.
TreeDecomposition heuristic_treedec(const Graph& g, EliminationStrategy strategy = EliminationStrategy::MinDegree);

/// Decomposition induced by an explicit elimination ordering.
TreeDecomposition treedec_from_elimination(const Graph& g, const std::vector<Vertex>& order);

inline constexpr int kExactTreewidthLimit = 12;

/// Exact tree-width by dynamic programming over vertex subsets.
/// Throws Error{TooLarge} when n > 12.
int treewidth_exact_small(const Graph& g);

/// Intersects every bag with W and renames vertices to their index in W.
/// The tree is unchanged; bags may become empty.
TreeDecomposition restrict_treedec(const TreeDecomposition& d, const InducedSubgraph& sub);

/// A, B and Z partition V(G) and no edge joins A to B.
struct SeparatorSplit {
    VertexSet a;
    VertexSet b;
    VertexSet z;
};

/// Finds a bag Z = B_x whose removal leaves at most |S|/2 of S on each side of
/// the decomposition tree, then packs the components of G - Z into A and B so
/// that each side holds at most 2|S|/3 vertices of S.
/// Throws Error{InvalidDecomposition} if D is not a decomposition of G.
SeparatorSplit balanced_separator(const Graph& g, const TreeDecomposition& d, const VertexSet& s);

}  // namespace quasitree
