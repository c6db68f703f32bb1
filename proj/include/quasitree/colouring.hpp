#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/partition.hpp"

namespace quasitree {

using Colour = int;
using ColourSet = std::vector<Colour>;

/// L(v) for every vertex; each list sorted and duplicate-free.
using ListAssignment = std::vector<ColourSet>;

/// f(v) for every vertex; each set sorted, all of the same size.
using SetColouring = std::vector<ColourSet>;

struct ColouringReport {
    /// No edge has a shared colour.
    bool proper = false;
    /// Largest monochromatic component.
    int clustering = 0;
    /// Largest monochromatic degree.
    int defect = 0;
    /// f(v) ⊆ L(v) for every v (true when no lists are given).
    bool list_ok = false;
    /// Every colour set has the same size and no repeats.
    bool uniform = false;
    int set_size = 0;
    std::vector<std::string> violations;
};

/// Per-colour component search on G itself.
ColouringReport validate_colouring(const Graph& g, const SetColouring& f,
                                   const std::optional<ListAssignment>& lists = std::nullopt);

/// max{ell k^2, 2 k d^(ell k - 1)}, saturating.
std::int64_t clean_clustering_bound(int ell, int k, int d);
/// w (d+1)^w, saturating.
std::int64_t heavy_clustering_bound(int w, int d);
/// w d^w for d >= 2; for d <= 1 the path-count sum w (1 + d + ... + d^(w-1)).
std::int64_t fractional_clustering_bound(int w, int d);

/// Vertex-by-vertex ell-set colouring of a clean quasi-tree-partition: each
/// vertex avoids the colours on its up-edges and the colour of the oldest
/// monochromatic component it touches. Lists need ell * (quasiness + 1) + 1
/// colours. Throws Error{NotClean}, Error{ListsTooSmall}, Error{BadParams}.
SetColouring colour_clean_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists, int ell);

/// Bag-by-bag 1-colouring; heavy children (threshold quasiness + 2) are joined
/// completely to their parent. Lists need quasiness + 2 colours.
/// Throws Error{ListsTooSmall}, Error{HeavyCapViolated}, Error{InvalidDecomposition}.
SetColouring colour_heavy_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists,
                              int heavy_cap);

/// Bag-by-bag ell-set colouring with every tree edge joined completely. Lists
/// need (quasiness + 1) ell + 1 colours.
/// Throws Error{ListsTooSmall}, Error{InvalidDecomposition}, Error{BadParams}.
SetColouring colour_fractional_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists,
                                   int ell);

}  // namespace quasitree
