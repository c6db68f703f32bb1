#pragma once

#include <cstdint>

#include "quasitree/graph.hpp"
#include "quasitree/partition.hpp"
#include "quasitree/patterns.hpp"
#include "quasitree/treedec.hpp"

namespace quasitree {

struct BuildParams {
    int s = 1;
    int t = 1;
    int rho = 0;
    int a = 2;
    int b = 2;
    /// Tree-width bound plus one: D must have width at most k - 1.
    int k = 1;
    /// Vertices required in the root bag.
    VertexSet root_set;
    /// Cap on the subset enumerations of the pattern searches.
    std::int64_t search_cap = kDefaultSearchCap;
};

/// c(s, t, rho) for the params as given.
std::int64_t params_c(const BuildParams& p);

/// t used by the excluded-pattern builders:
/// (s + (a-1)(b-1))(a-1)(b-1) + extra, with extra = k + 1 (clean) or 1.
int excluded_t(int s, int a, int b, int extra);

/// Clean (s-1)-quasi-tree-partition of a K*_{s,t}-free graph with the root
/// set in the root bag.
///
/// Throws PreconditionViolation carrying S ∪ {u} when a step finds
/// |S ∪ {u} ∪ N^{>=s}(S ∪ {u})| > 12ck, Error{InvalidDecomposition} when D is
/// not a decomposition of width <= k-1, and Error{BadParams} when the root set
/// exceeds 12ck.
QuasiTreePartition build_qtp_kst_free(const Graph& g, const TreeDecomposition& d, const BuildParams& p);

/// Clean (s-1)-quasi-tree-partition for graphs with no 1-extension of K_{s,a}
/// and no skewered K_{s,b}; t is taken as excluded_t(s, a, b, k + 1) and the
/// params' own t is ignored.
/// Throws PatternPresent with a witness when a forbidden gadget is found.
QuasiTreePartition build_qtp_excluded_clean(const Graph& g, const TreeDecomposition& d, const BuildParams& p);

/// As build_qtp_excluded_clean, with t = excluded_t(s, a, b, 1) and no
/// cleanness guarantee.
QuasiTreePartition build_qtp_excluded(const Graph& g, const TreeDecomposition& d, const BuildParams& p);

/// Width-1 (d-1)-quasi-tree-partition from a degeneracy ordering of
/// degeneracy d.
QuasiTreePartition build_qtp_degeneracy(const Graph& g);

}  // namespace quasitree
