#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasitree/graph.hpp"

namespace quasitree {

enum class PatternKind { Kst, KstStar, Extension, Skewered };

std::string_view to_string(PatternKind kind);

/// A certified occurrence of one of the excluded structures.
///
/// Kst:       every vertex of `y` is adjacent to every vertex of `x`.
/// KstStar:   as Kst, plus `pair_vertices[i] = ((x1, x2), p)` with p adjacent
///            to both x1 and x2, one distinct p per pair of `x`.
/// Extension: `x`-`y` complete bipartite, `contracted` connected and disjoint
///            from x ∪ y, with a neighbour of every vertex of x ∪ y.
/// Skewered:  `x`-`y` complete bipartite, `path` a path avoiding x that
///            visits every vertex of y.
struct PatternWitness {
    PatternKind kind = PatternKind::Kst;
    VertexSet x;
    VertexSet y;
    std::vector<std::pair<Edge, Vertex>> pair_vertices;
    VertexSet contracted;
    std::vector<Vertex> path;

    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

class PatternPresent : public Error {
public:
    PatternPresent(PatternWitness witness, const std::string& message)
        : Error(ErrorKind::PatternPresent, message), witness_(std::move(witness)) {}

    const PatternWitness& witness() const noexcept { return witness_; }

private:
    PatternWitness witness_;
};

class PreconditionViolation : public Error {
public:
    PreconditionViolation(VertexSet set, const std::string& message)
        : Error(ErrorKind::PreconditionViolation, message), set_(std::move(set)) {}

    const VertexSet& set() const noexcept { return set_; }

private:
    VertexSet set_;
};

/// c(s,t,rho): t when s = 1, else 1 + rho + (t-1) * C(rho, s-1).
/// Saturates at INT64_MAX. Throws Error{BadParams} unless s,t >= 1, rho >= 0.
std::int64_t c_bound(int s, int t, int rho);

/// Saturating binomial coefficient.
std::int64_t binomial(std::int64_t n, std::int64_t k);

inline constexpr std::int64_t kDefaultSearchCap = 1'000'000;

/// First s-subset X (lexicographic) with at least t common neighbours; Y is the
/// t smallest of them. Throws Error{SearchCapExceeded} when C(n,s) > cap.
std::optional<PatternWitness> find_kst(const Graph& g, int s, int t, std::int64_t cap = kDefaultSearchCap);

/// First s-subset X admitting a K*_{s,t}. Pair vertices are assigned by
/// bipartite matching so that as few common neighbours as possible are spent.
std::optional<PatternWitness> find_kst_star(const Graph& g, int s, int t, std::int64_t cap = kDefaultSearchCap);

/// Works on the component of G - X richest in N^{>=|X|}(X). Returns a
/// Skewered witness if a root path of its BFS tree carries b marked vertices,
/// otherwise an Extension built from a class of equal marked-depth.
/// Returns nullopt when no component carries (a-1)(b-1)+1 marked vertices.
/// Throws Error{BadParams} unless a >= 2, b >= 1.
std::optional<PatternWitness> extension_or_skewer(const Graph& g, const VertexSet& x, int a, int b);

struct WitnessCheck {
    bool ok = false;
    std::string reason;
};

/// Re-verifies a witness by direct adjacency checks.
WitnessCheck verify_witness(const Graph& g, const PatternWitness& w);

struct RhoResult {
    int value = 0;
    /// Branch vertices of H.
    VertexSet branch;
    /// Each edge of H with the vertex subdividing it.
    std::vector<std::pair<Edge, Vertex>> midpoints;
    bool exact = false;
};

/// Largest min-degree of an H whose 1-subdivision is a subgraph of G, over
/// branch sets of at most max_branch vertices. `exact` is set only when no
/// larger branch set could realise a bigger value.
/// Throws Error{SearchCapExceeded} after `cap` search steps.
RhoResult rho_oracle(const Graph& g, int max_branch, std::int64_t cap = 50'000'000);

/// Checks a rho witness: distinct midpoints outside the branch set, each
/// adjacent to both ends, and H of min degree equal to `value`.
WitnessCheck verify_rho(const Graph& g, const RhoResult& r);

}  // namespace quasitree
