#include "quasitree/treedec.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace quasitree {

int TreeDecomposition::width() const {
    int best = 0;
    for (const auto& bag : bags) {
        best = std::max(best, static_cast<int>(bag.size()));
    }
    return best - 1;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::string edge_name(Vertex u, Vertex v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

TreedecReport validate_treedec(const Graph& g, const TreeDecomposition& d) {
    TreedecReport report;
    report.width = d.width();
    const int n = g.num_vertices();
    const int nodes = d.num_nodes();

    if (nodes == 0) {
        if (n > 0) {
            report.violations.push_back("tree: decomposition has no nodes");
        }
        report.valid = report.violations.empty();
        return report;
    }

    // The node edges must form a spanning tree.
    DisjointSets dsu(nodes);
    bool tree_ok = true;
    for (auto [a, b] : d.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes) {
            report.violations.push_back("tree: edge " + edge_name(a, b) + " references a missing node");
            tree_ok = false;
            break;
        }
        if (!dsu.unite(a, b)) {
            report.violations.push_back("tree: edge " + edge_name(a, b) + " closes a cycle");
            tree_ok = false;
            break;
        }
    }
    if (tree_ok && static_cast<int>(d.tree_edges.size()) != nodes - 1) {
        report.violations.push_back("tree: node edges do not connect all nodes");
        tree_ok = false;
    }

    std::vector<std::vector<int>> nodes_of(n);
    for (int x = 0; x < nodes; ++x) {
        for (Vertex v : d.bags[x]) {
            if (v < 0 || v >= n) {
                report.violations.push_back("bag " + std::to_string(x) + ": vertex " + std::to_string(v) +
                                            " out of range");
                report.valid = false;
                return report;
            }
            nodes_of[v].push_back(x);
        }
    }
    for (auto& list : nodes_of) {
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    for (Vertex v = 0; v < n; ++v) {
        if (nodes_of[v].empty()) {
            report.violations.push_back("vertex coverage: vertex " + std::to_string(v) + " is in no bag");
            break;
        }
    }

    for (auto [u, v] : g.edges()) {
        const auto& a = nodes_of[u];
        const auto& b = nodes_of[v];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) {
            report.violations.push_back("edge coverage: edge " + edge_name(u, v) + " is in no bag");
            break;
        }
    }

    if (tree_ok) {
        // A non-empty node set of a tree is connected iff it spans |set|-1 tree edges.
        std::vector<int> inside(n, 0);
        for (auto [a, b] : d.tree_edges) {
            for (Vertex v : d.bags[a]) {
                if (contains(d.bags[b], v)) {
                    ++inside[v];
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!nodes_of[v].empty() && inside[v] != static_cast<int>(nodes_of[v].size()) - 1) {
                report.violations.push_back("connectivity: bags containing vertex " + std::to_string(v) +
                                            " are not connected");
                break;
            }
        }
    }

    report.valid = report.violations.empty();
    return report;
}

TreeDecomposition treedec_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.num_vertices();
    TreeDecomposition d;
    if (n == 0) {
        d.bags.push_back({});
        return d;
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        position[order[i]] = i;
    }
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v].insert(g.neighbours(v).begin(), g.neighbours(v).end());
    }
    d.bags.resize(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        std::vector<Vertex> later(adj[v].begin(), adj[v].end());
        std::vector<Vertex> bag = later;
        bag.push_back(v);
        d.bags[i] = make_vertex_set(std::move(bag));
        int next = n;
        for (Vertex u : later) {
            next = std::min(next, position[u]);
        }
        parent[i] = next < n ? next : (i + 1 < n ? i + 1 : -1);
        for (Vertex u : later) {
            adj[u].erase(v);
            for (Vertex w : later) {
                if (w != u) {
                    adj[u].insert(w);
                }
            }
        }
        adj[v].clear();
    }
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0) {
            d.tree_edges.emplace_back(parent[i], i);
        }
    }
    return d;
}

TreeDecomposition heuristic_treedec(const Graph& g, EliminationStrategy strategy) {
    const int n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v].insert(g.neighbours(v).begin(), g.neighbours(v).end());
    }
    std::vector<char> eliminated(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);

    auto fill_in = [&](Vertex v) {
        std::int64_t missing = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it) {
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt) {
                if (!adj[*it].count(*jt)) {
                    ++missing;
                }
            }
        }
        return missing;
    };

    std::set<std::pair<std::int64_t, Vertex>> queue;
    std::vector<std::int64_t> score(n);
    auto rescore = [&](Vertex v) {
        queue.erase({score[v], v});
        score[v] = strategy == EliminationStrategy::MinDegree ? static_cast<std::int64_t>(adj[v].size())
                                                              : fill_in(v);
        queue.emplace(score[v], v);
    };
    for (Vertex v = 0; v < n; ++v) {
        score[v] = strategy == EliminationStrategy::MinDegree ? static_cast<std::int64_t>(adj[v].size())
                                                              : fill_in(v);
        queue.emplace(score[v], v);
    }

    while (!queue.empty()) {
        const Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        eliminated[v] = 1;
        order.push_back(v);
        std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
        for (Vertex u : nbrs) {
            adj[u].erase(v);
            for (Vertex w : nbrs) {
                if (w != u) {
                    adj[u].insert(w);
                }
            }
        }
        adj[v].clear();
        // Fill scores change within distance two of the eliminated vertex.
        std::set<Vertex> touched(nbrs.begin(), nbrs.end());
        if (strategy == EliminationStrategy::MinFill) {
            for (Vertex u : nbrs) {
                touched.insert(adj[u].begin(), adj[u].end());
            }
        }
        for (Vertex u : touched) {
            if (!eliminated[u]) {
                rescore(u);
            }
        }
    }
    return treedec_from_elimination(g, order);
}

int treewidth_exact_small(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kExactTreewidthLimit) {
        throw Error(ErrorKind::TooLarge, "treewidth_exact_small supports n <= 12, got " + std::to_string(n));
    }
    if (n == 0) {
        return -1;
    }
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbours(v)) {
            nbr_mask[v] |= 1u << u;
        }
    }
    // |Q(S, v)|: vertices outside S + v reachable from v through S.
    auto q_size = [&](std::uint32_t s, Vertex v) {
        std::uint32_t reached = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t outside = 0;
        while (frontier) {
            std::uint32_t next = 0;
            for (Vertex u = 0; u < n; ++u) {
                if (frontier & (1u << u)) {
                    next |= nbr_mask[u];
                }
            }
            next &= ~reached;
            reached |= next;
            outside |= next & ~s;
            frontier = next & s;
        }
        return std::popcount(outside);
    };

    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> best(full + 1, std::numeric_limits<int>::max());
    best[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (Vertex v = 0; v < n; ++v) {
            if (!(s & (1u << v))) {
                continue;
            }
            const std::uint32_t rest = s & ~(1u << v);
            const int candidate = std::max(best[rest], q_size(rest, v));
            best[s] = std::min(best[s], candidate);
        }
    }
    return best[full];
}

TreeDecomposition restrict_treedec(const TreeDecomposition& d, const InducedSubgraph& sub) {
    TreeDecomposition out;
    out.tree_edges = d.tree_edges;
    out.bags.reserve(d.bags.size());
    for (const auto& bag : d.bags) {
        out.bags.push_back(sub.lower(bag));
    }
    return out;
}

SeparatorSplit balanced_separator(const Graph& g, const TreeDecomposition& d, const VertexSet& s) {
    const auto report = validate_treedec(g, d);
    if (!report.valid) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "balanced_separator: " + (report.violations.empty() ? std::string("invalid decomposition")
                                                                        : report.violations.front()));
    }
    const int n = g.num_vertices();
    const int nodes = d.num_nodes();
    const int total = static_cast<int>(s.size());

    // Root the decomposition tree at node 0.
    std::vector<std::vector<int>> tree_adj(nodes);
    for (auto [a, b] : d.tree_edges) {
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    std::vector<int> parent(nodes, -1);
    std::vector<int> depth(nodes, 0);
    std::vector<int> bfs{0};
    std::vector<char> seen(nodes, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        const int x = bfs[i];
        for (int y : tree_adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                bfs.push_back(y);
            }
        }
    }

    // below[y]: S-vertices whose bags all lie in the subtree of y.
    // touching[y]: S-vertices with at least one bag in the subtree of y.
    std::vector<int> top(n, -1);
    for (int x = 0; x < nodes; ++x) {
        for (Vertex v : d.bags[x]) {
            if (top[v] < 0 || depth[x] < depth[top[v]]) {
                top[v] = x;
            }
        }
    }
    std::vector<char> in_s(n, 0);
    for (Vertex v : s) {
        in_s[v] = 1;
    }
    std::vector<long> below(nodes, 0);
    std::vector<long> touching(nodes, 0);
    for (Vertex v : s) {
        ++below[top[v]];
    }
    for (int x = 0; x < nodes; ++x) {
        for (Vertex v : d.bags[x]) {
            if (!in_s[v]) {
                continue;
            }
            ++touching[x];
            if (x != top[v]) {
                --touching[parent[x]];
            }
        }
    }
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const int x = *it;
        if (parent[x] >= 0) {
            below[parent[x]] += below[x];
            touching[parent[x]] += touching[x];
        }
    }

    // A node with no edge leading to a side holding more than |S|/2 of S.
    int centre = -1;
    for (int x = 0; x < nodes && centre < 0; ++x) {
        bool heavy_side = parent[x] >= 0 && 2 * (total - touching[x]) > total;
        for (int y : tree_adj[x]) {
            if (y != parent[x] && 2 * below[y] > total) {
                heavy_side = true;
            }
        }
        if (!heavy_side) {
            centre = x;
        }
    }
    if (centre < 0) {
        throw Error(ErrorKind::InvalidDecomposition, "balanced_separator: no centroid bag found");
    }

    SeparatorSplit split;
    split.z = d.bags[centre];
    std::vector<char> in_z(n, 0);
    for (Vertex v : split.z) {
        in_z[v] = 1;
    }

    struct Piece {
        VertexSet members;
        int weight = 0;
    };
    std::vector<Piece> pieces;
    std::vector<char> visited(n, 0);
    for (Vertex start = 0; start < n; ++start) {
        if (visited[start] || in_z[start]) {
            continue;
        }
        Piece piece;
        std::vector<Vertex> stack{start};
        visited[start] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            piece.members.push_back(v);
            piece.weight += in_s[v];
            for (Vertex nb : g.neighbours(v)) {
                if (!visited[nb] && !in_z[nb]) {
                    visited[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        pieces.push_back(std::move(piece));
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.weight > b.weight; });

    // The heaviest piece opens A; A keeps taking pieces until it holds a third
    // of the outside weight. Every piece holds at most half, so both sides end
    // at no more than two thirds.
    int outside = 0;
    for (const auto& piece : pieces) {
        outside += piece.weight;
    }
    int weight_a = 0;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0 || 3 * weight_a < outside) {
            weight_a += pieces[i].weight;
            a.insert(a.end(), pieces[i].members.begin(), pieces[i].members.end());
        } else {
            b.insert(b.end(), pieces[i].members.begin(), pieces[i].members.end());
        }
    }
    split.a = make_vertex_set(std::move(a));
    split.b = make_vertex_set(std::move(b));
    return split;
}

}  // namespace quasitree
