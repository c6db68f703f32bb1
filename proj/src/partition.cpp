#include "quasitree/partition.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace quasitree {

std::vector<int> RootedTree::depths() const {
    const int nodes = num_nodes();
    if (root < 0 || root >= nodes || parent[root] != -1) {
        return {};
    }
    std::vector<int> depth(nodes, -1);
    depth[root] = 0;
    std::vector<int> path;
    for (int x = 0; x < nodes; ++x) {
        int y = x;
        path.clear();
        while (depth[y] < 0) {
            path.push_back(y);
            const int p = parent[y];
            if (p < 0 || p >= nodes || static_cast<int>(path.size()) > nodes) {
                return {};
            }
            y = p;
        }
        int d = depth[y];
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            depth[*it] = ++d;
        }
    }
    return depth;
}

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> out(num_nodes());
    for (int x = 0; x < num_nodes(); ++x) {
        if (parent[x] >= 0) {
            out[parent[x]].push_back(x);
        }
    }
    return out;
}

std::vector<int> RootedTree::bfs_order() const {
    const auto kids = children();
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int y : kids[order[i]]) {
            order.push_back(y);
        }
    }
    return order;
}

bool RootedTree::is_ancestor(int a, int x) const {
    for (int y = parent[x]; y >= 0; y = parent[y]) {
        if (y == a) {
            return true;
        }
    }
    return false;
}

int RootedTree::max_degree() const {
    std::vector<int> deg(num_nodes(), 0);
    for (int x = 0; x < num_nodes(); ++x) {
        if (parent[x] >= 0) {
            ++deg[x];
            ++deg[parent[x]];
        }
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<int> QuasiTreePartition::node_of(int n) const {
    std::vector<int> out(n, -1);
    for (int x = 0; x < static_cast<int>(bags.size()); ++x) {
        for (Vertex v : bags[x]) {
            if (v >= 0 && v < n) {
                out[v] = x;
            }
        }
    }
    return out;
}

namespace {

/// Entry/exit times for O(1) ancestor tests.
struct AncestorIndex {
    std::vector<int> enter;
    std::vector<int> exit;

    explicit AncestorIndex(const RootedTree& tree) : enter(tree.num_nodes()), exit(tree.num_nodes()) {
        const auto kids = tree.children();
        int clock = 0;
        std::vector<std::pair<int, std::size_t>> stack{{tree.root, 0}};
        enter[tree.root] = clock++;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            if (next < kids[x].size()) {
                const int y = kids[x][next++];
                enter[y] = clock++;
                stack.emplace_back(y, 0);
            } else {
                exit[x] = clock++;
                stack.pop_back();
            }
        }
    }

    /// a is a proper ancestor of x.
    bool above(int a, int x) const { return a != x && enter[a] < enter[x] && exit[x] < exit[a]; }
    bool above_or_equal(int a, int x) const { return a == x || above(a, x); }
};

std::vector<int> upward_sizes_impl(const Graph& g, const QuasiTreePartition& q, const std::vector<int>& depth,
                                   const std::vector<int>& node_of) {
    const int nodes = q.tree.num_nodes();
    std::vector<int> sizes(nodes, 0);
    std::vector<int> stamp(g.num_vertices(), -1);
    for (int y = 0; y < nodes; ++y) {
        int count = 0;
        for (Vertex v : q.bags[y]) {
            for (Vertex w : g.neighbours(v)) {
                if (stamp[w] != y && depth[node_of[w]] < depth[y]) {
                    stamp[w] = y;
                    ++count;
                }
            }
        }
        sizes[y] = count;
    }
    return sizes;
}

}  // namespace

std::vector<int> upward_neighbourhood_sizes(const Graph& g, const QuasiTreePartition& q) {
    return upward_sizes_impl(g, q, q.tree.depths(), q.node_of(g.num_vertices()));
}

QtpReport validate_qtp(const Graph& g, const QuasiTreePartition& q, int s_heavy) {
    QtpReport report;
    const int n = g.num_vertices();
    const int nodes = q.tree.num_nodes();
    auto fail = [&](std::string message) {
        report.violations.push_back(std::move(message));
    };

    if (nodes == 0) {
        fail("tree: no nodes");
        return report;
    }
    const auto depth = q.tree.depths();
    if (depth.empty()) {
        fail("tree: parent array is not a tree rooted at node " + std::to_string(q.tree.root));
        return report;
    }
    if (static_cast<int>(q.bags.size()) != nodes) {
        fail("bags: expected " + std::to_string(nodes) + " bags, got " + std::to_string(q.bags.size()));
        return report;
    }
    if (static_cast<int>(q.up_edges.size()) != n) {
        fail("up_edges: expected " + std::to_string(n) + " entries, got " + std::to_string(q.up_edges.size()));
        return report;
    }

    std::vector<int> node_of(n, -1);
    bool partition_ok = true;
    for (int x = 0; x < nodes; ++x) {
        report.width = std::max(report.width, static_cast<int>(q.bags[x].size()));
        for (Vertex v : q.bags[x]) {
            if (v < 0 || v >= n) {
                fail("bags: vertex " + std::to_string(v) + " in bag " + std::to_string(x) + " out of range");
                partition_ok = false;
            } else if (node_of[v] >= 0) {
                fail("bags: vertex " + std::to_string(v) + " in bags " + std::to_string(node_of[v]) + " and " +
                     std::to_string(x));
                partition_ok = false;
            } else {
                node_of[v] = x;
            }
        }
    }
    for (Vertex v = 0; v < n && partition_ok; ++v) {
        if (node_of[v] < 0) {
            fail("bags: vertex " + std::to_string(v) + " is in no bag");
            partition_ok = false;
        }
    }
    report.degree = q.tree.max_degree();
    if (!partition_ok) {
        return report;
    }

    const AncestorIndex index(q.tree);
    std::set<Edge> removed;
    report.clean = true;
    for (Vertex v = 0; v < n; ++v) {
        const VertexSet ups = make_vertex_set(q.up_edges[v]);
        report.quasiness = std::max(report.quasiness, static_cast<int>(ups.size()));
        const int x = node_of[v];
        for (Vertex w : ups) {
            if (w < 0 || w >= n || !g.adjacent(v, w)) {
                fail("up-edge: E_" + std::to_string(v) + " lists " + std::to_string(w) + ", not a neighbour");
                continue;
            }
            removed.emplace(std::min(v, w), std::max(v, w));
            const int y = node_of[w];
            if (depth[y] >= depth[x]) {
                fail("up-edge: " + std::to_string(v) + "-" + std::to_string(w) + " in E_" + std::to_string(v) +
                     " does not point to a shallower bag");
                report.clean = false;
            } else if (!index.above(y, x) || q.tree.parent[x] == y) {
                report.clean = false;
            }
        }
    }

    for (auto [u, v] : g.edges()) {
        if (removed.count({u, v})) {
            continue;
        }
        const int x = node_of[u];
        const int y = node_of[v];
        if (x != y && q.tree.parent[x] != y && q.tree.parent[y] != x) {
            fail("tree-partition: edge " + std::to_string(u) + "-" + std::to_string(v) + " joins bags " +
                 std::to_string(x) + " and " + std::to_string(y) + ", which are not adjacent");
        }
    }

    const auto upward = upward_sizes_impl(g, q, depth, node_of);
    report.heavy_children.assign(nodes, 0);
    for (int y = 0; y < nodes; ++y) {
        if (q.tree.parent[y] >= 0 && upward[y] >= s_heavy) {
            ++report.heavy_children[q.tree.parent[y]];
        }
    }
    report.max_heavy_children = *std::max_element(report.heavy_children.begin(), report.heavy_children.end());

    report.valid = report.violations.empty();
    if (!report.valid) {
        report.clean = false;
    }
    return report;
}

Loads loads_and_weight(const Graph& g, const QuasiTreePartition& q) {
    const auto report = validate_qtp(g, q);
    if (!report.valid || !report.clean) {
        throw Error(ErrorKind::NotClean, report.valid ? "loads are defined only for clean quasi-tree-partitions"
                                                      : "loads require a valid quasi-tree-partition");
    }
    const int n = g.num_vertices();
    const int nodes = q.tree.num_nodes();
    const auto node_of = q.node_of(n);
    const AncestorIndex index(q.tree);

    Loads result;
    result.loads.resize(nodes);
    for (int x = 0; x < nodes; ++x) {
        std::vector<Vertex> load;
        for (Vertex v = 0; v < n; ++v) {
            const int y = node_of[v];
            if (!index.above_or_equal(x, y)) {
                continue;
            }
            for (Vertex w : q.up_edges[v]) {
                const int a = node_of[w];
                if (index.above(a, x) && q.tree.parent[x] != a) {
                    load.push_back(w);
                }
            }
        }
        result.loads[x] = make_vertex_set(std::move(load));
        result.weight = std::max(result.weight, static_cast<int>(result.loads[x].size()));
    }
    return result;
}

TreeDecomposition to_treedec(const Graph& g, const QuasiTreePartition& q) {
    const auto loads = loads_and_weight(g, q);
    TreeDecomposition d;
    const int nodes = q.tree.num_nodes();
    d.bags.resize(nodes);
    for (int x = 0; x < nodes; ++x) {
        const int p = q.tree.parent[x];
        if (p < 0) {
            d.bags[x] = q.bags[x];
            continue;
        }
        d.bags[x] = set_union(set_union(q.bags[x], q.bags[p]), loads.loads[x]);
        d.tree_edges.emplace_back(p, x);
    }
    return d;
}

bool on_one_vertical_path(const RootedTree& tree, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const auto depth = tree.depths();
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) { return depth[a] < depth[b]; });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!tree.is_ancestor(nodes[i - 1], nodes[i])) {
            return false;
        }
    }
    return true;
}

VerticalPathReport vertical_path_check(const Graph& g, const QuasiTreePartition& q, int threshold,
                                       const VerticalPathPolicy& policy) {
    const int n = g.num_vertices();
    const auto node_of = q.node_of(n);
    const auto depth = q.tree.depths();
    const AncestorIndex index(q.tree);

    VerticalPathReport report;
    auto examine = [&](const VertexSet& x) {
        if (static_cast<int>(common_neighbours(g, x).size()) < threshold) {
            ++report.skipped;
            return;
        }
        ++report.tested;
        std::vector<int> nodes;
        for (Vertex v : x) {
            nodes.push_back(node_of[v]);
        }
        std::sort(nodes.begin(), nodes.end(), [&](int a, int b) { return depth[a] < depth[b]; });
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (!index.above_or_equal(nodes[i - 1], nodes[i])) {
                report.failures.push_back(x);
                return;
            }
        }
    };

    const bool exhaustive = policy.mode == VerticalPathPolicy::Mode::Exhaustive ||
                            (policy.mode == VerticalPathPolicy::Mode::Auto && n <= policy.exhaustive_vertex_limit);
    report.exhaustive = exhaustive;
    if (exhaustive) {
        VertexSet x;
        // Depth-first enumeration of all sets of size 1..max_set_size.
        auto recurse = [&](auto&& self, Vertex from) -> void {
            for (Vertex v = from; v < n; ++v) {
                x.push_back(v);
                examine(x);
                if (static_cast<int>(x.size()) < policy.max_set_size) {
                    self(self, v + 1);
                }
                x.pop_back();
            }
        };
        recurse(recurse, 0);
        return report;
    }

    // Sampled sets are drawn from single neighbourhoods, so every sample has at
    // least one common neighbour.
    std::mt19937_64 rng(policy.seed);
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 0) {
            pool.push_back(v);
        }
    }
    if (pool.empty()) {
        return report;
    }
    for (int i = 0; i < policy.samples; ++i) {
        const Vertex centre = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        std::vector<Vertex> nbrs(g.neighbours(centre).begin(), g.neighbours(centre).end());
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        const int size = std::uniform_int_distribution<int>(1, policy.max_set_size)(rng);
        nbrs.resize(std::min<std::size_t>(nbrs.size(), size));
        examine(make_vertex_set(std::move(nbrs)));
    }
    return report;
}

}  // namespace quasitree
