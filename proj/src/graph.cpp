#include "quasitree/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace quasitree {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::NotClean: return "NotClean";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::PatternPresent: return "PatternPresent";
    case ErrorKind::ListsTooSmall: return "ListsTooSmall";
    case ErrorKind::HeavyCapViolated: return "HeavyCapViolated";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool contains(const VertexSet& set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    }
    Graph g;
    g.adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        twice += adj.size();
    }
    g.num_edges_ = twice / 2;
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) {
        best = std::max(best, static_cast<int>(adj.size()));
    }
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) {
        out.push_back(to_parent[v]);
    }
    return make_vertex_set(std::move(out));
}

VertexSet InducedSubgraph::lower(const VertexSet& parent) const {
    std::vector<Vertex> out;
    for (Vertex v : parent) {
        if (v >= 0 && v < static_cast<Vertex>(to_local.size()) && to_local[v] >= 0) {
            out.push_back(to_local[v]);
        }
    }
    return make_vertex_set(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    const int n = g.num_vertices();
    InducedSubgraph sub;
    sub.to_local.assign(n, -1);
    sub.to_parent.reserve(w.size());
    for (Vertex v : w) {
        if (v < 0 || v >= n) {
            throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
        }
        if (sub.to_local[v] < 0) {
            sub.to_local[v] = static_cast<Vertex>(sub.to_parent.size());
            sub.to_parent.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (Vertex local = 0; local < static_cast<Vertex>(sub.to_parent.size()); ++local) {
        for (Vertex nb : g.neighbours(sub.to_parent[local])) {
            const Vertex other = sub.to_local[nb];
            if (other > local) {
                edges.emplace_back(local, other);
            }
        }
    }
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), edges);
    return sub;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        VertexSet block;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (Vertex nb : g.neighbours(v)) {
                if (!seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

VertexSet neighbours_at_least(const Graph& g, const VertexSet& x, int s) {
    const int n = g.num_vertices();
    std::vector<int> hits(n, 0);
    std::vector<char> in_x(n, 0);
    for (Vertex v : x) {
        in_x[v] = 1;
    }
    for (Vertex v : x) {
        for (Vertex nb : g.neighbours(v)) {
            ++hits[nb];
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        if (!in_x[v] && hits[v] >= s && hits[v] > 0) {
            out.push_back(v);
        }
    }
    return out;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    DegeneracyOrder result;
    result.order.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        result.degeneracy = std::max(result.degeneracy, d);
        result.order.push_back(v);
        for (Vertex nb : g.neighbours(v)) {
            if (!removed[nb]) {
                queue.erase({deg[nb], nb});
                --deg[nb];
                queue.emplace(deg[nb], nb);
            }
        }
    }
    return result;
}

}  // namespace quasitree
