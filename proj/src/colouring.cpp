#include "quasitree/colouring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace quasitree {

namespace {

constexpr std::int64_t kCap = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a > kCap / b ? kCap : a * b;
}

std::int64_t sat_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        out = sat_mul(out, base);
        if (out == kCap || out == 0) {
            break;
        }
    }
    return out;
}

/// Monochromatic components over (vertex, colour) elements, each root
/// remembering the earliest position it contains.
class Components {
public:
    explicit Components(int n) : slots_(n) {}

    void add(Vertex v, Colour c, int position) {
        const int id = static_cast<int>(parent_.size());
        parent_.push_back(id);
        oldest_.push_back(position);
        colour_.push_back(c);
        slots_[v].emplace_back(c, id);
    }

    /// Element of (v, c), or -1.
    int find_element(Vertex v, Colour c) const {
        for (auto [colour, id] : slots_[v]) {
            if (colour == c) {
                return id;
            }
        }
        return -1;
    }

    int root(int id) {
        while (parent_[id] != id) {
            parent_[id] = parent_[parent_[id]];
            id = parent_[id];
        }
        return id;
    }

    void unite(int a, int b) {
        a = root(a);
        b = root(b);
        if (a == b) {
            return;
        }
        if (oldest_[b] < oldest_[a]) {
            std::swap(a, b);
        }
        parent_[b] = a;
    }

    /// (earliest position, colour) of the component holding element id.
    std::pair<int, Colour> age(int id) {
        const int r = root(id);
        return {oldest_[r], colour_[r]};
    }

    const std::vector<std::pair<Colour, int>>& elements(Vertex v) const { return slots_[v]; }

private:
    std::vector<int> parent_;
    std::vector<int> oldest_;
    std::vector<Colour> colour_;
    std::vector<std::vector<std::pair<Colour, int>>> slots_;
};

struct Layout {
    QtpReport report;
    std::vector<int> node_of;
    std::vector<int> depth;
    std::vector<int> node_order;
    std::vector<Vertex> vertex_order;
    std::vector<int> position;
    std::vector<std::vector<int>> children;
};

Layout prepare(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists, int s_heavy) {
    Layout out;
    out.report = validate_qtp(g, q, s_heavy);
    if (!out.report.valid) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "quasi-tree-partition is invalid: " + out.report.violations.front());
    }
    const int n = g.num_vertices();
    if (static_cast<int>(lists.size()) != n) {
        throw Error(ErrorKind::BadParams, "expected " + std::to_string(n) + " lists, got " +
                                              std::to_string(lists.size()));
    }
    out.node_of = q.node_of(n);
    out.depth = q.tree.depths();
    out.node_order = q.tree.bfs_order();
    out.children = q.tree.children();
    out.position.assign(n, -1);
    for (int x : out.node_order) {
        for (Vertex v : q.bags[x]) {
            out.position[v] = static_cast<int>(out.vertex_order.size());
            out.vertex_order.push_back(v);
        }
    }
    return out;
}

void check_lists(const ListAssignment& lists, std::size_t need) {
    for (std::size_t v = 0; v < lists.size(); ++v) {
        if (make_vertex_set(lists[v]).size() < need) {
            throw Error(ErrorKind::ListsTooSmall, "list of vertex " + std::to_string(v) + " has " +
                                                      std::to_string(lists[v].size()) + " colours, need " +
                                                      std::to_string(need));
        }
    }
}

ColourSet pick(const ColourSet& list, const std::set<Colour>& avoid, int ell, Vertex v) {
    ColourSet out;
    for (Colour c : make_vertex_set(list)) {
        if (static_cast<int>(out.size()) == ell) {
            break;
        }
        if (!avoid.count(c)) {
            out.push_back(c);
        }
    }
    if (static_cast<int>(out.size()) < ell) {
        throw Error(ErrorKind::ListsTooSmall, "no " + std::to_string(ell) + " free colours left for vertex " +
                                                  std::to_string(v));
    }
    return out;
}

/// Oldest component among those holding any vertex of `bag`.
std::optional<Colour> oldest_colour(Components& comps, const VertexSet& bag) {
    std::optional<std::pair<int, Colour>> best;
    for (Vertex u : bag) {
        for (auto [c, id] : comps.elements(u)) {
            const auto key = comps.age(id);
            if (!best || key < *best) {
                best = key;
            }
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return best->second;
}

/// Joins v's new elements to equal-coloured elements of already coloured
/// neighbours.
void merge_into(Components& comps, Vertex v, const std::vector<Vertex>& coloured_nbrs) {
    for (auto [c, id] : comps.elements(v)) {
        for (Vertex u : coloured_nbrs) {
            const int other = comps.find_element(u, c);
            if (other >= 0) {
                comps.unite(id, other);
            }
        }
    }
}

}  // namespace

std::int64_t clean_clustering_bound(int ell, int k, int d) {
    const std::int64_t lk = static_cast<std::int64_t>(ell) * k;
    const std::int64_t first = sat_mul(lk, k);
    const std::int64_t second = lk == 0 ? 0 : sat_mul(2 * static_cast<std::int64_t>(k), sat_pow(d, lk - 1));
    return std::max(first, second);
}

std::int64_t heavy_clustering_bound(int w, int d) {
    return sat_mul(w, sat_pow(static_cast<std::int64_t>(d) + 1, w));
}

std::int64_t fractional_clustering_bound(int w, int d) {
    if (d >= 2) {
        return sat_mul(w, sat_pow(d, w));
    }
    std::int64_t sum = 0;
    for (int i = 0; i < w; ++i) {
        sum += sat_pow(d, i);
    }
    return sat_mul(w, sum);
}

ColouringReport validate_colouring(const Graph& g, const SetColouring& f, const std::optional<ListAssignment>& lists) {
    ColouringReport report;
    const int n = g.num_vertices();
    if (static_cast<int>(f.size()) != n) {
        report.violations.push_back("expected " + std::to_string(n) + " colour sets, got " + std::to_string(f.size()));
        return report;
    }
    std::vector<ColourSet> sets(n);
    report.uniform = true;
    for (Vertex v = 0; v < n; ++v) {
        sets[v] = make_vertex_set(f[v]);
        if (sets[v].size() != f[v].size()) {
            report.uniform = false;
            report.violations.push_back("vertex " + std::to_string(v) + " repeats a colour");
        }
        if (v > 0 && sets[v].size() != sets[0].size()) {
            report.uniform = false;
        }
    }
    if (!report.uniform && report.violations.empty()) {
        report.violations.push_back("colour sets have different sizes");
    }
    report.set_size = n > 0 ? static_cast<int>(sets[0].size()) : 0;

    report.list_ok = true;
    if (lists) {
        if (static_cast<int>(lists->size()) != n) {
            report.list_ok = false;
            report.violations.push_back("list assignment has the wrong length");
        } else {
            for (Vertex v = 0; v < n && report.list_ok; ++v) {
                const ColourSet allowed = make_vertex_set((*lists)[v]);
                if (!std::includes(allowed.begin(), allowed.end(), sets[v].begin(), sets[v].end())) {
                    report.list_ok = false;
                    report.violations.push_back("vertex " + std::to_string(v) + " uses a colour outside its list");
                }
            }
        }
    }

    std::map<Colour, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        for (Colour c : sets[v]) {
            classes[c].push_back(v);
        }
    }
    report.proper = true;
    std::vector<int> seen(n, -1);
    int stamp = 0;
    for (const auto& [colour, members] : classes) {
        ++stamp;
        std::vector<char> in_class(n, 0);
        for (Vertex v : members) {
            in_class[v] = 1;
        }
        for (Vertex v : members) {
            int mono_degree = 0;
            for (Vertex u : g.neighbours(v)) {
                mono_degree += in_class[u];
            }
            report.defect = std::max(report.defect, mono_degree);
            if (mono_degree > 0) {
                report.proper = false;
            }
            if (seen[v] == stamp) {
                continue;
            }
            int size = 0;
            std::vector<Vertex> stack{v};
            seen[v] = stamp;
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                ++size;
                for (Vertex u : g.neighbours(x)) {
                    if (in_class[u] && seen[u] != stamp) {
                        seen[u] = stamp;
                        stack.push_back(u);
                    }
                }
            }
            report.clustering = std::max(report.clustering, size);
        }
    }
    return report;
}

SetColouring colour_clean_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists, int ell) {
    if (ell < 1) {
        throw Error(ErrorKind::BadParams, "ell must be at least 1");
    }
    const Layout layout = prepare(g, q, lists, 1);
    if (!layout.report.clean) {
        throw Error(ErrorKind::NotClean, "colour_clean_qtp needs a clean quasi-tree-partition");
    }
    const int s = layout.report.quasiness + 1;
    check_lists(lists, static_cast<std::size_t>(ell) * s + 1);

    const int n = g.num_vertices();
    SetColouring f(n);
    Components comps(n);
    for (Vertex v : layout.vertex_order) {
        const int x = layout.node_of[v];
        const int p = q.tree.parent[x];
        std::vector<Vertex> earlier;
        for (Vertex u : q.bags[x]) {
            if (layout.position[u] < layout.position[v]) {
                earlier.push_back(u);
            }
        }
        if (p >= 0) {
            earlier.insert(earlier.end(), q.bags[p].begin(), q.bags[p].end());
        }

        std::set<Colour> avoid;
        for (Vertex w : q.up_edges[v]) {
            avoid.insert(f[w].begin(), f[w].end());
        }
        if (auto colour = oldest_colour(comps, earlier)) {
            avoid.insert(*colour);
        }
        f[v] = pick(lists[v], avoid, ell, v);
        for (Colour c : f[v]) {
            comps.add(v, c, layout.position[v]);
        }
        merge_into(comps, v, earlier);
    }
    return f;
}

namespace {

/// Shared bag-by-bag loop of the heavy and fractional colourings. `joined(y)`
/// says whether node y is fully joined to its parent; `choose` picks f(v).
template <typename Joined, typename Choose>
SetColouring colour_by_bags(const Graph& g, const QuasiTreePartition& q, const Layout& layout, Joined&& joined,
                            Choose&& choose) {
    const int n = g.num_vertices();
    SetColouring f(n);
    std::vector<char> coloured(n, 0);
    Components comps(n);
    for (int x : layout.node_order) {
        const int p = q.tree.parent[x];
        std::optional<Colour> oldest;
        if (p >= 0) {
            oldest = oldest_colour(comps, q.bags[p]);
        }
        for (Vertex v : q.bags[x]) {
            f[v] = choose(x, v, oldest, f);
            for (Colour c : f[v]) {
                comps.add(v, c, layout.position[v]);
            }
        }
        for (Vertex v : q.bags[x]) {
            coloured[v] = 1;
        }
        for (Vertex v : q.bags[x]) {
            std::vector<Vertex> nbrs;
            for (Vertex u : q.bags[x]) {
                if (u != v) {
                    nbrs.push_back(u);
                }
            }
            if (p >= 0 && joined(x)) {
                nbrs.insert(nbrs.end(), q.bags[p].begin(), q.bags[p].end());
            }
            for (Vertex u : g.neighbours(v)) {
                if (coloured[u]) {
                    nbrs.push_back(u);
                }
            }
            merge_into(comps, v, nbrs);
        }
    }
    return f;
}

}  // namespace

SetColouring colour_heavy_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists,
                              int heavy_cap) {
    const QtpReport first = validate_qtp(g, q);
    if (!first.valid) {
        throw Error(ErrorKind::InvalidDecomposition, "quasi-tree-partition is invalid: " + first.violations.front());
    }
    const int r = first.quasiness;
    const Layout layout = prepare(g, q, lists, r + 2);
    if (layout.report.max_heavy_children > heavy_cap) {
        throw Error(ErrorKind::HeavyCapViolated, "a node has " + std::to_string(layout.report.max_heavy_children) +
                                                     " heavy children, cap is " + std::to_string(heavy_cap));
    }
    check_lists(lists, static_cast<std::size_t>(r) + 2);

    const auto upward = upward_neighbourhood_sizes(g, q);
    std::vector<char> heavy(q.tree.num_nodes(), 0);
    for (int y = 0; y < q.tree.num_nodes(); ++y) {
        heavy[y] = q.tree.parent[y] >= 0 && upward[y] >= r + 2;
    }
    // Colours on the upward neighbourhood of each light node, read once the
    // shallower bags are done.
    auto upward_colours = [&](int x, const SetColouring& f) {
        std::set<Colour> out;
        for (Vertex v : q.bags[x]) {
            for (Vertex u : g.neighbours(v)) {
                if (layout.depth[layout.node_of[u]] < layout.depth[x]) {
                    out.insert(f[u].begin(), f[u].end());
                }
            }
        }
        return out;
    };
    return colour_by_bags(
        g, q, layout, [&](int y) { return heavy[y] != 0; },
        [&](int x, Vertex v, std::optional<Colour> oldest, const SetColouring& f) {
            std::set<Colour> avoid;
            if (q.tree.parent[x] >= 0) {
                if (heavy[x]) {
                    if (oldest) {
                        avoid.insert(*oldest);
                    }
                    for (Vertex w : q.up_edges[v]) {
                        avoid.insert(f[w].begin(), f[w].end());
                    }
                } else {
                    avoid = upward_colours(x, f);
                }
            }
            return pick(lists[v], avoid, 1, v);
        });
}

SetColouring colour_fractional_qtp(const Graph& g, const QuasiTreePartition& q, const ListAssignment& lists,
                                   int ell) {
    if (ell < 1) {
        throw Error(ErrorKind::BadParams, "ell must be at least 1");
    }
    const Layout layout = prepare(g, q, lists, 1);
    const int r = layout.report.quasiness;
    check_lists(lists, static_cast<std::size_t>(r + 1) * ell + 1);
    return colour_by_bags(
        g, q, layout, [](int) { return true; },
        [&](int x, Vertex v, std::optional<Colour> oldest, const SetColouring& f) {
            std::set<Colour> avoid;
            if (q.tree.parent[x] >= 0) {
                if (oldest) {
                    avoid.insert(*oldest);
                }
                for (Vertex w : q.up_edges[v]) {
                    avoid.insert(f[w].begin(), f[w].end());
                }
            }
            return pick(lists[v], avoid, ell, v);
        });
}

}  // namespace quasitree
