#include "quasitree/patterns.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace quasitree {

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a > kSaturated / b) {
        return kSaturated;
    }
    return a * b;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

void check_vertices(const Graph& g, const VertexSet& x) {
    for (Vertex v : x) {
        if (v < 0 || v >= g.num_vertices()) {
            throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
        }
    }
}

void check_search_size(const Graph& g, int s, int t, std::int64_t cap) {
    if (s < 1 || t < 1) {
        throw Error(ErrorKind::BadParams, "s and t must be at least 1");
    }
    const std::int64_t sets = binomial(g.num_vertices(), s);
    if (sets > cap) {
        throw Error(ErrorKind::SearchCapExceeded, "C(" + std::to_string(g.num_vertices()) + "," + std::to_string(s) +
                                                      ") = " + std::to_string(sets) + " exceeds cap " +
                                                      std::to_string(cap));
    }
}

/// Visits every s-subset X in lexicographic order whose common neighbourhood
/// has at least t vertices, pruning prefixes whose running intersection is
/// already too small. Stops when `visit` returns true.
template <typename Visit>
void for_each_rich_set(const Graph& g, int s, int t, Visit&& visit) {
    const int n = g.num_vertices();
    VertexSet x;
    std::vector<VertexSet> common{VertexSet{}};
    auto recurse = [&](auto&& self, Vertex from) -> bool {
        if (static_cast<int>(x.size()) == s) {
            return visit(x, common.back());
        }
        const int missing = s - static_cast<int>(x.size());
        for (Vertex v = from; v <= n - missing; ++v) {
            VertexSet next;
            const auto nbrs = g.neighbours(v);
            if (x.empty()) {
                next.assign(nbrs.begin(), nbrs.end());
            } else {
                std::set_intersection(common.back().begin(), common.back().end(), nbrs.begin(), nbrs.end(),
                                      std::back_inserter(next));
            }
            if (static_cast<int>(next.size()) < t) {
                continue;
            }
            x.push_back(v);
            common.push_back(std::move(next));
            const bool done = self(self, v + 1);
            common.pop_back();
            x.pop_back();
            if (done) {
                return true;
            }
        }
        return false;
    };
    if (s <= n) {
        recurse(recurse, 0);
    }
}

/// Kuhn augmenting-path step from `left`, restricted to allowed right vertices.
bool augment(int left, const std::vector<std::vector<Vertex>>& options, const std::vector<char>& allowed,
             std::vector<Vertex>& match_left, std::map<Vertex, int>& match_right, std::set<Vertex>& visited) {
    for (Vertex r : options[left]) {
        if (!allowed[r] || !visited.insert(r).second) {
            continue;
        }
        auto it = match_right.find(r);
        if (it == match_right.end() || augment(it->second, options, allowed, match_left, match_right, visited)) {
            match_left[left] = r;
            match_right[r] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(PatternKind kind) {
    switch (kind) {
    case PatternKind::Kst: return "kst";
    case PatternKind::KstStar: return "kst-star";
    case PatternKind::Extension: return "extension";
    case PatternKind::Skewered: return "skewered";
    }
    return "unknown";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step.
        const std::int64_t factor = n - k + i;
        if (result > kSaturated / factor) {
            return kSaturated;
        }
        result = result * factor / i;
    }
    return result;
}

std::int64_t c_bound(int s, int t, int rho) {
    if (s < 1 || t < 1 || rho < 0) {
        throw Error(ErrorKind::BadParams, "c_bound needs s, t >= 1 and rho >= 0");
    }
    if (s == 1) {
        return t;
    }
    return sat_add(1 + static_cast<std::int64_t>(rho), sat_mul(t - 1, binomial(rho, s - 1)));
}

std::optional<PatternWitness> find_kst(const Graph& g, int s, int t, std::int64_t cap) {
    check_search_size(g, s, t, cap);
    std::optional<PatternWitness> found;
    for_each_rich_set(g, s, t, [&](const VertexSet& x, const VertexSet& common) {
        PatternWitness w;
        w.kind = PatternKind::Kst;
        w.x = x;
        w.y.assign(common.begin(), common.begin() + t);
        found = std::move(w);
        return true;
    });
    return found;
}

std::optional<PatternWitness> find_kst_star(const Graph& g, int s, int t, std::int64_t cap) {
    check_search_size(g, s, t, cap);
    const int n = g.num_vertices();
    std::optional<PatternWitness> found;
    for_each_rich_set(g, s, t, [&](const VertexSet& x, const VertexSet& common) {
        std::vector<Edge> pairs;
        std::vector<std::vector<Vertex>> options;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                pairs.emplace_back(x[i], x[j]);
                options.push_back(common_neighbours(g, VertexSet{x[i], x[j]}));
                std::erase_if(options.back(), [&](Vertex v) { return contains(x, v); });
            }
        }
        std::vector<char> non_common(n, 1);
        std::vector<char> everything(n, 1);
        for (Vertex v : common) {
            non_common[v] = 0;
        }
        std::vector<Vertex> match_left(pairs.size(), -1);
        std::map<Vertex, int> match_right;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            std::set<Vertex> visited;
            augment(static_cast<int>(p), options, non_common, match_left, match_right, visited);
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (match_left[p] < 0) {
                std::set<Vertex> visited;
                if (!augment(static_cast<int>(p), options, everything, match_left, match_right, visited)) {
                    return false;
                }
            }
        }
        VertexSet spare;
        for (Vertex v : common) {
            if (!match_right.count(v)) {
                spare.push_back(v);
            }
        }
        if (static_cast<int>(spare.size()) < t) {
            return false;
        }
        PatternWitness w;
        w.kind = PatternKind::KstStar;
        w.x = x;
        w.y.assign(spare.begin(), spare.begin() + t);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            w.pair_vertices.emplace_back(pairs[p], match_left[p]);
        }
        found = std::move(w);
        return true;
    });
    return found;
}

std::optional<PatternWitness> extension_or_skewer(const Graph& g, const VertexSet& x, int a, int b) {
    if (a < 2 || b < 1) {
        throw Error(ErrorKind::BadParams, "extension_or_skewer needs a >= 2 and b >= 1");
    }
    if (x.empty()) {
        throw Error(ErrorKind::BadParams, "X must be non-empty");
    }
    check_vertices(g, x);
    const int n = g.num_vertices();
    const int s = static_cast<int>(x.size());
    std::vector<char> marked(n, 0);
    for (Vertex v : neighbours_at_least(g, x, s)) {
        marked[v] = 1;
    }

    VertexSet rest;
    for (Vertex v = 0; v < n; ++v) {
        if (!contains(x, v)) {
            rest.push_back(v);
        }
    }
    const auto sub = induced_subgraph(g, rest);
    VertexSet richest;
    int richest_count = -1;
    for (const auto& block : components(sub.graph)) {
        const VertexSet lifted = sub.lift(block);
        const int count = static_cast<int>(std::count_if(lifted.begin(), lifted.end(), [&](Vertex v) { return marked[v]; }));
        if (count > richest_count) {
            richest_count = count;
            richest = lifted;
        }
    }
    if (richest_count < static_cast<std::int64_t>(a - 1) * (b - 1) + 1) {
        return std::nullopt;
    }

    const Vertex root = *std::find_if(richest.begin(), richest.end(), [&](Vertex v) { return marked[v]; });
    std::vector<Vertex> parent(n, -1);
    std::vector<int> marked_depth(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> order{root};
    seen[root] = 1;
    marked_depth[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        for (Vertex nb : g.neighbours(v)) {
            if (!seen[nb] && contains(richest, nb)) {
                seen[nb] = 1;
                parent[nb] = v;
                marked_depth[nb] = marked_depth[v] + marked[nb];
                order.push_back(nb);
            }
        }
    }

    for (Vertex v : order) {
        if (marked_depth[v] >= b) {
            PatternWitness w;
            w.kind = PatternKind::Skewered;
            w.x = x;
            for (Vertex u = v; u >= 0; u = parent[u]) {
                w.path.push_back(u);
                if (marked[u]) {
                    w.y.push_back(u);
                }
            }
            std::reverse(w.path.begin(), w.path.end());
            w.y = make_vertex_set(std::move(w.y));
            return w;
        }
    }

    for (int level = 1; level < b; ++level) {
        VertexSet members;
        for (Vertex v : richest) {
            if (marked[v] && marked_depth[v] == level) {
                members.push_back(v);
            }
        }
        if (static_cast<int>(members.size()) < a) {
            continue;
        }
        members.resize(a);
        std::vector<Vertex> hub;
        for (Vertex v : members) {
            for (Vertex u = parent[v]; u >= 0; u = parent[u]) {
                hub.push_back(u);
            }
        }
        PatternWitness w;
        w.kind = PatternKind::Extension;
        w.x = x;
        w.y = members;
        w.contracted = make_vertex_set(std::move(hub));
        return w;
    }
    return std::nullopt;
}

WitnessCheck verify_witness(const Graph& g, const PatternWitness& w) {
    const int n = g.num_vertices();
    auto bad = [](std::string reason) { return WitnessCheck{false, std::move(reason)}; };
    auto in_range = [&](Vertex v) { return v >= 0 && v < n; };

    std::set<Vertex> xs(w.x.begin(), w.x.end());
    std::set<Vertex> ys(w.y.begin(), w.y.end());
    if (xs.size() != w.x.size() || ys.size() != w.y.size()) {
        return bad("repeated vertex in X or Y");
    }
    if (xs.empty() || ys.empty()) {
        return bad("empty X or Y");
    }
    for (Vertex v : w.x) {
        if (!in_range(v) || ys.count(v)) {
            return bad("X vertex " + std::to_string(v) + " out of range or also in Y");
        }
    }
    for (Vertex v : w.y) {
        if (!in_range(v)) {
            return bad("Y vertex " + std::to_string(v) + " out of range");
        }
    }
    for (Vertex u : w.x) {
        for (Vertex v : w.y) {
            if (!g.adjacent(u, v)) {
                return bad("missing edge " + std::to_string(u) + "-" + std::to_string(v));
            }
        }
    }

    switch (w.kind) {
    case PatternKind::Kst:
        return {true, ""};
    case PatternKind::KstStar: {
        std::set<Edge> pairs_seen;
        std::set<Vertex> used;
        for (const auto& [pair, p] : w.pair_vertices) {
            const Edge key{std::min(pair.first, pair.second), std::max(pair.first, pair.second)};
            if (!xs.count(key.first) || !xs.count(key.second) || key.first == key.second) {
                return bad("pair is not two distinct X vertices");
            }
            if (!pairs_seen.insert(key).second) {
                return bad("pair listed twice");
            }
            if (!in_range(p) || xs.count(p) || ys.count(p) || !used.insert(p).second) {
                return bad("pair vertex " + std::to_string(p) + " not distinct from X, Y and other pair vertices");
            }
            if (!g.adjacent(p, key.first) || !g.adjacent(p, key.second)) {
                return bad("pair vertex " + std::to_string(p) + " misses an end of its pair");
            }
        }
        const std::size_t s = xs.size();
        if (pairs_seen.size() != s * (s - 1) / 2) {
            return bad("not every pair of X has a pair vertex");
        }
        return {true, ""};
    }
    case PatternKind::Extension: {
        std::set<Vertex> hub(w.contracted.begin(), w.contracted.end());
        if (hub.empty()) {
            return bad("empty contracted subgraph");
        }
        for (Vertex h : hub) {
            if (!in_range(h) || xs.count(h) || ys.count(h)) {
                return bad("contracted vertex " + std::to_string(h) + " out of range or in X or Y");
            }
        }
        std::set<Vertex> reached{*hub.begin()};
        std::vector<Vertex> frontier{*hub.begin()};
        while (!frontier.empty()) {
            const Vertex v = frontier.back();
            frontier.pop_back();
            for (Vertex nb : g.neighbours(v)) {
                if (hub.count(nb) && reached.insert(nb).second) {
                    frontier.push_back(nb);
                }
            }
        }
        if (reached.size() != hub.size()) {
            return bad("contracted subgraph is disconnected");
        }
        auto touches_hub = [&](Vertex v) {
            for (Vertex nb : g.neighbours(v)) {
                if (hub.count(nb)) {
                    return true;
                }
            }
            return false;
        };
        for (Vertex v : w.x) {
            if (!touches_hub(v)) {
                return bad("X vertex " + std::to_string(v) + " has no neighbour in the contracted subgraph");
            }
        }
        for (Vertex v : w.y) {
            if (!touches_hub(v)) {
                return bad("Y vertex " + std::to_string(v) + " has no neighbour in the contracted subgraph");
            }
        }
        return {true, ""};
    }
    case PatternKind::Skewered: {
        std::set<Vertex> on_path;
        for (std::size_t i = 0; i < w.path.size(); ++i) {
            const Vertex v = w.path[i];
            if (!in_range(v) || xs.count(v) || !on_path.insert(v).second) {
                return bad("path vertex " + std::to_string(v) + " out of range, in X, or repeated");
            }
            if (i > 0 && !g.adjacent(w.path[i - 1], v)) {
                return bad("path step " + std::to_string(w.path[i - 1]) + "-" + std::to_string(v) + " is not an edge");
            }
        }
        for (Vertex v : w.y) {
            if (!on_path.count(v)) {
                return bad("Y vertex " + std::to_string(v) + " is not on the path");
            }
        }
        return {true, ""};
    }
    }
    return bad("unknown witness kind");
}

namespace {

struct RhoSearch {
    const Graph& g;
    std::int64_t cap;
    std::int64_t steps = 0;

    int need = 0;
    VertexSet branch;
    std::vector<Edge> pairs;
    std::vector<std::vector<Vertex>> options;
    std::vector<int> have;
    std::vector<int> remaining;
    std::vector<Vertex> match_left;
    std::map<Vertex, int> match_right;
    std::vector<int> chosen;
    std::vector<char> allowed;

    RhoSearch(const Graph& graph, std::int64_t step_cap)
        : g(graph), cap(step_cap), allowed(graph.num_vertices(), 1) {}

    void tick() {
        if (++steps > cap) {
            throw Error(ErrorKind::SearchCapExceeded, "rho search exceeded " + std::to_string(cap) + " steps");
        }
    }

    int local(Vertex v) const {
        return static_cast<int>(std::lower_bound(branch.begin(), branch.end(), v) - branch.begin());
    }

    bool satisfied() const {
        return std::all_of(have.begin(), have.end(), [&](int h) { return h >= need; });
    }

    bool backtrack(std::size_t i) {
        tick();
        if (satisfied()) {
            return true;
        }
        if (i == pairs.size()) {
            return false;
        }
        const int u = local(pairs[i].first);
        const int v = local(pairs[i].second);
        --remaining[u];
        --remaining[v];
        bool ok = false;
        if (have[u] < need || have[v] < need) {
            const auto saved_left = match_left;
            const auto saved_right = match_right;
            std::set<Vertex> visited;
            if (augment(static_cast<int>(i), options, allowed, match_left, match_right, visited)) {
                ++have[u];
                ++have[v];
                chosen.push_back(static_cast<int>(i));
                ok = backtrack(i + 1);
                if (!ok) {
                    chosen.pop_back();
                    --have[u];
                    --have[v];
                }
            }
            if (!ok) {
                match_left = saved_left;
                match_right = saved_right;
            }
        }
        if (!ok && have[u] + remaining[u] >= need && have[v] + remaining[v] >= need) {
            ok = backtrack(i + 1);
        }
        ++remaining[u];
        ++remaining[v];
        return ok;
    }

    /// Tries to realise some H on `b` with min degree >= d.
    bool try_branch(const VertexSet& b, int d) {
        branch = b;
        need = d;
        pairs.clear();
        options.clear();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                VertexSet mids = common_neighbours(g, VertexSet{b[i], b[j]});
                std::erase_if(mids, [&](Vertex m) { return contains(b, m); });
                if (!mids.empty()) {
                    pairs.emplace_back(b[i], b[j]);
                    options.push_back(std::move(mids));
                }
            }
        }
        remaining.assign(b.size(), 0);
        for (auto [u, v] : pairs) {
            ++remaining[local(u)];
            ++remaining[local(v)];
        }
        if (std::any_of(remaining.begin(), remaining.end(), [&](int r) { return r < d; })) {
            return false;
        }
        have.assign(b.size(), 0);
        match_left.assign(pairs.size(), -1);
        match_right.clear();
        chosen.clear();
        return backtrack(0);
    }

    std::optional<RhoResult> search(int d, int max_branch) {
        VertexSet pool;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) >= d) {
                pool.push_back(v);
            }
        }
        const int limit = std::min<int>(max_branch, static_cast<int>(pool.size()));
        for (int size = d + 1; size <= limit; ++size) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) {
                idx[i] = i;
            }
            while (true) {
                tick();
                VertexSet b;
                for (int i : idx) {
                    b.push_back(pool[i]);
                }
                if (try_branch(b, d)) {
                    RhoResult r;
                    r.value = d;
                    r.branch = b;
                    for (int p : chosen) {
                        r.midpoints.emplace_back(pairs[p], match_left[p]);
                    }
                    std::sort(r.midpoints.begin(), r.midpoints.end());
                    return r;
                }
                int i = size - 1;
                while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - size + i) {
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++idx[i];
                for (int j = i + 1; j < size; ++j) {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

RhoResult rho_oracle(const Graph& g, int max_branch, std::int64_t cap) {
    const int n = g.num_vertices();
    RhoResult best;
    if (n > 0) {
        best.branch = {0};
    }
    RhoSearch search(g, cap);
    for (int d = 1; d + 1 <= max_branch; ++d) {
        auto found = search.search(d, max_branch);
        if (!found) {
            break;
        }
        best = std::move(*found);
    }
    best.exact = n <= max_branch || max_branch >= (2 * n) / (best.value + 3);
    return best;
}

WitnessCheck verify_rho(const Graph& g, const RhoResult& r) {
    const int n = g.num_vertices();
    std::set<Vertex> branch(r.branch.begin(), r.branch.end());
    if (branch.size() != r.branch.size()) {
        return {false, "repeated branch vertex"};
    }
    for (Vertex v : branch) {
        if (v < 0 || v >= n) {
            return {false, "branch vertex out of range"};
        }
    }
    std::map<Vertex, int> degree;
    for (Vertex v : branch) {
        degree[v] = 0;
    }
    std::set<Edge> edges;
    std::set<Vertex> mids;
    for (const auto& [e, m] : r.midpoints) {
        const Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
        if (key.first == key.second || !branch.count(key.first) || !branch.count(key.second)) {
            return {false, "edge of H not between two branch vertices"};
        }
        if (!edges.insert(key).second) {
            return {false, "edge of H listed twice"};
        }
        if (m < 0 || m >= n || branch.count(m) || !mids.insert(m).second) {
            return {false, "midpoint " + std::to_string(m) + " repeated or a branch vertex"};
        }
        if (!g.adjacent(m, key.first) || !g.adjacent(m, key.second)) {
            return {false, "midpoint " + std::to_string(m) + " misses an end of its edge"};
        }
        ++degree[key.first];
        ++degree[key.second];
    }
    int min_degree = 0;
    if (!degree.empty()) {
        min_degree = std::numeric_limits<int>::max();
        for (const auto& [v, d] : degree) {
            min_degree = std::min(min_degree, d);
        }
    }
    if (min_degree != r.value) {
        return {false, "H has min degree " + std::to_string(min_degree) + ", not " + std::to_string(r.value)};
    }
    return {true, ""};
}

}  // namespace quasitree
