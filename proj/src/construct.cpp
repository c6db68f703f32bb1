#include "quasitree/construct.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace quasitree {

namespace {

constexpr std::int64_t kBig = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a > kBig / b ? kBig : a * b;
}

/// A partial partition over global vertex ids. Nodes are numbered in creation
/// order; `up` holds only the non-empty E_v.
struct Piece {
    std::vector<int> parent;
    std::vector<VertexSet> bags;
    int root = 0;
    std::map<Vertex, VertexSet> up;

    int add_node(int p, VertexSet bag) {
        parent.push_back(p);
        bags.push_back(std::move(bag));
        return static_cast<int>(parent.size()) - 1;
    }

    std::vector<int> depths() const {
        RootedTree tree{parent, root};
        return tree.depths();
    }

    std::vector<std::vector<int>> children() const {
        RootedTree tree{parent, root};
        return tree.children();
    }
};

Piece single_bag(VertexSet bag) {
    Piece p;
    p.add_node(-1, std::move(bag));
    return p;
}

/// Copies `from` into `into`, hanging its root under `attach`. Returns the
/// new id of every node of `from`.
std::vector<int> graft(Piece& into, const Piece& from, int attach) {
    std::vector<int> id(from.parent.size(), -1);
    const auto order = RootedTree{from.parent, from.root}.bfs_order();
    for (int x : order) {
        const int p = x == from.root ? attach : id[from.parent[x]];
        id[x] = into.add_node(p, from.bags[x]);
    }
    for (const auto& [v, e] : from.up) {
        if (!e.empty()) {
            into.up[v] = set_union(into.up[v], e);
        }
    }
    return id;
}

QuasiTreePartition finish(const Piece& piece, int n) {
    QuasiTreePartition q;
    const RootedTree old{piece.parent, piece.root};
    const auto order = old.bfs_order();
    std::vector<int> id(piece.parent.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        id[order[i]] = static_cast<int>(i);
    }
    q.tree.root = 0;
    q.tree.parent.assign(order.size(), -1);
    q.bags.resize(order.size());
    for (int x : order) {
        q.tree.parent[id[x]] = piece.parent[x] < 0 ? -1 : id[piece.parent[x]];
        q.bags[id[x]] = piece.bags[x];
    }
    q.up_edges.assign(n, {});
    for (const auto& [v, e] : piece.up) {
        q.up_edges[v] = e;
    }
    return q;
}

VertexSet neighbours_in(const Graph& g, Vertex v, const VertexSet& target) {
    VertexSet out;
    for (Vertex w : g.neighbours(v)) {
        if (contains(target, w)) {
            out.push_back(w);
        }
    }
    return out;
}

void check_decomposition(const Graph& g, const TreeDecomposition& d, int k) {
    const auto report = validate_treedec(g, d);
    if (!report.valid) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "tree-decomposition is invalid: " + (report.violations.empty() ? std::string("unknown")
                                                                                    : report.violations.front()));
    }
    if (report.width > k - 1) {
        throw Error(ErrorKind::InvalidDecomposition, "tree-decomposition has width " + std::to_string(report.width) +
                                                         " > k - 1 = " + std::to_string(k - 1));
    }
}

void check_params(const Graph& g, const BuildParams& p) {
    if (p.s < 1 || p.t < 1 || p.rho < 0 || p.k < 1) {
        throw Error(ErrorKind::BadParams, "need s, t, k >= 1 and rho >= 0");
    }
    for (Vertex v : p.root_set) {
        if (v < 0 || v >= g.num_vertices()) {
            throw Error(ErrorKind::VertexOutOfRange, "root-set vertex " + std::to_string(v) + " not in graph");
        }
    }
}

/// The recursion behind the K*_{s,t}-free construction, on G[W] with root set
/// S where 4k <= |S| <= 12ck.
class HeartBuilder {
public:
    HeartBuilder(const Graph& g, const TreeDecomposition& d, int s, int k, std::int64_t c)
        : g_(g), d_(d), s_(s), k_(k), root_cap_(mul(12 * static_cast<std::int64_t>(k), c)),
          part_cap_(mul(18 * static_cast<std::int64_t>(k), c)) {}

    Piece run(VertexSet w, VertexSet s) {
        struct Frame {
            VertexSet w;
            VertexSet s;
            int step = 0;
            VertexSet second_w{};
            VertexSet second_s{};
            std::vector<Piece> done{};
        };
        std::vector<Frame> stack;
        stack.push_back({std::move(w), std::move(s)});
        Piece result;

        auto complete = [&](Piece piece) {
            stack.pop_back();
            if (stack.empty()) {
                result = std::move(piece);
            } else {
                stack.back().done.push_back(std::move(piece));
            }
        };

        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.step == 0) {
                const VertexSet rest = set_difference(f.w, f.s);
                if (static_cast<std::int64_t>(rest.size()) <= part_cap_) {
                    complete(case_one(f.s, rest));
                } else if (static_cast<std::int64_t>(f.s.size()) <= 12 * static_cast<std::int64_t>(k_) - 1) {
                    VertexSet x = f.s;
                    x.insert(std::upper_bound(x.begin(), x.end(), rest.front()), rest.front());
                    VertexSet grown = set_union(x, set_intersection(neighbours_at_least(g_, x, s_), f.w));
                    if (static_cast<std::int64_t>(grown.size()) > root_cap_) {
                        throw PreconditionViolation(
                            x, "|X ∪ N^{>=s}(X)| = " + std::to_string(grown.size()) + " exceeds 12ck = " +
                                   std::to_string(root_cap_) + " for a set X of " + std::to_string(x.size()) +
                                   " vertices");
                    }
                    f.step = 2;
                    Frame child{f.w, std::move(grown)};
                    stack.push_back(std::move(child));
                } else {
                    auto [w1, s1, w2, s2] = split(f.w, f.s);
                    f.step = 3;
                    f.second_w = std::move(w2);
                    f.second_s = std::move(s2);
                    Frame child{std::move(w1), std::move(s1)};
                    stack.push_back(std::move(child));
                }
            } else if (f.step == 2) {
                Piece piece = case_two(std::move(f.done.front()), f.s);
                complete(std::move(piece));
            } else if (f.done.size() == 1) {
                Frame child{std::move(f.second_w), std::move(f.second_s)};
                stack.push_back(std::move(child));
            } else {
                Piece piece = case_three(std::move(f.done[0]), f.done[1]);
                complete(std::move(piece));
            }
        }
        return result;
    }

private:
    Piece case_one(const VertexSet& s, const VertexSet& rest) const {
        Piece p = single_bag(s);
        if (!rest.empty()) {
            p.add_node(p.root, rest);
        }
        return p;
    }

    Piece case_two(Piece inner, const VertexSet& s) const {
        const int old_root = inner.root;
        inner.bags[old_root] = set_difference(inner.bags[old_root], s);
        const int z = inner.add_node(-1, s);
        inner.parent[old_root] = z;
        inner.root = z;
        const auto children = inner.children();
        for (int x : children[old_root]) {
            for (Vertex v : inner.bags[x]) {
                VertexSet e = neighbours_in(g_, v, s);
                if (e.empty()) {
                    inner.up.erase(v);
                } else {
                    inner.up[v] = std::move(e);
                }
            }
        }
        return inner;
    }

    Piece case_three(Piece first, const Piece& second) const {
        const int root = first.root;
        first.bags[root] = set_union(first.bags[root], second.bags[second.root]);
        const auto kids = second.children();
        for (const auto& [v, e] : second.up) {
            first.up[v] = set_union(first.up[v], e);
        }
        for (int child : kids[second.root]) {
            Piece branch;
            // Re-root the child's subtree so graft() can copy it.
            std::vector<int> id(second.parent.size(), -1);
            std::vector<int> todo{child};
            while (!todo.empty()) {
                const int x = todo.back();
                todo.pop_back();
                id[x] = branch.add_node(x == child ? -1 : id[second.parent[x]], second.bags[x]);
                for (int y : kids[x]) {
                    todo.push_back(y);
                }
            }
            branch.root = id[child];
            graft(first, branch, root);
        }
        return first;
    }

    struct Split {
        VertexSet w1, s1, w2, s2;
    };

    Split split(const VertexSet& w, const VertexSet& s) const {
        const auto sub = induced_subgraph(g_, w);
        const auto local_d = restrict_treedec(d_, sub);
        const auto cut = balanced_separator(sub.graph, local_d, sub.lower(s));
        const VertexSet a = sub.lift(cut.a);
        const VertexSet b = sub.lift(cut.b);
        const VertexSet z = sub.lift(cut.z);
        if (a.empty() || b.empty()) {
            throw Error(ErrorKind::InvalidDecomposition, "separator left one side empty");
        }
        Split out;
        out.w1 = set_union(a, z);
        out.w2 = set_union(b, z);
        out.s1 = set_union(set_intersection(s, out.w1), z);
        out.s2 = set_union(set_intersection(s, out.w2), z);
        return out;
    }

    const Graph& g_;
    const TreeDecomposition& d_;
    int s_;
    int k_;
    std::int64_t root_cap_;
    std::int64_t part_cap_;
};

/// The K*_{s,t}-free construction on G[W]: one bag when |W| < 4k, otherwise
/// the root set padded to 4k vertices with the smallest free ids.
Piece kst_free_piece(const Graph& g, const TreeDecomposition& d, const VertexSet& w, VertexSet s, int s_param,
                     int k, std::int64_t c) {
    if (static_cast<std::int64_t>(s.size()) > mul(12 * static_cast<std::int64_t>(k), c)) {
        throw Error(ErrorKind::BadParams, "root set of " + std::to_string(s.size()) + " vertices exceeds 12ck");
    }
    const auto four_k = 4 * static_cast<std::int64_t>(k);
    if (static_cast<std::int64_t>(w.size()) < four_k) {
        return single_bag(w);
    }
    for (Vertex v : w) {
        if (static_cast<std::int64_t>(s.size()) >= four_k) {
            break;
        }
        if (!contains(s, v)) {
            s.insert(std::upper_bound(s.begin(), s.end(), v), v);
        }
    }
    return HeartBuilder(g, d, s_param, k, c).run(w, std::move(s));
}

VertexSet all_vertices(const Graph& g) {
    VertexSet w(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        w[v] = v;
    }
    return w;
}

PatternWitness lift_witness(const InducedSubgraph& sub, PatternWitness w) {
    auto lift_list = [&](std::vector<Vertex>& list) {
        for (Vertex& v : list) {
            v = sub.to_parent[v];
        }
    };
    lift_list(w.path);
    w.x = sub.lift(w.x);
    w.y = sub.lift(w.y);
    w.contracted = sub.lift(w.contracted);
    for (auto& [pair, p] : w.pair_vertices) {
        pair = {sub.to_parent[pair.first], sub.to_parent[pair.second]};
        p = sub.to_parent[p];
    }
    return w;
}

/// The induction for graphs without a 1-extension of K_{s,a} or a skewered
/// K_{s,b}: peel a component C of G - X for a K_{s,t} side X, solve both parts
/// and hang the second below the deepest node meeting X.
class ExcludedBuilder {
public:
    ExcludedBuilder(const Graph& g, const TreeDecomposition& d, const BuildParams& p, int t, bool clean)
        : g_(g), d_(d), p_(p), t_(t), clean_(clean), c_(c_bound(p.s, t, p.rho)) {}

    Piece run(VertexSet w, VertexSet s) {
        struct Frame {
            VertexSet w;
            VertexSet s;
            int step = 0;
            VertexSet x{};
            VertexSet component{};
            VertexSet second_s{};
            std::vector<Piece> done{};
        };
        std::vector<Frame> stack;
        stack.push_back({std::move(w), std::move(s)});
        Piece result;

        auto complete = [&](Piece piece) {
            stack.pop_back();
            if (stack.empty()) {
                result = std::move(piece);
            } else {
                stack.back().done.push_back(std::move(piece));
            }
        };

        const std::int64_t rich = static_cast<std::int64_t>(p_.a - 1) * (p_.b - 1);
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.step == 0) {
                const auto sub = induced_subgraph(g_, f.w);
                const auto found = find_kst(sub.graph, p_.s, t_, p_.search_cap);
                if (!found) {
                    complete(kst_free_piece(g_, d_, f.w, f.s, p_.s, p_.k, c_));
                    continue;
                }
                const VertexSet x = sub.lift(found->x);
                const VertexSet marked = set_intersection(neighbours_at_least(g_, x, p_.s), f.w);
                const VertexSet rest = set_difference(f.w, x);
                const auto rest_sub = induced_subgraph(g_, rest);
                VertexSet chosen;
                VertexSet chosen_marked;
                for (const auto& block : components(rest_sub.graph)) {
                    const VertexSet comp = rest_sub.lift(block);
                    const VertexSet comp_marked = set_intersection(comp, marked);
                    if (static_cast<std::int64_t>(comp_marked.size()) > rich) {
                        auto witness = extension_or_skewer(sub.graph, found->x, p_.a, p_.b);
                        if (!witness) {
                            throw PreconditionViolation(x, "component of G - X too rich but no gadget found");
                        }
                        PatternWitness lifted = lift_witness(sub, std::move(*witness));
                        throw PatternPresent(lifted, std::string("graph contains a ") +
                                                         std::string(to_string(lifted.kind)) + " gadget");
                    }
                    if (chosen.empty() && set_intersection(comp, f.s).empty()) {
                        chosen = comp;
                        chosen_marked = comp_marked;
                    }
                }
                if (chosen.empty()) {
                    throw PreconditionViolation(x, "every component of G - X meets the root set");
                }
                f.step = 1;
                f.x = x;
                f.component = chosen;
                f.second_s = set_union(x, chosen_marked);
                Frame child{set_difference(f.w, chosen), f.s};
                stack.push_back(std::move(child));
            } else if (f.done.size() == 1) {
                Frame child{set_union(f.component, f.x), f.second_s};
                stack.push_back(std::move(child));
            } else {
                Piece piece = splice(std::move(f.done[0]), f.done[1], f.x, f.component);
                complete(std::move(piece));
            }
        }
        return result;
    }

private:
    Piece splice(Piece top, const Piece& bottom, const VertexSet& x, const VertexSet& component) const {
        const auto depth = top.depths();
        std::vector<int> hit;
        for (int node = 0; node < static_cast<int>(top.bags.size()); ++node) {
            if (!set_intersection(top.bags[node], x).empty()) {
                hit.push_back(node);
            }
        }
        int star = hit.front();
        for (int node : hit) {
            if (depth[node] > depth[star]) {
                star = node;
            }
        }
        if (clean_) {
            const RootedTree tree{top.parent, top.root};
            for (int node : hit) {
                if (node != star && !tree.is_ancestor(node, star)) {
                    throw PreconditionViolation(x, "bags meeting X are not on one vertical path");
                }
            }
        }

        const auto kids = bottom.children();
        const VertexSet star_bag = top.bags[star];
        Piece lower = bottom;
        lower.bags[lower.root] = set_difference(lower.bags[lower.root], x);
        for (Vertex v : lower.bags[lower.root]) {
            lower.up.erase(v);
            VertexSet e = neighbours_in(g_, v, set_difference(x, star_bag));
            if (!e.empty()) {
                lower.up[v] = std::move(e);
            }
        }
        for (int child : kids[lower.root]) {
            for (Vertex v : lower.bags[child]) {
                lower.up.erase(v);
                VertexSet e = neighbours_in(g_, v, x);
                if (!e.empty()) {
                    lower.up[v] = std::move(e);
                }
            }
        }
        for (Vertex v : x) {
            lower.up.erase(v);
        }
        for (auto it = lower.up.begin(); it != lower.up.end();) {
            it = contains(component, it->first) ? std::next(it) : lower.up.erase(it);
        }
        graft(top, lower, star);
        return top;
    }

    const Graph& g_;
    const TreeDecomposition& d_;
    const BuildParams& p_;
    int t_;
    bool clean_;
    std::int64_t c_;
};

QuasiTreePartition build_excluded(const Graph& g, const TreeDecomposition& d, const BuildParams& p, bool clean) {
    check_params(g, p);
    if (p.a < 2 || p.b < 2) {
        throw Error(ErrorKind::BadParams, "need a, b >= 2");
    }
    check_decomposition(g, d, p.k);
    const VertexSet s = make_vertex_set(p.root_set);
    const auto rich = static_cast<std::int64_t>(p.a - 1) * (p.b - 1);
    if (static_cast<std::int64_t>(s.size()) > p.s + rich) {
        throw Error(ErrorKind::BadParams, "root set exceeds s + (a-1)(b-1)");
    }
    const int t = excluded_t(p.s, p.a, p.b, clean ? p.k + 1 : 1);
    ExcludedBuilder builder(g, d, p, t, clean);
    return finish(builder.run(all_vertices(g), s), g.num_vertices());
}

}  // namespace

std::int64_t params_c(const BuildParams& p) {
    return c_bound(p.s, p.t, p.rho);
}

int excluded_t(int s, int a, int b, int extra) {
    const std::int64_t r = static_cast<std::int64_t>(a - 1) * (b - 1);
    const std::int64_t t = (s + r) * r + extra;
    if (t > std::numeric_limits<int>::max()) {
        throw Error(ErrorKind::BadParams, "t overflows");
    }
    return static_cast<int>(t);
}

QuasiTreePartition build_qtp_kst_free(const Graph& g, const TreeDecomposition& d, const BuildParams& p) {
    check_params(g, p);
    check_decomposition(g, d, p.k);
    const Piece piece =
        kst_free_piece(g, d, all_vertices(g), make_vertex_set(p.root_set), p.s, p.k, params_c(p));
    return finish(piece, g.num_vertices());
}

QuasiTreePartition build_qtp_excluded_clean(const Graph& g, const TreeDecomposition& d, const BuildParams& p) {
    return build_excluded(g, d, p, true);
}

QuasiTreePartition build_qtp_excluded(const Graph& g, const TreeDecomposition& d, const BuildParams& p) {
    return build_excluded(g, d, p, false);
}

QuasiTreePartition build_qtp_degeneracy(const Graph& g) {
    const int n = g.num_vertices();
    QuasiTreePartition q;
    q.up_edges.assign(n, {});
    if (n == 0) {
        q.tree.parent = {-1};
        q.bags = {{}};
        return q;
    }
    const auto order = degeneracy_order(g).order;
    std::vector<int> node_of(n, -1);
    std::vector<int> depth;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        int best = -1;
        VertexSet placed;
        for (Vertex w : g.neighbours(v)) {
            if (node_of[w] < 0) {
                continue;
            }
            placed.push_back(w);
            const int y = node_of[w];
            if (best < 0 || depth[y] > depth[best] || (depth[y] == depth[best] && y < best)) {
                best = y;
            }
        }
        const int node = static_cast<int>(q.bags.size());
        if (node == 0) {
            q.tree.parent.push_back(-1);
            depth.push_back(0);
        } else {
            const int p = best < 0 ? 0 : best;
            q.tree.parent.push_back(p);
            depth.push_back(depth[p] + 1);
        }
        q.bags.push_back({v});
        node_of[v] = node;
        if (best >= 0) {
            q.up_edges[v] = set_difference(placed, q.bags[best]);
        }
    }
    return q;
}

}  // namespace quasitree
