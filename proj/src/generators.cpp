#include "quasitree/generators.hpp"

#include <random>

namespace quasitree {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw Error(ErrorKind::BadParams, message);
    }
}

}  // namespace

Graph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Vertex v = r * cols + c;
            if (c + 1 < cols) {
                edges.emplace_back(v, v + 1);
            }
            if (r + 1 < rows) {
                edges.emplace_back(v, v + cols);
            }
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

Graph gen_fan(int n) {
    require(n >= 1, "fan needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n - 1; ++v) {
        edges.emplace_back(v, v + 1);
    }
    for (Vertex v = 0; v < n - 1; ++v) {
        edges.emplace_back(v, n - 1);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_path(int n) {
    require(n >= 0, "path needs n >= 0");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_complete(int n) {
    require(n >= 0, "complete needs n >= 0");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_star(int leaves) {
    require(leaves >= 0, "star needs leaves >= 0");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph::from_edges(leaves + 1, edges);
}

Graph gen_kst(int s, int t) {
    require(s >= 1 && t >= 1, "kst needs s, t >= 1");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < s; ++x) {
        for (Vertex y = s; y < s + t; ++y) {
            edges.emplace_back(x, y);
        }
    }
    return Graph::from_edges(s + t, edges);
}

Graph gen_kst_star(int s, int t) {
    require(s >= 1 && t >= 1, "kst-star needs s, t >= 1");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < s; ++x) {
        for (Vertex y = s; y < s + t; ++y) {
            edges.emplace_back(x, y);
        }
    }
    Vertex next = s + t;
    for (Vertex i = 0; i < s; ++i) {
        for (Vertex j = i + 1; j < s; ++j) {
            edges.emplace_back(i, next);
            edges.emplace_back(j, next);
            ++next;
        }
    }
    return Graph::from_edges(next, edges);
}

Graph gen_closure(int k, int n) {
    require(k >= 1 && n >= 1, "closure needs k, n >= 1");
    std::vector<int> parent{-1};
    std::vector<int> depth{0};
    for (std::size_t i = 0; i < parent.size(); ++i) {
        if (depth[i] + 1 >= k) {
            continue;
        }
        for (int c = 0; c < n; ++c) {
            parent.push_back(static_cast<int>(i));
            depth.push_back(depth[i] + 1);
            require(parent.size() <= 5'000'000, "closure too large");
        }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(parent.size()); ++v) {
        for (int a = parent[v]; a >= 0; a = parent[a]) {
            edges.emplace_back(a, v);
        }
    }
    return Graph::from_edges(static_cast<int>(parent.size()), edges);
}

Graph gen_extension(int s, int a) {
    require(s >= 1 && a >= 1, "extension needs s, a >= 1");
    std::vector<Edge> edges;
    const Vertex hub = s;
    const Vertex y0 = s + a;
    for (Vertex x = 0; x < s; ++x) {
        edges.emplace_back(x, hub);
        for (int i = 0; i < a; ++i) {
            edges.emplace_back(x, y0 + i);
        }
    }
    for (int i = 0; i < a; ++i) {
        if (i + 1 < a) {
            edges.emplace_back(hub + i, hub + i + 1);
        }
        edges.emplace_back(hub + i, y0 + i);
    }
    return Graph::from_edges(s + 2 * a, edges);
}

Graph gen_skewered(int s, int b) {
    require(s >= 1 && b >= 1, "skewered needs s, b >= 1");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < s; ++x) {
        for (Vertex y = s; y < s + b; ++y) {
            edges.emplace_back(x, y);
        }
    }
    for (Vertex y = s; y + 1 < s + b; ++y) {
        edges.emplace_back(y, y + 1);
    }
    return Graph::from_edges(s + b, edges);
}

Graph gen_gnp(int n, int permille, std::uint64_t seed) {
    require(n >= 0 && permille >= 0 && permille <= 1000, "gnp needs n >= 0 and 0 <= p <= 1000");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 999);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng) < permille) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_partial_ktree(int n, int k, int keep_permille, std::uint64_t seed) {
    require(n >= 0 && k >= 1 && keep_permille >= 0 && keep_permille <= 1000,
            "partial-ktree needs n >= 0, k >= 1, 0 <= keep <= 1000");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 999);
    std::vector<Edge> edges;
    // Cliques of size k to which new vertices attach.
    std::vector<std::vector<Vertex>> cliques;
    const int base = std::min(n, k + 1);
    for (Vertex u = 0; u < base; ++u) {
        for (Vertex v = u + 1; v < base; ++v) {
            edges.emplace_back(u, v);
        }
    }
    if (base == k + 1) {
        for (Vertex skip = 0; skip < base; ++skip) {
            std::vector<Vertex> c;
            for (Vertex v = 0; v < base; ++v) {
                if (v != skip) {
                    c.push_back(v);
                }
            }
            cliques.push_back(std::move(c));
        }
    }
    for (Vertex v = base; v < n; ++v) {
        const auto pick = std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng);
        const std::vector<Vertex> host = cliques[pick];
        for (Vertex u : host) {
            edges.emplace_back(u, v);
        }
        for (std::size_t drop = 0; drop < host.size(); ++drop) {
            std::vector<Vertex> c;
            for (std::size_t i = 0; i < host.size(); ++i) {
                if (i != drop) {
                    c.push_back(host[i]);
                }
            }
            c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges) {
        if (coin(rng) < keep_permille) {
            kept.push_back(e);
        }
    }
    return Graph::from_edges(n, kept);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    require(n >= 0, "tree needs n >= 0");
    if (n <= 2) {
        return gen_path(n);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> label(0, n - 1);
    std::vector<int> code(n - 2);
    std::vector<int> degree(n, 1);
    for (int& c : code) {
        c = label(rng);
        ++degree[c];
    }
    std::vector<Edge> edges;
    for (int c : code) {
        for (Vertex leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, c);
                --degree[leaf];
                --degree[c];
                break;
            }
        }
    }
    Vertex last[2];
    int found = 0;
    for (Vertex v = 0; v < n && found < 2; ++v) {
        if (degree[v] == 1) {
            last[found++] = v;
        }
    }
    edges.emplace_back(last[0], last[1]);
    return Graph::from_edges(n, edges);
}

Graph generate(const std::string& family, const GenParams& params) {
    auto get = [&](const std::string& key, std::int64_t fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    auto need = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) {
            throw Error(ErrorKind::BadParams, "family " + family + " needs --" + key);
        }
        return static_cast<int>(it->second);
    };
    const auto seed = static_cast<std::uint64_t>(get("seed", 0));
    if (family == "grid") {
        const int n = need("n");
        return gen_grid(n, static_cast<int>(get("m", n)));
    }
    if (family == "fan") return gen_fan(need("n"));
    if (family == "path") return gen_path(need("n"));
    if (family == "cycle") return gen_cycle(need("n"));
    if (family == "complete") return gen_complete(need("n"));
    if (family == "star") return gen_star(need("n"));
    if (family == "kst") return gen_kst(need("s"), need("t"));
    if (family == "kst-star") return gen_kst_star(need("s"), need("t"));
    if (family == "closure") return gen_closure(need("k"), need("n"));
    if (family == "extension") return gen_extension(need("s"), need("a"));
    if (family == "skewered") return gen_skewered(need("s"), need("b"));
    if (family == "gnp") return gen_gnp(need("n"), static_cast<int>(get("p", 100)), seed);
    if (family == "partial-ktree") {
        return gen_partial_ktree(need("n"), need("k"), static_cast<int>(get("keep", 700)), seed);
    }
    if (family == "tree") return gen_random_tree(need("n"), seed);
    throw Error(ErrorKind::UnknownFamily, "unknown graph family '" + family + "'");
}

}  // namespace quasitree
