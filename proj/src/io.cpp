#include "quasitree/io.hpp"

#include <charconv>
#include <sstream>

namespace quasitree {

namespace {

ParseError doc_error(const std::string& message) {
    return ParseError(1, 1, message);
}

void expect_schema(const Json& doc, const std::string& schema) {
    if (!doc.is_object()) {
        throw doc_error("expected a JSON object");
    }
    auto it = doc.find("schema");
    if (it != doc.end() && (!it->is_string() || it->get<std::string>() != schema)) {
        throw doc_error("expected schema \"" + schema + "\", got " + it->dump());
    }
}

template <typename T>
T field(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw doc_error(std::string("missing field \"") + key + "\"");
    }
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw doc_error(std::string("field \"") + key + "\": " + e.what());
    }
}

std::vector<VertexSet> sorted_sets(std::vector<std::vector<int>> sets) {
    for (auto& s : sets) {
        s = make_vertex_set(std::move(s));
    }
    return sets;
}

/// Skips spaces and tabs; returns false at end of line.
bool read_int(std::string_view line, std::size_t& pos, long long& out) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
        ++pos;
    }
    if (pos >= line.size()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), out);
    if (ec != std::errc()) {
        return false;
    }
    pos = static_cast<std::size_t>(ptr - line.data());
    return true;
}

bool only_space(std::string_view line, std::size_t pos) {
    for (; pos < line.size(); ++pos) {
        if (line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            return false;
        }
    }
    return true;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#' || line[first] == 'c') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        std::size_t pos = 0;
        long long a = 0;
        long long b = 0;
        if (!read_int(line, pos, a) || !read_int(line, pos, b)) {
            throw ParseError(line_no, static_cast<int>(pos) + 1,
                             have_header ? "expected an edge \"u v\"" : "expected header \"n m\"");
        }
        if (!only_space(line, pos)) {
            throw ParseError(line_no, static_cast<int>(pos) + 1, "unexpected trailing characters");
        }
        if (!have_header) {
            if (a < 0 || b < 0 || a > 100'000'000) {
                throw ParseError(line_no, 1, "header values out of range");
            }
            n = a;
            m = b;
            have_header = true;
        } else {
            if (a < 0 || b < 0 || a >= n || b >= n) {
                throw ParseError(line_no, 1, "vertex out of range for n = " + std::to_string(n));
            }
            if (a == b) {
                throw ParseError(line_no, 1, "self-loop at vertex " + std::to_string(a));
            }
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!have_header) {
        throw ParseError(1, 1, "missing header \"n m\"");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(line_no, 1, "header promises " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph_text(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.num_vertices() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "malformed JSON");
    }
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"schema", "graph/1"}, {"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& doc) {
    expect_schema(doc, "graph/1");
    const int n = field<int>(doc, "n");
    const auto pairs = field<std::vector<std::vector<int>>>(doc, "edges");
    std::vector<Edge> edges;
    for (const auto& p : pairs) {
        if (p.size() != 2) {
            throw doc_error("edge entries must be pairs");
        }
        edges.emplace_back(p[0], p[1]);
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const Error& e) {
        throw doc_error(e.what());
    }
}

Json treedec_to_json(const TreeDecomposition& d) {
    Json edges = Json::array();
    for (auto [a, b] : d.tree_edges) {
        edges.push_back({a, b});
    }
    return {{"schema", "treedec/1"}, {"bags", d.bags}, {"tree_edges", edges}};
}

TreeDecomposition treedec_from_json(const Json& doc) {
    expect_schema(doc, "treedec/1");
    TreeDecomposition d;
    d.bags = sorted_sets(field<std::vector<std::vector<int>>>(doc, "bags"));
    for (const auto& e : field<std::vector<std::vector<int>>>(doc, "tree_edges")) {
        if (e.size() != 2) {
            throw doc_error("tree edges must be pairs");
        }
        d.tree_edges.emplace_back(e[0], e[1]);
    }
    return d;
}

Json qtp_to_json(const QuasiTreePartition& q) {
    return {{"schema", "qtp/1"},
            {"tree", {{"parent", q.tree.parent}, {"root", q.tree.root}}},
            {"bags", q.bags},
            {"up_edges", q.up_edges}};
}

QuasiTreePartition qtp_from_json(const Json& doc) {
    expect_schema(doc, "qtp/1");
    QuasiTreePartition q;
    const Json tree = field<Json>(doc, "tree");
    if (!tree.is_object()) {
        throw doc_error("\"tree\" must be an object");
    }
    q.tree.parent = field<std::vector<int>>(tree, "parent");
    q.tree.root = field<int>(tree, "root");
    q.bags = sorted_sets(field<std::vector<std::vector<int>>>(doc, "bags"));
    q.up_edges = sorted_sets(field<std::vector<std::vector<int>>>(doc, "up_edges"));
    return q;
}

Json colouring_to_json(const SetColouring& f) {
    return {{"schema", "colouring/1"}, {"colours", f}};
}

SetColouring colouring_from_json(const Json& doc) {
    expect_schema(doc, "colouring/1");
    return field<SetColouring>(doc, "colours");
}

Json witness_to_json(const PatternWitness& w) {
    Json out = {{"kind", std::string(to_string(w.kind))}, {"x", w.x}, {"y", w.y}};
    if (w.kind == PatternKind::KstStar) {
        Json pairs = Json::array();
        for (const auto& [pair, p] : w.pair_vertices) {
            pairs.push_back({{"pair", {pair.first, pair.second}}, {"vertex", p}});
        }
        out["pair_vertices"] = pairs;
    }
    if (w.kind == PatternKind::Extension) {
        out["contracted"] = w.contracted;
    }
    if (w.kind == PatternKind::Skewered) {
        out["path"] = w.path;
    }
    return out;
}

Json rho_to_json(const RhoResult& r) {
    Json mids = Json::array();
    for (const auto& [e, m] : r.midpoints) {
        mids.push_back({{"edge", {e.first, e.second}}, {"midpoint", m}});
    }
    return {{"value", r.value}, {"exact", r.exact}, {"branch", r.branch}, {"midpoints", mids}};
}

Json qtp_report_to_json(const QtpReport& r) {
    return {{"valid", r.valid},
            {"quasiness", r.quasiness},
            {"width", r.width},
            {"degree", r.degree},
            {"clean", r.clean},
            {"heavy_children", r.heavy_children},
            {"max_heavy_children", r.max_heavy_children},
            {"violations", r.violations}};
}

Json treedec_report_to_json(const TreedecReport& r) {
    return {{"valid", r.valid}, {"width", r.width}, {"violations", r.violations}};
}

Json colouring_report_to_json(const ColouringReport& r) {
    return {{"proper", r.proper},       {"clustering", r.clustering}, {"defect", r.defect},
            {"list_ok", r.list_ok},     {"uniform", r.uniform},       {"set_size", r.set_size},
            {"violations", r.violations}};
}

Graph graph_from_any(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '{') {
        return parse_graph_text(text);
    }
    const Json doc = parse_json(text);
    if (doc.is_object() && doc.contains("graph")) {
        return graph_from_json(doc["graph"]);
    }
    return graph_from_json(doc);
}

std::string qtp_to_dot(const QuasiTreePartition& q) {
    std::ostringstream out;
    out << "digraph qtp {\n  node [shape=box];\n";
    for (int x = 0; x < q.tree.num_nodes(); ++x) {
        out << "  n" << x << " [label=\"" << x << ": {";
        for (std::size_t i = 0; i < q.bags[x].size(); ++i) {
            out << (i ? "," : "") << q.bags[x][i];
        }
        out << "}\"];\n";
    }
    for (int x = 0; x < q.tree.num_nodes(); ++x) {
        if (q.tree.parent[x] >= 0) {
            out << "  n" << q.tree.parent[x] << " -> n" << x << ";\n";
        }
    }
    for (std::size_t v = 0; v < q.up_edges.size(); ++v) {
        for (Vertex w : q.up_edges[v]) {
            out << "  // up-edge " << v << " -> " << w << "\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace quasitree
