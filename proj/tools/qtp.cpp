#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "quasitree/colouring.hpp"
#include "quasitree/construct.hpp"
#include "quasitree/generators.hpp"
#include "quasitree/io.hpp"
#include "quasitree/patterns.hpp"

using namespace quasitree;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kViolation = 2, kUsage = 3 };

struct Options {
    std::string variant;
    std::optional<int> s, t, a, b, rho, k, ell, n, m, branch;
    std::optional<std::int64_t> seed, cap;
    std::vector<std::string> sets;
    std::string in;
    std::string out;
    std::string td;
    bool dot = false;
    bool text = false;
    bool exact = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write " + o.out);
    }
    file << text;
}

void emit(const Options& o, const Json& doc) { write_output(o, doc.dump() + "\n"); }

/// --set KEY=v1,v2,... entries, keyed by KEY.
std::map<std::string, std::vector<std::int64_t>> parse_sets(const std::vector<std::string>& raw) {
    std::map<std::string, std::vector<std::int64_t>> out;
    for (const auto& entry : raw) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--set expects KEY=v1,v2,..., got '" + entry + "'");
        }
        std::vector<std::int64_t> values;
        std::stringstream list(entry.substr(eq + 1));
        std::string item;
        while (std::getline(list, item, ',')) {
            if (item.empty()) {
                continue;
            }
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::exception&) {
                throw UsageError("--set " + entry.substr(0, eq) + ": '" + item + "' is not an integer");
            }
        }
        out[entry.substr(0, eq)] = std::move(values);
    }
    return out;
}

VertexSet set_flag(const Options& o, const std::string& key) {
    const auto sets = parse_sets(o.sets);
    auto it = sets.find(key);
    if (it == sets.end()) {
        return {};
    }
    std::vector<Vertex> members;
    for (auto v : it->second) {
        members.push_back(static_cast<Vertex>(v));
    }
    return make_vertex_set(std::move(members));
}

int need(const std::optional<int>& value, const char* flag) {
    if (!value) {
        throw UsageError(std::string("missing --") + flag);
    }
    return *value;
}

/// The whole input document plus the graph it carries.
struct Input {
    Json doc;
    Graph graph;
    bool is_json = false;
};

Input load(const Options& o) {
    const std::string text = read_input(o.in);
    Input in;
    in.graph = graph_from_any(text);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        in.doc = parse_json(text);
        in.is_json = true;
    }
    return in;
}

bool has_schema(const Input& in, const std::string& schema) {
    return in.is_json && in.doc.is_object() && in.doc.value("schema", std::string()) == schema;
}

Json with_graph(Json doc, const Graph& g) {
    doc["graph"] = graph_to_json(g);
    return doc;
}

/// The supplied decomposition (input document or --td) or a heuristic one.
std::pair<TreeDecomposition, std::string> decomposition_for(const Options& o, const Input& in) {
    if (!o.td.empty()) {
        return {treedec_from_json(parse_json(read_input(o.td))), "supplied:" + o.td};
    }
    if (has_schema(in, "treedec/1")) {
        return {treedec_from_json(in.doc), "supplied:input"};
    }
    return {heuristic_treedec(in.graph, EliminationStrategy::MinFill), "heuristic:min-fill"};
}

int cmd_gen(const Options& o) {
    GenParams params;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) {
            params[key] = *v;
        }
    };
    put("n", o.n);
    put("m", o.m);
    put("s", o.s);
    put("t", o.t);
    put("a", o.a);
    put("b", o.b);
    put("k", o.k);
    if (o.seed) {
        params["seed"] = *o.seed;
    }
    for (const auto& [key, values] : parse_sets(o.sets)) {
        if (values.size() != 1) {
            throw UsageError("--set " + key + " expects one value for gen");
        }
        params[key] = values.front();
    }
    const Graph g = generate(o.variant, params);
    if (o.text) {
        write_output(o, emit_graph_text(g));
    } else {
        emit(o, graph_to_json(g));
    }
    return kOk;
}

int cmd_treedec(const Options& o) {
    const Input in = load(o);
    const TreeDecomposition d = heuristic_treedec(in.graph, EliminationStrategy::MinFill);
    Json doc = with_graph(treedec_to_json(d), in.graph);
    doc["provenance"] = "heuristic:min-fill";
    doc["width"] = d.width();
    if (o.exact) {
        doc["treewidth"] = treewidth_exact_small(in.graph);
    }
    emit(o, doc);
    return kOk;
}

int cmd_build(const Options& o) {
    const Input in = load(o);
    const Graph& g = in.graph;
    QuasiTreePartition q;
    Json meta = Json::object();
    if (o.variant == "degeneracy") {
        q = build_qtp_degeneracy(g);
    } else {
        const auto [d, provenance] = decomposition_for(o, in);
        BuildParams p;
        p.k = o.k.value_or(std::max(d.width(), 0) + 1);
        p.root_set = set_flag(o, "S");
        if (o.cap) {
            p.search_cap = *o.cap;
        }
        meta["decomposition"] = provenance;
        meta["k"] = p.k;
        if (o.variant == "kst-free") {
            p.s = need(o.s, "s");
            p.t = need(o.t, "t");
            if (o.rho) {
                p.rho = *o.rho;
                meta["rho"] = "supplied";
            } else {
                p.rho = std::max(d.width(), 0);
                meta["rho"] = "decomposition-width";
            }
            meta["c"] = params_c(p);
        } else if (o.variant == "excluded-clean" || o.variant == "excluded") {
            p.s = need(o.s, "s");
            p.a = need(o.a, "a");
            p.b = need(o.b, "b");
            if (o.rho) {
                p.rho = *o.rho;
                meta["rho"] = "supplied";
            } else {
                p.rho = std::max(d.width(), 0);
                meta["rho"] = "decomposition-width";
            }
        } else {
            throw UsageError("unknown build variant '" + o.variant + "'");
        }
        meta["s"] = p.s;
        meta["rho_value"] = p.rho;
        if (o.variant == "kst-free") {
            if (binomial(g.num_vertices(), p.s) <= p.search_cap) {
                if (auto w = find_kst_star(g, p.s, p.t, p.search_cap)) {
                    throw PreconditionViolation(w->x, "input contains K*_{" + std::to_string(p.s) + "," +
                                                          std::to_string(p.t) + "} on X");
                }
                meta["precondition"] = "certified";
            } else {
                meta["precondition"] = "unchecked";
            }
            q = build_qtp_kst_free(g, d, p);
        } else if (o.variant == "excluded-clean") {
            q = build_qtp_excluded_clean(g, d, p);
        } else {
            q = build_qtp_excluded(g, d, p);
        }
    }
    if (o.dot) {
        write_output(o, qtp_to_dot(q));
        return kOk;
    }
    Json doc = with_graph(qtp_to_json(q), g);
    meta["variant"] = o.variant;
    doc["build"] = meta;
    emit(o, doc);
    return kOk;
}

int cmd_verify(const Options& o) {
    const Input in = load(o);
    const Graph& g = in.graph;
    if (!in.is_json) {
        throw UsageError("verify expects a JSON document with an embedded graph");
    }
    if (o.variant == "qtp") {
        const auto q = qtp_from_json(in.doc);
        const auto report = validate_qtp(g, q, o.s.value_or(1));
        Json out = qtp_report_to_json(report);
        if (report.valid && report.clean) {
            out["weight"] = loads_and_weight(g, q).weight;
        }
        if (o.k) {
            const auto vp = vertical_path_check(g, q, *o.k);
            out["vertical_path"] = {{"threshold", *o.k},
                                    {"exhaustive", vp.exhaustive},
                                    {"tested", vp.tested},
                                    {"failures", vp.failures}};
            if (!vp.passed()) {
                emit(o, out);
                return kVerifyFailed;
            }
        }
        emit(o, out);
        return report.valid ? kOk : kVerifyFailed;
    }
    if (o.variant == "treedec") {
        const auto report = validate_treedec(g, treedec_from_json(in.doc));
        emit(o, treedec_report_to_json(report));
        return report.valid ? kOk : kVerifyFailed;
    }
    if (o.variant == "colouring") {
        const auto f = colouring_from_json(in.doc);
        std::optional<ListAssignment> lists;
        if (in.doc.contains("lists")) {
            lists = in.doc["lists"].get<ListAssignment>();
            for (auto& l : *lists) {
                l = make_vertex_set(std::move(l));
            }
        }
        const auto report = validate_colouring(g, f, lists);
        emit(o, colouring_report_to_json(report));
        return report.uniform && report.list_ok && report.violations.empty() ? kOk : kVerifyFailed;
    }
    throw UsageError("unknown verify target '" + o.variant + "'");
}

/// Lists of the given size: 0..size-1, or with --seed a random subset of a
/// palette twice that size.
ListAssignment make_lists(const Options& o, int n, int size) {
    ListAssignment lists(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed.value_or(0)));
    std::vector<Colour> palette(2 * static_cast<std::size_t>(size));
    std::iota(palette.begin(), palette.end(), 0);
    for (auto& l : lists) {
        if (o.seed) {
            std::shuffle(palette.begin(), palette.end(), rng);
            l.assign(palette.begin(), palette.begin() + size);
            l = make_vertex_set(std::move(l));
        } else {
            l.resize(size);
            std::iota(l.begin(), l.end(), 0);
        }
    }
    return lists;
}

int cmd_colour(const Options& o) {
    const Input in = load(o);
    const Graph& g = in.graph;
    if (!has_schema(in, "qtp/1")) {
        throw UsageError("colour expects a qtp/1 document");
    }
    const auto q = qtp_from_json(in.doc);
    const auto report = validate_qtp(g, q);
    if (!report.valid) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "input partition is invalid: " + (report.violations.empty() ? std::string("unknown")
                                                                                : report.violations.front()));
    }
    const int r = report.quasiness;
    const int ell = o.ell.value_or(1);
    SetColouring f;
    ListAssignment lists;
    Json bound;
    if (o.variant == "clean") {
        lists = make_lists(o, g.num_vertices(), ell * (r + 1) + 1);
        f = colour_clean_qtp(g, q, lists, ell);
        bound = clean_clustering_bound(ell, report.width, report.degree);
    } else if (o.variant == "heavy") {
        lists = make_lists(o, g.num_vertices(), r + 2);
        const auto heavy = validate_qtp(g, q, r + 2);
        const int cap = o.cap ? static_cast<int>(*o.cap) : heavy.max_heavy_children;
        f = colour_heavy_qtp(g, q, lists, cap);
        bound = heavy_clustering_bound(report.width, cap);
    } else if (o.variant == "fractional") {
        lists = make_lists(o, g.num_vertices(), (r + 1) * ell + 1);
        f = colour_fractional_qtp(g, q, lists, ell);
        bound = fractional_clustering_bound(report.width, report.degree);
    } else {
        throw UsageError("unknown colour variant '" + o.variant + "'");
    }
    const auto check = validate_colouring(g, f, lists);
    Json doc = with_graph(colouring_to_json(f), g);
    doc["lists"] = lists;
    doc["report"] = colouring_report_to_json(check);
    doc["bound"] = bound;
    emit(o, doc);
    return kOk;
}

int cmd_detect(const Options& o) {
    const Input in = load(o);
    const Graph& g = in.graph;
    const std::int64_t cap = o.cap.value_or(kDefaultSearchCap);
    std::optional<PatternWitness> w;
    if (o.variant == "kst") {
        w = find_kst(g, need(o.s, "s"), need(o.t, "t"), cap);
    } else if (o.variant == "kst-star") {
        w = find_kst_star(g, need(o.s, "s"), need(o.t, "t"), cap);
    } else if (o.variant == "extension-skewer") {
        w = extension_or_skewer(g, set_flag(o, "X"), need(o.a, "a"), need(o.b, "b"));
    } else {
        throw UsageError("unknown detect pattern '" + o.variant + "'");
    }
    Json out = {{"found", w.has_value()}};
    if (w) {
        out["witness"] = witness_to_json(*w);
        out["verified"] = verify_witness(g, *w).ok;
    }
    emit(o, out);
    return kOk;
}

int cmd_rho(const Options& o) {
    const Input in = load(o);
    const int branch = o.branch.value_or(std::min(in.graph.num_vertices(), 8));
    const auto r = o.cap ? rho_oracle(in.graph, branch, *o.cap) : rho_oracle(in.graph, branch);
    Json out = rho_to_json(r);
    out["verified"] = verify_rho(in.graph, r).ok;
    emit(o, out);
    return kOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::BadParams:
        case ErrorKind::UnknownFamily:
        case ErrorKind::SelfLoop:
        case ErrorKind::VertexOutOfRange:
            return kUsage;
        default:
            return kViolation;
    }
}

int report_error(const Json& error, int code) {
    std::cout << Json{{"error", error}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-tree-partitions: build, verify, colour and detect"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--s", o.s, "Size of the small side s");
        cmd->add_option("--t", o.t, "Size of the large side t");
        cmd->add_option("--a", o.a, "Extension parameter a");
        cmd->add_option("--b", o.b, "Skewer parameter b");
        cmd->add_option("--rho", o.rho, "Upper bound on rho(G)");
        cmd->add_option("--k", o.k, "Width bound plus one, or vertical-path threshold for verify");
        cmd->add_option("--ell", o.ell, "Colours per vertex");
        cmd->add_option("--seed", o.seed, "Seed for every random choice");
        cmd->add_option("--set", o.sets, "Named set or parameter KEY=v1,v2,...");
        cmd->add_option("--in", o.in, "Input file (default: stdin)");
        cmd->add_option("--out", o.out, "Output file (default: stdout)");
        cmd->add_option("--cap", o.cap, "Search cap, or heavy-children cap for colour heavy");
    };

    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("family", o.variant, "grid fan path cycle complete star kst kst-star closure "
                                         "extension skewered gnp partial-ktree tree")
        ->required();
    gen->add_option("--n", o.n, "Size parameter");
    gen->add_option("--m", o.m, "Second grid dimension");
    gen->add_flag("--text", o.text, "Emit the edge-list text format");
    common(gen);

    auto* td = app.add_subcommand("treedec", "Heuristic tree-decomposition of the input graph");
    td->add_flag("--exact", o.exact, "Also report the exact tree-width (n <= 12)");
    common(td);

    auto* build = app.add_subcommand("build", "Build a quasi-tree-partition");
    build->add_option("variant", o.variant, "kst-free excluded-clean excluded degeneracy")
        ->required()
        ->check(CLI::IsMember({"kst-free", "excluded-clean", "excluded", "degeneracy"}));
    build->add_option("--td", o.td, "Tree-decomposition document to use");
    build->add_flag("--dot", o.dot, "Emit Graphviz instead of JSON");
    common(build);

    auto* verify = app.add_subcommand("verify", "Validate a document against its graph");
    verify->add_option("target", o.variant, "qtp treedec colouring")
        ->required()
        ->check(CLI::IsMember({"qtp", "treedec", "colouring"}));
    common(verify);

    auto* colour = app.add_subcommand("colour", "Colour a quasi-tree-partition");
    colour->add_option("variant", o.variant, "clean heavy fractional")
        ->required()
        ->check(CLI::IsMember({"clean", "heavy", "fractional"}));
    common(colour);

    auto* detect = app.add_subcommand("detect", "Search for an excluded pattern");
    detect->add_option("pattern", o.variant, "kst kst-star extension-skewer")
        ->required()
        ->check(CLI::IsMember({"kst", "kst-star", "extension-skewer"}));
    common(detect);

    auto* rho = app.add_subcommand("rho", "Bounded search for rho(G)");
    rho->add_option("--branch", o.branch, "Largest branch set examined");
    common(rho);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error({{"kind", "Usage"}, {"message", e.what()}}, kUsage);
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*td) return cmd_treedec(o);
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify(o);
        if (*colour) return cmd_colour(o);
        if (*detect) return cmd_detect(o);
        if (*rho) return cmd_rho(o);
    } catch (const PatternPresent& e) {
        return report_error({{"kind", std::string(to_string(e.kind()))},
                             {"message", e.what()},
                             {"witness", witness_to_json(e.witness())}},
                            kViolation);
    } catch (const PreconditionViolation& e) {
        return report_error(
            {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"set", e.set()}}, kViolation);
    } catch (const quasitree::ParseError& e) {
        return report_error({{"kind", "ParseError"}, {"message", e.what()}, {"line", e.line()},
                             {"column", e.column()}},
                            kUsage);
    } catch (const Error& e) {
        return report_error({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}},
                            exit_code_for(e.kind()));
    } catch (const UsageError& e) {
        return report_error({{"kind", "Usage"}, {"message", e.what()}}, kUsage);
    }
    return kUsage;
}
