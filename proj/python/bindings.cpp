#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quasitree/colouring.hpp"
#include "quasitree/construct.hpp"
#include "quasitree/generators.hpp"
#include "quasitree/io.hpp"
#include "quasitree/patterns.hpp"

namespace py = pybind11;
using namespace quasitree;

namespace {

py::object to_py(const Json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

Json from_py(const py::handle& obj) {
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object witness_or_none(const std::optional<PatternWitness>& w) {
    return w ? to_py(witness_to_json(*w)) : py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quasi-tree-partitions of graphs: builders, validators and colourers";

    static py::exception<Error> base(m, "QuasitreeError");
    static py::exception<Error> pattern(m, "PatternPresent", base.ptr());
    static py::exception<Error> precondition(m, "PreconditionViolation", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const PatternPresent& e) {
            PyErr_SetObject(pattern.ptr(), py::make_tuple(e.what(), to_py(witness_to_json(e.witness()))).ptr());
        } catch (const PreconditionViolation& e) {
            PyErr_SetObject(precondition.ptr(), py::make_tuple(e.what(), py::cast(e.set())).ptr());
        } catch (const Error& e) {
            PyErr_SetObject(base.ptr(), py::make_tuple(e.what(), std::string(to_string(e.kind()))).ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("edges", &Graph::edges)
        .def("neighbours", [](const Graph& g, Vertex v) {
            if (v < 0 || v >= g.num_vertices()) {
                throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
            }
            return std::vector<Vertex>(g.neighbours(v).begin(), g.neighbours(v).end());
        })
        .def("degeneracy", [](const Graph& g) { return degeneracy_order(g).degeneracy; })
        .def("to_text", &emit_graph_text)
        .def_static("from_text", &graph_from_any)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def(py::init<>())
        .def_readwrite("bags", &TreeDecomposition::bags)
        .def_readwrite("tree_edges", &TreeDecomposition::tree_edges)
        .def_property_readonly("width", &TreeDecomposition::width)
        .def("to_json", [](const TreeDecomposition& d) { return to_py(treedec_to_json(d)); })
        .def_static("from_json", [](const py::object& doc) { return treedec_from_json(from_py(doc)); });

    py::class_<QuasiTreePartition>(m, "QuasiTreePartition")
        .def(py::init<>())
        .def_property(
            "parent", [](const QuasiTreePartition& q) { return q.tree.parent; },
            [](QuasiTreePartition& q, std::vector<int> p) { q.tree.parent = std::move(p); })
        .def_property(
            "root", [](const QuasiTreePartition& q) { return q.tree.root; },
            [](QuasiTreePartition& q, int r) { q.tree.root = r; })
        .def_readwrite("bags", &QuasiTreePartition::bags)
        .def_readwrite("up_edges", &QuasiTreePartition::up_edges)
        .def("to_json", [](const QuasiTreePartition& q) { return to_py(qtp_to_json(q)); })
        .def_static("from_json", [](const py::object& doc) { return qtp_from_json(from_py(doc)); })
        .def("__eq__", [](const QuasiTreePartition& a, const QuasiTreePartition& b) { return a == b; });

    m.def(
        "generate",
        [](const std::string& family, const py::kwargs& kwargs) {
            GenParams params;
            for (auto item : kwargs) {
                params[item.first.cast<std::string>()] = item.second.cast<std::int64_t>();
            }
            return generate(family, params);
        },
        py::arg("family"), "Named graph family; parameters as keyword arguments.");

    m.def(
        "heuristic_treedec",
        [](const Graph& g, bool min_fill) {
            return heuristic_treedec(g, min_fill ? EliminationStrategy::MinFill : EliminationStrategy::MinDegree);
        },
        py::arg("g"), py::arg("min_fill") = true);
    m.def("treewidth_exact", &treewidth_exact_small, py::arg("g"));
    m.def(
        "validate_treedec", [](const Graph& g, const TreeDecomposition& d) {
            return to_py(treedec_report_to_json(validate_treedec(g, d)));
        },
        py::arg("g"), py::arg("d"));

    auto params = [](int s, int t, int rho, int a, int b, int k, const VertexSet& root_set) {
        BuildParams p;
        p.s = s;
        p.t = t;
        p.rho = rho;
        p.a = a;
        p.b = b;
        p.k = k;
        p.root_set = make_vertex_set(root_set);
        return p;
    };
    m.def(
        "build_kst_free",
        [params](const Graph& g, const TreeDecomposition& d, int s, int t, int rho, int k, const VertexSet& root) {
            return build_qtp_kst_free(g, d, params(s, t, rho, 2, 2, k, root));
        },
        py::arg("g"), py::arg("d"), py::arg("s"), py::arg("t"), py::arg("rho"), py::arg("k"),
        py::arg("root_set") = VertexSet{});
    m.def(
        "build_excluded",
        [params](const Graph& g, const TreeDecomposition& d, int s, int a, int b, int rho, int k, bool clean,
                 const VertexSet& root) {
            const BuildParams p = params(s, 1, rho, a, b, k, root);
            return clean ? build_qtp_excluded_clean(g, d, p) : build_qtp_excluded(g, d, p);
        },
        py::arg("g"), py::arg("d"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("rho"), py::arg("k"),
        py::arg("clean") = true, py::arg("root_set") = VertexSet{});
    m.def("build_degeneracy", &build_qtp_degeneracy, py::arg("g"));

    m.def(
        "validate_qtp",
        [](const Graph& g, const QuasiTreePartition& q, int s_heavy) {
            return to_py(qtp_report_to_json(validate_qtp(g, q, s_heavy)));
        },
        py::arg("g"), py::arg("q"), py::arg("s_heavy") = 1);
    m.def(
        "weight", [](const Graph& g, const QuasiTreePartition& q) { return loads_and_weight(g, q).weight; },
        py::arg("g"), py::arg("q"));
    m.def("to_treedec", &to_treedec, py::arg("g"), py::arg("q"));

    m.def("c_bound", &c_bound, py::arg("s"), py::arg("t"), py::arg("rho"));
    m.def(
        "find_kst",
        [](const Graph& g, int s, int t, std::int64_t cap) { return witness_or_none(find_kst(g, s, t, cap)); },
        py::arg("g"), py::arg("s"), py::arg("t"), py::arg("cap") = kDefaultSearchCap);
    m.def(
        "find_kst_star",
        [](const Graph& g, int s, int t, std::int64_t cap) {
            return witness_or_none(find_kst_star(g, s, t, cap));
        },
        py::arg("g"), py::arg("s"), py::arg("t"), py::arg("cap") = kDefaultSearchCap);
    m.def(
        "extension_or_skewer",
        [](const Graph& g, const VertexSet& x, int a, int b) {
            return witness_or_none(extension_or_skewer(g, make_vertex_set(x), a, b));
        },
        py::arg("g"), py::arg("x"), py::arg("a"), py::arg("b"));
    m.def(
        "rho",
        [](const Graph& g, int max_branch) { return to_py(rho_to_json(rho_oracle(g, max_branch))); },
        py::arg("g"), py::arg("max_branch") = 8);

    m.def("colour_clean", &colour_clean_qtp, py::arg("g"), py::arg("q"), py::arg("lists"), py::arg("ell") = 1);
    m.def("colour_heavy", &colour_heavy_qtp, py::arg("g"), py::arg("q"), py::arg("lists"), py::arg("heavy_cap"));
    m.def("colour_fractional", &colour_fractional_qtp, py::arg("g"), py::arg("q"), py::arg("lists"),
          py::arg("ell") = 1);
    m.def(
        "validate_colouring",
        [](const Graph& g, const SetColouring& f, std::optional<ListAssignment> lists) {
            return to_py(colouring_report_to_json(validate_colouring(g, f, lists)));
        },
        py::arg("g"), py::arg("f"), py::arg("lists") = py::none());
}
