#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <erogers/blowup.hpp>
#include <erogers/cli.hpp>
#include <erogers/efr.hpp>
#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/search.hpp>
#include <erogers/subgraph.hpp>

#include <sstream>

namespace py = pybind11;
using namespace erogers;

namespace {

py::object to_python(const nlohmann::json & j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Graph make_graph(int n, const std::vector<std::pair<int, int>> & edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Budget budget_of(std::uint64_t nodes)
{
    return nodes == 0 ? Budget::unlimited() : Budget::nodes(nodes);
}

py::dict set_result(const SetResult & r)
{
    py::dict d;
    d["set"] = r.set.members();
    d["status"] = to_string(r.status);
    return d;
}

} // namespace

PYBIND11_MODULE(_erogers, m)
{
    m.doc() = "Erdős–Rogers constructions, searches and certificates";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ValidationFault>(m, "ValidationFault", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_static("from_name", [](const std::string & name) {
            auto g = graphs::by_name(name);
            if (! g)
                throw InputError("unknown graph name " + name);
            return *g;
        })
        .def_static("parse", [](const std::string & text) {
            std::istringstream in(text);
            return read_graph(in);
        })
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", [](const Graph & g, int v) { return g.neighbours(v).members(); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", [](const Graph & g) {
            std::vector<std::pair<int, int>> out;
            for (auto [u, v] : g.edges())
                out.emplace_back(u, v);
            return out;
        })
        .def("to_text", [](const Graph & g) {
            std::ostringstream out;
            write_graph(out, g);
            return out.str();
        })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph & g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<HyperEdge>, std::optional<int>>(), py::arg("n"), py::arg("edges"),
            py::arg("uniformity") = py::none())
        .def_static("parse", [](const std::string & text) {
            std::istringstream in(text);
            return read_hypergraph(in);
        })
        .def_property_readonly("order", &Hypergraph::order)
        .def_property_readonly("size", &Hypergraph::size)
        .def("edges", &Hypergraph::edges)
        .def("to_text", [](const Hypergraph & h) {
            std::ostringstream out;
            write_hypergraph(out, h);
            return out.str();
        })
        .def("__repr__", [](const Hypergraph & h) {
            return "Hypergraph(order=" + std::to_string(h.order()) + ", size=" + std::to_string(h.size()) + ")";
        });

    m.def("is_linear", [](const Hypergraph & h) { return hypergraph_is_linear(h).pass; });
    m.def("is_triangle_free", [](const Hypergraph & h) { return hypergraph_is_triangle_free(h).pass; });
    m.def("girth_at_least", [](const Hypergraph & h, int g) { return hypergraph_girth_at_least(h, g).pass; });

    m.def("sphere_points", [](int d, int r) { return sphere_points(d, r).points; });
    m.def("efr_hypergraph", [](int d, int r, int R) {
        auto inst = efr_hypergraph(d, r, R);
        return py::make_tuple(inst.hypergraph, to_python(efr_certificate(inst).to_json()));
    });

    m.def("find_subgraph", [](const Graph & host, const Graph & pattern) -> std::optional<std::vector<int>> {
        auto r = contains_subgraph(host, pattern);
        if (r.found())
            return r.embedding;
        return std::nullopt;
    });
    m.def("find_homomorphism", &find_homomorphism, py::arg("g"), py::arg("f"));
    m.def("is_hom_free", [](const Graph & f, const Graph & g) { return is_hom_free(f, g).hom_free; });

    m.def("max_independent_set", [](const Graph & g, std::uint64_t nodes) {
        return set_result(max_independent_set(g, budget_of(nodes)));
    }, py::arg("g"), py::arg("budget_nodes") = 0);
    m.def("max_f_free_subset", [](const Graph & g, const Graph & f, std::uint64_t nodes) {
        return set_result(max_f_free_subset(g, f, budget_of(nodes)));
    }, py::arg("g"), py::arg("f"), py::arg("budget_nodes") = 0);

    m.def("spencer_independent_set", [](const Hypergraph & h, std::uint64_t seed, int trials) {
        return spencer_independent_set(h, SeededRng(seed), trials).set.members();
    }, py::arg("h"), py::arg("seed"), py::arg("trials") = 50);
    m.def("sunflower", [](const std::vector<std::vector<int>> & family, int m_petals)
              -> std::optional<std::vector<std::vector<int>>> {
        auto r = erdos_rado_sunflower(family, m_petals);
        if (r.sunflower)
            return r.sunflower->petals;
        return std::nullopt;
    });

    m.def("theorem1", [](int d, int r, int R, const Graph & f, std::uint64_t seed) {
        auto res = theorem1_build(d, r, R, f, SeededRng(seed));
        return py::make_tuple(res.graph, to_python(res.certificate.to_json()));
    }, py::arg("d"), py::arg("r"), py::arg("R"), py::arg("f"), py::arg("seed"));

    m.def("ckfree", [](const Graph & g, int k, std::uint64_t seed) {
        auto res = ckfree_subset(g, k, SeededRng(seed));
        return py::make_tuple(res.set.members(), to_python(res.certificate.to_json()));
    }, py::arg("g"), py::arg("k"), py::arg("seed"));
    m.def("ksfree", [](const Graph & g, int s, int k, std::uint64_t seed) {
        auto res = ksfree_recursion(g, s, k, SeededRng(seed));
        return py::make_tuple(res.set.members(), to_python(res.certificate.to_json()));
    }, py::arg("g"), py::arg("s"), py::arg("k"), py::arg("seed"));

    m.def("gplus", [](const Graph & g, int v, int w) {
        auto fam = gplus_family(g, v, w);
        return py::make_tuple(fam.gplus, fam.gstar, fam.gstarstar);
    });
    m.def("random_girth_hypergraph", [](int t, int r, std::uint64_t seed) {
        auto res = random_girth_hypergraph(t, r, SeededRng(seed));
        return py::make_tuple(res.hypergraph, to_python(res.certificate.to_json()));
    }, py::arg("t"), py::arg("r"), py::arg("seed"));
    m.def("theorem4_part2", [](const Graph & g, int t, std::uint64_t seed) {
        auto res = theorem4_part2_build(g, t, SeededRng(seed));
        return py::make_tuple(res.f, to_python(res.certificate.to_json()));
    }, py::arg("g"), py::arg("t"), py::arg("seed"));
    m.def("theorem4_part1", [](const Graph & g, const Graph & f, int n, int d, int girth, std::uint64_t seed) {
        auto res = theorem4_part1_build(g, f, n, d, girth, SeededRng(seed));
        return py::make_tuple(res.graph, to_python(res.certificate.to_json()));
    }, py::arg("g"), py::arg("f"), py::arg("n"), py::arg("d"), py::arg("girth"), py::arg("seed"));

    m.def("ramsey_witness_check", [](const Graph & h, const Graph & f, const Graph & g, int t, int rf_t) {
        return to_python(ramsey_witness_check(h, f, g, t, rf_t).to_json());
    });
    m.def("brute_force_f", [](const Graph & f, const Graph & g, int n) {
        auto res = brute_force_f(f, g, n);
        return py::make_tuple(res.value, res.witness);
    });

    m.def("run_cli", [](const std::vector<std::string> & args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run an erogers command in-process; returns (exit_code, stdout, stderr).");
}
