#include "mcsolve/certificate.hpp"
#include "mcsolve/errors.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solve.hpp"
#include "mcsolve/twins.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace mcs;

namespace {

Mode parse_mode(const std::string& name)
{
    if (name == "induced")
        return Mode::Induced;
    if (name == "subgraph")
        return Mode::Subgraph;
    throw ContractError("unknown mode '" + name + "'");
}

SolveCaps caps_from(const std::optional<py::dict>& overrides)
{
    SolveCaps caps = default_caps();
    if (overrides)
        for (auto [key, value] : *overrides) {
            auto name = py::cast<std::string>(key);
            for (char& c : name)
                if (c == '_')
                    c = '-';
            set_cap(caps, name, py::cast<long long>(value));
        }
    return caps;
}

std::optional<std::pair<long long, long long>> eps_from(const py::object& eps)
{
    if (eps.is_none())
        return std::nullopt;
    if (py::isinstance<py::str>(eps))
        return parse_eps(py::cast<std::string>(eps));
    // Fractions and floats alike go through their decimal text.
    return parse_eps(py::cast<std::string>(py::str(eps)));
}

Rng rng_from(unsigned seed) { return Rng(seed); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Maximum common (induced) subgraph solvers with checkable certificates.";

    auto contract = py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    (void)contract;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
            py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("add_vertex", &Graph::add_vertex)
        .def("edges", &Graph::edges)
        .def("components", &Graph::components)
        .def("connected", &Graph::connected)
        .def("to_text", &serialize_graph)
        .def_static("from_text", [](const std::string& text) { return parse_graph(text); })
        .def_static("read", &read_graph_file)
        .def(py::self == py::self)
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
            return out.str();
        });

    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("empty_graph", &empty_graph);
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("subdivide", &subdivide, py::arg("g"), py::arg("factor"));
    m.def("disjoint_union", &disjoint_union);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& vs) { return induced_subgraph(g, vs); });

    m.def("gnp", [](int n, double p, unsigned seed) { auto r = rng_from(seed); return gen_gnp(r, n, p); },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0);
    m.def("cluster", &gen_cluster, py::arg("sizes"));
    m.def("bounded_nd", [](int n, int classes, unsigned seed) { auto r = rng_from(seed); return gen_bounded_nd(r, n, classes); },
        py::arg("n"), py::arg("classes"), py::arg("seed") = 0);
    m.def("shuffle_vertices", [](const Graph& g, unsigned seed) { auto r = rng_from(seed); return shuffle_vertices(r, g); },
        py::arg("g"), py::arg("seed") = 0);

    py::class_<EmbeddingCertificate>(m, "Certificate")
        .def_property_readonly("mode", [](const EmbeddingCertificate& c) { return std::string(to_string(c.mode)); })
        .def_readonly("h", &EmbeddingCertificate::h)
        .def_readonly("eta1", &EmbeddingCertificate::eta1)
        .def_readonly("eta2", &EmbeddingCertificate::eta2)
        .def_readonly("value", &EmbeddingCertificate::value)
        .def("to_text", &serialize_certificate)
        .def_static("from_text", [](const std::string& text) { return parse_certificate(text); })
        .def_static("build",
            [](const std::string& mode, const Graph& h, std::vector<int> eta1, std::vector<int> eta2) {
                EmbeddingCertificate c;
                c.mode = parse_mode(mode);
                c.h = h;
                c.eta1 = std::move(eta1);
                c.eta2 = std::move(eta2);
                c.value = c.mode == Mode::Induced ? h.order() : h.size();
                return c;
            },
            py::arg("mode"), py::arg("h"), py::arg("eta1"), py::arg("eta2"))
        .def(py::self == py::self)
        .def("__repr__", [](const EmbeddingCertificate& c) {
            return "Certificate(mode=" + std::string(to_string(c.mode)) + ", value=" + std::to_string(c.value) + ")";
        });

    m.def(
        "verify",
        [](const Graph& g1, const Graph& g2, const EmbeddingCertificate& c) {
            const auto r = verify_certificate(g1, g2, c);
            return py::make_tuple(r.ok(), r.message);
        },
        py::arg("g1"), py::arg("g2"), py::arg("certificate"),
        "Returns (ok, message); the message names the first violation.");

    py::class_<SolveOutcome>(m, "Outcome")
        .def_readonly("certificate", &SolveOutcome::certificate)
        .def_property_readonly("method", [](const SolveOutcome& o) { return std::string(to_string(o.method)); })
        .def_readonly("exact", &SolveOutcome::exact)
        .def_property_readonly("value", [](const SolveOutcome& o) { return o.certificate.value; });

    m.def(
        "solve",
        [](const Graph& g1, const Graph& g2, const std::string& problem, const std::string& method,
            const py::object& eps, const std::optional<py::dict>& caps) {
            SolveRequest req;
            req.problem = parse_problem(problem);
            req.method = parse_method(method);
            req.eps = eps_from(eps);
            req.caps = caps_from(caps);
            py::gil_scoped_release release;
            return solve(g1, g2, req);
        },
        py::arg("g1"), py::arg("g2"), py::arg("problem") = "mcis", py::arg("method") = "auto",
        py::arg("eps") = py::none(), py::arg("caps") = py::none(),
        "Caps are keyword overrides such as {'oracle': 10, 'ml_nodes': 5000}.");
    m.def(
        "choose_method",
        [](const Graph& g1, const Graph& g2, const std::string& problem) {
            return std::string(to_string(choose_method(g1, g2, parse_problem(problem), default_caps())));
        },
        py::arg("g1"), py::arg("g2"), py::arg("problem") = "mcis");

    m.def("mcis_oracle", &mcis_oracle, py::arg("g1"), py::arg("g2"), py::arg("cap") = kDefaultMcisOracleCap);
    m.def("mcs_oracle", &mcs_oracle, py::arg("g1"), py::arg("g2"), py::arg("cap") = kDefaultMcsOracleCap);

    m.def("neighborhood_diversity", &neighborhood_diversity);
    m.def("twin_cover", &minimum_twin_cover);
    m.def("cluster_deletion", &minimum_cluster_deletion);
    m.def("max_leaf_number", &max_leaf_number, py::arg("g"), py::arg("component_cap") = kDefaultMaxLeafCap);
    m.def("is_cluster_graph", &is_cluster_graph);
}
