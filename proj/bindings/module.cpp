// Python bindings for the main operations: recognition with certificates,
// certificate validation, root reconstruction, and the extremal bounds.
// Graphs cross the boundary as edge lists (pairs of vertex labels) plus an
// optional list of isolated vertices; certificates cross as the same text
// format the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthkit/bounds.hpp"
#include "orthkit/io.hpp"
#include "orthkit/recognize.hpp"

namespace py = pybind11;
using namespace orthkit;

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

SimpleGraph make_graph(const EdgeList& edges, const std::vector<std::string>& vertices) {
    return SimpleGraph::from_edges(vertices, edges);
}

py::object violation_to_py(const std::optional<Violation>& violation) {
    if (!violation) return py::none();
    py::dict out;
    out["kind"] = to_string(violation->kind);
    out["detail"] = violation->detail;
    out["witness"] = violation->witness;
    return out;
}

py::dict report_to_py(const RecognitionReport& report) {
    py::dict out;
    out["verdict"] = to_string(report.verdict);
    out["h"] = report.h;
    out["t"] = report.t;
    out["log"] = report.pipeline_log;
    out["note"] = report.note;
    out["certificate"] =
        report.representation ? py::object(py::str(write_representation(*report.representation)))
                              : py::object(py::none());
    if (report.obstruction) {
        py::dict ob;
        ob["kind"] = report.obstruction->kind;
        ob["detail"] = report.obstruction->detail;
        ob["vertices"] = report.obstruction->vertices;
        if (report.obstruction->pattern_name) ob["pattern"] = *report.obstruction->pattern_name;
        out["obstruction"] = ob;
    } else {
        out["obstruction"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_orthkit, m) {
    m.doc() =
        "Membership of graphs in ORTH[h,2,t]: orthodox representations by paths "
        "in bounded-degree host trees, with constructive certificates";

    py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceededError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "CertificateParseError", PyExc_ValueError);

    m.def(
        "recognize",
        [](const EdgeList& edges, int h, int t, bool include_k25,
           const std::vector<std::string>& vertices) {
            return report_to_py(recognize(make_graph(edges, vertices), h, t, include_k25));
        },
        py::arg("edges"), py::arg("h"), py::arg("t"), py::arg("include_k25") = false,
        py::arg("vertices") = std::vector<std::string>{},
        "Decide membership of the graph in ORTH[h,2,t].  Returns a dict with "
        "'verdict' ('Member'/'NonMember'/'Inconclusive'), 'certificate' (the "
        "representation in the CLI text format, Members only), 'obstruction' "
        "(dict, NonMembers only), 'log', and 'note'.");

    m.def(
        "validate_representation",
        [](const std::string& certificate, const EdgeList& edges, int h, int t,
           const std::vector<std::string>& vertices) {
            auto rep = parse_representation(certificate, h, t);
            return violation_to_py(validate_representation(rep, make_graph(edges, vertices), h, t));
        },
        py::arg("certificate"), py::arg("edges"), py::arg("h"), py::arg("t"),
        py::arg("vertices") = std::vector<std::string>{},
        "Check a representation certificate (CLI text format) against the graph "
        "at (h,t).  Returns None when valid, else a dict describing the first "
        "violation.");

    m.def(
        "validate_layout",
        [](const std::string& certificate, const EdgeList& edges, int h, int t,
           const std::vector<std::string>& vertices) {
            auto layout = parse_layout(certificate);
            return violation_to_py(validate_layout(layout, make_graph(edges, vertices), h, t));
        },
        py::arg("certificate"), py::arg("edges"), py::arg("h"), py::arg("t"),
        py::arg("vertices") = std::vector<std::string>{},
        "Check a tree-layout certificate (CLI text format) against the graph at "
        "(h,t).  Returns None when valid, else a violation dict.");

    m.def(
        "root",
        [](const EdgeList& edges, const std::vector<std::string>& vertices) {
            auto result = root_graph(make_graph(edges, vertices));
            py::dict out;
            out["is_line_graph"] = result.is_line_graph();
            if (result.is_line_graph()) {
                EdgeList root_edges;
                for (const auto& e : result.root->root.edges()) root_edges.push_back({e.u, e.v});
                out["root_edges"] = root_edges;
                py::dict phi;
                for (const auto& [v, e] : result.root->phi)
                    phi[py::str(v)] = Multigraph::edge_label(e);
                out["phi"] = phi;
                out["witness"] = py::none();
            } else {
                out["root_edges"] = py::none();
                out["phi"] = py::none();
                out["witness"] = result.witness->detail;
            }
            return out;
        },
        py::arg("edges"), py::arg("vertices") = std::vector<std::string>{},
        "Reconstruct the root multigraph: a dict with 'is_line_graph', "
        "'root_edges' (parallel copies repeat), and 'phi' (vertex -> root edge "
        "label), or a 'witness' explaining why no root exists.");

    m.def("max_leaves", &max_leaves, py::arg("h"), py::arg("t"),
          "Maximum leaf count of a host tree with degree bound h whose leaves "
          "pairwise lie within distance t (h >= 3, t >= 3).");

    m.def(
        "separating_interval",
        [](int h, int t) {
            auto interval = separating_interval(h, t);
            return std::make_pair(interval.lo, interval.hi);
        },
        py::arg("h"), py::arg("t"),
        "The interval [max_leaves(h,t)+1, max_leaves(h+1,t)] of clique-root "
        "orders separating ORTH[h,2,t] from ORTH[h+1,2,t].");

    m.def(
        "extremal_tree",
        [](int h, int t) {
            auto tree = extremal_tree(h, t);
            return tree.edge_labels();
        },
        py::arg("h"), py::arg("t"),
        "Edge list of a host tree attaining max_leaves(h,t).");

    m.def(
        "line_graph",
        [](const EdgeList& edges, const std::vector<std::string>& vertices) {
            auto lg = line_graph(make_graph(edges, vertices));
            return py::make_tuple(lg.labels(), lg.edge_labels());
        },
        py::arg("edges"), py::arg("vertices") = std::vector<std::string>{},
        "Line graph of the input: a (vertices, edges) pair; vertices are named "
        "'u,v' after the input edges they stand for.");
}
