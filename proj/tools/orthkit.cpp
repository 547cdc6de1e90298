// orthkit — membership in ORTH[h,2,t]: orthodox representations of graphs by
// paths in bounded-degree host trees, with constructive certificates for
// members and machine-checkable obstruction witnesses for non-members.
//
// Exit codes of the membership-flavored subcommands (recognize, obstruct):
//   0 Member, 1 NonMember, 2 Inconclusive, 3 usage/input errors.
// validate: 0 certificate Ok, 1 violation found, 3 errors.
// All outputs are deterministic: identical inputs and flags give
// byte-identical bytes.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthkit/bounds.hpp"
#include "orthkit/graph.hpp"
#include "orthkit/io.hpp"
#include "orthkit/layout.hpp"
#include "orthkit/obstructions.hpp"
#include "orthkit/recognize.hpp"
#include "orthkit/root.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Multigraph as an edge list: one "u v" line per edge copy (no parse
// counterpart is needed; roots appear only in reports).
std::string multigraph_edge_list(const orthkit::Multigraph& g) {
    std::ostringstream out;
    std::set<std::string> covered;
    for (const auto& e : g.edges()) {
        covered.insert(e.u);
        covered.insert(e.v);
        out << e.u << " " << e.v << "\n";
    }
    for (const auto& v : g.labels())
        if (!covered.count(v)) out << v << "\n";
    return out.str();
}

json multigraph_json(const orthkit::Multigraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"vertices", g.labels()}, {"edges", edges}};
}

json witness_json(const orthkit::SubdivisionWitness& w) {
    json branch = json::object();
    for (const auto& [pat, host] : w.branch_map) branch[pat] = host;
    json paths = json::object();
    for (const auto& [edge, path] : w.path_map) paths[edge] = path;
    return json{{"branch_map", branch}, {"paths", paths}};
}

// DOT of `host` with a subdivision witness overlaid: branch vertices are
// annotated with the pattern vertex they realize, witness path edges are
// drawn bold.  Non-witness structure stays in default style underneath.
std::string overlay_dot(const orthkit::SimpleGraph& host, const orthkit::SubdivisionWitness& w) {
    std::map<std::string, std::string> branch_of;  // host vertex -> pattern vertex
    for (const auto& [pat, hv] : w.branch_map) branch_of[hv] = pat;
    std::set<std::pair<std::string, std::string>> marked;
    for (const auto& [edge, path] : w.path_map) {
        (void)edge;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            marked.insert(std::minmax(path[i], path[i + 1]));
    }
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < host.n(); ++v) {
        out << "  " << quote(host.label(v));
        auto it = branch_of.find(host.label(v));
        if (it != branch_of.end())
            out << " [shape=doublecircle, label=" << quote(host.label(v) + " = " + it->second)
                << "]";
        out << ";\n";
    }
    for (const auto& [a, b] : host.edges()) {
        out << "  " << quote(host.label(a)) << " -- " << quote(host.label(b));
        if (marked.count(std::minmax(host.label(a), host.label(b)))) out << " [penwidth=3]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

// Which certificate format a file holds, by its section marker.
std::string detect_kind(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream tokens(line);
        std::string first, extra;
        if (!(tokens >> first) || (tokens >> extra)) continue;
        if (first == "leaves:") return "layout";
        if (first == "paths:") return "representation";
    }
    return "graph";
}

int exit_code_of(orthkit::Verdict v) {
    switch (v) {
        case orthkit::Verdict::Member: return kExitMember;
        case orthkit::Verdict::NonMember: return kExitNonMember;
        case orthkit::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
}

json obstruction_json(const orthkit::Obstruction& ob) {
    json j{{"kind", ob.kind}, {"detail", ob.detail}, {"vertices", ob.vertices}};
    if (ob.line_witness) {
        json w{{"detail", ob.line_witness->detail}};
        if (ob.line_witness->local_vertex) w["local_vertex"] = *ob.line_witness->local_vertex;
        j["line_witness"] = w;
    }
    if (ob.pattern_name) j["pattern"] = *ob.pattern_name;
    if (ob.subdivision) j["subdivision"] = witness_json(*ob.subdivision);
    if (ob.root) j["root"] = multigraph_json(*ob.root);
    if (ob.subgraph) j["subgraph"] = orthkit::to_edge_list(*ob.subgraph);
    return j;
}

void render_obstruction(std::ostream& out, const orthkit::Obstruction& ob) {
    out << "obstruction:\n"
        << "  kind: " << ob.kind << "\n"
        << "  detail: " << ob.detail << "\n";
    if (!ob.vertices.empty()) out << "  vertices: " << join(ob.vertices, " ") << "\n";
    if (ob.line_witness) {
        if (ob.line_witness->local_vertex)
            out << "  local vertex: " << *ob.line_witness->local_vertex << "\n";
        out << "  line-graph refutation: " << ob.line_witness->detail << "\n";
    }
    if (ob.pattern_name) out << "  pattern: " << *ob.pattern_name << "\n";
    if (ob.subdivision) {
        out << "  branch vertices:";
        for (const auto& [pat, host] : ob.subdivision->branch_map)
            out << " " << pat << "->" << host;
        out << "\n";
        for (const auto& [edge, path] : ob.subdivision->path_map)
            out << "  path " << edge << ": " << join(path, " ") << "\n";
    }
    if (ob.root) {
        out << "  root:\n";
        std::istringstream lines(multigraph_edge_list(*ob.root));
        std::string line;
        while (std::getline(lines, line)) out << "    " << line << "\n";
    }
    if (ob.subgraph) {
        out << "  subgraph without a layout:\n";
        std::istringstream lines(orthkit::to_edge_list(*ob.subgraph));
        std::string line;
        while (std::getline(lines, line)) out << "    " << line << "\n";
    }
}

// ---------------------------------------------------------------- recognize

struct RecognizeConfig {
    std::string input;
    int h = 3;
    int t = 2;
    bool include_k25 = false;
    bool as_json = false;
    std::string certificate_path;
};

int cmd_recognize(const RecognizeConfig& cfg) {
    auto g = orthkit::parse_graph(read_text(cfg.input));
    auto report = orthkit::recognize(g, cfg.h, cfg.t, cfg.include_k25);

    std::optional<std::string> certificate;
    if (report.representation) certificate = orthkit::write_representation(*report.representation);
    if (!cfg.certificate_path.empty() && certificate)
        write_output(cfg.certificate_path, *certificate);

    if (cfg.as_json) {
        json j{{"schema", 1},
               {"subcommand", "recognize"},
               {"h", report.h},
               {"t", report.t},
               {"verdict", orthkit::to_string(report.verdict)},
               {"exit", exit_code_of(report.verdict)},
               {"pipeline_log", report.pipeline_log}};
        if (!report.note.empty()) j["note"] = report.note;
        if (report.obstruction) j["obstruction"] = obstruction_json(*report.obstruction);
        if (certificate) {
            j["certificate"] = *certificate;
            if (!cfg.certificate_path.empty()) j["certificate_path"] = cfg.certificate_path;
        }
        std::cout << j.dump(2) << "\n";
        return exit_code_of(report.verdict);
    }

    std::ostringstream out;
    out << "class: ORTH[" << report.h << ",2," << report.t << "]\n"
        << "verdict: " << orthkit::to_string(report.verdict) << "\n";
    if (!report.pipeline_log.empty()) {
        out << "log:\n";
        for (const auto& line : report.pipeline_log) out << "  " << line << "\n";
    }
    if (!report.note.empty()) out << "note: " << report.note << "\n";
    if (report.obstruction) render_obstruction(out, *report.obstruction);
    if (certificate) {
        if (!cfg.certificate_path.empty())
            out << "certificate: written to " << cfg.certificate_path << "\n";
        else
            out << "certificate:\n" << *certificate;
    }
    std::cout << out.str();
    return exit_code_of(report.verdict);
}

// ----------------------------------------------------------------- validate

struct ValidateConfig {
    std::string certificate;
    std::string graph;
    std::string kind = "auto";
    int h = 3;
    int t = 2;
    bool as_json = false;
};

int cmd_validate(const ValidateConfig& cfg) {
    auto cert_text = read_text(cfg.certificate);
    auto g = orthkit::parse_graph(read_text(cfg.graph));
    std::string kind = cfg.kind == "auto" ? detect_kind(cert_text) : cfg.kind;
    std::optional<orthkit::Violation> violation;
    if (kind == "layout") {
        auto layout = orthkit::parse_layout(cert_text);
        violation = orthkit::validate_layout(layout, g, cfg.h, cfg.t);
    } else if (kind == "representation") {
        auto rep = orthkit::parse_representation(cert_text, cfg.h, cfg.t);
        violation = orthkit::validate_representation(rep, g, cfg.h, cfg.t);
    } else {
        throw std::runtime_error("'" + cfg.certificate +
                                 "' has neither a 'leaves:' nor a 'paths:' section");
    }

    if (cfg.as_json) {
        json j{{"schema", 1}, {"subcommand", "validate"}, {"certificate_kind", kind},
               {"h", cfg.h},  {"t", cfg.t},               {"ok", !violation.has_value()}};
        if (violation)
            j["violation"] = json{{"kind", orthkit::to_string(violation->kind)},
                                  {"detail", violation->detail},
                                  {"witness", violation->witness}};
        std::cout << j.dump(2) << "\n";
        return violation ? kExitNonMember : kExitMember;
    }

    if (!violation) {
        std::cout << "ok: valid " << kind << " at h = " << cfg.h << ", t = " << cfg.t << "\n";
        return kExitMember;
    }
    std::cout << "violation: " << orthkit::to_string(violation->kind) << "\n"
              << "  detail: " << violation->detail << "\n";
    if (!violation->witness.empty())
        std::cout << "  witness: " << join(violation->witness, " ") << "\n";
    return kExitNonMember;
}

// ---------------------------------------------------------------- represent

struct RepresentConfig {
    std::string layout;
    std::string graph;
    int h = 3;
    int t = 2;
    std::string output;
};

int cmd_represent(const RepresentConfig& cfg) {
    auto layout = orthkit::parse_layout(read_text(cfg.layout));
    auto h_graph = orthkit::parse_graph(read_text(cfg.graph));
    if (auto violation = orthkit::validate_layout(layout, h_graph, cfg.h, cfg.t)) {
        std::cout << "violation: " << orthkit::to_string(violation->kind) << "\n"
                  << "  detail: " << violation->detail << "\n";
        if (!violation->witness.empty())
            std::cout << "  witness: " << join(violation->witness, " ") << "\n";
        return kExitNonMember;
    }
    auto rep = orthkit::orthodox_representation(layout, h_graph, cfg.t, cfg.h);
    write_output(cfg.output, orthkit::write_representation(rep));
    return kExitMember;
}

// --------------------------------------------------------------------- root

int cmd_root(const std::string& input, bool as_json) {
    auto g = orthkit::parse_graph(read_text(input));
    auto result = orthkit::root_graph(g);

    if (as_json) {
        json j{{"schema", 1},
               {"subcommand", "root"},
               {"is_line_graph", result.is_line_graph()}};
        if (result.root) {
            j["root"] = multigraph_json(result.root->root);
            json phi = json::object();
            for (const auto& [vertex, edge] : result.root->phi)
                phi[vertex] = orthkit::Multigraph::edge_label(edge);
            j["phi"] = phi;
        }
        if (result.witness) {
            json w{{"detail", result.witness->detail}};
            if (result.witness->local_vertex) w["local_vertex"] = *result.witness->local_vertex;
            j["witness"] = w;
        }
        std::cout << j.dump(2) << "\n";
        return result.is_line_graph() ? kExitMember : kExitNonMember;
    }

    if (!result.is_line_graph()) {
        std::cout << "not a line graph\n";
        if (result.witness) {
            if (result.witness->local_vertex)
                std::cout << "  local vertex: " << *result.witness->local_vertex << "\n";
            std::cout << "  detail: " << result.witness->detail << "\n";
        }
        return kExitNonMember;
    }
    std::cout << "root:\n";
    std::istringstream lines(multigraph_edge_list(result.root->root));
    std::string line;
    while (std::getline(lines, line)) std::cout << "  " << line << "\n";
    std::cout << "phi (vertex -> root edge):\n";
    for (const auto& [vertex, edge] : result.root->phi)
        std::cout << "  " << vertex << " -> " << orthkit::Multigraph::edge_label(edge) << "\n";
    return kExitMember;
}

// ------------------------------------------------------------------- bounds

int cmd_bounds(int h, int t, bool as_json) {
    long long leaves = orthkit::max_leaves(h, t);
    auto interval = orthkit::separating_interval(h, t);
    auto tree = orthkit::extremal_tree(h, t);
    auto dot = orthkit::to_dot(tree);

    if (as_json) {
        json j{{"schema", 1},
               {"subcommand", "bounds"},
               {"h", h},
               {"t", t},
               {"max_leaves", leaves},
               {"separating_interval", json{{"lo", interval.lo}, {"hi", interval.hi}}},
               {"extremal_tree_dot", dot}};
        std::cout << j.dump(2) << "\n";
        return kExitMember;
    }

    std::cout << "max_leaves(" << h << "," << t << ") = " << leaves << "\n"
              << "separating interval (h = " << h << " vs " << h + 1 << ", t = " << t
              << "): clique orders [" << interval.lo << ", " << interval.hi << "]\n"
              << "extremal tree:\n"
              << dot;
    return kExitMember;
}

// ----------------------------------------------------------------- obstruct

struct ObstructConfig {
    std::string input;
    std::string pattern;
    bool include_k25 = false;
    bool as_json = false;
};

int cmd_obstruct(const ObstructConfig& cfg) {
    auto g = orthkit::parse_graph(read_text(cfg.input));

    if (!cfg.pattern.empty()) {
        // Raw subdivision query on the input graph itself (no membership
        // semantics): exit 0 when found, 1 after a complete unsuccessful
        // search.
        auto pat = orthkit::pattern(cfg.pattern);
        auto witness = orthkit::contains_subdivision(g, pat);
        if (cfg.as_json) {
            json j{{"schema", 1},
                   {"subcommand", "obstruct"},
                   {"pattern", cfg.pattern},
                   {"found", witness.has_value()}};
            if (witness) {
                j["witness"] = witness_json(*witness);
                j["dot"] = overlay_dot(g, *witness);
            }
            std::cout << j.dump(2) << "\n";
            return witness ? kExitMember : kExitNonMember;
        }
        if (!witness) {
            std::cout << "no " << cfg.pattern << " subdivision\n";
            return kExitNonMember;
        }
        std::cout << "found a " << cfg.pattern << " subdivision\n" << overlay_dot(g, *witness);
        return kExitMember;
    }

    auto check = orthkit::check_orth323_necessary(g, cfg.include_k25);
    bool non_member = check.verdict == orthkit::Orth323Check::Verdict::NonMember;
    std::optional<std::string> dot;
    if (check.witness && check.root) dot = overlay_dot(check.root->simple(), *check.witness);

    if (cfg.as_json) {
        json j{{"schema", 1},
               {"subcommand", "obstruct"},
               {"class", "ORTH[3,2,3]"},
               {"verdict", non_member ? "NonMember" : "Inconclusive"},
               {"note", check.note}};
        if (check.line_witness) {
            json w{{"detail", check.line_witness->detail}};
            if (check.line_witness->local_vertex)
                w["local_vertex"] = *check.line_witness->local_vertex;
            j["line_witness"] = w;
        }
        if (check.obstruction_pattern) j["pattern"] = *check.obstruction_pattern;
        if (check.witness) j["witness"] = witness_json(*check.witness);
        if (check.root) j["root"] = multigraph_json(*check.root);
        if (dot) j["dot"] = *dot;
        std::cout << j.dump(2) << "\n";
        return non_member ? kExitNonMember : kExitInconclusive;
    }

    std::cout << "class: ORTH[3,2,3]\n"
              << "verdict: " << (non_member ? "NonMember" : "Inconclusive") << "\n"
              << "note: " << check.note << "\n";
    if (check.line_witness) {
        if (check.line_witness->local_vertex)
            std::cout << "local vertex: " << *check.line_witness->local_vertex << "\n";
        std::cout << "line-graph refutation: " << check.line_witness->detail << "\n";
    }
    if (check.obstruction_pattern) std::cout << "pattern: " << *check.obstruction_pattern << "\n";
    if (dot) std::cout << *dot;
    return non_member ? kExitNonMember : kExitInconclusive;
}

// ----------------------------------------------------------------- generate

struct GenerateConfig {
    std::string family;
    int n = 0;
    int h = 3;
    int t = 3;
    std::string output;
};

int cmd_generate(const GenerateConfig& cfg) {
    std::ostringstream out;
    if (cfg.family == "line-of-complete") {
        if (cfg.n < 1) throw std::runtime_error("line-of-complete needs a positive order");
        auto g = orthkit::line_graph(orthkit::complete_graph(cfg.n));
        out << "# line graph of the complete graph on " << cfg.n << " vertices (" << g.n()
            << " vertices, " << g.m() << " edges)\n"
            << orthkit::to_edge_list(g);
    } else if (cfg.family == "extremal-tree") {
        out << orthkit::to_dot(orthkit::extremal_tree(cfg.h, cfg.t));
    } else if (cfg.family == "separating-example") {
        auto interval = orthkit::separating_interval(cfg.h, cfg.t);
        auto g = orthkit::line_graph(orthkit::complete_graph(static_cast<int>(interval.lo)));
        out << "# line graph of the complete graph on " << interval.lo << " vertices\n"
            << "# in ORTH[" << cfg.h + 1 << ",2," << cfg.t << "] but not in ORTH[" << cfg.h
            << ",2," << cfg.t << "]\n"
            << orthkit::to_edge_list(g);
    } else {
        throw std::runtime_error("unknown family '" + cfg.family +
                                 "' (expected line-of-complete, extremal-tree, or "
                                 "separating-example)");
    }
    write_output(cfg.output, out.str());
    return kExitMember;
}

// --------------------------------------------------------------- export-dot

struct ExportConfig {
    std::string input;
    std::string kind = "auto";
    int h = 3;
    int t = 1;
    std::string output;
};

int cmd_export_dot(const ExportConfig& cfg) {
    auto text = read_text(cfg.input);
    std::string kind = cfg.kind == "auto" ? detect_kind(text) : cfg.kind;
    std::string dot;
    if (kind == "graph") {
        dot = orthkit::to_dot(orthkit::parse_graph(text));
    } else if (kind == "layout") {
        dot = orthkit::to_dot(orthkit::parse_layout(text));
    } else if (kind == "representation") {
        dot = orthkit::to_dot(orthkit::parse_representation(text, cfg.h, cfg.t));
    } else {
        throw std::runtime_error("unknown kind '" + kind + "'");
    }
    write_output(cfg.output, dot);
    return kExitMember;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "orthkit: orthodox path-in-tree representations with bounded host degree.\n"
        "Decides G ∈ ORTH[h,2,t], produces validated certificates for members and\n"
        "obstruction witnesses for non-members.  Graph files are edge lists (one\n"
        "'u v' per line, '#' comments, single labels for isolated vertices);\n"
        "'-' means stdin.  Set ORTHKIT_MAX_N to raise the exhaustive-search caps."};
    app.require_subcommand(1);
    // The host bound flag is literally --h, so the help flag keeps only its
    // long form (on every subcommand too).
    app.set_help_flag("--help", "print this help message and exit");
    auto range_h = CLI::Range(2, 1 << 20);
    auto range_t = CLI::Range(1, 1 << 20);
    auto add_subcommand = [&](const std::string& name, const std::string& description) {
        auto* sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print this help message and exit");
        return sub;
    };

    RecognizeConfig rec;
    auto* c_rec = add_subcommand(
        "recognize", "Decide membership (exit 0 Member / 1 NonMember / 2 Inconclusive)");
    c_rec->add_option("input", rec.input, "graph file")->required();
    c_rec->add_option("--h", rec.h, "host degree bound (>= 2)")->required()->check(range_h);
    c_rec->add_option("--t", rec.t, "intersection threshold (>= 1)")->required()->check(range_t);
    c_rec->add_flag("--include-k25", rec.include_k25,
                    "also screen for K25 subdivisions at (3,3) (advisory)");
    c_rec->add_flag("--json", rec.as_json, "JSON report");
    c_rec->add_option("--emit-certificate", rec.certificate_path,
                      "write the Member representation to this file");

    ValidateConfig val;
    auto* c_val = add_subcommand(
        "validate", "Check a layout or representation file (exit 0 Ok / 1 violation)");
    c_val->add_option("certificate", val.certificate, "layout or representation file")->required();
    c_val->add_option("--graph", val.graph,
                      "the graph the certificate is for (represented graph for a\n"
                      "representation; the tree-layout's graph for a layout)")
        ->required();
    c_val->add_option("--h", val.h, "host degree bound (>= 2)")->required()->check(range_h);
    c_val->add_option("--t", val.t, "intersection threshold (>= 1)")->required()->check(range_t);
    c_val->add_option("--kind", val.kind, "layout|representation|auto (default auto)")
        ->check(CLI::IsMember({"layout", "representation", "auto"}));
    c_val->add_flag("--json", val.as_json, "JSON report");

    RepresentConfig rep;
    auto* c_rep = add_subcommand(
        "represent", "Turn an (h,t)-tree layout of H into an orthodox representation of L(H)");
    c_rep->add_option("layout", rep.layout, "layout file")->required();
    c_rep->add_option("--graph", rep.graph, "the graph H the layout is for")->required();
    c_rep->add_option("--h", rep.h, "host degree bound (>= 2)")->required()->check(range_h);
    c_rep->add_option("--t", rep.t, "intersection threshold (>= 1)")->required()->check(range_t);
    c_rep->add_option("--output,-o", rep.output, "output file (default stdout)");

    std::string root_input;
    bool root_json = false;
    auto* c_root = add_subcommand(
        "root", "Reconstruct the root H with L(H) = G (exit 1 if G is not a line graph)");
    c_root->add_option("input", root_input, "graph file (connected)")->required();
    c_root->add_flag("--json", root_json, "JSON report");

    int bounds_h = 3, bounds_t = 3;
    bool bounds_json = false;
    auto* c_bounds = add_subcommand(
        "bounds", "Extremal leaf counts, the extremal tree, and the separating interval");
    c_bounds->add_option("--h", bounds_h, "host degree bound (>= 3)")->required()->check(range_h);
    c_bounds->add_option("--t", bounds_t, "leaf-distance bound (>= 3)")->required()->check(range_t);
    c_bounds->add_flag("--json", bounds_json, "JSON report");

    ObstructConfig obs;
    auto* c_obs = add_subcommand(
        "obstruct",
        "Screen against the ORTH[3,2,3] exclusions (exit 1 NonMember / 2 Inconclusive);\n"
        "with --pattern, search the input itself for a subdivision (exit 0 found / 1 not)");
    c_obs->add_option("input", obs.input, "graph file")->required();
    c_obs->add_option("--pattern", obs.pattern, "K5_minus_2K2 | K33 | K25");
    c_obs->add_flag("--include-k25", obs.include_k25, "include the advisory K25 screen");
    c_obs->add_flag("--json", obs.as_json, "JSON report");

    GenerateConfig gen;
    auto* c_gen = add_subcommand("generate", "Deterministic example families");
    c_gen->add_option("family", gen.family, "line-of-complete | extremal-tree | separating-example")
        ->required();
    c_gen->add_option("n", gen.n, "order parameter (line-of-complete)");
    c_gen->add_option("--h", gen.h, "host degree bound (default 3)")->check(range_h);
    c_gen->add_option("--t", gen.t, "threshold (default 3)")->check(range_t);
    c_gen->add_option("--output,-o", gen.output, "output file (default stdout)");

    ExportConfig exp;
    auto* c_exp = add_subcommand("export-dot", "DOT export of a graph/layout/representation");
    c_exp->add_option("input", exp.input, "graph, layout, or representation file")->required();
    c_exp->add_option("--kind", exp.kind, "graph|layout|representation|auto (default auto)")
        ->check(CLI::IsMember({"graph", "layout", "representation", "auto"}));
    c_exp->add_option("--h", exp.h, "declared degree bound for representations (default 3)")
        ->check(range_h);
    c_exp->add_option("--t", exp.t, "declared threshold for representations (default 1)")
        ->check(range_t);
    c_exp->add_option("--output,-o", exp.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 maps --help to 0 and parse failures to its own codes; fold the
        // latter into the documented error band.
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (app.got_subcommand(c_rec)) return cmd_recognize(rec);
        if (app.got_subcommand(c_val)) return cmd_validate(val);
        if (app.got_subcommand(c_rep)) return cmd_represent(rep);
        if (app.got_subcommand(c_root)) return cmd_root(root_input, root_json);
        if (app.got_subcommand(c_bounds)) return cmd_bounds(bounds_h, bounds_t, bounds_json);
        if (app.got_subcommand(c_obs)) return cmd_obstruct(obs);
        if (app.got_subcommand(c_gen)) return cmd_generate(gen);
        if (app.got_subcommand(c_exp)) return cmd_export_dot(exp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
