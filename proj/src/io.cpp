#include "orthkit/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace orthkit {

namespace {

// DOT string literal: double quotes and backslashes escaped.
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void emit_dot_body(std::ostringstream& out, const SimpleGraph& g,
                   const std::map<std::string, std::string>& node_notes) {
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << quoted(g.label(v));
        auto note = node_notes.find(g.label(v));
        if (note != node_notes.end())
            out << " [label=" << quoted(g.label(v) + " = " + note->second) << "]";
        out << ";\n";
    }
    for (const auto& [a, b] : g.edges())
        out << "  " << quoted(g.label(a)) << " -- " << quoted(g.label(b)) << ";\n";
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

// Shared scaffolding for the two certificate formats: edge-list lines up to
// the section marker, then fixed-width rows.  `row_width` is the token count
// required after the marker; `on_row` consumes one row.
template <typename RowFn>
SimpleGraph parse_sectioned(const std::string& text, const std::string& marker, int row_width,
                            RowFn on_row) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool in_section = false;
    bool saw_host_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!in_section && tokens.size() == 1 && tokens[0] == marker) {
            in_section = true;
            continue;
        }
        if (in_section) {
            if (static_cast<int>(tokens.size()) != row_width)
                throw ParseError("expected " + std::to_string(row_width) +
                                     " labels after '" + marker + "', got " +
                                     std::to_string(tokens.size()),
                                 line_no);
            on_row(tokens, line_no);
            continue;
        }
        saw_host_line = true;
        if (tokens.size() == 1) {
            vertices.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw ParseError("loop edge '" + tokens[0] + " " + tokens[1] + "'", line_no);
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw ParseError("expected one or two labels, got " + std::to_string(tokens.size()),
                             line_no);
        }
    }
    if (!in_section) throw ParseError("missing '" + marker + "' section", line_no);
    if (!saw_host_line) throw ParseError("no host tree before '" + marker + "'", 0);
    return SimpleGraph::from_edges(std::move(vertices), std::move(edges));
}

}  // namespace

std::string to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph {\n";
    emit_dot_body(out, g, {});
    out << "}\n";
    return out.str();
}

std::string to_dot(const LayoutTree& layout) {
    std::ostringstream out;
    out << "graph {\n";
    emit_dot_body(out, layout.tree, layout.leaf_map);
    out << "}\n";
    return out.str();
}

std::string to_dot(const OrthodoxRepresentation& rep) {
    std::ostringstream out;
    out << "graph {\n";
    emit_dot_body(out, rep.host, {});
    out << "}\n";
    out << "// paths (vertex: leaf endpoints), t = " << rep.t << ", h = " << rep.h << "\n";
    for (const auto& [vertex, ends] : rep.paths) {
        auto [a, b] = std::minmax(ends.first, ends.second);
        out << "// " << vertex << ": " << a << " " << b << "\n";
    }
    return out.str();
}

std::string write_layout(const LayoutTree& layout) {
    std::ostringstream out;
    out << "# host tree\n" << to_edge_list(layout.tree) << "leaves:\n";
    for (const auto& [leaf, vertex] : layout.leaf_map) out << leaf << " " << vertex << "\n";
    return out.str();
}

LayoutTree parse_layout(const std::string& text) {
    std::map<std::string, std::string> leaf_map;
    std::vector<std::pair<std::string, int>> rows;  // checked after the host exists
    SimpleGraph tree =
        parse_sectioned(text, "leaves:", 2, [&](const std::vector<std::string>& tokens, int line_no) {
            if (!leaf_map.emplace(tokens[0], tokens[1]).second)
                throw ParseError("node '" + tokens[0] + "' mapped twice", line_no);
            rows.emplace_back(tokens[0], line_no);
        });
    for (const auto& [leaf, line_no] : rows)
        if (!tree.has_vertex(leaf))
            throw ParseError("mapped node '" + leaf + "' is not in the host tree", line_no);
    return LayoutTree{std::move(tree), std::move(leaf_map)};
}

std::string write_representation(const OrthodoxRepresentation& rep) {
    std::ostringstream out;
    out << "# orthodox representation, t = " << rep.t << ", h = " << rep.h << "\n"
        << to_edge_list(rep.host) << "paths:\n";
    for (const auto& [vertex, ends] : rep.paths) {
        auto [a, b] = std::minmax(ends.first, ends.second);
        out << vertex << " " << a << " " << b << "\n";
    }
    return out.str();
}

OrthodoxRepresentation parse_representation(const std::string& text, int h, int t) {
    if (h < 2) throw InvalidArgument("parse_representation: h must be at least 2");
    if (t < 1) throw InvalidArgument("parse_representation: t must be at least 1");
    std::map<std::string, std::pair<std::string, std::string>> paths;
    std::vector<std::pair<std::string, int>> rows;
    SimpleGraph host =
        parse_sectioned(text, "paths:", 3, [&](const std::vector<std::string>& tokens, int line_no) {
            if (!paths.emplace(tokens[0], std::make_pair(tokens[1], tokens[2])).second)
                throw ParseError("vertex '" + tokens[0] + "' has two paths", line_no);
            rows.emplace_back(tokens[0], line_no);
        });
    for (const auto& [vertex, line_no] : rows) {
        const auto& ends = paths.at(vertex);
        for (const auto& leaf : {ends.first, ends.second})
            if (!host.has_vertex(leaf))
                throw ParseError("path endpoint '" + leaf + "' is not in the host tree", line_no);
    }
    return OrthodoxRepresentation{std::move(host), std::move(paths), t, h};
}

}  // namespace orthkit
