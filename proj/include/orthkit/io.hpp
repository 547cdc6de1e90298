#pragma once

#include <string>

#include "orthkit/graph.hpp"
#include "orthkit/layout.hpp"

namespace orthkit {

// Undirected DOT (`graph { ... }`, default attributes).  Output is
// deterministic: vertices in label order, then edges in label order, every
// identifier quoted.
std::string to_dot(const SimpleGraph& g);

// Host tree in DOT with each leaf annotated by the graph vertex it carries
// (node attribute `label="<leaf> = <vertex>"`); internal nodes are plain.
std::string to_dot(const LayoutTree& layout);

// Host tree in DOT followed by the per-vertex path endpoint table as `//`
// comment lines (ignored by DOT tools, kept in the same artifact so one file
// carries the whole certificate).
std::string to_dot(const OrthodoxRepresentation& rep);

// Layout file: the host tree as an edge list (parse_graph syntax), then a
// line `leaves:` followed by one `leaf vertex` row per leaf.  Deterministic
// and round-trips through parse_layout.
std::string write_layout(const LayoutTree& layout);

// Inverse of write_layout.  ParseError names the offending line.  Structural
// properties (tree-ness, the map being a leaf bijection) are deliberately not
// enforced here so that a broken certificate can still be loaded and handed
// to validate_layout for a proper violation report; only internally
// inconsistent files are rejected (mapped node unknown, node mapped twice).
LayoutTree parse_layout(const std::string& text);

// Representation file: the host tree as an edge list, then a line `paths:`
// followed by one `vertex leaf1 leaf2` row per graph vertex.  The thresholds
// are recorded in a leading comment for humans; parse_representation takes
// them as arguments (the CLI passes its --h/--t flags).
std::string write_representation(const OrthodoxRepresentation& rep);

// Inverse of write_representation at the given thresholds (h >= 2, t >= 1).
// Same philosophy as parse_layout: endpoint labels must name host nodes and
// each vertex gets one row, everything else is left to
// validate_representation.
OrthodoxRepresentation parse_representation(const std::string& text, int h, int t);

}  // namespace orthkit
