#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthkit/graph.hpp"

namespace orthkit {

// A tree whose leaves stand for the vertices of a graph H.  T is an
// (h,t)-tree layout of H when every node of T has degree <= h and for every
// two independent edges xy, x'y' of H the tree paths between the mapped
// leaves share at most t-1 nodes.
struct LayoutTree {
    SimpleGraph tree;
    std::map<std::string, std::string> leaf_map;  // leaf node -> vertex of H
};

// A host tree plus one leaf-to-leaf path per graph vertex.  Paths are stored
// as endpoint pairs only and materialized from the host on demand; equal
// endpoint pairs (length-0 paths) occur only as input to
// normalize_representation and in the degenerate host-degree-2 regime.
struct OrthodoxRepresentation {
    SimpleGraph host;
    std::map<std::string, std::pair<std::string, std::string>> paths;  // G vertex -> leaf pair
    int t = 1;  // intersection threshold >= 1
    int h = 3;  // declared host degree bound >= 2 (>= 3 outside the path-host regime)
};

enum class ViolationKind {
    DegreeBound,
    LeafCondition,
    IntersectionTooLarge,
    IntersectionTooSmall,
    LeafShareMismatch,
    NotATree,
    BijectionBroken,
};

std::string to_string(ViolationKind kind);

// First violation found by a validator; `witness` carries the labels needed
// to re-check it independently (offending nodes, vertex pairs, counts are in
// `detail`).
struct Violation {
    ViolationKind kind;
    std::string detail;
    std::vector<std::string> witness;
};

// Number of shared nodes of the two tree paths a..b and c..d (explicit path
// materialization; the test suite cross-checks it against the four-endpoint
// distance formula).
int shared_path_nodes(const SimpleGraph& tree, int a, int b, int c, int d);

// Checks that `layout` is an (h,t)-tree layout of H: tree-ness, the leaf map
// being a bijection leaves(T) -> V(H), all degrees <= h, and the independent
// edge condition.  Returns the first violation in a fixed deterministic
// order, or nullopt when valid.  Requires h >= 3, t >= 1.
std::optional<Violation> validate_layout(const LayoutTree& layout, const SimpleGraph& h_graph,
                                         int h, int t);

// Contracts away internal degree-2 nodes (repeatedly).  Leaves and their map
// are untouched; layout validity for any (h,t) is preserved.
LayoutTree suppress_degree_two(const LayoutTree& layout);

// Builds the orthodox representation of L(H) induced by a layout: each
// leaf-incident host edge is subdivided max(0, t-2) times and the edge xy of
// H becomes the host path between the leaves for x and y.  Path keys are the
// edge labels of H ("x,y"), matching line_graph(H).
OrthodoxRepresentation orthodox_representation(const LayoutTree& layout,
                                               const SimpleGraph& h_graph, int t, int h);

// Checks a representation against G at the given (h,t), which may differ from
// the representation's declared values: host tree-ness and degree bound <= h,
// path keys = V(G) exactly, every path endpoint a host leaf, positive path
// length, and for every vertex pair the three-way equivalence
//   adjacency  <=>  >= t shared host nodes  <=>  a shared host leaf.
std::optional<Violation> validate_representation(const OrthodoxRepresentation& rep,
                                                 const SimpleGraph& g, int h, int t);

// Extracts (layout, H) from a representation with positive-length paths: the
// host becomes the layout tree (leaf map = identity), H has the host leaves
// as vertices and one edge per path.  Repeated endpoint pairs are an error
// (two vertices with identical paths are twins; the pipeline is twin-free).
std::pair<LayoutTree, SimpleGraph> layout_of_representation(const OrthodoxRepresentation& rep);

// Resolves length-0 paths: a leaf x carrying one gets two fresh neighbors
// x', x''; the length-0 paths at x become x'..x'' and every other path ending
// at x is extended to end at x' instead.  Needs h >= 3.  Validity and the
// represented graph are unchanged for valid inputs.
OrthodoxRepresentation normalize_representation(const OrthodoxRepresentation& rep);

// Disjoint union of two represented graphs: subdivides one leaf-incident host
// edge of each side, joins the two subdivision nodes by an edge.  Vertex sets
// must be disjoint unless `prefix_on_collision`, in which case colliding
// labels get "1:"/"2:" prefixes.  Host node labels are always regenerated.
// Requires equal (h,t) with h >= 3.
OrthodoxRepresentation join_representations(const OrthodoxRepresentation& a,
                                            const OrthodoxRepresentation& b,
                                            bool prefix_on_collision = true);

// Glues layouts along a separating pair: T_a lays out
// H[A ∪ {b}], T_b lays out H[B ∪ {a}], every A-B edge of H is incident with
// a, and ab is an edge of H.  The leaf for b in T_a and the leaf for a in T_b
// become internal and are joined by an edge; the result lays out H at the
// same (h,t).  Violated preconditions raise InvalidArgument (naming an
// offending cross edge where applicable).
LayoutTree combine_layouts(const LayoutTree& t_a, const LayoutTree& t_b,
                           const SimpleGraph& h_graph, const std::string& a,
                           const std::string& b);

// Disjoint union of layouts (both sides keep their leaf maps): used when a
// graph splits into components.  Subdivides a leaf edge on each side and
// joins the subdivision nodes, so degrees stay within any h >= 3.
LayoutTree join_disjoint_layouts(const LayoutTree& t_a, const LayoutTree& t_b);

}  // namespace orthkit
