#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthkit/layout.hpp"
#include "orthkit/obstructions.hpp"
#include "orthkit/root.hpp"

namespace orthkit {

enum class Verdict { Member, NonMember, Inconclusive };
std::string to_string(Verdict v);

// A balanced bounded separation of H': A, B partition V(H'), every edge
// between A\X and B\X is forbidden, sizes are within [n/h, (h-1)n/h]
// (checked with exact integer arithmetic), and |X| <= max{1, (h-1)^(t-2)}.
struct SeparatorSplit {
    std::vector<std::string> x;
    std::vector<std::string> a;
    std::vector<std::string> b;
};

// Searches for a balanced bounded separation.  Whenever H' is a subgraph of
// some graph with an (h,t)-tree layout, a split exists; a nullopt result
// ("no split") therefore certifies that H' has no (h,t)-tree layout and is
// not a subgraph of anything that has one.  The search is complete: the
// large-separator shortcut when h*p >= (h-1)*n, else every X of size
// exactly p = max{1, (h-1)^(t-2)} with the component analysis of H'-X.
// Requires n(H') >= 2, h >= 3, t >= 1.
std::optional<SeparatorSplit> separator_split(const SimpleGraph& h_prime, int h, int t);

// Exhaustive (h,t)-layout search over all trees with leaf set V(H) and
// internal degrees in [3,h] (degree-2 internals are suppressible, so this
// family is complete).  Trees are generated by ordered leaf insertion, which
// produces every such tree exactly once; partial trees violating the shared-
// path bound are pruned (restriction can only shrink shared counts, so the
// pruning is sound).  Returns a validated layout or nullopt after exhausting
// the family.  Requires n(H) <= max_n (default cap 9), h >= 3, t >= 1.
std::optional<LayoutTree> bruteforce_layout(const SimpleGraph& h_graph, int h, int t,
                                            int max_n = default_caps().bruteforce);

// Builds a (3,1)-tree layout of a connected graph whose blocks all have order
// at most 3, by block attachment: a base edge or 3-leaf star, then for each
// further block at an existing vertex u, subdivide u's tree edge with a new
// node x and hang the block's new leaves off x (via one more internal node y
// for a triangle block).  All internal degrees are exactly 3 and the tree has
// 2 n(H) - 2 nodes.  An oversized block raises InvalidArgument naming it.
LayoutTree build_layout_blocks(const SimpleGraph& h_graph);

// A machine-checkable reason for a NonMember verdict.
struct Obstruction {
    // One of: "not-line-graph", "oversized-block", "forbidden-subdivision",
    // "no-balanced-split", "layout-search-exhausted", "degree-2-shape".
    std::string kind;
    std::string detail;
    std::vector<std::string> vertices;  // offending vertices (G or root, per kind)
    std::optional<NotLineGraphWitness> line_witness;
    std::optional<std::string> pattern_name;
    std::optional<SubdivisionWitness> subdivision;
    std::optional<Multigraph> root;      // root context for root-level witnesses
    std::optional<SimpleGraph> subgraph;  // root subgraph for split/search kinds
};

struct RecognitionReport {
    Verdict verdict = Verdict::Inconclusive;
    int h = 3;
    int t = 2;
    // Member certificate: an orthodox representation of G.  Always present
    // for h >= 3 Members and validated before the report is returned.  For
    // h = 2 Members it may contain length-0 paths (a degree-2 host cannot be
    // normalized); the pipeline log says so when it happens.
    std::optional<OrthodoxRepresentation> representation;
    std::optional<LayoutTree> layout;  // root layout (connected input only)
    std::optional<Multigraph> root;    // root of G (connected input only)
    std::optional<Obstruction> obstruction;  // present on NonMember
    std::vector<std::string> pipeline_log;
    std::string note;  // explanation, mainly for Inconclusive
};

// Decides membership in ORTH[3,2,2] (equivalently ORTH[h,2,1] for any h >= 3):
// per component, reduce twins, reconstruct the root, and test whether all
// root blocks have order at most 3; members get a validated representation
// assembled from block layouts, twin re-expansion, and component joins.
RecognitionReport recognize_orth322(const SimpleGraph& g, const Caps& caps = default_caps());

// Decides membership in ORTH[h,2,t] for t in {1,2} via the separator
// recursion: split the root with separator_split, recurse on the two sides,
// glue certificates with combine_layouts; pieces of order <= 2h go to
// bruteforce_layout.  With default caps this needs 2h <= 9, i.e. h <= 4;
// larger h may report Inconclusive unless the caps are raised.
RecognitionReport recognize_orth_h2t(const SimpleGraph& g, int h, int t,
                                     const Caps& caps = default_caps());

// Dispatcher over all supported regimes:
//   h = 2           explicit host-path analysis (any t >= 1)
//   t = 1, h >= 3   ORTH[h,2,1] = ORTH[3,2,2], so the block characterization
//   t = 2, h = 3    block characterization
//   t = 2, h >= 4   separator recursion (the h=3 characterization is not
//                   reused; whether it extends is open)
//   t = 3, h = 3    obstruction screen (K5_minus_2K2 / K33 subdivisions in
//                   the root; K25 with include_k25), then exact bounded
//                   search on small roots; Inconclusive beyond the caps
//   t >= 3 otherwise  exact bounded search on small roots; Inconclusive
//                   beyond the caps (the subdivision screen refutes t = 3
//                   only, and the classes grow with t)
// h <= 1 raises InvalidArgument.
RecognitionReport recognize(const SimpleGraph& g, int h, int t, bool include_k25 = false,
                            const Caps& caps = default_caps());

}  // namespace orthkit
