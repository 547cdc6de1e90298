#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orthkit/caps.hpp"

namespace orthkit {

// Undirected simple graph over opaque string labels.  No loops, no parallel
// edges.  Vertices are stored sorted by label and addressed internally by
// dense indices; indices never leak into reports, labels do.  Instances are
// immutable after construction, so they are safe to share across threads.
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Builds a graph from declared vertices plus edges.  Edge endpoints are
    // declared implicitly.  Duplicate edges collapse; a loop throws.
    static SimpleGraph from_edges(std::vector<std::string> vertices,
                                  std::vector<std::pair<std::string, std::string>> edges);

    int n() const { return static_cast<int>(labels_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }
    // Index of a label; throws InvalidArgument for unknown labels.
    int index_of(const std::string& label) const;

    bool has_edge(int u, int v) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;

    // Edges as index pairs (u < v), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<std::pair<std::string, std::string>> edge_labels() const;

    bool is_connected() const;  // true for the empty graph
    // Connected components as sorted index lists, sorted by first vertex.
    std::vector<std::vector<int>> components() const;
    // Induced subgraph on the given labels (must all exist).
    SimpleGraph induced(const std::vector<std::string>& vertices) const;

    // --- tree helpers (used by layouts; callers check is_tree first) ---
    bool is_tree() const;  // connected and acyclic, at least one vertex
    std::vector<int> leaves() const;  // vertices of degree <= 1, sorted
    // Unique path between two vertices of a tree, as vertex indices a..b.
    std::vector<int> tree_path(int a, int b) const;
    int tree_distance(int a, int b) const;

    bool operator==(const SimpleGraph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> labels_;                // sorted
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;              // sorted neighbor lists
    std::vector<std::pair<int, int>> edges_;         // sorted, u < v
};

// One edge of a multigraph.  `u <= v` lexicographically; `copy` numbers the
// parallel copies of the same endpoint pair 0,1,2,…
struct MultiEdge {
    std::string u, v;
    int copy = 0;
    bool operator==(const MultiEdge& o) const { return u == o.u && v == o.v && copy == o.copy; }
    bool operator<(const MultiEdge& o) const {
        return std::tie(u, v, copy) < std::tie(o.u, o.v, o.copy);
    }
};

// Loop-free multigraph: parallel edges allowed, loops rejected at build time.
class Multigraph {
public:
    Multigraph() = default;

    // Endpoint pairs may repeat; each repetition becomes a parallel copy.
    static Multigraph from_edges(std::vector<std::string> vertices,
                                 std::vector<std::pair<std::string, std::string>> edges);

    int n() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<MultiEdge>& edges() const { return edges_; }
    bool has_parallel_edges() const;
    int degree(const std::string& v) const;  // parallel copies all count

    // Stable printable name for an edge: "u,v" for copy 0, "u,v#k" for copy k.
    static std::string edge_label(const MultiEdge& e);

    // The underlying simple graph (parallel classes collapsed).
    SimpleGraph simple() const;

private:
    std::vector<std::string> labels_;
    std::vector<MultiEdge> edges_;  // sorted
};

// Parses the edge-list format: one edge "u v" per line, `#` starts a comment
// line, a single label on a line declares an isolated vertex.  Blank lines are
// ignored.  Loops and malformed lines raise ParseError naming the line; a
// document declaring no vertices at all is an error.
SimpleGraph parse_graph(const std::string& text);

// Serialization that round-trips through parse_graph (sorted, deterministic).
std::string to_edge_list(const SimpleGraph& g);

// Maximal 2-connected subgraphs plus bridge edges; isolated vertices form
// their own order-1 blocks.
struct BlockDecomposition {
    std::vector<std::vector<std::string>> blocks;  // each sorted; list sorted
    std::vector<std::string> cut_vertices;         // sorted
    // Bipartite tree (forest for disconnected input) on nodes "block:<i>" and
    // "cut:<label>"; a block node is adjacent to the cut vertices it contains.
    SimpleGraph block_cut_tree;
};

BlockDecomposition blocks(const SimpleGraph& g);

// Partition of V(G) into classes of mutual twins (equal closed
// neighborhoods).  Classes are sorted by their smallest member.
struct TwinPartition {
    std::vector<std::vector<std::string>> classes;
    bool all_singletons() const;
};

TwinPartition twin_classes(const SimpleGraph& g);

struct TwinReduction {
    SimpleGraph graph;                                  // quotient, twin-free
    std::map<std::string, std::string> representative;  // vertex -> class rep
};

// Quotient by twin classes; each class is represented by its
// lexicographically smallest member.  Idempotent.
TwinReduction reduce_twins(const SimpleGraph& g);

// Line graph.  Vertices of the result are the edge labels of H (see
// Multigraph::edge_label); two of them are adjacent iff the edges share an
// endpoint (parallel copies share both, hence are adjacent).
SimpleGraph line_graph(const Multigraph& h);
SimpleGraph line_graph(const SimpleGraph& h);

// Exhaustive isomorphism test with degree-sequence pruning.  Both graphs must
// have order <= max_n (CapExceeded otherwise); intended for desk-scale
// verification, not bulk search.
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                   int max_n = default_caps().isomorphism);

// --- deterministic builders used by generators and tests ---
SimpleGraph complete_graph(int n);                    // vertices v1..vn
SimpleGraph path_graph(int n);                        // path v1-…-vn
SimpleGraph cycle_graph(int n);                       // cycle v1-…-vn-v1
SimpleGraph complete_bipartite(int a, int b);         // parts a1..aa / b1..bb
SimpleGraph petersen_graph();                         // outer o1..o5, inner i1..i5

}  // namespace orthkit
