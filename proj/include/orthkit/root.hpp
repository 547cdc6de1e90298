#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthkit/graph.hpp"

namespace orthkit {

// Evidence that a connected graph is not the line graph of any loop-free
// multigraph.  When `local_vertex` is set, the edges incident with that vertex
// admit no cover by two cliques (equivalently, the complement of the induced
// neighborhood is not bipartite) — a self-contained refutation.  Otherwise the
// clique-cell search itself was exhausted; `detail` records the probe.
struct NotLineGraphWitness {
    std::optional<std::string> local_vertex;
    std::string detail;
};

// Successful root reconstruction: a loop-free multigraph H with L(H)
// isomorphic to the input, together with the explicit bijection from input
// vertices to edges of H.
struct RootData {
    Multigraph root;
    std::map<std::string, MultiEdge> phi;  // input vertex -> edge of root
};

struct RootResult {
    std::optional<RootData> root;            // set iff the input is a line graph
    std::optional<NotLineGraphWitness> witness;
    bool is_line_graph() const { return root.has_value(); }
};

// Reconstructs a root graph of a connected G, i.e. a loop-free multigraph H
// with L(H) ≅ G, via the clique-cell partition of E(G): in a line graph the
// edge set partitions into cliques (one per root vertex) such that every
// vertex lies in at most two of them.  Twins are collapsed first and
// re-expanded as parallel edges, so inputs with twins yield multigraph roots.
// For connected twin-free inputs of order >= 4 the root is the unique simple
// one.  Small canonical cases: K3 -> K1,3; orders 1 and 2 -> paths with one
// resp. two edges.  Disconnected input or order > max_n is an error.
RootResult root_graph(const SimpleGraph& g, int max_n = default_caps().root);

}  // namespace orthkit
