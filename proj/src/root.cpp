#include "orthkit/root.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace orthkit {

namespace {

using Cell = std::vector<int>;  // sorted vertex indices forming a clique

bool is_clique(const SimpleGraph& g, const Cell& cell) {
    for (size_t i = 0; i < cell.size(); ++i)
        for (size_t j = i + 1; j < cell.size(); ++j)
            if (!g.has_edge(cell[i], cell[j])) return false;
    return true;
}

// Checks whether the edges at v can be covered by at most two cliques through
// v, i.e. N(v) splits into at most two cliques, i.e. the complement of the
// induced neighborhood is bipartite.
bool neighborhood_two_clique_coverable(const SimpleGraph& g, int v) {
    const auto& nbrs = g.neighbors(v);
    const int k = static_cast<int>(nbrs.size());
    std::vector<int> color(k, -1);
    for (int s = 0; s < k; ++s) {
        if (color[s] != -1) continue;
        std::deque<int> queue{s};
        color[s] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < k; ++y) {
                if (y == x || g.has_edge(nbrs[x], nbrs[y])) continue;  // complement edge?
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct Partition {
    std::vector<Cell> cells;
    std::vector<std::vector<int>> cells_of;  // per vertex, indices into cells
};

// Propagates the cell partition from one seed cell.  Every vertex lies in at
// most two cells and every edge inside exactly one; once a vertex has one cell
// fixed, its remaining uncovered edges force the second cell.  Returns the
// completed partition or nullopt if the seed is inconsistent.
std::optional<Partition> propagate(const SimpleGraph& g, const Cell& seed) {
    const int n = g.n();
    Partition part;
    part.cells_of.assign(n, {});
    std::set<std::pair<int, int>> covered;
    std::deque<int> pending;  // vertices currently in exactly one cell

    auto add_cell = [&](const Cell& cell) -> bool {
        if (!is_clique(g, cell)) return false;
        for (int v : cell) {
            if (part.cells_of[v].size() >= 2) return false;  // third cell: impossible
        }
        for (size_t i = 0; i < cell.size(); ++i) {
            for (size_t j = i + 1; j < cell.size(); ++j) {
                auto key = std::minmax(cell[i], cell[j]);
                if (covered.count({key.first, key.second})) return false;  // double cover
                covered.insert({key.first, key.second});
            }
        }
        int index = static_cast<int>(part.cells.size());
        part.cells.push_back(cell);
        for (int v : cell) {
            part.cells_of[v].push_back(index);
            if (part.cells_of[v].size() == 1) pending.push_back(v);
        }
        return true;
    };

    if (!add_cell(seed)) return std::nullopt;
    while (!pending.empty()) {
        int v = pending.front();
        pending.pop_front();
        if (part.cells_of[v].size() != 1) continue;  // second cell arrived meanwhile
        Cell forced{v};
        for (int w : g.neighbors(v)) {
            auto key = std::minmax(v, w);
            if (!covered.count({key.first, key.second})) forced.push_back(w);
        }
        if (forced.size() == 1) continue;  // all edges covered; pad later
        std::sort(forced.begin(), forced.end());
        if (!add_cell(forced)) return std::nullopt;
    }
    // Every edge must now be covered (holds automatically when the seed was a
    // genuine cell of a connected line graph).
    if (static_cast<int>(covered.size()) != g.m()) return std::nullopt;
    return part;
}

// Builds the root graph from a completed partition and verifies the bijection
// directly: u ~ v in G iff phi(u) and phi(v) share a root vertex.
std::optional<RootData> build_root(const SimpleGraph& g, Partition part) {
    // Pad: a vertex in fewer than two cells gets private singleton cells, so
    // that every vertex corresponds to an edge between two distinct cells.
    for (int v = 0; v < g.n(); ++v) {
        while (part.cells_of[v].size() < 2) {
            part.cells_of[v].push_back(static_cast<int>(part.cells.size()));
            part.cells.push_back({v});
        }
    }
    // Deterministic names: order cells by their sorted member label lists.
    std::vector<std::pair<std::vector<std::string>, int>> keyed;
    for (size_t i = 0; i < part.cells.size(); ++i) {
        std::vector<std::string> members;
        for (int v : part.cells[i]) members.push_back(g.label(v));
        std::sort(members.begin(), members.end());
        keyed.push_back({std::move(members), static_cast<int>(i)});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> cell_name(part.cells.size());
    std::vector<std::string> root_vertices;
    for (size_t rank = 0; rank < keyed.size(); ++rank) {
        cell_name[keyed[rank].second] = "r" + std::to_string(rank);
        root_vertices.push_back("r" + std::to_string(rank));
    }
    std::vector<std::pair<std::string, std::string>> root_edges;
    for (int v = 0; v < g.n(); ++v)
        root_edges.emplace_back(cell_name[part.cells_of[v][0]], cell_name[part.cells_of[v][1]]);

    RootData data;
    data.root = Multigraph::from_edges(root_vertices, root_edges);

    // Recover phi deterministically: process vertices in label order and give
    // them increasing copy numbers within their parallel class.
    std::map<std::pair<std::string, std::string>, int> next_copy;
    for (const auto& label : g.labels()) {
        int v = g.index_of(label);
        std::string a = cell_name[part.cells_of[v][0]];
        std::string b = cell_name[part.cells_of[v][1]];
        if (b < a) std::swap(a, b);
        data.phi[label] = MultiEdge{a, b, next_copy[{a, b}]++};
    }

    // Direct verification of the adjacency equivalence for all pairs.
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            const auto& eu = data.phi[g.label(u)];
            const auto& ev = data.phi[g.label(v)];
            bool share = eu.u == ev.u || eu.u == ev.v || eu.v == ev.u || eu.v == ev.v;
            if (share != g.has_edge(u, v)) return std::nullopt;
        }
    }
    return data;
}

// Root search on a connected twin-free graph of order >= 4 that may or may
// not be a line graph of a simple graph.  The genuine cell containing a fixed
// probe edge uv misses at most one common neighbor of u and v (a simple root
// has at most one edge joining the far endpoints), so there are at most
// |N(u) ∩ N(v)| + 1 candidate seeds to try.
std::optional<RootData> krausz_root(const SimpleGraph& g, int* candidates_tried) {
    const auto [u, v] = g.edges().front();
    std::vector<int> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                          g.neighbors(v).end(), std::back_inserter(common));
    std::vector<Cell> seeds;
    Cell full{u, v};
    full.insert(full.end(), common.begin(), common.end());
    std::sort(full.begin(), full.end());
    seeds.push_back(full);
    for (int skip : common) {
        Cell cell{u, v};
        for (int w : common)
            if (w != skip) cell.push_back(w);
        std::sort(cell.begin(), cell.end());
        seeds.push_back(cell);
    }
    for (const auto& seed : seeds) {
        ++*candidates_tried;
        if (!is_clique(g, seed)) continue;
        auto part = propagate(g, seed);
        if (!part) continue;
        auto data = build_root(g, std::move(*part));
        if (data) return data;
    }
    return std::nullopt;
}

// Expands a root of the twin-reduced graph back to the full graph: each twin
// class of size k turns its representative's root edge into k parallel copies.
RootData expand_twins(const RootData& reduced, const SimpleGraph& g,
                      const std::map<std::string, std::string>& representative) {
    std::vector<std::pair<std::string, std::string>> edges;
    // Assign copies in label order within each class for determinism.
    std::map<std::pair<std::string, std::string>, int> next_copy;
    RootData expanded;
    for (const auto& label : g.labels()) {
        const auto& rep = representative.at(label);
        const auto& base = reduced.phi.at(rep);
        edges.emplace_back(base.u, base.v);
        expanded.phi[label] = MultiEdge{base.u, base.v, next_copy[{base.u, base.v}]++};
    }
    expanded.root = Multigraph::from_edges(reduced.root.labels(), edges);
    return expanded;
}

RootData small_root(const SimpleGraph& g) {
    // Connected graphs of order <= 3 with canonical roots.
    RootData data;
    if (g.n() == 1) {
        data.root = Multigraph::from_edges({"r0", "r1"}, {{"r0", "r1"}});
        data.phi[g.label(0)] = MultiEdge{"r0", "r1", 0};
        return data;
    }
    if (g.n() == 2) {  // K2 -> path with two edges
        data.root = Multigraph::from_edges({"r0", "r1", "r2"}, {{"r0", "r1"}, {"r1", "r2"}});
        data.phi[g.label(0)] = MultiEdge{"r0", "r1", 0};
        data.phi[g.label(1)] = MultiEdge{"r1", "r2", 0};
        return data;
    }
    if (g.m() == 3) {  // K3 -> canonical root K1,3 (the star, not the triangle)
        data.root = Multigraph::from_edges({"r0", "r1", "r2", "r3"},
                                           {{"r0", "r1"}, {"r0", "r2"}, {"r0", "r3"}});
        for (int v = 0; v < 3; ++v)
            data.phi[g.label(v)] = MultiEdge{"r0", "r" + std::to_string(v + 1), 0};
        return data;
    }
    // P3: root is the path with three edges.
    data.root = Multigraph::from_edges({"r0", "r1", "r2", "r3"},
                                       {{"r0", "r1"}, {"r1", "r2"}, {"r2", "r3"}});
    int mid = -1;
    for (int v = 0; v < 3; ++v)
        if (g.degree(v) == 2) mid = v;
    std::vector<int> ends;
    for (int v = 0; v < 3; ++v)
        if (v != mid) ends.push_back(v);
    data.phi[g.label(ends[0])] = MultiEdge{"r0", "r1", 0};
    data.phi[g.label(mid)] = MultiEdge{"r1", "r2", 0};
    data.phi[g.label(ends[1])] = MultiEdge{"r2", "r3", 0};
    return data;
}

}  // namespace

RootResult root_graph(const SimpleGraph& g, int max_n) {
    if (g.n() == 0) throw InvalidArgument("root_graph: empty graph");
    if (g.n() > max_n)
        throw CapExceeded("root_graph: order " + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(max_n));
    if (!g.is_connected())
        throw InvalidArgument("root_graph: input is disconnected; process components separately");

    RootResult result;
    if (g.n() <= 3) {
        result.root = small_root(g);
        return result;
    }

    // Local necessary condition first; failing vertices make crisp witnesses.
    for (int v = 0; v < g.n(); ++v) {
        if (!neighborhood_two_clique_coverable(g, v)) {
            result.witness = NotLineGraphWitness{
                g.label(v),
                "edges at vertex '" + g.label(v) + "' admit no cover by two cliques"};
            return result;
        }
    }

    // Collapse twins; the quotient of a line graph is the line graph of a
    // simple graph, recovered below and re-expanded into parallel edges.
    auto reduction = reduce_twins(g);
    const SimpleGraph& reduced = reduction.graph;

    std::optional<RootData> reduced_root;
    int candidates = 0;
    if (reduced.n() <= 3) {
        // Twin-free connected quotients of order <= 3 are K1 or P3.
        reduced_root = small_root(reduced);
    } else {
        reduced_root = krausz_root(reduced, &candidates);
    }
    if (!reduced_root) {
        auto probe = reduced.edges().front();
        result.witness = NotLineGraphWitness{
            std::nullopt, "clique-cell partition search exhausted: all " +
                              std::to_string(candidates) + " seed cells for probe edge {" +
                              reduced.label(probe.first) + "," + reduced.label(probe.second) +
                              "} fail to extend"};
        return result;
    }
    result.root = expand_twins(*reduced_root, g, reduction.representative);
    return result;
}

}  // namespace orthkit
