#pragma once

// Shared test utilities: exhaustive canonical forms for small-graph
// isomorphism sweeps, a BFS-distance path oracle independent of the library's
// tree-path code, seeded random instance generators, and a structural checker
// for path-host certificates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orthkit/graph.hpp"
#include "orthkit/layout.hpp"

namespace testutil {

using orthkit::Multigraph;
using orthkit::OrthodoxRepresentation;
using orthkit::SimpleGraph;

// ---------------------------------------------------------- canonical forms

// Minimum adjacency bitmask over all vertex permutations (n <= 8).  Bit
// i*n + j (i < j) set iff edge.  Exhaustive, hence exact.
inline std::uint64_t canonical_key_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> (i * n + j) & 1) edges.emplace_back(i, j);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t key = 0;
        for (auto [i, j] : edges) {
            auto [a, b] = std::minmax(perm[i], perm[j]);
            key |= 1ULL << (a * n + b);
        }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::uint64_t canonical_key(const SimpleGraph& g) {
    const int n = g.n();
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= 1ULL << (u * n + v);
    return canonical_key_mask(n, mask);
}

// Lexicographically minimal flattened multiplicity matrix over all vertex
// permutations (n <= 6).
inline std::vector<int> canonical_key(const Multigraph& g) {
    const int n = g.n();
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[g.labels()[i]] = i;
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        ++mult[index[e.u]][index[e.v]];
        ++mult[index[e.v]][index[e.u]];
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> key;
        key.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) key.push_back(mult[perm[i]][perm[j]]);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ------------------------------------------------- exhaustive small corpora

// All connected graphs on n vertices (labels v1..vn), one representative per
// isomorphism class.  Exhaustive over the 2^C(n,2) labeled graphs; n <= 6
// stays fast.
inline std::vector<SimpleGraph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    std::vector<SimpleGraph> out;
    std::set<std::uint64_t> seen;
    for (std::uint64_t pick = 0; pick < (1ULL << m); ++pick) {
        std::vector<std::vector<int>> adj(n);
        std::uint64_t mask = 0;
        for (int s = 0; s < m; ++s) {
            if (!(pick >> s & 1)) continue;
            auto [i, j] = slots[s];
            adj[i].push_back(j);
            adj[j].push_back(i);
            mask |= 1ULL << (i * n + j);
        }
        // connectivity
        std::vector<bool> vis(n, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!vis[w]) {
                    vis[w] = true;
                    ++count;
                    q.push(w);
                }
        }
        if (count != n) continue;
        if (!seen.insert(canonical_key_mask(n, mask)).second) continue;
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
        for (int s = 0; s < m; ++s)
            if (pick >> s & 1)
                edges.emplace_back(labels[slots[s].first], labels[slots[s].second]);
        out.push_back(SimpleGraph::from_edges(labels, edges));
    }
    return out;
}

// --------------------------------------------------------- distance oracles

inline std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

// Number of common vertices of the tree paths a..b and c..d, counted with the
// on-path predicate d(x,v) + d(v,y) == d(x,y) alone; independent of the
// library's tree_path.
inline int oracle_shared_nodes(const std::vector<std::vector<int>>& dist, int a, int b, int c,
                               int d) {
    const int n = static_cast<int>(dist.size());
    int shared = 0;
    for (int v = 0; v < n; ++v)
        if (dist[a][v] + dist[v][b] == dist[a][b] && dist[c][v] + dist[v][d] == dist[c][d])
            ++shared;
    return shared;
}

inline int oracle_shared_nodes(const SimpleGraph& tree, int a, int b, int c, int d) {
    return oracle_shared_nodes(distance_matrix(tree), a, b, c, d);
}

// -------------------------------------------------------- random generators

// Connected graph assembled from order-<=3 blocks: repeatedly glue a pendant
// edge or a triangle onto an existing vertex.  Every block has order <= 3 by
// construction.
inline SimpleGraph random_block_graph(std::mt19937& rng, int target_n,
                                      double triangle_bias = 0.5) {
    std::vector<std::string> labels = {"b1"};
    std::vector<std::pair<std::string, std::string>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (static_cast<int>(labels.size()) < target_n) {
        std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
        const std::string u = labels[pick(rng)];
        if (coin(rng) < triangle_bias && static_cast<int>(labels.size()) + 2 <= target_n) {
            std::string x = "b" + std::to_string(labels.size() + 1);
            std::string y = "b" + std::to_string(labels.size() + 2);
            labels.push_back(x);
            labels.push_back(y);
            edges.emplace_back(u, x);
            edges.emplace_back(u, y);
            edges.emplace_back(x, y);
        } else {
            std::string x = "b" + std::to_string(labels.size() + 1);
            labels.push_back(x);
            edges.emplace_back(u, x);
        }
    }
    return SimpleGraph::from_edges(labels, edges);
}

// Connected subgraph with >= 2 vertices: keep a random subset of edges, take
// the component of a random vertex within the kept edges.
inline SimpleGraph random_connected_subgraph(std::mt19937& rng, const SimpleGraph& g) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        double keep = 0.55 + 0.45 * coin(rng);
        std::vector<std::pair<int, int>> kept;
        for (auto e : g.edges())
            if (coin(rng) < keep) kept.push_back(e);
        if (kept.empty()) continue;
        std::vector<std::vector<int>> adj(g.n());
        for (auto [u, v] : kept) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::uniform_int_distribution<size_t> pick(0, kept.size() - 1);
        int start = kept[pick(rng)].first;
        std::vector<bool> in_piece(g.n(), false);
        std::queue<int> q;
        q.push(start);
        in_piece[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!in_piece[w]) {
                    in_piece[w] = true;
                    q.push(w);
                }
        }
        std::vector<std::string> labels;
        for (int v = 0; v < g.n(); ++v)
            if (in_piece[v]) labels.push_back(g.label(v));
        if (labels.size() < 2) continue;
        std::vector<std::pair<std::string, std::string>> edges;
        for (auto [u, v] : kept)
            if (in_piece[u]) edges.emplace_back(g.label(u), g.label(v));
        return SimpleGraph::from_edges(labels, edges);
    }
    return g;  // pathological subgraph draws: fall back to the whole graph
}

// Random tree on n nodes t1..tn with maximum degree <= h (h >= 2).  A tree on
// k nodes always has a vertex of degree < h, so growth never blocks.
inline SimpleGraph random_bounded_tree(std::mt19937& rng, int n, int h) {
    std::vector<std::string> labels = {"t1"};
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<int> degree = {0};
    for (int i = 2; i <= n; ++i) {
        std::vector<int> eligible;
        for (int v = 0; v < static_cast<int>(labels.size()); ++v)
            if (degree[v] < h) eligible.push_back(v);
        std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
        int u = eligible[pick(rng)];
        labels.push_back("t" + std::to_string(i));
        degree.push_back(1);
        ++degree[u];
        edges.emplace_back(labels[u], labels.back());
    }
    return SimpleGraph::from_edges(labels, edges);
}

// ------------------------------------------- path-host certificate checking

// Structural orthodoxy check for certificates whose host is a path, allowing
// length-0 paths (the pre-normalization shape the regular validator rejects
// by design).  Conditions checked for every pair u != v:
//   adjacency  <=>  |S_u ∩ S_v| >= t  <=>  S_u and S_v share a host leaf,
// plus: every leaf of each S_u is a leaf of the host (a length-0 path's only
// node counts as its leaf), and the host is a path with max degree <= 2.
inline std::optional<std::string> check_path_host_certificate(const OrthodoxRepresentation& rep,
                                                              const SimpleGraph& g) {
    const SimpleGraph& host = rep.host;
    if (!host.is_tree()) return "host is not a tree";
    if (host.max_degree() > 2) return "host is not a path";
    if (static_cast<int>(rep.paths.size()) != g.n()) return "path count differs from n(G)";
    auto dist = distance_matrix(host);
    std::vector<std::pair<int, int>> ends;  // per g-vertex, host indices
    for (int u = 0; u < g.n(); ++u) {
        auto it = rep.paths.find(g.label(u));
        if (it == rep.paths.end()) return "no path for vertex '" + g.label(u) + "'";
        if (!host.has_vertex(it->second.first) || !host.has_vertex(it->second.second))
            return "path endpoints of '" + g.label(u) + "' are not host nodes";
        int a = host.index_of(it->second.first);
        int b = host.index_of(it->second.second);
        for (int leaf : {a, b})
            if (host.degree(leaf) > 1)
                return "leaf of the path of '" + g.label(u) + "' is not a host leaf";
        ends.emplace_back(a, b);
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int shared = oracle_shared_nodes(dist, ends[u].first, ends[u].second, ends[v].first,
                                             ends[v].second);
            bool share_leaf = false;
            for (int node = 0; node < host.n(); ++node) {
                if (host.degree(node) > 1) continue;
                bool on_u = dist[ends[u].first][node] + dist[node][ends[u].second] ==
                            dist[ends[u].first][ends[u].second];
                bool on_v = dist[ends[v].first][node] + dist[node][ends[v].second] ==
                            dist[ends[v].first][ends[v].second];
                if (on_u && on_v) share_leaf = true;
            }
            bool adjacent = g.has_edge(u, v);
            if (adjacent != (shared >= rep.t))
                return "pair {" + g.label(u) + "," + g.label(v) + "}: adjacency is " +
                       (adjacent ? "true" : "false") + " but shared count is " +
                       std::to_string(shared) + " at t = " + std::to_string(rep.t);
            if (adjacent != share_leaf)
                return "pair {" + g.label(u) + "," + g.label(v) + "}: adjacency is " +
                       (adjacent ? "true" : "false") + " but a shared host leaf is " +
                       (share_leaf ? "present" : "absent");
        }
    return std::nullopt;
}

}  // namespace testutil
