#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthkit/caps.hpp"
#include "orthkit/graph.hpp"
#include "orthkit/layout.hpp"
#include "orthkit/recognize.hpp"

namespace orthkit {

namespace {

// Exhaustive search over the trees with leaf set V(H) and internal degrees in
// [3,h].  Degree-2 internals are suppressible without affecting validity, so
// this family decides layout existence.
//
// Trees are grown by inserting the leaves in label order.  Leaf k is placed
// either by subdividing an existing edge (the new internal has degree 3) or by
// attaching to an internal of degree < h.  Removing the last leaf and
// suppressing its neighbor when that neighbor drops to degree 2 inverts the
// step uniquely, so every tree of the family is generated exactly once and no
// deduplication is needed.
//
// After each insertion the shared-path bound is re-checked for all pairs of
// independent H-edges whose endpoints are all placed.  Restricting a final
// tree to the first k leaves only contracts the paths, so a partial tree that
// already violates the bound cannot extend to a valid one: pruning is sound.
// The check after the last insertion covers every pair, so a surviving tree
// is a valid layout.
class LayoutSearch {
public:
    LayoutSearch(const SimpleGraph& h_graph, int h, int t)
        : h_(h), t_(t), leaf_count_(h_graph.n()) {
        adj_.resize(leaf_count_ + std::max(0, leaf_count_ - 2));
        for (auto [u, v] : h_graph.edges()) hedges_.push_back({u, v});
    }

    // Returns the tree edges (as node indices) of the first valid layout, or
    // false.  Leaves are 0..leaf_count_-1; internals follow.
    bool run() {
        if (leaf_count_ <= 1) return true;  // a single node, no edges
        add_edge(0, 1);
        if (!feasible(2)) return false;  // possible only when t = 1 fails early
        return insert(2);
    }

    std::vector<std::pair<int, int>> tree_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < node_limit(); ++a)
            for (int b : adj_[a])
                if (b > a) out.push_back({a, b});
        return out;
    }

    int internal_count() const { return internal_count_; }

private:
    int node_limit() const { return leaf_count_ + internal_count_; }

    void add_edge(int a, int b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    void remove_edge(int a, int b) {
        adj_[a].erase(std::find(adj_[a].begin(), adj_[a].end(), b));
        adj_[b].erase(std::find(adj_[b].begin(), adj_[b].end(), a));
    }

    // Unique path between two nodes of the current tree, by parent tracing.
    std::vector<int> path(int from, int to) const {
        std::vector<int> parent(node_limit(), -1);
        std::vector<int> stack = {from};
        parent[from] = from;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) break;
            for (int w : adj_[v])
                if (parent[w] < 0) {
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
        std::vector<int> nodes;
        for (int v = to; v != from; v = parent[v]) nodes.push_back(v);
        nodes.push_back(from);
        return nodes;
    }

    // Shared-path bound over all pairs of independent H-edges with all four
    // endpoints among the first `placed` leaves.
    bool feasible(int placed) const {
        std::vector<const std::pair<int, int>*> present;
        for (const auto& e : hedges_)
            if (e.first < placed && e.second < placed) present.push_back(&e);
        std::vector<std::vector<int>> paths(present.size());
        for (size_t i = 0; i < present.size(); ++i)
            paths[i] = path(present[i]->first, present[i]->second);
        std::vector<char> mark(node_limit(), 0);
        for (size_t i = 0; i < present.size(); ++i) {
            for (int v : paths[i]) mark[v] = 1;
            for (size_t j = i + 1; j < present.size(); ++j) {
                if (present[i]->first == present[j]->first ||
                    present[i]->first == present[j]->second ||
                    present[i]->second == present[j]->first ||
                    present[i]->second == present[j]->second)
                    continue;  // adjacent edges are unconstrained
                int shared = 0;
                for (int v : paths[j]) shared += mark[v];
                if (shared > t_ - 1) {
                    for (int v : paths[i]) mark[v] = 0;
                    return false;
                }
            }
            for (int v : paths[i]) mark[v] = 0;
        }
        return true;
    }

    bool insert(int k) {
        if (k == leaf_count_) return true;
        // (a) subdivide an existing edge; the new internal adopts leaf k.
        const auto edges = tree_edges();
        for (auto [a, b] : edges) {
            int w = leaf_count_ + internal_count_;
            ++internal_count_;
            remove_edge(a, b);
            add_edge(a, w);
            add_edge(w, b);
            add_edge(w, k);
            if (feasible(k + 1) && insert(k + 1)) return true;
            remove_edge(w, k);
            remove_edge(w, b);
            remove_edge(a, w);
            add_edge(a, b);
            --internal_count_;
        }
        // (b) attach leaf k to an internal that still has room.
        for (int w = leaf_count_; w < node_limit(); ++w) {
            if (static_cast<int>(adj_[w].size()) >= h_) continue;
            add_edge(w, k);
            if (feasible(k + 1) && insert(k + 1)) return true;
            remove_edge(w, k);
        }
        return false;
    }

    int h_;
    int t_;
    int leaf_count_;
    std::vector<std::pair<int, int>> hedges_;  // H edges as leaf indices, sorted
    std::vector<std::vector<int>> adj_;
    int internal_count_ = 0;
};

}  // namespace

std::optional<LayoutTree> bruteforce_layout(const SimpleGraph& h_graph, int h, int t, int max_n) {
    if (h < 3) throw InvalidArgument("bruteforce_layout: h must be at least 3");
    if (t < 1) throw InvalidArgument("bruteforce_layout: t must be at least 1");
    if (h_graph.n() == 0)
        throw InvalidArgument("bruteforce_layout: H must have at least one vertex");
    if (h_graph.n() > max_n)
        throw CapExceeded("bruteforce_layout: n(H) = " + std::to_string(h_graph.n()) +
                          " exceeds the cap " + std::to_string(max_n) +
                          " (set ORTHKIT_MAX_N to raise it)");

    LayoutSearch search(h_graph, h, t);
    if (!search.run()) return std::nullopt;

    // Materialize: leaf i keeps the i-th vertex label of H, internals get
    // fresh names.
    std::set<std::string> taken(h_graph.labels().begin(), h_graph.labels().end());
    std::vector<std::string> names(h_graph.labels());
    int counter = 0;
    for (int i = 0; i < search.internal_count(); ++i) {
        std::string candidate;
        do {
            candidate = "i" + std::to_string(counter++);
        } while (taken.count(candidate));
        taken.insert(candidate);
        names.push_back(candidate);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : search.tree_edges()) edges.push_back({names[a], names[b]});

    LayoutTree layout;
    layout.tree = SimpleGraph::from_edges(names, edges);
    for (const auto& v : h_graph.labels()) layout.leaf_map[v] = v;
    if (auto violation = validate_layout(layout, h_graph, h, t))
        throw std::logic_error("bruteforce_layout: internal error, search emitted an invalid "
                               "layout: " +
                               violation->detail);
    return layout;
}

}  // namespace orthkit
