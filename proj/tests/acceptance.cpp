// Acceptance gate: nine independent criteria, one PASS/FAIL line each.
// Every expected value is either recomputed here from first principles
// (standalone enumerators, oracle formulas) or cross-checked between two
// implementations that share no code path.  Exit status: number of failing
// criteria, capped at 1 for the harness.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "orthkit/bounds.hpp"
#include "orthkit/recognize.hpp"

using namespace orthkit;

namespace {

struct Gate {
    int failures = 0;
    std::vector<std::string> reasons;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (reasons.size() < 8) reasons.push_back(what);
    }
};

bool report(int k, const Gate& gate) {
    std::cout << "CRITERION " << k << ": " << (gate.failures == 0 ? "PASS" : "FAIL") << "\n";
    for (const auto& n : gate.notes) std::cout << "    note: " << n << "\n";
    for (const auto& r : gate.reasons) std::cout << "    - " << r << "\n";
    if (gate.failures > static_cast<int>(gate.reasons.size()))
        std::cout << "    (" << gate.failures - gate.reasons.size() << " more failures)\n";
    return gate.failures == 0;
}

// ---------------------------------------------------------------- criterion 1
// Standalone enumerator of all trees with max degree <= h and leaf diameter
// <= t, up to isomorphism, by leaf insertion with AHU canonical dedup.
// Completeness: removing a leaf preserves both constraints, so every target
// tree is reachable through constrained intermediate trees.

using Adj = std::vector<std::vector<int>>;

std::string ahu_encode(int v, int parent, const Adj& adj) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_encode(w, v, adj));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::vector<int> tree_centers(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) frontier.push_back(v);
    int removed = 0;
    while (removed + static_cast<int>(frontier.size()) < n) {
        removed += static_cast<int>(frontier.size());
        std::vector<int> next;
        for (int v : frontier)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        frontier = std::move(next);
    }
    return frontier;  // one or two centers
}

std::string ahu_canonical(const Adj& adj) {
    auto centers = tree_centers(adj);
    if (centers.size() == 1) return ahu_encode(centers[0], -1, adj);
    std::string a = ahu_encode(centers[0], centers[1], adj);
    std::string b = ahu_encode(centers[1], centers[0], adj);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

int leaf_diameter(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return 0;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        if (adj[s].size() > 1) continue;
        std::vector<int> dist(n, -1);
        std::vector<int> queue = {s};
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (int v = 0; v < n; ++v)
            if (adj[v].size() <= 1) best = std::max(best, dist[v]);
    }
    return best;
}

// Max leaf count over all trees with max degree <= h and leaf diameter <= t.
// Returns -1 if the growth hits the safety cap (it never should: the
// constraints bound the order).
int enumerate_max_leaves(int h, int t, int* classes_out) {
    std::set<std::string> seen;
    std::vector<Adj> frontier = {Adj(1)};
    seen.insert(ahu_canonical(frontier[0]));
    int best = 1;  // the single node is its own leaf
    int classes = 1;
    while (!frontier.empty()) {
        std::vector<Adj> next;
        for (const Adj& adj : frontier) {
            const int n = static_cast<int>(adj.size());
            if (n > 40) return -1;
            for (int v = 0; v < n; ++v) {
                if (static_cast<int>(adj[v].size()) >= h) continue;
                Adj grown = adj;
                grown.push_back({v});
                grown[v].push_back(n);
                if (leaf_diameter(grown) > t) continue;
                if (!seen.insert(ahu_canonical(grown)).second) continue;
                int leaves = 0;
                for (const auto& nb : grown)
                    if (nb.size() <= 1) ++leaves;
                best = std::max(best, leaves);
                ++classes;
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    if (classes_out) *classes_out = classes;
    return best;
}

Gate criterion1() {
    Gate gate;
    const std::vector<std::pair<std::pair<int, int>, int>> expected = {
        {{3, 3}, 4}, {{3, 4}, 6}, {{4, 3}, 6}};
    for (const auto& [ht, want] : expected) {
        auto [h, t] = ht;
        int classes = 0;
        int found = enumerate_max_leaves(h, t, &classes);
        gate.require(found == want, "independent enumeration at (" + std::to_string(h) + "," +
                                        std::to_string(t) + ") found max " +
                                        std::to_string(found) + " leaves, expected " +
                                        std::to_string(want));
        gate.require(max_leaves(h, t) == want,
                     "max_leaves(" + std::to_string(h) + "," + std::to_string(t) + ") != " +
                         std::to_string(want));
        auto tree = extremal_tree(h, t);
        bool ok = tree.is_tree() && tree.max_degree() <= h &&
                  static_cast<long long>(tree.leaves().size()) == max_leaves(h, t);
        if (ok) {
            auto dist = testutil::distance_matrix(tree);
            for (int a : tree.leaves())
                for (int b : tree.leaves())
                    if (dist[a][b] > t) ok = false;
        }
        gate.require(ok, "extremal_tree(" + std::to_string(h) + "," + std::to_string(t) +
                             ") fails validation");
    }
    return gate;
}

// ---------------------------------------------------------------- criterion 2

Gate criterion2() {
    Gate gate;
    gate.require(bruteforce_layout(complete_graph(4), 3, 3).has_value(),
                 "K4 should have a (3,3)-layout");
    gate.require(!bruteforce_layout(complete_graph(5), 3, 3).has_value(),
                 "K5 should have no (3,3)-layout");
    auto tree = extremal_tree(4, 3);
    std::map<std::string, std::string> leaf_map;
    int i = 0;
    for (int leaf : tree.leaves()) leaf_map[tree.label(leaf)] = "v" + std::to_string(++i);
    gate.require(i == 6, "extremal_tree(4,3) should have 6 leaves");
    LayoutTree layout{tree, leaf_map};
    gate.require(!validate_layout(layout, complete_graph(6), 4, 3).has_value(),
                 "extremal_tree(4,3) should be a (4,3)-layout of K6");
    auto interval = separating_interval(3, 3);
    gate.require(interval.lo == 5 && interval.hi == 6,
                 "separating_interval(3,3) should be [5,6]");
    gate.require(complete_line_graph_member(4, 3, 3) && !complete_line_graph_member(5, 3, 3) &&
                     complete_line_graph_member(6, 4, 3),
                 "complete-graph membership boundary at (3,3)/(4,3) is off");
    return gate;
}

// ------------------------------------------------------------ criteria 3 + 4

bool blocks_at_most_3(const SimpleGraph& h) {
    for (const auto& blk : blocks(h).blocks)
        if (blk.size() > 3) return false;
    return true;
}

Gate criterion3(std::vector<SimpleGraph>& members_out) {
    Gate gate;
    int classes = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const auto& h : testutil::connected_graphs_up_to_iso(n)) {
            ++classes;
            bool by_layout = bruteforce_layout(h, 3, 2).has_value();
            bool by_blocks = blocks_at_most_3(h);
            auto g = line_graph(h);
            auto rec = recognize_orth322(g);
            bool by_recognizer = rec.verdict == Verdict::Member;
            gate.require(by_layout == by_blocks && by_blocks == by_recognizer,
                         "disagreement on a graph of order " + std::to_string(n) + ": layout=" +
                             std::to_string(by_layout) + " blocks=" + std::to_string(by_blocks) +
                             " recognizer=" + std::to_string(by_recognizer));
            if (by_recognizer) {
                gate.require(rec.representation.has_value() &&
                                 !validate_representation(*rec.representation, g, 3, 2)
                                      .has_value(),
                             "a Member certificate failed validation (order " +
                                 std::to_string(n) + ")");
            }
            if (by_blocks) members_out.push_back(h);
        }
    }
    gate.require(classes == 142, "expected 142 connected classes with 2 <= n <= 6, saw " +
                                     std::to_string(classes));
    return gate;
}

Gate criterion4(const std::vector<SimpleGraph>& members) {
    Gate gate;
    gate.require(!members.empty(), "criterion 3 produced no members to round-trip");
    for (const auto& h : members) {
        const int n = h.n();
        LayoutTree layout = build_layout_blocks(h);
        auto g = line_graph(h);
        for (int t : {2, 3, 4}) {
            OrthodoxRepresentation rep = orthodox_representation(layout, h, t, 3);
            if (validate_representation(rep, g, 3, t)) {
                gate.require(false, "round-trip certificate invalid at t = " + std::to_string(t) +
                                        " (order " + std::to_string(n) + ")");
                continue;
            }
            int host_n = rep.host.n();
            gate.require(host_n >= 2 * n - 2 && host_n <= t * n - 2,
                         "host order " + std::to_string(host_n) + " outside [2n-2, tn-2] at t = " +
                             std::to_string(t) + ", n = " + std::to_string(n));
        }
    }
    return gate;
}

// ---------------------------------------------------------------- criterion 5

Gate criterion5() {
    Gate gate;
    std::mt19937 rng(20260814);
    for (int round = 0; round < 100; ++round) {
        auto base = testutil::random_block_graph(rng, 8 + round % 33);
        auto sub = testutil::random_connected_subgraph(rng, base);
        const int n = sub.n();
        auto split = separator_split(sub, 3, 2);
        if (!split) {
            gate.require(false,
                         "no split on a subgraph of order " + std::to_string(n) +
                             " (subgraphs of block graphs always split)");
            continue;
        }
        std::set<std::string> a(split->a.begin(), split->a.end());
        std::set<std::string> b(split->b.begin(), split->b.end());
        std::set<std::string> x(split->x.begin(), split->x.end());
        bool sizes = 3 * static_cast<int>(a.size()) >= n &&
                     3 * static_cast<int>(a.size()) <= 2 * n &&
                     3 * static_cast<int>(b.size()) >= n &&
                     3 * static_cast<int>(b.size()) <= 2 * n;
        bool partition = static_cast<int>(a.size() + b.size()) == n;
        for (const auto& v : a) partition = partition && !b.count(v);
        bool cut = x.size() <= 1;
        bool clean = true;
        for (auto [u, v] : sub.edge_labels()) {
            bool ua = a.count(u) && !x.count(u), ub = b.count(u) && !x.count(u);
            bool va = a.count(v) && !x.count(v), vb = b.count(v) && !x.count(v);
            if ((ua && vb) || (ub && va)) clean = false;
        }
        gate.require(sizes && partition && cut && clean,
                     "split postconditions violated on order " + std::to_string(n) + " (sizes=" +
                         std::to_string(sizes) + " partition=" + std::to_string(partition) +
                         " cut=" + std::to_string(cut) + " clean=" + std::to_string(clean) + ")");
    }
    return gate;
}

// ---------------------------------------------------------------- criterion 6

Gate criterion6(const std::vector<SimpleGraph>& members) {
    Gate gate;
    // the deterministic sweep
    int sweep = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const auto& h : testutil::connected_graphs_up_to_iso(n)) {
            auto g = line_graph(h);
            auto by_recursion = recognize_orth_h2t(g, 3, 2);
            auto by_blocks = recognize_orth322(g);
            gate.require(by_recursion.verdict == by_blocks.verdict,
                         "sweep disagreement on a root of order " + std::to_string(n));
            ++sweep;
        }
    }
    gate.require(sweep == 142, "sweep size drifted");
    (void)members;
    // randomized block-assembled instances, one third with an injected
    // oversized block so both verdicts appear
    std::mt19937 rng(777);
    for (int round = 0; round < 100; ++round) {
        SimpleGraph h = testutil::random_block_graph(rng, 5 + round % 36);
        bool expect_member = true;
        if (round % 3 == 0) {
            auto labels = h.labels();
            std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
            const std::string u = labels[pick(rng)];
            auto edges = h.edge_labels();
            std::string z1 = "z" + std::to_string(round) + "a";
            std::string z2 = "z" + std::to_string(round) + "b";
            std::string z3 = "z" + std::to_string(round) + "c";
            edges.push_back({u, z1});
            edges.push_back({z1, z2});
            edges.push_back({z2, z3});
            edges.push_back({z3, u});
            h = SimpleGraph::from_edges({}, edges);
            expect_member = false;
        }
        auto g = line_graph(h);
        auto by_recursion = recognize_orth_h2t(g, 3, 2);
        auto by_blocks = recognize_orth322(g);
        gate.require(by_recursion.verdict == by_blocks.verdict,
                     "random instance " + std::to_string(round) + ": recursion says " +
                         to_string(by_recursion.verdict) + ", blocks say " +
                         to_string(by_blocks.verdict));
        gate.require((by_blocks.verdict == Verdict::Member) == expect_member,
                     "random instance " + std::to_string(round) +
                         " disagrees with the block oracle");
        if (by_recursion.verdict == Verdict::Member)
            gate.require(by_recursion.representation.has_value() &&
                             !validate_representation(*by_recursion.representation, g, 3, 2)
                                  .has_value(),
                         "random instance " + std::to_string(round) +
                             ": recursion certificate failed validation");
    }
    return gate;
}

// ---------------------------------------------------------------- criterion 7

Gate criterion7() {
    Gate gate;
    gate.require(!bruteforce_layout(pattern("K5_minus_2K2"), 3, 3).has_value(),
                 "K5 minus two independent edges should have no (3,3)-layout");
    gate.require(!bruteforce_layout(pattern("K33"), 3, 3).has_value(),
                 "K33 should have no (3,3)-layout");
    auto witness = contains_subdivision(petersen_graph(), pattern("K33"));
    gate.require(witness.has_value(), "no K33 subdivision found in the Petersen graph");
    if (witness)
        gate.require(
            !validate_subdivision_witness(petersen_graph(), pattern("K33"), *witness).has_value(),
            "the K33-in-Petersen witness failed validation");
    auto check = check_orth323_necessary(line_graph(petersen_graph()));
    gate.require(check.verdict == Orth323Check::Verdict::NonMember,
                 "L(Petersen) should be declared NonMember at (3,3)");
    return gate;
}

// ---------------------------------------------------------------- criterion 8

std::optional<std::string> verify_phi(const SimpleGraph& g, const RootData& rd) {
    if (static_cast<int>(rd.phi.size()) != g.n()) return "phi does not cover V(G)";
    if (rd.root.edge_count() != g.n()) return "root edge count differs from n(G)";
    std::set<std::string> root_edges;
    for (const auto& e : rd.root.edges()) root_edges.insert(Multigraph::edge_label(e));
    std::set<std::string> images;
    for (const auto& [v, e] : rd.phi) {
        if (!g.has_vertex(v)) return "phi keyed by an unknown vertex";
        std::string lab = Multigraph::edge_label(e);
        if (!root_edges.count(lab)) return "phi image is not a root edge";
        if (!images.insert(lab).second) return "phi is not injective";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            const MultiEdge& e = rd.phi.at(g.label(u));
            const MultiEdge& f = rd.phi.at(g.label(v));
            bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (g.has_edge(u, v) != share) return "adjacency does not match edge sharing";
        }
    return std::nullopt;
}

Gate criterion8() {
    Gate gate;
    gate.notes.push_back(
        "multigraph multiplicities capped at 3 for order <= 4 and at 2 for order 5 "
        "(the full class is infinite; higher multiplicities only repeat twin patterns)");
    // Burnside counts of the capped classes, computed by hand from the edge
    // actions of the support automorphism groups, pin the enumeration for
    // n <= 4; order 5 (21 supports, groups up to S5) only gets a coarse floor.
    const std::map<int, int> expected_classes = {{2, 3}, {3, 16}, {4, 250}};
    for (int n = 2; n <= 5; ++n) {
        const int cap = n <= 4 ? 3 : 2;
        int checked = 0;
        std::set<std::vector<int>> seen;
        for (const auto& support : testutil::connected_graphs_up_to_iso(n)) {
            const auto base = support.edge_labels();
            const int m = static_cast<int>(base.size());
            std::vector<int> mult(m, 1);
            while (true) {
                std::vector<std::pair<std::string, std::string>> edges;
                for (int i = 0; i < m; ++i)
                    for (int k = 0; k < mult[i]; ++k) edges.push_back(base[i]);
                Multigraph mg = Multigraph::from_edges(support.labels(), edges);
                if (seen.insert(testutil::canonical_key(mg)).second) {
                    ++checked;
                    auto g = line_graph(mg);
                    auto rr = root_graph(g);
                    if (!rr.is_line_graph()) {
                        gate.require(false, "a genuine line graph was rejected (support order " +
                                                std::to_string(n) + ")");
                    } else if (auto defect = verify_phi(g, *rr.root)) {
                        gate.require(false, *defect + " (support order " + std::to_string(n) + ")");
                    }
                }
                int i = 0;
                while (i < m && mult[i] == cap) mult[i++] = 1;
                if (i == m) break;
                ++mult[i];
            }
        }
        auto want = expected_classes.find(n);
        if (want != expected_classes.end())
            gate.require(checked == want->second,
                         "order " + std::to_string(n) + ": enumerated " +
                             std::to_string(checked) + " classes, Burnside count says " +
                             std::to_string(want->second));
        else
            gate.require(checked >= 400, "order " + std::to_string(n) +
                                             ": enumeration looks too small: " +
                                             std::to_string(checked));
    }
    auto claw = root_graph(complete_bipartite(1, 3));
    gate.require(!claw.is_line_graph() && claw.witness.has_value(),
                 "K13 must be rejected as a line graph with a witness");
    return gate;
}

// ---------------------------------------------------------------- criterion 9

Gate criterion9() {
    Gate gate;
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int round = 0; round < 200; ++round) {
        const int h_gen = 3 + round % 3;
        const int nodes = 6 + round % 15;
        SimpleGraph tree = testutil::random_bounded_tree(rng, nodes, h_gen);
        auto leaf_idx = tree.leaves();
        std::vector<std::string> leaf_labels;
        for (int v : leaf_idx) leaf_labels.push_back(tree.label(v));
        // random graph on the leaves, identity leaf map
        std::vector<std::pair<std::string, std::string>> edges;
        for (size_t i = 0; i < leaf_labels.size(); ++i)
            for (size_t j = i + 1; j < leaf_labels.size(); ++j)
                if (coin(rng) < 0.45) edges.push_back({leaf_labels[i], leaf_labels[j]});
        SimpleGraph h_graph = SimpleGraph::from_edges(leaf_labels, edges);
        std::map<std::string, std::string> leaf_map;
        for (const auto& l : leaf_labels) leaf_map[l] = l;
        LayoutTree layout{tree, leaf_map};

        // oracle threshold: one more than the worst independent-pair share
        auto dist = testutil::distance_matrix(tree);
        int worst = 0;
        const auto es = h_graph.edge_labels();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                std::set<std::string> ends = {es[i].first, es[i].second, es[j].first,
                                              es[j].second};
                if (ends.size() != 4) continue;
                worst = std::max(
                    worst, testutil::oracle_shared_nodes(
                               dist, tree.index_of(es[i].first), tree.index_of(es[i].second),
                               tree.index_of(es[j].first), tree.index_of(es[j].second)));
            }
        const int t = worst + 1;
        const int h = std::max(3, tree.max_degree());

        bool base_ok = !validate_layout(layout, h_graph, h, t).has_value();
        gate.require(base_ok, "oracle-threshold layout rejected (round " +
                                  std::to_string(round) + ")");
        if (!base_ok) continue;
        gate.require(!validate_layout(layout, h_graph, h + 1, t).has_value(),
                     "Ok lost when h grew (round " + std::to_string(round) + ")");
        gate.require(!validate_layout(layout, h_graph, h, t + 1).has_value(),
                     "Ok lost when t grew (round " + std::to_string(round) + ")");
        LayoutTree suppressed = suppress_degree_two(layout);
        gate.require(!validate_layout(suppressed, h_graph, h, t).has_value(),
                     "Ok lost under degree-2 suppression (round " + std::to_string(round) + ")");
    }
    return gate;
}

}  // namespace

int main() {
    std::vector<SimpleGraph> members;
    bool all_ok = true;
    all_ok &= report(1, criterion1());
    all_ok &= report(2, criterion2());
    all_ok &= report(3, criterion3(members));
    all_ok &= report(4, criterion4(members));
    all_ok &= report(5, criterion5());
    all_ok &= report(6, criterion6(members));
    all_ok &= report(7, criterion7());
    all_ok &= report(8, criterion8());
    all_ok &= report(9, criterion9());
    return all_ok ? 0 : 1;
}
