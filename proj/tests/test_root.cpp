#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "orthkit/root.hpp"

using namespace orthkit;

namespace {

// Exact verification that phi witnesses L(root) ≅ g: phi is a bijection from
// V(g) onto E(root), and adjacency in g holds iff the image edges share an
// endpoint or are parallel copies of each other.
void check_phi(const SimpleGraph& g, const RootData& data) {
    REQUIRE(static_cast<int>(data.phi.size()) == g.n());
    REQUIRE(data.root.edge_count() == g.n());
    std::set<MultiEdge> images;
    for (const auto& [vertex, edge] : data.phi) {
        CHECK(g.has_vertex(vertex));
        images.insert(edge);
    }
    CHECK(static_cast<int>(images.size()) == g.n());  // injective onto the edge set
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            const MultiEdge& e = data.phi.at(g.label(u));
            const MultiEdge& f = data.phi.at(g.label(v));
            bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            CHECK(g.has_edge(u, v) == share);
        }
}

}  // namespace

TEST_CASE("roots of line graphs of simple graphs") {
    for (const auto& h : {path_graph(4), complete_graph(4), cycle_graph(5),
                          petersen_graph()}) {
        auto g = line_graph(h);
        auto result = root_graph(g);
        REQUIRE(result.is_line_graph());
        check_phi(g, *result.root);
        CHECK(!result.root->root.has_parallel_edges());
        CHECK(is_isomorphic(result.root->root.simple(), h));
    }
}

TEST_CASE("complete line graphs root to parallel bundles") {
    // K_n = L(K_{1,n}) = L(n parallel edges): the root is not unique, and twin
    // reduction picks the bundle.  check_phi still certifies it exactly.
    for (int n : {4, 5, 6}) {
        auto result = root_graph(complete_graph(n));
        REQUIRE(result.is_line_graph());
        CHECK(result.root->root.n() == 2);
        CHECK(result.root->root.edge_count() == n);
        CHECK(result.root->root.has_parallel_edges());
        check_phi(complete_graph(n), *result.root);
    }
}

TEST_CASE("canonical small roots") {
    SUBCASE("K1 -> a single edge") {
        auto result = root_graph(SimpleGraph::from_edges({"x"}, {}));
        REQUIRE(result.is_line_graph());
        CHECK(result.root->root.n() == 2);
        CHECK(result.root->root.edge_count() == 1);
    }
    SUBCASE("K2 -> P3") {
        auto result = root_graph(path_graph(2));
        REQUIRE(result.is_line_graph());
        CHECK(is_isomorphic(result.root->root.simple(), path_graph(3)));
        check_phi(path_graph(2), *result.root);
    }
    SUBCASE("K3 -> the claw, not the triangle") {
        auto result = root_graph(complete_graph(3));
        REQUIRE(result.is_line_graph());
        CHECK(is_isomorphic(result.root->root.simple(), complete_bipartite(1, 3)));
        check_phi(complete_graph(3), *result.root);
    }
    SUBCASE("P3 -> P4") {
        auto result = root_graph(path_graph(3));
        REQUIRE(result.is_line_graph());
        CHECK(is_isomorphic(result.root->root.simple(), path_graph(4)));
    }
}

TEST_CASE("twins re-expand as parallel edges") {
    // L(H) for H = the path a-b-c-d with a doubled edge a-b: the two copies
    // are adjacent twins in L(H).
    auto h = Multigraph::from_edges({}, {{"a", "b"}, {"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto g = line_graph(h);
    REQUIRE(!twin_classes(g).all_singletons());
    auto result = root_graph(g);
    REQUIRE(result.is_line_graph());
    CHECK(result.root->root.has_parallel_edges());
    check_phi(g, *result.root);
    CHECK(testutil::canonical_key(result.root->root) == testutil::canonical_key(h));
}

TEST_CASE("non-line graphs are refuted with a local witness") {
    for (const auto& g : {complete_bipartite(1, 3), complete_bipartite(1, 4), petersen_graph()}) {
        auto result = root_graph(g);
        CHECK(!result.is_line_graph());
        REQUIRE(result.witness.has_value());
        CHECK(!result.witness->detail.empty());
        if (result.witness->local_vertex) CHECK(g.has_vertex(*result.witness->local_vertex));
    }
}

TEST_CASE("preconditions: connectivity and the size cap") {
    auto disconnected = SimpleGraph::from_edges({"a", "b", "c"}, {{"a", "b"}});
    CHECK_THROWS_AS(root_graph(disconnected), InvalidArgument);
    CHECK_THROWS_AS(root_graph(path_graph(4), 3), CapExceeded);
}

TEST_CASE("random line graphs round-trip through reconstruction") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 20; ++round) {
        auto h = testutil::random_block_graph(rng, 12);
        auto g = line_graph(h);
        auto result = root_graph(g);
        REQUIRE(result.is_line_graph());
        check_phi(g, *result.root);
    }
}
