#include "doctest.h"

#include <algorithm>
#include <utility>

#include "helpers.hpp"
#include "orthkit/io.hpp"
#include "orthkit/recognize.hpp"

using namespace orthkit;

namespace {

LayoutTree k4_double_star() {
    auto tree = SimpleGraph::from_edges({}, {{"a", "b"},
                                             {"a", "l1"},
                                             {"a", "l2"},
                                             {"b", "l3"},
                                             {"b", "l4"}});
    std::map<std::string, std::string> leaf_map{
        {"l1", "v1"}, {"l2", "v2"}, {"l3", "v3"}, {"l4", "v4"}};
    return LayoutTree{tree, leaf_map};
}

}  // namespace

TEST_CASE("layout files round-trip") {
    auto layout = k4_double_star();
    auto text = write_layout(layout);
    auto back = parse_layout(text);
    CHECK(back.leaf_map == layout.leaf_map);
    CHECK(back.tree.n() == layout.tree.n());
    CHECK(back.tree.edge_labels() == layout.tree.edge_labels());
    CHECK(!validate_layout(back, complete_graph(4), 3, 3).has_value());
    CHECK(write_layout(back) == text);  // byte-stable

    SUBCASE("single-node host") {
        LayoutTree tiny{SimpleGraph::from_edges({"n0"}, {}), {{"n0", "v"}}};
        auto back2 = parse_layout(write_layout(tiny));
        CHECK(back2.tree.n() == 1);
        CHECK(back2.leaf_map == tiny.leaf_map);
    }
}

TEST_CASE("representation files round-trip") {
    auto layout = k4_double_star();
    auto rep = orthodox_representation(layout, complete_graph(4), 3, 3);
    auto text = write_representation(rep);
    auto back = parse_representation(text, rep.h, rep.t);
    CHECK(back.host.edge_labels() == rep.host.edge_labels());
    CHECK(back.t == rep.t);
    CHECK(back.h == rep.h);
    REQUIRE(back.paths.size() == rep.paths.size());
    for (const auto& [v, ends] : rep.paths) {
        auto [lo, hi] = std::minmax(ends.first, ends.second);
        REQUIRE(back.paths.count(v));
        CHECK(back.paths.at(v) == std::make_pair(lo, hi));
    }
    CHECK(!validate_representation(back, line_graph(complete_graph(4)), 3, 3).has_value());
    CHECK(write_representation(back) == text);

    SUBCASE("thresholds are caller-supplied, not sniffed from the comment") {
        auto relaxed = parse_representation(text, 5, 2);
        CHECK(relaxed.h == 5);
        CHECK(relaxed.t == 2);
        CHECK_THROWS_AS(parse_representation(text, 1, 3), InvalidArgument);
        CHECK_THROWS_AS(parse_representation(text, 3, 0), InvalidArgument);
    }
}

TEST_CASE("certificate parsers reject inconsistent files with line numbers") {
    SUBCASE("missing section marker") {
        CHECK_THROWS_AS(parse_layout("a b\n"), ParseError);
        CHECK_THROWS_AS(parse_representation("a b\n", 3, 2), ParseError);
    }
    SUBCASE("no host tree before the marker") {
        CHECK_THROWS_AS(parse_layout("leaves:\na v\n"), ParseError);
    }
    SUBCASE("wrong row width") {
        try {
            parse_layout("a b\nleaves:\nb v extra\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
        CHECK_THROWS_AS(parse_representation("a b\npaths:\nv a\n", 3, 2), ParseError);
    }
    SUBCASE("duplicate rows") {
        try {
            parse_layout("a b\nleaves:\na v1\na v2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
        }
        CHECK_THROWS_AS(parse_representation("a b\npaths:\nv a a\nv b b\n", 3, 2), ParseError);
    }
    SUBCASE("references to unknown host nodes") {
        CHECK_THROWS_AS(parse_layout("a b\nleaves:\nzz v\n"), ParseError);
        try {
            parse_representation("a b\npaths:\nv a zz\n", 3, 2);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("loops and overlong host lines") {
        CHECK_THROWS_AS(parse_layout("a a\nleaves:\n"), ParseError);
        CHECK_THROWS_AS(parse_layout("a b c\nleaves:\n"), ParseError);
    }
    SUBCASE("comments and blank lines are ignored") {
        auto layout = parse_layout("# certificate\n\na b  # host edge\nleaves:\n\nb v\n");
        CHECK(layout.tree.n() == 2);
        CHECK(layout.leaf_map.at("b") == "v");
    }
    SUBCASE("broken-but-parseable files flow into the validators") {
        // host is not a tree: the parser accepts it, validate_layout refuses
        auto cyclic = parse_layout("a b\nb c\nc a\nleaves:\na v1\n");
        auto violation = validate_layout(cyclic, SimpleGraph::from_edges({"v1"}, {}), 3, 1);
        REQUIRE(violation.has_value());
        CHECK(violation->kind == ViolationKind::NotATree);
    }
}

TEST_CASE("DOT output is deterministic and well-formed") {
    SUBCASE("plain graph") {
        auto dot = to_dot(path_graph(3));
        CHECK(dot ==
              "graph {\n"
              "  \"v1\";\n"
              "  \"v2\";\n"
              "  \"v3\";\n"
              "  \"v1\" -- \"v2\";\n"
              "  \"v2\" -- \"v3\";\n"
              "}\n");
        CHECK(to_dot(path_graph(3)) == dot);
    }
    SUBCASE("layout annotates leaves only") {
        auto dot = to_dot(k4_double_star());
        CHECK(dot.find("\"l1\" [label=\"l1 = v1\"];") != std::string::npos);
        CHECK(dot.find("\"a\";") != std::string::npos);  // internal node unannotated
        CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
    }
    SUBCASE("representation carries its path table as comments") {
        auto rep = orthodox_representation(k4_double_star(), complete_graph(4), 3, 3);
        auto dot = to_dot(rep);
        CHECK(dot.find("// paths (vertex: leaf endpoints), t = 3, h = 3") != std::string::npos);
        for (const auto& [v, ends] : rep.paths) CHECK(dot.find("// " + v + ": ") != std::string::npos);
    }
    SUBCASE("quoting handles awkward labels") {
        auto g = SimpleGraph::from_edges({}, {{"a\"b", "c\\d"}});
        auto dot = to_dot(g);
        CHECK(dot.find("\"a\\\"b\"") != std::string::npos);
        CHECK(dot.find("\"c\\\\d\"") != std::string::npos);
    }
}
