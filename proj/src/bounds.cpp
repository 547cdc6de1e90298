#include "orthkit/bounds.hpp"

#include <limits>
#include <string>
#include <vector>

namespace orthkit {

namespace {

constexpr long long kSaturated = std::numeric_limits<long long>::max() / 4;

long long saturating_power(long long base, int exponent) {
    long long result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > kSaturated / base) return kSaturated;
        result *= base;
    }
    return result;
}

long long saturating_multiply(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

void check_domain(int h, int t) {
    if (h < 3) throw InvalidArgument("bounds: h must be at least 3");
    if (t < 3) throw InvalidArgument("bounds: t must be at least 3 (formula range)");
}

}  // namespace

long long max_leaves(int h, int t) {
    check_domain(h, t);
    if (t % 2 == 1) return saturating_multiply(2, saturating_power(h - 1, (t - 1) / 2));
    return saturating_multiply(h, saturating_power(h - 1, t / 2 - 1));
}

SimpleGraph extremal_tree(int h, int t) {
    check_domain(h, t);
    if (max_leaves(h, t) >= kSaturated)
        throw InvalidArgument("extremal_tree: leaf count too large to materialize");

    int depth_a = (t % 2 == 1) ? (t - 1) / 2 : t / 2;
    int depth_b = (t % 2 == 1) ? (t - 1) / 2 : t / 2 - 1;

    std::vector<std::pair<std::string, std::string>> edges = {{"a", "b"}};
    std::vector<std::string> vertices = {"a", "b"};
    // Grow a full (h-1)-ary tree below a root, breadth first.
    auto grow = [&](const std::string& root, int depth) {
        std::vector<std::pair<std::string, int>> frontier = {{root, 0}};
        while (!frontier.empty()) {
            auto [node, level] = frontier.back();
            frontier.pop_back();
            if (level == depth) continue;
            for (int c = 0; c < h - 1; ++c) {
                std::string child = node + "." + std::to_string(c);
                vertices.push_back(child);
                edges.push_back({node, child});
                frontier.push_back({child, level + 1});
            }
        }
    };
    grow("a", depth_a);
    grow("b", depth_b);
    return SimpleGraph::from_edges(vertices, edges);
}

SeparatingInterval separating_interval(int h, int t) {
    check_domain(h, t);
    SeparatingInterval interval;
    interval.h = h;
    interval.t = t;
    interval.lo = max_leaves(h, t) + 1;
    interval.hi = max_leaves(h + 1, t);
    return interval;
}

bool complete_line_graph_member(long long n, int h, int t) {
    check_domain(h, t);
    if (n < 1) throw InvalidArgument("complete_line_graph_member: n must be at least 1");
    // Orders up to 3 always fit: a single host node, a single host edge, or a
    // 3-leaf star (degree 3 <= h) lay out K_1, K_2, K_3, and K_3 has no pair
    // of independent edges to constrain.
    if (n <= 3) return true;
    return n <= max_leaves(h, t);
}

}  // namespace orthkit
