#pragma once

#include "orthkit/graph.hpp"

namespace orthkit {

// Inclusive integer interval [lo, hi] of clique orders n for which L(K_n)
// lies in ORTH[h+1,2,t] but not in ORTH[h,2,t].
struct SeparatingInterval {
    int h = 3;
    int t = 3;
    long long lo = 0;  // = max_leaves(h,t) + 1
    long long hi = 0;  // = max_leaves(h+1,t)
};

// Maximum number of leaves of a tree with maximum degree at most h in which
// every two leaves are within distance t:
//   2*(h-1)^((t-1)/2)   for odd t,
//   h*(h-1)^(t/2 - 1)   for even t.
// Requires h >= 3 and t >= 3 (the formula's stated range).  Saturates instead
// of overflowing for large arguments.
long long max_leaves(int h, int t);

// A tree attaining max_leaves(h,t): two adjacent roots "a" and "b", each the
// root of a full (h-1)-ary tree; depths ((t-1)/2, (t-1)/2) for odd t and
// (t/2, t/2 - 1) for even t.  Children of node "x" are "x.0", "x.1", ....
// All leaf pairs are within distance t, so with any bijection of the leaves
// onto V(K_m), m = max_leaves(h,t), this is an (h,t)-layout of K_m.
// Requires h >= 3, t >= 3, and a representable (non-saturated) leaf count.
SimpleGraph extremal_tree(int h, int t);

// The interval of clique orders separating consecutive degree bounds:
// [max_leaves(h,t)+1, max_leaves(h+1,t)].  Requires h >= 3, t >= 3.
SeparatingInterval separating_interval(int h, int t);

// Whether L(K_n) lies in ORTH[h,2,t].  For n >= 4 this is exactly
// n <= max_leaves(h,t); for n <= 3 explicit small layouts (a single node,
// a single edge, a 3-leaf star) witness membership for every h >= 3.
// Requires h >= 3, t >= 3, n >= 1.
bool complete_line_graph_member(long long n, int h, int t);

}  // namespace orthkit
