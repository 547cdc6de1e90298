#include "orthkit/layout.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orthkit {

namespace {

// Deterministic collision-free node names: prefix + counter, skipping taken.
class FreshNamer {
public:
    explicit FreshNamer(std::string prefix) : prefix_(std::move(prefix)) {}
    void reserve(const std::vector<std::string>& names) {
        used_.insert(names.begin(), names.end());
    }
    void reserve(const std::string& name) { used_.insert(name); }
    std::string next() {
        while (true) {
            std::string candidate = prefix_ + std::to_string(counter_++);
            if (used_.insert(candidate).second) return candidate;
        }
    }

private:
    std::set<std::string> used_;
    int counter_ = 0;
    std::string prefix_;
};

SimpleGraph rebuild_tree(const std::set<std::string>& nodes,
                         const std::set<std::pair<std::string, std::string>>& edges) {
    return SimpleGraph::from_edges(
        std::vector<std::string>(nodes.begin(), nodes.end()),
        std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
}

std::set<std::pair<std::string, std::string>> edge_set(const SimpleGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& e : g.edge_labels()) out.insert(e);
    return out;
}

std::string pair_text(const std::string& a, const std::string& b) {
    return "{" + a + "," + b + "}";
}

}  // namespace

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DegreeBound: return "DegreeBound";
        case ViolationKind::LeafCondition: return "LeafCondition";
        case ViolationKind::IntersectionTooLarge: return "IntersectionTooLarge";
        case ViolationKind::IntersectionTooSmall: return "IntersectionTooSmall";
        case ViolationKind::LeafShareMismatch: return "LeafShareMismatch";
        case ViolationKind::NotATree: return "NotATree";
        case ViolationKind::BijectionBroken: return "BijectionBroken";
    }
    return "Unknown";
}

int shared_path_nodes(const SimpleGraph& tree, int a, int b, int c, int d) {
    auto p = tree.tree_path(a, b);
    auto q = tree.tree_path(c, d);
    std::set<int> on_p(p.begin(), p.end());
    int shared = 0;
    for (int v : q) shared += on_p.count(v) ? 1 : 0;
    return shared;
}

std::optional<Violation> validate_layout(const LayoutTree& layout, const SimpleGraph& h_graph,
                                         int h, int t) {
    if (h < 3) throw InvalidArgument("validate_layout: h must be at least 3");
    if (t < 1) throw InvalidArgument("validate_layout: t must be at least 1");
    const SimpleGraph& tree = layout.tree;
    if (tree.n() == 0 || !tree.is_tree())
        return Violation{ViolationKind::NotATree, "layout tree is not a tree", {}};

    // Leaf map must biject leaves(T) onto V(H).
    std::vector<int> leaf_nodes = tree.leaves();
    std::set<std::string> leaf_labels;
    for (int v : leaf_nodes) leaf_labels.insert(tree.label(v));
    std::set<std::string> mapped_targets;
    for (const auto& [node, target] : layout.leaf_map) {
        if (!leaf_labels.count(node))
            return Violation{ViolationKind::BijectionBroken,
                             "leaf map key '" + node + "' is not a leaf of the tree",
                             {node}};
        if (!h_graph.has_vertex(target))
            return Violation{ViolationKind::BijectionBroken,
                             "leaf map target '" + target + "' is not a vertex of H",
                             {target}};
        if (!mapped_targets.insert(target).second)
            return Violation{ViolationKind::BijectionBroken,
                             "leaf map target '" + target + "' repeats",
                             {target}};
    }
    if (layout.leaf_map.size() != leaf_labels.size()) {
        for (const auto& node : leaf_labels) {
            if (!layout.leaf_map.count(node))
                return Violation{ViolationKind::BijectionBroken,
                                 "leaf '" + node + "' has no leaf map entry",
                                 {node}};
        }
    }
    if (static_cast<int>(mapped_targets.size()) != h_graph.n()) {
        for (const auto& v : h_graph.labels()) {
            if (!mapped_targets.count(v))
                return Violation{ViolationKind::BijectionBroken,
                                 "vertex '" + v + "' of H has no leaf",
                                 {v}};
        }
    }

    for (const auto& node : tree.labels()) {
        int deg = tree.degree(tree.index_of(node));
        if (deg > h)
            return Violation{ViolationKind::DegreeBound,
                             "node '" + node + "' has degree " + std::to_string(deg) + " > " +
                                 std::to_string(h),
                             {node}};
    }

    // Leaf node for each H vertex.
    std::map<std::string, int> leaf_of;
    for (const auto& [node, target] : layout.leaf_map) leaf_of[target] = tree.index_of(node);

    auto edges = h_graph.edge_labels();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [x, y] = edges[i];
            const auto& [x2, y2] = edges[j];
            if (x == x2 || x == y2 || y == x2 || y == y2) continue;  // not independent
            int shared =
                shared_path_nodes(tree, leaf_of[x], leaf_of[y], leaf_of[x2], leaf_of[y2]);
            if (shared > t - 1)
                return Violation{ViolationKind::IntersectionTooLarge,
                                 "paths of independent edges " + pair_text(x, y) + " and " +
                                     pair_text(x2, y2) + " share " + std::to_string(shared) +
                                     " nodes > t-1 = " + std::to_string(t - 1),
                                 {x, y, x2, y2}};
        }
    }
    return std::nullopt;
}

LayoutTree suppress_degree_two(const LayoutTree& layout) {
    std::set<std::string> nodes(layout.tree.labels().begin(), layout.tree.labels().end());
    auto edges = edge_set(layout.tree);
    bool changed = true;
    while (changed) {
        changed = false;
        SimpleGraph current = rebuild_tree(nodes, edges);
        for (const auto& node : current.labels()) {
            int v = current.index_of(node);
            if (current.degree(v) == 2 && !layout.leaf_map.count(node)) {
                int a = current.neighbors(v)[0];
                int b = current.neighbors(v)[1];
                std::string la = current.label(a), lb = current.label(b);
                edges.erase({std::min(node, la), std::max(node, la)});
                edges.erase({std::min(node, lb), std::max(node, lb)});
                edges.insert({std::min(la, lb), std::max(la, lb)});
                nodes.erase(node);
                changed = true;
                break;  // rebuild and rescan
            }
        }
    }
    return LayoutTree{rebuild_tree(nodes, edges), layout.leaf_map};
}

OrthodoxRepresentation orthodox_representation(const LayoutTree& layout,
                                               const SimpleGraph& h_graph, int t, int h) {
    if (auto violation = validate_layout(layout, h_graph, h, t))
        throw InvalidArgument("orthodox_representation: layout invalid: " + violation->detail);

    // Host nodes: leaves take their H-vertex names, internals get fresh names.
    FreshNamer namer("n");
    namer.reserve(h_graph.labels());
    std::map<std::string, std::string> rename;
    for (const auto& node : layout.tree.labels()) {
        auto it = layout.leaf_map.find(node);
        if (it != layout.leaf_map.end())
            rename[node] = it->second;
        else
            rename[node] = namer.next();
    }
    std::set<std::string> nodes;
    for (const auto& [old_name, new_name] : rename) nodes.insert(new_name);
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : layout.tree.edge_labels()) {
        std::string a = rename[u], b = rename[v];
        edges.insert({std::min(a, b), std::max(a, b)});
    }

    // Subdivide each leaf-incident edge max(0, t-2) times.
    int extra = std::max(0, t - 2);
    if (extra > 0) {
        std::set<std::string> leaf_names;
        for (const auto& [node, target] : layout.leaf_map) leaf_names.insert(target);
        std::vector<std::pair<std::string, std::string>> leaf_edges;
        for (const auto& e : edges) {
            if (leaf_names.count(e.first) || leaf_names.count(e.second)) leaf_edges.push_back(e);
        }
        for (const auto& e : leaf_edges) {
            edges.erase(e);
            std::string prev = e.first;
            for (int k = 0; k < extra; ++k) {
                std::string mid = namer.next();
                nodes.insert(mid);
                edges.insert({std::min(prev, mid), std::max(prev, mid)});
                prev = mid;
            }
            edges.insert({std::min(prev, e.second), std::max(prev, e.second)});
        }
    }

    OrthodoxRepresentation rep;
    rep.host = rebuild_tree(nodes, edges);
    rep.t = t;
    rep.h = h;
    for (const auto& [x, y] : h_graph.edge_labels())
        rep.paths[Multigraph::edge_label(MultiEdge{std::min(x, y), std::max(x, y), 0})] = {x, y};
    return rep;
}

std::optional<Violation> validate_representation(const OrthodoxRepresentation& rep,
                                                 const SimpleGraph& g, int h, int t) {
    if (t < 1) throw InvalidArgument("validate_representation: t must be at least 1");
    if (h < 2) throw InvalidArgument("validate_representation: h must be at least 2");
    const SimpleGraph& host = rep.host;
    if (host.n() == 0 || !host.is_tree())
        return Violation{ViolationKind::NotATree, "host is not a tree", {}};

    for (const auto& node : host.labels()) {
        int deg = host.degree(host.index_of(node));
        if (deg > h)
            return Violation{ViolationKind::DegreeBound,
                             "host node '" + node + "' has degree " + std::to_string(deg) +
                                 " > " + std::to_string(h),
                             {node}};
    }

    for (const auto& v : g.labels()) {
        if (!rep.paths.count(v))
            return Violation{ViolationKind::BijectionBroken,
                             "vertex '" + v + "' has no path",
                             {v}};
    }
    for (const auto& [key, endpoints] : rep.paths) {
        if (!g.has_vertex(key))
            return Violation{ViolationKind::BijectionBroken,
                             "path key '" + key + "' is not a vertex of G",
                             {key}};
        for (const std::string& end : {endpoints.first, endpoints.second}) {
            if (!host.has_vertex(end))
                return Violation{ViolationKind::LeafCondition,
                                 "path endpoint '" + end + "' of '" + key +
                                     "' is not a host node",
                                 {key, end}};
            if (host.degree(host.index_of(end)) > 1)
                return Violation{ViolationKind::LeafCondition,
                                 "path endpoint '" + end + "' of '" + key +
                                     "' is not a host leaf",
                                 {key, end}};
        }
        if (endpoints.first == endpoints.second)
            return Violation{ViolationKind::LeafCondition,
                             "path of '" + key + "' has length 0 (apply normalization first)",
                             {key, endpoints.first}};
    }

    // Three-way equivalence on all vertex pairs.
    const auto& labels = g.labels();
    for (size_t i = 0; i < labels.size(); ++i) {
        for (size_t j = i + 1; j < labels.size(); ++j) {
            const auto& u = labels[i];
            const auto& v = labels[j];
            const auto& pu = rep.paths.at(u);
            const auto& pv = rep.paths.at(v);
            bool adjacent = g.has_edge(u, v);
            int shared = shared_path_nodes(host, host.index_of(pu.first),
                                           host.index_of(pu.second), host.index_of(pv.first),
                                           host.index_of(pv.second));
            // A path touches a host leaf only at its own endpoints, so the
            // shared-leaf relation is endpoint intersection.
            bool leaf_share = pu.first == pv.first || pu.first == pv.second ||
                              pu.second == pv.first || pu.second == pv.second;
            if (adjacent && shared < t)
                return Violation{ViolationKind::IntersectionTooSmall,
                                 "adjacent pair " + pair_text(u, v) + " shares " +
                                     std::to_string(shared) + " < t = " + std::to_string(t),
                                 {u, v}};
            if (!adjacent && shared >= t)
                return Violation{ViolationKind::IntersectionTooLarge,
                                 "non-adjacent pair " + pair_text(u, v) + " shares " +
                                     std::to_string(shared) +
                                     " >= t = " + std::to_string(t),
                                 {u, v}};
            if (adjacent != leaf_share)
                return Violation{ViolationKind::LeafShareMismatch,
                                 "pair " + pair_text(u, v) + (adjacent ? " is" : " is not") +
                                     " adjacent but" + (leaf_share ? "" : " does not") +
                                     " share" + (leaf_share ? "s" : "") + " a host leaf",
                                 {u, v}};
        }
    }
    return std::nullopt;
}

std::pair<LayoutTree, SimpleGraph> layout_of_representation(const OrthodoxRepresentation& rep) {
    if (rep.host.n() == 0 || !rep.host.is_tree())
        throw InvalidArgument("layout_of_representation: host is not a tree");
    std::set<std::pair<std::string, std::string>> seen_pairs;
    std::vector<std::pair<std::string, std::string>> h_edges;
    for (const auto& [key, endpoints] : rep.paths) {
        if (endpoints.first == endpoints.second)
            throw InvalidArgument("layout_of_representation: path of '" + key +
                                  "' has length 0; normalize the representation first");
        auto norm = std::minmax(endpoints.first, endpoints.second);
        if (!seen_pairs.insert({norm.first, norm.second}).second)
            throw InvalidArgument("layout_of_representation: repeated endpoint pair " +
                                  pair_text(norm.first, norm.second) +
                                  " (identical paths mean twins; reduce twins first)");
        h_edges.push_back({norm.first, norm.second});
    }
    LayoutTree layout;
    layout.tree = rep.host;
    std::vector<std::string> leaf_labels;
    for (int v : rep.host.leaves()) {
        leaf_labels.push_back(rep.host.label(v));
        layout.leaf_map[rep.host.label(v)] = rep.host.label(v);
    }
    SimpleGraph h_graph = SimpleGraph::from_edges(leaf_labels, h_edges);
    return {layout, h_graph};
}

OrthodoxRepresentation normalize_representation(const OrthodoxRepresentation& rep) {
    if (rep.host.n() == 0 || !rep.host.is_tree())
        throw InvalidArgument("normalize_representation: host is not a tree");
    if (rep.h < 3)
        throw InvalidArgument("normalize_representation: needs h >= 3 to attach leaf pairs");

    std::set<std::string> nodes(rep.host.labels().begin(), rep.host.labels().end());
    auto edges = edge_set(rep.host);
    FreshNamer namer("n");
    namer.reserve(rep.host.labels());

    // Leaves carrying at least one length-0 path, in sorted order.
    std::set<std::string> zero_leaves;
    for (const auto& [key, endpoints] : rep.paths) {
        if (endpoints.first == endpoints.second) {
            const std::string& x = endpoints.first;
            if (!rep.host.has_vertex(x) || rep.host.degree(rep.host.index_of(x)) > 1)
                throw InvalidArgument("normalize_representation: length-0 path of '" + key +
                                      "' does not sit on a host leaf");
            zero_leaves.insert(x);
        }
    }

    std::map<std::string, std::pair<std::string, std::string>> attach;  // x -> (x', x'')
    for (const auto& x : zero_leaves) {
        std::string x1 = namer.next();
        std::string x2 = namer.next();
        nodes.insert(x1);
        nodes.insert(x2);
        edges.insert({std::min(x, x1), std::max(x, x1)});
        edges.insert({std::min(x, x2), std::max(x, x2)});
        attach[x] = {x1, x2};
    }

    OrthodoxRepresentation out;
    out.t = rep.t;
    out.h = rep.h;
    out.host = rebuild_tree(nodes, edges);
    for (const auto& [key, endpoints] : rep.paths) {
        auto [p, q] = endpoints;
        if (p == q) {
            out.paths[key] = attach.at(p);  // x becomes the path x'..x..x''
            continue;
        }
        // Positive-length paths ending at a transformed leaf extend by one edge.
        if (attach.count(p)) p = attach.at(p).first;
        if (attach.count(q)) q = attach.at(q).first;
        out.paths[key] = {p, q};
    }
    return out;
}

namespace {

// Subdivides the host edge at the lexicographically smallest leaf; returns the
// new node's name.  Paths are endpoint pairs, so they need no adjustment.
std::string subdivide_smallest_leaf_edge(std::set<std::string>& nodes,
                                         std::set<std::pair<std::string, std::string>>& edges,
                                         const SimpleGraph& host, FreshNamer& namer) {
    auto leaves = host.leaves();
    if (leaves.empty() || host.m() == 0)
        throw InvalidArgument("cannot subdivide: host has no leaf edge");
    std::string leaf = host.label(leaves.front());  // labels sorted => smallest
    int neighbor = host.neighbors(host.index_of(leaf)).front();
    std::string other = host.label(neighbor);
    std::string mid = namer.next();
    nodes.insert(mid);
    edges.erase({std::min(leaf, other), std::max(leaf, other)});
    edges.insert({std::min(leaf, mid), std::max(leaf, mid)});
    edges.insert({std::min(mid, other), std::max(mid, other)});
    return mid;
}

}  // namespace

OrthodoxRepresentation join_representations(const OrthodoxRepresentation& a,
                                            const OrthodoxRepresentation& b,
                                            bool prefix_on_collision) {
    if (a.t != b.t || a.h != b.h)
        throw InvalidArgument("join_representations: the sides declare different (h,t)");
    if (a.h < 3) throw InvalidArgument("join_representations: needs h >= 3");
    if (a.host.m() == 0 || b.host.m() == 0)
        throw InvalidArgument("join_representations: each host needs at least one edge");

    bool key_collision = false;
    for (const auto& [key, unused] : a.paths) {
        (void)unused;
        if (b.paths.count(key)) key_collision = true;
    }
    if (key_collision && !prefix_on_collision)
        throw InvalidArgument("join_representations: represented vertex sets overlap");

    // Host nodes take side prefixes, which keeps them collision-free.
    auto renamed = [](const std::string& side, const std::string& node) {
        return side + ":" + node;
    };

    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    OrthodoxRepresentation out;
    out.t = a.t;
    out.h = a.h;

    FreshNamer namer("j");
    const OrthodoxRepresentation* sides[2] = {&a, &b};
    std::string joints[2];
    for (int s = 0; s < 2; ++s) {
        const auto& rep = *sides[s];
        std::string side = std::to_string(s + 1);
        std::set<std::string> side_nodes;
        std::set<std::pair<std::string, std::string>> side_edges;
        for (const auto& label : rep.host.labels()) side_nodes.insert(renamed(side, label));
        for (const auto& [u, v] : rep.host.edge_labels()) {
            auto ru = renamed(side, u), rv = renamed(side, v);
            side_edges.insert({std::min(ru, rv), std::max(ru, rv)});
        }
        SimpleGraph side_host = rebuild_tree(side_nodes, side_edges);
        namer.reserve(side_host.labels());
        joints[s] = subdivide_smallest_leaf_edge(side_nodes, side_edges, side_host, namer);
        nodes.insert(side_nodes.begin(), side_nodes.end());
        edges.insert(side_edges.begin(), side_edges.end());
        for (const auto& [key, endpoints] : rep.paths) {
            std::string out_key = key_collision ? side + ":" + key : key;
            out.paths[out_key] = {renamed(side, endpoints.first),
                                  renamed(side, endpoints.second)};
        }
    }
    edges.insert({std::min(joints[0], joints[1]), std::max(joints[0], joints[1])});
    out.host = rebuild_tree(nodes, edges);
    return out;
}

LayoutTree combine_layouts(const LayoutTree& t_a, const LayoutTree& t_b,
                           const SimpleGraph& h_graph, const std::string& a,
                           const std::string& b) {
    auto image = [](const LayoutTree& layout) {
        std::set<std::string> out;
        for (const auto& [node, target] : layout.leaf_map) out.insert(target);
        return out;
    };
    std::set<std::string> image_a = image(t_a);
    std::set<std::string> image_b = image(t_b);
    if (!image_a.count(a) || !image_a.count(b))
        throw InvalidArgument("combine_layouts: first layout must cover both a and b");
    if (!image_b.count(a) || !image_b.count(b))
        throw InvalidArgument("combine_layouts: second layout must cover both a and b");

    std::set<std::string> side_a = image_a;  // A = image(T_a) \ {b}
    side_a.erase(b);
    std::set<std::string> side_b = image_b;  // B = image(T_b) \ {a}
    side_b.erase(a);
    for (const auto& v : side_a) {
        if (side_b.count(v))
            throw InvalidArgument("combine_layouts: sides overlap at vertex '" + v + "'");
    }
    if (static_cast<int>(side_a.size() + side_b.size()) != h_graph.n())
        throw InvalidArgument("combine_layouts: sides do not partition V(H)");
    for (const auto& v : h_graph.labels()) {
        if (!side_a.count(v) && !side_b.count(v))
            throw InvalidArgument("combine_layouts: vertex '" + v + "' missing from both sides");
    }
    if (!h_graph.has_edge(a, b))
        throw InvalidArgument("combine_layouts: ab must be an edge of H");
    for (const auto& [u, v] : h_graph.edge_labels()) {
        bool cross = (side_a.count(u) && side_b.count(v)) || (side_a.count(v) && side_b.count(u));
        if (cross && u != a && v != a)
            throw InvalidArgument("combine_layouts: cross edge " + pair_text(u, v) +
                                  " is not incident with a = '" + a + "'");
    }

    // Attachment nodes: the leaf for b in T_a and the leaf for a in T_b.
    auto node_for = [](const LayoutTree& layout, const std::string& target) {
        for (const auto& [node, mapped] : layout.leaf_map)
            if (mapped == target) return node;
        throw InvalidArgument("combine_layouts: missing leaf for '" + target + "'");
    };
    std::string attach_a = node_for(t_a, b);
    std::string attach_b = node_for(t_b, a);

    // Keep T_a's node names; rename T_b nodes that collide.
    std::set<std::string> nodes(t_a.tree.labels().begin(), t_a.tree.labels().end());
    auto edges = edge_set(t_a.tree);
    FreshNamer namer("n");
    namer.reserve(t_a.tree.labels());
    namer.reserve(t_b.tree.labels());
    std::map<std::string, std::string> rename;
    for (const auto& node : t_b.tree.labels())
        rename[node] = nodes.count(node) ? namer.next() : node;
    for (const auto& [u, v] : t_b.tree.edge_labels()) {
        auto ru = rename[u], rv = rename[v];
        edges.insert({std::min(ru, rv), std::max(ru, rv)});
    }
    for (const auto& [node, target] : rename) nodes.insert(target);
    std::string attach_b_renamed = rename[attach_b];
    edges.insert({std::min(attach_a, attach_b_renamed), std::max(attach_a, attach_b_renamed)});

    LayoutTree out;
    out.tree = rebuild_tree(nodes, edges);
    for (const auto& [node, target] : t_a.leaf_map) {
        if (node != attach_a) out.leaf_map[node] = target;
    }
    for (const auto& [node, target] : t_b.leaf_map) {
        if (node != attach_b) out.leaf_map[rename[node]] = target;
    }
    return out;
}

LayoutTree join_disjoint_layouts(const LayoutTree& t_a, const LayoutTree& t_b) {
    for (const auto& [node, target] : t_a.leaf_map) {
        (void)node;
        for (const auto& [node2, target2] : t_b.leaf_map) {
            (void)node2;
            if (target == target2)
                throw InvalidArgument("join_disjoint_layouts: sides share vertex '" + target +
                                      "'");
        }
    }
    std::set<std::string> taken(t_a.tree.labels().begin(), t_a.tree.labels().end());
    FreshNamer namer("n");
    namer.reserve(t_a.tree.labels());
    namer.reserve(t_b.tree.labels());

    // Rename T_b nodes that collide with T_a's.
    std::map<std::string, std::string> rename;
    for (const auto& node : t_b.tree.labels())
        rename[node] = taken.count(node) ? namer.next() : node;

    LayoutTree out;
    for (const auto& [node, target] : t_a.leaf_map) out.leaf_map[node] = target;
    for (const auto& [node, target] : t_b.leaf_map) out.leaf_map[rename[node]] = target;

    // Each side contributes an attachment point: its subdivided leaf edge's
    // new node, or the node itself for a single-node tree.
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    std::string attach[2];
    const LayoutTree* sides[2] = {&t_a, &t_b};
    for (int s = 0; s < 2; ++s) {
        const SimpleGraph& tree = sides[s]->tree;
        if (tree.n() == 0) throw InvalidArgument("join_disjoint_layouts: empty side");
        std::set<std::string> side_nodes;
        std::set<std::pair<std::string, std::string>> side_edges;
        auto name_of = [&](const std::string& label) {
            return s == 0 ? label : rename.at(label);
        };
        for (const auto& label : tree.labels()) side_nodes.insert(name_of(label));
        for (const auto& [u, v] : tree.edge_labels()) {
            auto ru = name_of(u), rv = name_of(v);
            side_edges.insert({std::min(ru, rv), std::max(ru, rv)});
        }
        if (tree.m() == 0) {
            attach[s] = name_of(tree.label(0));  // single node: attach directly
        } else {
            SimpleGraph side_host = rebuild_tree(side_nodes, side_edges);
            attach[s] = subdivide_smallest_leaf_edge(side_nodes, side_edges, side_host, namer);
        }
        nodes.insert(side_nodes.begin(), side_nodes.end());
        edges.insert(side_edges.begin(), side_edges.end());
    }
    edges.insert({std::min(attach[0], attach[1]), std::max(attach[0], attach[1])});
    out.tree = rebuild_tree(nodes, edges);
    return out;
}

}  // namespace orthkit
