#include "orthkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace orthkit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

SimpleGraph SimpleGraph::from_edges(std::vector<std::string> vertices,
                                    std::vector<std::pair<std::string, std::string>> edges) {
    SimpleGraph g;
    std::set<std::string> vertex_set(vertices.begin(), vertices.end());
    for (const auto& [u, v] : edges) {
        if (u == v) throw InvalidArgument("loop at vertex '" + u + "' is not allowed");
        vertex_set.insert(u);
        vertex_set.insert(v);
    }
    g.labels_.assign(vertex_set.begin(), vertex_set.end());
    for (int i = 0; i < g.n(); ++i) g.index_[g.labels_[i]] = i;

    std::set<std::pair<int, int>> edge_set;
    for (const auto& [u, v] : edges) {
        int a = g.index_[u], b = g.index_[v];
        edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    g.edges_.assign(edge_set.begin(), edge_set.end());
    g.adj_.assign(g.n(), {});
    for (const auto& [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int SimpleGraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InvalidArgument("unknown vertex '" + label + "'");
    return it->second;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool SimpleGraph::has_edge(const std::string& u, const std::string& v) const {
    return has_edge(index_of(u), index_of(v));
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::pair<std::string, std::string>> SimpleGraph::edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [a, b] : edges_) out.emplace_back(labels_[a], labels_[b]);
    return out;
}

bool SimpleGraph::is_connected() const {
    return components().size() <= 1;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n(), false);
    for (int s = 0; s < n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::string>& vertices) const {
    std::set<int> keep;
    for (const auto& label : vertices) keep.insert(index_of(label));
    std::vector<std::pair<std::string, std::string>> kept_edges;
    for (const auto& [a, b] : edges_) {
        if (keep.count(a) && keep.count(b)) kept_edges.emplace_back(labels_[a], labels_[b]);
    }
    return from_edges(vertices, kept_edges);
}

bool SimpleGraph::is_tree() const {
    return n() >= 1 && m() == n() - 1 && is_connected();
}

std::vector<int> SimpleGraph::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v) {
        if (degree(v) <= 1) out.push_back(v);
    }
    return out;
}

std::vector<int> SimpleGraph::tree_path(int a, int b) const {
    // BFS parent pointers; the caller guarantees a tree (or at least that a
    // and b are connected — the unique path property is what matters here).
    std::vector<int> parent(n(), -1);
    std::vector<bool> seen(n(), false);
    std::queue<int> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == b) break;
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                q.push(w);
            }
        }
    }
    if (!seen[b]) throw InvalidArgument("tree_path endpoints are not connected");
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int SimpleGraph::tree_distance(int a, int b) const {
    return static_cast<int>(tree_path(a, b).size()) - 1;
}

// --- Multigraph ---

Multigraph Multigraph::from_edges(std::vector<std::string> vertices,
                                  std::vector<std::pair<std::string, std::string>> edges) {
    Multigraph h;
    std::set<std::string> vertex_set(vertices.begin(), vertices.end());
    std::map<std::pair<std::string, std::string>, int> multiplicity;
    for (auto [u, v] : edges) {
        if (u == v) throw InvalidArgument("loop at vertex '" + u + "' is not allowed");
        vertex_set.insert(u);
        vertex_set.insert(v);
        if (v < u) std::swap(u, v);
        multiplicity[{u, v}] += 1;
    }
    h.labels_.assign(vertex_set.begin(), vertex_set.end());
    for (const auto& [uv, count] : multiplicity) {
        for (int k = 0; k < count; ++k) h.edges_.push_back({uv.first, uv.second, k});
    }
    std::sort(h.edges_.begin(), h.edges_.end());
    return h;
}

bool Multigraph::has_parallel_edges() const {
    for (const auto& e : edges_) {
        if (e.copy > 0) return true;
    }
    return false;
}

int Multigraph::degree(const std::string& v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::string Multigraph::edge_label(const MultiEdge& e) {
    std::string label = e.u + "," + e.v;
    if (e.copy > 0) label += "#" + std::to_string(e.copy);
    return label;
}

SimpleGraph Multigraph::simple() const {
    std::vector<std::pair<std::string, std::string>> simple_edges;
    for (const auto& e : edges_) {
        if (e.copy == 0) simple_edges.emplace_back(e.u, e.v);
    }
    return SimpleGraph::from_edges(labels_, simple_edges);
}

// --- parsing / serialization ---

SimpleGraph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            vertices.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw ParseError("loop edge '" + tokens[0] + " " + tokens[1] + "'", line_no);
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw ParseError("expected one or two labels, got " + std::to_string(tokens.size()),
                             line_no);
        }
    }
    if (vertices.empty() && edges.empty())
        throw ParseError("document declares no vertices or edges", 0);
    return SimpleGraph::from_edges(std::move(vertices), std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    std::vector<bool> covered(g.n(), false);
    for (const auto& [a, b] : g.edges()) {
        covered[a] = covered[b] = true;
        out << g.label(a) << " " << g.label(b) << "\n";
    }
    for (int v = 0; v < g.n(); ++v) {
        if (!covered[v]) out << g.label(v) << "\n";
    }
    return out.str();
}

// --- blocks (Hopcroft–Tarjan, iterative) ---

BlockDecomposition blocks(const SimpleGraph& g) {
    BlockDecomposition result;
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::set<int> cut_set;
    int timer = 0;

    // Explicit DFS stack: (vertex, index into its neighbor list).  When the
    // call for child v returns to parent p with low[v] >= disc[p], the edges
    // pushed since the tree edge (p,v) — that edge included — form one block.
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            result.blocks.push_back({g.label(root)});  // isolated vertex block
            continue;
        }
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[i++];
                if (w == parent[v]) continue;
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.push_back({v, w});
                    if (v == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                const int done = v;  // copy before pop_back invalidates v
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().first;
                low[p] = std::min(low[p], low[done]);
                if (low[done] >= disc[p]) {
                    std::set<int> block_vertices;
                    while (!edge_stack.empty()) {
                        auto [x, y] = edge_stack.back();
                        edge_stack.pop_back();
                        block_vertices.insert(x);
                        block_vertices.insert(y);
                        if (x == p && y == done) break;  // tree edge closing the block
                    }
                    std::vector<std::string> block_labels;
                    for (int x : block_vertices) block_labels.push_back(g.label(x));
                    std::sort(block_labels.begin(), block_labels.end());
                    result.blocks.push_back(std::move(block_labels));
                    if (p != root) cut_set.insert(p);
                }
            }
        }
        if (root_children > 1) cut_set.insert(root);
    }

    std::sort(result.blocks.begin(), result.blocks.end());
    for (int v : cut_set) result.cut_vertices.push_back(g.label(v));
    std::sort(result.cut_vertices.begin(), result.cut_vertices.end());

    std::set<std::string> cut_labels(result.cut_vertices.begin(), result.cut_vertices.end());
    std::vector<std::string> tree_nodes;
    std::vector<std::pair<std::string, std::string>> tree_edges;
    for (size_t i = 0; i < result.blocks.size(); ++i) {
        std::string block_node = "block:" + std::to_string(i);
        tree_nodes.push_back(block_node);
        for (const auto& v : result.blocks[i]) {
            if (cut_labels.count(v)) tree_edges.emplace_back(block_node, "cut:" + v);
        }
    }
    for (const auto& v : result.cut_vertices) tree_nodes.push_back("cut:" + v);
    result.block_cut_tree = SimpleGraph::from_edges(tree_nodes, tree_edges);
    return result;
}

// --- twins ---

TwinPartition twin_classes(const SimpleGraph& g) {
    // Group vertices by closed neighborhood.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> closed = g.neighbors(v);
        closed.push_back(v);
        std::sort(closed.begin(), closed.end());
        groups[closed].push_back(v);
    }
    TwinPartition partition;
    for (const auto& [key, members] : groups) {
        std::vector<std::string> labels;
        for (int v : members) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        partition.classes.push_back(std::move(labels));
    }
    std::sort(partition.classes.begin(), partition.classes.end());
    return partition;
}

bool TwinPartition::all_singletons() const {
    for (const auto& cls : classes) {
        if (cls.size() > 1) return false;
    }
    return true;
}

TwinReduction reduce_twins(const SimpleGraph& g) {
    TwinReduction reduction;
    auto partition = twin_classes(g);
    std::map<std::string, std::string> rep;
    for (const auto& cls : partition.classes) {
        for (const auto& v : cls) rep[v] = cls.front();  // smallest label
    }
    std::set<std::string> kept;
    for (const auto& cls : partition.classes) kept.insert(cls.front());
    std::set<std::pair<std::string, std::string>> quotient_edges;
    for (const auto& [u, v] : g.edge_labels()) {
        std::string ru = rep[u], rv = rep[v];
        if (ru == rv) continue;  // intra-class edge disappears
        if (rv < ru) std::swap(ru, rv);
        quotient_edges.insert({ru, rv});
    }
    reduction.graph = SimpleGraph::from_edges(
        std::vector<std::string>(kept.begin(), kept.end()),
        std::vector<std::pair<std::string, std::string>>(quotient_edges.begin(),
                                                         quotient_edges.end()));
    reduction.representative = std::move(rep);
    return reduction;
}

// --- line graph ---

SimpleGraph line_graph(const Multigraph& h) {
    const auto& edges = h.edges();
    std::vector<std::string> vertices;
    vertices.reserve(edges.size());
    for (const auto& e : edges) vertices.push_back(Multigraph::edge_label(e));
    std::vector<std::pair<std::string, std::string>> adjacency;
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (share) adjacency.emplace_back(vertices[i], vertices[j]);
        }
    }
    return SimpleGraph::from_edges(std::move(vertices), std::move(adjacency));
}

SimpleGraph line_graph(const SimpleGraph& h) {
    return line_graph(Multigraph::from_edges(h.labels(), h.edge_labels()));
}

// --- isomorphism ---

namespace {

bool extend_mapping(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& order,
                    size_t pos, std::vector<int>& map_ab, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.n(); ++w) {
        if (used[w] || b.degree(w) != a.degree(v)) continue;
        bool consistent = true;
        for (size_t k = 0; k < pos && consistent; ++k) {
            int prev = order[k];
            if (a.has_edge(v, prev) != b.has_edge(w, map_ab[prev])) consistent = false;
        }
        if (!consistent) continue;
        map_ab[v] = w;
        used[w] = true;
        if (extend_mapping(a, b, order, pos + 1, map_ab, used)) return true;
        used[w] = false;
        map_ab[v] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int max_n) {
    if (a.n() > max_n || b.n() > max_n)
        throw CapExceeded("is_isomorphic: order " + std::to_string(std::max(a.n(), b.n())) +
                          " exceeds cap " + std::to_string(max_n));
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> deg_a, deg_b;
    for (int v = 0; v < a.n(); ++v) deg_a.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) deg_b.push_back(b.degree(v));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;

    // Map high-degree vertices first; rarer degrees fail faster.
    std::vector<int> order(a.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> map_ab(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    return extend_mapping(a, b, order, 0, map_ab, used);
}

// --- builders ---

namespace {

std::string numbered(const std::string& prefix, int i) {
    return prefix + std::to_string(i);
}

}  // namespace

SimpleGraph complete_graph(int n) {
    if (n < 0) throw InvalidArgument("complete_graph: negative order");
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) vertices.push_back(numbered("v", i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(numbered("v", i), numbered("v", j));
    return SimpleGraph::from_edges(vertices, edges);
}

SimpleGraph path_graph(int n) {
    if (n < 1) throw InvalidArgument("path_graph: order must be positive");
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) vertices.push_back(numbered("v", i));
    for (int i = 1; i < n; ++i) edges.emplace_back(numbered("v", i), numbered("v", i + 1));
    return SimpleGraph::from_edges(vertices, edges);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle_graph: order must be at least 3");
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) vertices.push_back(numbered("v", i));
    for (int i = 1; i < n; ++i) edges.emplace_back(numbered("v", i), numbered("v", i + 1));
    edges.emplace_back(numbered("v", n), numbered("v", 1));
    return SimpleGraph::from_edges(vertices, edges);
}

SimpleGraph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InvalidArgument("complete_bipartite: negative part size");
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= a; ++i) vertices.push_back(numbered("a", i));
    for (int j = 1; j <= b; ++j) vertices.push_back(numbered("b", j));
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) edges.emplace_back(numbered("a", i), numbered("b", j));
    return SimpleGraph::from_edges(vertices, edges);
}

SimpleGraph petersen_graph() {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= 5; ++i) {
        vertices.push_back(numbered("o", i));
        vertices.push_back(numbered("i", i));
    }
    for (int i = 1; i <= 5; ++i) {
        edges.emplace_back(numbered("o", i), numbered("o", i % 5 + 1));  // outer cycle
        edges.emplace_back(numbered("o", i), numbered("i", i));          // spokes
        edges.emplace_back(numbered("i", i), numbered("i", (i + 1) % 5 + 1));  // pentagram
    }
    return SimpleGraph::from_edges(vertices, edges);
}

}  // namespace orthkit
