#include "orthkit/obstructions.hpp"

#include <algorithm>
#include <set>

namespace orthkit {

namespace {

std::string edge_key(const std::string& u, const std::string& v) {
    return std::min(u, v) + "," + std::max(u, v);
}

// Backtracking embedder: assign branch vertices (descending pattern degree,
// host candidates filtered by degree and component), then pack pairwise
// internally disjoint paths edge by edge, enumerating simple paths by DFS.
class SubdivisionSearch {
public:
    SubdivisionSearch(const SimpleGraph& host, const SimpleGraph& p)
        : host_(host), pattern_(p) {
        for (int v = 0; v < pattern_.n(); ++v) order_.push_back(v);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (pattern_.degree(a) != pattern_.degree(b))
                return pattern_.degree(a) > pattern_.degree(b);
            return pattern_.label(a) < pattern_.label(b);
        });
        for (const auto& [u, v] : pattern_.edges()) edges_.push_back({u, v});
        assignment_.assign(pattern_.n(), -1);
        host_used_.assign(host_.n(), 0);
        component_of_.assign(host_.n(), -1);
        int c = 0;
        for (const auto& comp : host_.components()) {
            for (int v : comp) component_of_[v] = c;
            ++c;
        }
        pattern_connected_ = pattern_.is_connected();
    }

    std::optional<SubdivisionWitness> run() {
        if (pattern_.n() > host_.n() || pattern_.m() > host_.m()) return std::nullopt;
        chosen_.assign(edges_.size(), {});
        if (!assign(0)) return std::nullopt;
        SubdivisionWitness witness;
        for (int v = 0; v < pattern_.n(); ++v)
            witness.branch_map[pattern_.label(v)] = host_.label(assignment_[v]);
        for (size_t i = 0; i < edges_.size(); ++i) {
            std::vector<std::string> path;
            for (int v : chosen_[i]) path.push_back(host_.label(v));
            witness.path_map[edge_key(pattern_.label(edges_[i].first),
                                      pattern_.label(edges_[i].second))] = path;
        }
        return witness;
    }

private:
    bool assign(size_t k) {
        if (k == order_.size()) {
            blocked_.assign(host_.n(), 0);
            for (int v = 0; v < pattern_.n(); ++v) blocked_[assignment_[v]] = 1;
            return pack(0);
        }
        int pv = order_[k];
        for (int hv = 0; hv < host_.n(); ++hv) {
            if (host_used_[hv]) continue;
            if (host_.degree(hv) < pattern_.degree(pv)) continue;
            if (pattern_connected_ && k > 0 &&
                component_of_[hv] != component_of_[assignment_[order_[0]]])
                continue;
            assignment_[pv] = hv;
            host_used_[hv] = 1;
            if (assign(k + 1)) return true;
            host_used_[hv] = 0;
            assignment_[pv] = -1;
        }
        return false;
    }

    bool pack(size_t ei) {
        if (ei == edges_.size()) return true;
        int a = assignment_[edges_[ei].first];
        int b = assignment_[edges_[ei].second];
        std::vector<int> path = {a};
        return extend(ei, a, b, path);
    }

    // Enumerates simple a..b paths whose interior avoids blocked_ vertices;
    // interior vertices get blocked while the path is in force.
    bool extend(size_t ei, int current, int target, std::vector<int>& path) {
        for (int w : host_.neighbors(current)) {
            if (w == target) {
                chosen_[ei] = path;
                chosen_[ei].push_back(target);
                if (pack(ei + 1)) return true;
                chosen_[ei].clear();
            } else if (!blocked_[w]) {
                blocked_[w] = 1;
                path.push_back(w);
                if (extend(ei, w, target, path)) return true;
                path.pop_back();
                blocked_[w] = 0;
            }
        }
        return false;
    }

    const SimpleGraph& host_;
    const SimpleGraph& pattern_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> assignment_;
    std::vector<char> host_used_;
    std::vector<char> blocked_;
    std::vector<std::vector<int>> chosen_;
    std::vector<int> component_of_;
    bool pattern_connected_ = true;
};

}  // namespace

SimpleGraph pattern(const std::string& name) {
    if (name == "K5_minus_2K2") {
        SimpleGraph k5 = complete_graph(5);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [u, v] : k5.edge_labels()) {
            if ((u == "v1" && v == "v2") || (u == "v3" && v == "v4")) continue;
            edges.push_back({u, v});
        }
        return SimpleGraph::from_edges(k5.labels(), edges);
    }
    if (name == "K33") return complete_bipartite(3, 3);
    if (name == "K25") return complete_bipartite(2, 5);
    throw InvalidArgument("pattern: unknown name '" + name +
                          "' (expected K5_minus_2K2, K33, or K25)");
}

std::optional<SubdivisionWitness> contains_subdivision(const SimpleGraph& host,
                                                       const SimpleGraph& p, int max_n) {
    if (p.n() > 7)
        throw InvalidArgument("contains_subdivision: pattern has more than 7 vertices");
    if (host.n() > max_n)
        throw CapExceeded("contains_subdivision: host order " + std::to_string(host.n()) +
                          " exceeds cap " + std::to_string(max_n));
    SubdivisionSearch search(host, p);
    auto witness = search.run();
    if (witness) {
        if (auto defect = validate_subdivision_witness(host, p, *witness))
            throw InvalidArgument("contains_subdivision: internal error: " + *defect);
    }
    return witness;
}

std::optional<std::string> validate_subdivision_witness(const SimpleGraph& host,
                                                        const SimpleGraph& p,
                                                        const SubdivisionWitness& witness) {
    std::set<std::string> images;
    for (const auto& v : p.labels()) {
        auto it = witness.branch_map.find(v);
        if (it == witness.branch_map.end())
            return "pattern vertex '" + v + "' has no branch image";
        if (!host.has_vertex(it->second))
            return "branch image '" + it->second + "' is not a host vertex";
        if (!images.insert(it->second).second)
            return "branch image '" + it->second + "' repeats";
    }
    std::set<std::string> interior_seen;
    size_t expected_paths = 0;
    for (const auto& [u, v] : p.edge_labels()) {
        ++expected_paths;
        auto it = witness.path_map.find(edge_key(u, v));
        if (it == witness.path_map.end())
            return "pattern edge {" + u + "," + v + "} has no path";
        const auto& path = it->second;
        if (path.size() < 2) return "path for {" + u + "," + v + "} has fewer than 2 vertices";
        const std::string& iu = witness.branch_map.at(u);
        const std::string& iv = witness.branch_map.at(v);
        bool forward = path.front() == iu && path.back() == iv;
        bool backward = path.front() == iv && path.back() == iu;
        if (!forward && !backward)
            return "path for {" + u + "," + v + "} does not join the branch images";
        std::set<std::string> on_path;
        for (size_t i = 0; i < path.size(); ++i) {
            if (!host.has_vertex(path[i]))
                return "path vertex '" + path[i] + "' is not a host vertex";
            if (!on_path.insert(path[i]).second)
                return "path for {" + u + "," + v + "} repeats vertex '" + path[i] + "'";
            if (i > 0 && !host.has_edge(path[i - 1], path[i]))
                return "path step " + path[i - 1] + "-" + path[i] + " is not a host edge";
            if (i > 0 && i + 1 < path.size()) {
                if (images.count(path[i]))
                    return "path interior '" + path[i] + "' is a branch image";
                if (!interior_seen.insert(path[i]).second)
                    return "path interior '" + path[i] + "' is shared between paths";
            }
        }
    }
    if (witness.path_map.size() != expected_paths)
        return "witness has paths for non-edges of the pattern";
    return std::nullopt;
}

PlanarityResult is_planar(const SimpleGraph& g, int max_n) {
    PlanarityResult result;
    struct Candidate {
        const char* name;
        SimpleGraph graph;
    };
    const Candidate candidates[2] = {{"K5", complete_graph(5)},
                                     {"K33", complete_bipartite(3, 3)}};
    for (const auto& candidate : candidates) {
        if (auto witness = contains_subdivision(g, candidate.graph, max_n)) {
            result.planar = false;
            result.obstruction_pattern = candidate.name;
            result.witness = std::move(witness);
            return result;
        }
    }
    return result;
}

Orth323Check check_orth323_necessary(const SimpleGraph& g, bool include_k25,
                                     const Caps& caps) {
    Orth323Check check;
    std::vector<std::string> notes;

    std::vector<std::string> pattern_names = {"K5_minus_2K2", "K33"};
    if (include_k25) pattern_names.push_back("K25");

    for (const auto& component : g.components()) {
        std::vector<std::string> component_labels;
        component_labels.reserve(component.size());
        for (int v : component) component_labels.push_back(g.label(v));
        SimpleGraph piece = g.induced(component_labels);
        TwinReduction reduction = reduce_twins(piece);
        const SimpleGraph& reduced = reduction.graph;
        if (reduced.n() <= 3) continue;  // too small for any known obstruction

        RootResult root_result;
        try {
            root_result = root_graph(reduced, caps.root);
        } catch (const CapExceeded&) {
            notes.push_back("component at '" + reduced.label(0) +
                            "': order exceeds the root reconstruction cap");
            continue;
        }
        if (!root_result.is_line_graph()) {
            check.verdict = Orth323Check::Verdict::NonMember;
            check.line_witness = root_result.witness;
            check.note = "not a line graph, so outside every ORTH[h,2,t] class";
            return check;
        }
        const Multigraph& root = root_result.root->root;
        if (root.has_parallel_edges()) {
            // A twin-free component should have a simple root; treat as
            // undecided rather than guessing.
            notes.push_back("component at '" + reduced.label(0) +
                            "': root unexpectedly has parallel edges");
            continue;
        }
        SimpleGraph simple_root = root.simple();
        if (simple_root.n() > caps.subdivision) {
            notes.push_back("component at '" + reduced.label(0) +
                            "': root order exceeds the subdivision search cap");
            continue;
        }
        for (const auto& name : pattern_names) {
            if (auto witness = contains_subdivision(simple_root, pattern(name),
                                                    caps.subdivision)) {
                check.verdict = Orth323Check::Verdict::NonMember;
                check.obstruction_pattern = name;
                check.witness = std::move(witness);
                check.root = root;
                check.note = "root contains a " + name + " subdivision";
                if (name == "K25")
                    check.note +=
                        " (advisory: the K25 exclusion is asserted without a bundled "
                        "proof; rerun without the K25 screen for fully proven verdicts)";
                return check;
            }
        }
    }

    check.verdict = Orth323Check::Verdict::Inconclusive;
    std::string joined = "no known obstruction found; membership is not decided";
    for (const auto& note : notes) joined += "; " + note;
    check.note = joined;
    return check;
}

}  // namespace orthkit
