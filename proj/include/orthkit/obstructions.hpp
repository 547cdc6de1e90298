#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthkit/graph.hpp"
#include "orthkit/root.hpp"

namespace orthkit {

// An embedding of a subdivision of a pattern graph into a host graph:
// branch_map sends pattern vertices to distinct host vertices, and path_map
// sends each pattern edge (keyed "u,v" with u < v) to a host path between the
// mapped endpoints.  Paths are pairwise internally disjoint and internally
// avoid all branch vertices, so interior vertices have degree 2 within the
// witness subgraph.
struct SubdivisionWitness {
    std::map<std::string, std::string> branch_map;
    std::map<std::string, std::vector<std::string>> path_map;
};

// Named obstruction patterns:
//   "K5_minus_2K2"  K_5 minus two independent edges (8 edges, degrees 4,3,3,3,3)
//   "K33"           K_{3,3}
//   "K25"           K_{2,5}
// Unknown names raise InvalidArgument.
SimpleGraph pattern(const std::string& name);

// Exhaustive search for a subdivision of `p` inside `host`: tries every
// injective branch-vertex assignment (respecting degree lower bounds), then
// packs internally disjoint paths by backtracking.  Returns a validated
// witness, or nullopt after complete search.  Requires n(p) <= 7 and
// n(host) <= max_n.
std::optional<SubdivisionWitness> contains_subdivision(const SimpleGraph& host,
                                                       const SimpleGraph& p,
                                                       int max_n = default_caps().subdivision);

// Structural re-check of a witness; returns a description of the first defect
// found, or nullopt if the witness is sound.
std::optional<std::string> validate_subdivision_witness(const SimpleGraph& host,
                                                        const SimpleGraph& p,
                                                        const SubdivisionWitness& witness);

struct PlanarityResult {
    bool planar = true;
    // On planar = false: which pattern ("K5" or "K33") and its embedding.
    std::optional<std::string> obstruction_pattern;
    std::optional<SubdivisionWitness> witness;
};

// Kuratowski-style planarity test: searches for K_5 and K_{3,3} subdivisions
// and reports the first one found.  Complete within the size cap.
PlanarityResult is_planar(const SimpleGraph& g, int max_n = default_caps().subdivision);

// Outcome of the necessary-condition screen for membership in ORTH[3,2,3].
struct Orth323Check {
    enum class Verdict { NonMember, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    // NonMember because G is not a line graph:
    std::optional<NotLineGraphWitness> line_witness;
    // NonMember because the root contains a forbidden subdivision:
    std::optional<std::string> obstruction_pattern;
    std::optional<SubdivisionWitness> witness;
    std::optional<Multigraph> root;  // the root the witness embeds into
    std::string note;                // explanation / advisory annotations
};

// Screens G against the known exclusions for ORTH[3,2,3]: not a line graph,
// or the (twin-reduced, per-component) root contains a subdivision of
// K5_minus_2K2 or K33.  With include_k25, additionally screens for K25
// subdivisions; that verdict is advisory (the exclusion is asserted without a
// bundled proof) and says so in `note`.  Never decides membership positively:
// anything passing the screen is Inconclusive.
Orth323Check check_orth323_necessary(const SimpleGraph& g, bool include_k25 = false,
                                     const Caps& caps = default_caps());

}  // namespace orthkit
