#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include <erogers/graph.hpp>
#include <erogers/hypergraph.hpp>

namespace erogers {

// Family of cliques of a host graph. A valid cover has complete cliques
// that pairwise share at most one vertex, so every host edge lies in at most
// one clique; a total cover places every edge in exactly one.
struct CliqueCover {
    Graph host;
    std::vector<std::vector<int>> cliques;
    // Optional provenance per clique (e.g. the hypergraph vertex v of K_v).
    std::vector<int> labels;
};

// First violation found: {"kind": "not-a-clique" | "shared-edge", ...}.
std::optional<nlohmann::json> find_cover_violation(const CliqueCover & cover);
// First host edge lying in no clique.
std::optional<Edge> find_uncovered_edge(const CliqueCover & cover);

// Vertices are the edges of h; e ~ f iff e ∩ f ≠ ∅. The cover has one clique
// K_v per non-isolated vertex v of h, labelled by v.
std::pair<Graph, CliqueCover> line_intersection_graph(const Hypergraph & h);

} // namespace erogers
