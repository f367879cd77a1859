#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <erogers/blowup.hpp>
#include <erogers/budget.hpp>
#include <erogers/certificate.hpp>
#include <erogers/clique_cover.hpp>
#include <erogers/efr.hpp>
#include <erogers/graph.hpp>
#include <erogers/hypergraph.hpp>
#include <erogers/rng.hpp>
#include <erogers/search.hpp>

namespace erogers {

// ---- Triangle-free graphs with no large F-free set -------------------------

struct Theorem1Options {
    bool measure = true;
    // The F-free measurement is skipped on larger instances.
    int measure_max_order = 600;
    Budget measure_budget = Budget::nodes(200'000);
};

struct Theorem1Result {
    EFRInstance efr;
    CliqueCover cover;
    BlowupColoring colouring;
    Graph graph;
    Certificate certificate{"theorem1"};
};

// EFR hypergraph -> intersection graph with its K_v cover -> random F-blowup
// in every K_v.
Theorem1Result theorem1_build(int d, int r, int R, const Graph & f, const SeededRng & rng, const Theorem1Options & options = {});

// ---- Large C_k-free sets in K4-free and K_s-free graphs --------------------

struct CkFreeOptions {
    Budget budget = Budget::nodes(200'000);
    // Skip the dense-pair bound when δ < n^{-1/25}.
    bool respect_delta_cutoff = true;
    int spencer_trials = 20;
    int drc_retries = 20;
    // Bound 1 is skipped when the graph has more k-cycles than this.
    long long max_cycles = 2'000'000;
    // "turan", "neighbourhood" or "middle" overrides the degree thresholds.
    std::optional<std::string> force_branch;
};

struct CkFreeResult {
    VertexSet set;
    std::string branch; // "turan", "neighbourhood" or "middle"
    std::string source; // candidate that produced the answer
    Certificate certificate{"ckfree"};
};

double epsilon_k(int k);

CkFreeResult ckfree_subset(const Graph & g, int k, const SeededRng & rng, const CkFreeOptions & options = {});

struct KsFreeResult {
    VertexSet set;
    nlohmann::json trace = nlohmann::json::array();
    Certificate certificate{"ksfree"};
};

// α_k(4) = 1/3 + ε_k, α_k(s) = 1 - 1/(1 + α_k(s-1)).
double alpha_k(int k, int s);

KsFreeResult ksfree_recursion(const Graph & g, int s, int k, const SeededRng & rng, const CkFreeOptions & options = {});

// ---- Vertex surgery and the G-free pattern construction --------------------

struct GPlusFamily {
    Graph base;
    int v = -1;
    int w = -1;
    Graph gplus;
    Graph gstar;     // gplus - w
    Graph gstarstar; // gplus - {v, w}
    int v_in_gstar = -1;
    std::vector<int> gstar_labels;     // base vertex of each gstar vertex
    std::vector<int> gstarstar_labels; // base vertex of each gstarstar vertex
};

GPlusFamily gplus_family(const Graph & g, int v, int w);
// Lexicographically least nonadjacent pair.
std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph & g);

struct PruneRecord {
    int length = 0;
    std::vector<std::vector<int>> cycles; // sampled-edge indices of each removed cycle
    int edges_removed = 0;
};

struct GirthHypergraphParams {
    int t = 0;
    int r = 0;
    double p = 0;
    double delta = 0;
    long long sampled_edges = 0;
    std::vector<PruneRecord> pruning;

    nlohmann::json to_json() const;
};

struct GirthHypergraph {
    Hypergraph sampled;
    Hypergraph hypergraph; // after pruning
    GirthHypergraphParams params;
    Certificate certificate{"girth-hypergraph"};
};

// Binomial r-uniform hypergraph at p = t^{1-r+1/(2r)}; for each length
// 2..r+1 a greedy maximal edge-disjoint family of loose cycles is removed.
GirthHypergraph random_girth_hypergraph(int t, int r, const SeededRng & rng);

// Edges with exactly one vertex outside S.
long long count_s_edges(const Hypergraph & h, const VertexSet & s);

struct SPropReport {
    int t = 0;
    int r = 0;
    double delta = 0;
    double p = 0;
    double s_lower = 0; // s must exceed t^{1-δ}
    bool exhaustive = false;
    long long evaluated = 0;
    long long passed = 0;
    double min_ratio = 0; // min count / threshold
    nlohmann::json per_size = nlohmann::json::object();
    nlohmann::json samples = nlohmann::json::array();

    nlohmann::json to_json() const;
};

double sprop_threshold(int t, int r, int s);

SPropReport sprop_statistics(const Hypergraph & fstar, int r, int sample_count, const SeededRng & rng);

struct Placement {
    int hyperedge = -1;
    std::vector<int> image; // image[i] = vertex of F carrying G* vertex i
};

// Puts a uniformly random copy of G* (one of r! maps) into every hyperedge.
std::pair<Graph, std::vector<Placement>> place_gstar(const GPlusFamily & family, const Hypergraph & fstar,
    const SeededRng & rng);

// A hyperedge with exactly one vertex outside S whose outside vertex carries
// the clone v, so that the copy of G* induces G** inside S.
std::optional<int> special_edge(const GPlusFamily & family, const Hypergraph & fstar,
    const std::vector<Placement> & placements, const VertexSet & s);

struct SunflowerThreshold {
    int t = 0;
    int r = 0;
    long long R = 0;   // r! + 1
    double log_T = 0;  // log of t!(R C(t-1, r-1) - 1)^t
    double b = 0;      // t^{1-δ}, δ = 1/(5 r^2)

    nlohmann::json to_json() const;
};

SunflowerThreshold sunflower_threshold(int t, int r);

struct Theorem4Part2Options {
    std::optional<std::pair<int, int>> pair;
    bool try_all_pairs = false;
    Budget verify_budget = Budget::unlimited();
};

struct Theorem4Part2Result {
    GPlusFamily family;
    GirthHypergraph fstar;
    std::vector<Placement> placements;
    Graph f;
    Certificate certificate{"theorem4-part2"};
};

Theorem4Part2Result theorem4_part2_build(const Graph & g, int t, const SeededRng & rng,
    const Theorem4Part2Options & options = {});
// Same construction on a given r-uniform F*.
Theorem4Part2Result theorem4_part2_build(const Graph & g, const Hypergraph & fstar, const SeededRng & rng,
    const Theorem4Part2Options & options = {});

// ---- G-free graphs with no large F-free set --------------------------------

struct HighGirthBipartite {
    Graph graph;
    VertexSet left;
    int target_degree = 0;
    int girth_target = 0;
    int min_degree = 0;
    int max_degree = 0;
    long long parallel_removed = 0;
    long long short_cycle_removed = 0;

    nlohmann::json to_json() const;
};

// n + n configuration-model graph of degree d, then every edge on a cycle of
// length <= girth_target is removed (one pass, in random order).
HighGirthBipartite high_girth_bipartite(int n, int d, int girth_target, const SeededRng & rng);

struct Theorem4Part1Options {
    Budget verify_budget = Budget::unlimited();
    bool measure = true;
    Budget measure_budget = Budget::nodes(200'000);
};

struct Theorem4Part1Result {
    HighGirthBipartite bipartite;
    CliqueCover cover;
    BlowupColoring colouring;
    Graph graph;
    Certificate certificate{"theorem4-part1"};
};

Theorem4Part1Result theorem4_part1_build(const Graph & g, const Graph & f, int n, int d, int girth_target,
    const SeededRng & rng, const Theorem4Part1Options & options = {});

// ---- Ramsey witnesses and the exact tiny-n oracle --------------------------

// H is G-free, α(H) < t, and every F-free set of H is smaller than rF_t.
Certificate ramsey_witness_check(const Graph & h, const Graph & f, const Graph & g, int t, int rf_t,
    const Budget & budget = Budget::unlimited());

struct BruteForceF {
    int n = 0;
    int value = 0;
    bool exact = true;
    long long graphs = 0;
    Graph witness;
    std::uint64_t nodes = 0;

    nlohmann::json to_json() const;
};

// min over G-free graphs H on n vertices of the largest F-free set of H.
BruteForceF brute_force_f(const Graph & f, const Graph & g, int n, const Budget & budget = Budget::unlimited());

} // namespace erogers
