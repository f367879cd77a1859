#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include <erogers/budget.hpp>
#include <erogers/graph.hpp>
#include <erogers/hypergraph.hpp>
#include <erogers/rng.hpp>

namespace erogers {

enum class Optimality { Optimal, LowerBound };

const char * to_string(Optimality o);

struct SetResult {
    VertexSet set;
    Optimality status = Optimality::LowerBound;
    std::uint64_t nodes = 0;

    int size() const { return set.count(); }
};

// Minimum-degree greedy; always at least ceil(n / (Δ + 1)).
VertexSet greedy_independent_set(const Graph & g);

// Branch and bound (maximum clique of the complement with greedy colouring
// bounds), seeded with the greedy set.
SetResult max_independent_set(const Graph & g, const Budget & budget = {});

struct FFreeOptions {
    // F = K2 is answered by max_independent_set.
    bool independent_set_shortcut = true;
};

// Largest S such that g[S] contains no copy of F (F needs an edge).
SetResult max_f_free_subset(const Graph & g, const Graph & f, const Budget & budget = {}, const FFreeOptions & options = {});

bool is_f_free_set(const Graph & g, const Graph & f, const VertexSet & s);

// k-cycles through v0, each once, as orderings (v0, s1, ..., s_{k-1}) with s1 < s_{k-1}.
long long count_k_cycles_through(const Graph & g, int v0, int k);
std::vector<std::vector<int>> list_k_cycles_through(const Graph & g, int v0, int k, std::size_t cap = 0);
// All k-cycles, each once, with the smallest vertex first.
std::vector<std::vector<int>> list_k_cycles(const Graph & g, int k, std::size_t cap = 0);
// k-uniform hypergraph of vertex sets of k-cycles.
Hypergraph cycle_hypergraph(const Graph & g, int k);

bool is_hypergraph_independent(const Hypergraph & h, const VertexSet & s);

struct SpencerResult {
    VertexSet set;
    double average_degree = 0;
    double probability = 1;
    double bound = 0; // (1 - 1/k) n / d^{1/(k-1)}
    int best_trial = -1;
    std::vector<int> trial_sizes;
};

// Best of `trials` runs of: keep each vertex with probability
// p = min(1, (n / (k|E|))^{1/(k-1)}), then drop one vertex of every edge that
// survived whole.
SpencerResult spencer_independent_set(const Hypergraph & h, const SeededRng & rng, int trials);

struct DrcResult {
    VertexSet z;
    long long cross_edges = 0;
    double gamma = 0;
    double threshold = 0;   // common neighbours required in X: γ|X||Y|^{-1/s}
    double target_size = 0; // γ^s |Y| / 2
    bool target_met = false;
    int best_attempt = -1;
    std::vector<int> attempt_sizes;

    nlohmann::json to_json() const;
};

// Ordered pairs (x, y) in X × Y with x ~ y; the edge count when X, Y are disjoint.
long long count_cross_edges(const Graph & g, const VertexSet & x, const VertexSet & y);

// First pair of Z with fewer than `threshold` common neighbours in X.
std::optional<std::pair<int, int>> find_drc_violation(const Graph & g, const VertexSet & x, const VertexSet & z,
    double threshold);

DrcResult dependent_random_choice(const Graph & g, const VertexSet & x, const VertexSet & y, int s,
    const SeededRng & rng, int retries);

struct DenseLevel {
    int level = 0;
    int bucket = 0;
    long long a = 0;
    int size = 0;
    long long cycles_before = 0;
    long long cycles_after = 0;
};

struct DensePair {
    VertexSet x, y;
    int max_degree = 0;
    long long cycles = 0;
    long long surviving_cycles = 0;
    double delta = 0; // cycles / d^{k-1}
    long long cross_edges = 0;
    double density = 0;
    std::vector<DenseLevel> trace;
    double statement_density_bound = 0; // δ / (2 log2 d)^k
    double proof_density_bound = 0;     // δ / (2^{k-1} (log2 d)^{k-3})
    double size_bound = 0;              // δ d / (log2 d)^{k-3}
    bool statement_density_ok = false;
    bool proof_density_ok = false;
    bool size_ok = false;

    nlohmann::json to_json() const;
};

// Dyadic refinement of the k-cycles through v0 into a dense pair (X, Y).
DensePair ckprop_dense_pair(const Graph & g, int v0, int k);

struct Sunflower {
    std::vector<std::vector<int>> petals;
    std::vector<int> core;
};

bool is_sunflower(const Sunflower & s);

struct SunflowerSearch {
    std::optional<Sunflower> sunflower;
    bool finished = true; // false if the node cap cut the search short
    std::uint64_t nodes = 0;
};

// Erdős–Rado recursion on a family of equal-size sets. Succeeds whenever the
// family has more than t!(m-1)^t members.
SunflowerSearch erdos_rado_sunflower(const std::vector<std::vector<int>> & family, int m, std::uint64_t node_cap = 1'000'000);

} // namespace erogers
