#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include <erogers/clique_cover.hpp>
#include <erogers/graph.hpp>
#include <erogers/rng.hpp>

namespace erogers {

// colours[c][i] is the pattern vertex assigned to cover.cliques[c][i].
struct BlowupColoring {
    Graph pattern;
    std::vector<std::vector<int>> colours;
    std::uint64_t seed = 0;
    std::string label;

    nlohmann::json to_json() const;
};

// Inside every clique of the cover, colours vertices uniformly by V(F) and
// keeps an edge {x,y} iff its colours are adjacent in F. Host edges covered by
// no clique are dropped. Throws InputError if the cover is not edge-disjoint.
std::pair<Graph, BlowupColoring> random_blowup(const CliqueCover & cover, const Graph & pattern, const SeededRng & rng);

// Recomputes the blowup edge set from a stored colouring.
Graph apply_coloring(const CliqueCover & cover, const BlowupColoring & colouring);

// Union bound for the random blowup over R-uniform K_v covers:
// log E[#F-free N-sets] <= log C(N^2, N) + N log t + R N log(1 - 1/t).
struct FailureBound {
    int t = 0;
    long long R = 0;
    long long N = 0;
    double log_set_count = 0;     // log C(N^2, N)
    double log_probability = 0;   // N log t + R N log(1 - 1/t)
    double log_probability_exp = 0; // N log t - R N / t
    double log_target = 0;        // -2 N log N
    double log_expected = 0;      // log_set_count + log_probability
    bool chain_holds = false;     // N log t - R N / t < -2 N log N
    bool guaranteed = false;      // log_expected < 0

    nlohmann::json to_json() const;
};

FailureBound theorem1_failure_bound(int t, long long R, long long N);

// Square of a bipartite graph restricted to `left`: host vertices are the
// members of left (relabelled in increasing order), joined when they share a
// right neighbour. One clique per right vertex of degree >= 2. Throws
// InputError if bip is not bipartite along left, or contains a 4-cycle.
CliqueCover square_clique_cover(const Graph & bip, const VertexSet & left);

// A homomorphism G -> F (map[g] = F vertex), if one exists.
std::optional<std::vector<int>> find_homomorphism(const Graph & g, const Graph & f);
bool is_homomorphism(const Graph & g, const Graph & f, const std::vector<int> & map);

struct HomFreeResult {
    bool hom_free = true;
    std::vector<int> witness; // homomorphism G -> F when not hom-free
};

// F is hom(G)-free iff no blowup of F contains G, i.e. no homomorphism G -> F.
HomFreeResult is_hom_free(const Graph & f, const Graph & g);

// (F, G) with cached structural facts.
class PatternPair {
public:
    PatternPair(Graph f, Graph g);

    const Graph & F() const { return f_; }
    const Graph & G() const { return g_; }
    bool f_triangle_free() const { return f_triangle_free_; }
    bool f_hom_free() const { return f_hom_free_; }
    bool g_biconnected() const { return g_biconnected_; }
    bool g_clique() const { return g_clique_; }

    nlohmann::json to_json() const;

private:
    Graph f_, g_;
    bool f_triangle_free_, f_hom_free_, g_biconnected_, g_clique_;
};

} // namespace erogers
