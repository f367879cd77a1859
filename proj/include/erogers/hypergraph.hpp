#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace erogers {

using HyperEdge = std::vector<int>;

// Edge family over [0, n). Edges are strictly increasing vertex lists and
// pairwise distinct; a declared uniformity is enforced on every edge.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<HyperEdge> edges, std::optional<int> uniformity = std::nullopt);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<HyperEdge> & edges() const { return edges_; }
    const HyperEdge & edge(int i) const { return edges_[i]; }
    std::optional<int> uniformity() const { return uniformity_; }
    // Common edge size if all edges agree (declared or not).
    std::optional<int> common_edge_size() const;

    // Indices of the edges containing v, increasing.
    const std::vector<int> & incident(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

    bool operator==(const Hypergraph & o) const
    {
        return n_ == o.n_ && edges_ == o.edges_ && uniformity_ == o.uniformity_;
    }

private:
    int n_ = 0;
    std::vector<HyperEdge> edges_;
    std::optional<int> uniformity_;
    std::vector<std::vector<int>> incidence_;
};

// |e ∩ f| for sorted vertex lists.
int intersection_size(const HyperEdge & e, const HyperEdge & f);
HyperEdge intersection(const HyperEdge & e, const HyperEdge & f);

// Outcome of an exhaustive structural audit. On failure, `edges` and
// `vertices` hold the witness (edge indices, and the relevant shared vertices).
struct Audit {
    bool pass = true;
    std::vector<int> edges;
    std::vector<int> vertices;

    nlohmann::json witness(const Hypergraph & h) const;
};

Audit hypergraph_is_linear(const Hypergraph & h);
// Requires a linear hypergraph; throws InputError naming the offending pair otherwise.
Audit hypergraph_is_triangle_free(const Hypergraph & h);
// Passes iff there is no loose cycle of length < g; the witness is a shortest one.
Audit hypergraph_girth_at_least(const Hypergraph & h, int g);

// A loose cycle: edges e_1..e_l and vertices v_1..v_l with
// e_i ∩ e_{i+1} = {v_{i+1}}. For l = 2, `vertices` is e_1 ∩ e_2.
struct LooseCycle {
    std::vector<int> edges;
    std::vector<int> vertices;
};

// Visits every loose cycle of the given length exactly once (canonical
// rotation and direction). The visitor returns false to stop early.
void for_each_loose_cycle(const Hypergraph & h, int length, const std::function<bool(const LooseCycle &)> & visit);

// Hypergraph text format: "n m [r]" then m lines of sorted vertices.
void write_hypergraph(std::ostream & out, const Hypergraph & h);
Hypergraph read_hypergraph(std::istream & in);
Hypergraph load_hypergraph(const std::string & path);
void save_hypergraph(const std::string & path, const Hypergraph & h);

} // namespace erogers
