#pragma once

#include <cstdint>
#include <vector>

#include <erogers/budget.hpp>
#include <erogers/graph.hpp>

namespace erogers {

enum class SearchStatus { Found, Absent, Unknown };

const char * to_string(SearchStatus s);

struct SubgraphResult {
    SearchStatus status = SearchStatus::Unknown;
    // embedding[p] is the host vertex carrying pattern vertex p.
    std::vector<int> embedding;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
    bool absent() const { return status == SearchStatus::Absent; }
};

struct SubgraphOptions {
    // Restrict the host to these vertices (induced on them).
    const VertexSet * within = nullptr;
    // Only embeddings using this host vertex count.
    int anchor = -1;
};

// Non-induced containment: an injective map carrying every pattern edge to a
// host edge. Returns Unknown, never a guess, when the budget runs out.
SubgraphResult contains_subgraph(const Graph & host, const Graph & pattern, const Budget & budget = {},
    const SubgraphOptions & options = {});

bool is_embedding(const Graph & host, const Graph & pattern, const std::vector<int> & map);

} // namespace erogers
