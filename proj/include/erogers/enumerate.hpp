#pragma once

#include <string>
#include <vector>

#include <erogers/graph.hpp>

namespace erogers {

// Isomorphism-invariant encoding: the lexicographically largest upper-triangle
// adjacency string over all leaves of an individualisation-refinement tree.
std::string canonical_form(const Graph & g);

// One representative per isomorphism class of G-free graphs on n vertices,
// grown one vertex at a time; each step keeps only G-free extensions and
// deduplicates by canonical form. Sorted by canonical form.
std::vector<Graph> enumerate_g_free_graphs(const Graph & g, int n);

} // namespace erogers
