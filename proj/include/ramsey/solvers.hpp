#ifndef RAMSEY_SOLVERS_HPP
#define RAMSEY_SOLVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Explicit vertex sequence certifying a cycle of length vertices.size():
/// consecutive entries adjacent, last adjacent to first, all distinct.
struct CycleWitness {
    std::vector<int> vertices;
};

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;  // an independent set of size alpha
};

/// Exact independence number: maximum clique on the complement via
/// branch-and-bound with greedy-coloring upper bounds over bit rows.
IndependenceResult independence_number(const Graph& g);

/// Exhaustive search for a cycle of length exactly L (as a subgraph).
/// Deterministic: anchors at the smallest cycle vertex, canonical direction.
/// Throws graph_error when L < 3; L beyond the vertex count yields nullopt.
std::optional<CycleWitness> has_cycle_of_length(const Graph& g, int L);

/// Verifies a witness against g (adjacency, distinctness, length).
bool verify_cycle_witness(const Graph& g, const CycleWitness& w, int L);

/// Backtracking isomorphism test on degree-partition refinement.
/// Returns the vertex bijection g -> h when isomorphic.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

/// Minimum graph6 string over all vertex permutations; equal strings iff
/// isomorphic. Throws graph_error above 10 vertices (use are_isomorphic).
std::string canonical_small(const Graph& g);

}  // namespace ramsey

#endif
