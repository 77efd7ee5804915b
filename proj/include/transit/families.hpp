#pragma once

#include <optional>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// Witness that a graph has a dominating vertex whose removal is regular:
/// deg(apex) = n-1 and every remaining vertex has degree exactly `degree`.
struct DvdrWitness {
  int apex = 0;
  int degree = 0;
};

/// Star K_{1,n-1}: vertex 0 adjacent to all others. Requires n >= 2.
Graph star(int n);

/// Complete graph K_n.
Graph complete(int n);

/// Complete multipartite graph; vertices are grouped into consecutive parts
/// and adjacent exactly when they lie in different parts.
Graph complete_multipartite(const std::vector<int>& parts);

/// K_{1,2,...,2}: one apex plus (n-1)/2 parts of size 2. Requires odd n >= 3.
Graph cocktail_apex(int n);

/// Join a new dominating vertex (labeled 0) to a regular graph h.
Graph dvdr_join(const Graph& h);

/// Smallest-id dominating vertex with regular remainder, if any.
std::optional<DvdrWitness> is_dvdr(const Graph& g);

/// All (n-4)-regular-remainder dominated graphs on even n >= 4, one per
/// isomorphism class: apex 0 joined to the complement of a disjoint union of
/// cycles with lengths >= 3 summing to n-1. Cycle length partitions are
/// emitted in descending lexicographic order.
std::vector<Graph> extremal_even_family(int n);

}  // namespace transit
