// Independent reference implementations used only to cross-check the library:
// a from-scratch graph6 encoder, a cyclic Jacobi full-spectrum eigensolver,
// brute-force isomorphism, and published isomorphism-class counts.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "transit/graph.hpp"
#include "transit/spectral.hpp"

namespace oracles {

/// graph6 encoding built character-by-character from a textual bit string;
/// shares no code with the library codec.
std::string reference_graph6_encode(const transit::Graph& g);

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations,
/// sorted descending.
std::vector<double> jacobi_eigenvalues(const transit::SymmetricMatrix& m);

/// Largest eigenvalue via the Jacobi oracle.
double jacobi_radius(const transit::SymmetricMatrix& m);

/// Permutation search with degree-sequence prefilter. Feasible for n <= 8.
bool brute_force_isomorphic(const transit::Graph& a, const transit::Graph& b);

/// All 2-regular simple graphs on m labeled vertices, one per isomorphism
/// class (deduplicated by brute-force isomorphism). Feasible for m <= 7.
std::vector<transit::Graph> brute_force_two_regular(int m);

/// Erdos-Renyi-style random graph on a caller-provided engine.
transit::Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Random relabeling of g.
transit::Graph random_relabel(const transit::Graph& g, std::mt19937_64& rng);

/// Published counts of connected simple graphs up to isomorphism, n = 1..9.
inline constexpr long long kConnectedGraphCounts[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};

/// Published counts of free trees up to isomorphism, n = 1..18.
inline constexpr long long kFreeTreeCounts[] = {1,   1,   1,    2,    3,    6,     11,    23,
                                                47,  106, 235,  551,  1301, 3159,  7741,  19320,
                                                48629, 123867};

}  // namespace oracles
