#pragma once

// Brute-force reference computations. Nothing here shares code with the
// search, enumeration or series paths they are used to check; they only rely
// on the Graph value type, its elementary operations and canonical_code.

#include "minorgrowth/graph.hpp"
#include "minorgrowth/numeric.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace minorgrowth::oracle {

/// Canonical codes of every minor of g, by closing {g} under single vertex
/// deletions, edge deletions and edge contractions.
std::set<std::string> minor_closure(const Graph& g);

bool is_minor_by_closure(const Graph& h, const Graph& g);

/// Every labelled graph on n vertices (2^(n choose 2) of them), n <= 6.
std::vector<Graph> all_labelled_graphs(int n);

/// One representative per isomorphism class on n vertices, n <= 6.
std::vector<Graph> unlabelled_graphs(int n);

/// Counts labelled n-vertex graphs avoiding every excluded graph, testing each
/// of the 2^(n choose 2) graphs against the closure oracle.
BigInt count_by_exhaustion(const std::vector<Graph>& excluded, int n);

/// Counts labelled n-vertex graphs with a vertex whose deletion avoids every
/// excluded graph, by exhaustion with the closure oracle.
BigInt apex_count_by_exhaustion(const std::vector<Graph>& excluded, int n);

/// Bell numbers from the Bell triangle.
BigInt bell_triangle(int n);

/// Number of involutions of {1..n}, by listing all permutations (n <= 9).
BigInt involutions_by_permutations(int n);

/// Ordered sequences of labelled stars rooted at their centres on n vertices:
/// ordered set partitions with one marked vertex per block.
BigInt star_sequences(int n);

Graph random_graph(std::mt19937_64& rng, int n, double p);

}  // namespace minorgrowth::oracle
