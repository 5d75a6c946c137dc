#pragma once

#include "minorgrowth/graph.hpp"

#include <optional>
#include <vector>

namespace minorgrowth {

/// Branch sets realizing H as a minor of G: branch_sets[h] is the set of
/// G-vertices contracted onto vertex h of H.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

/// Checks disjointness, connectivity and edge coverage of a model.
bool is_valid_model(const Graph& h, const Graph& g, const MinorModel& model);

/// Exact search for a minor model of `h` in `g`.
///
/// Components of `g` are handled separately: the components of `h` are packed
/// into components of `g`, and each packing is checked with a branch-set
/// backtracking search. Inside a component, H-vertices are placed in
/// breadth-first order so that every vertex after the first of its component
/// has a placed neighbour; its branch set is then grown as a connected set
/// seeded next to that neighbour's branch set. The empty graph is a minor of
/// every graph.
std::optional<MinorModel> find_minor_model(const Graph& h, const Graph& g);

bool is_minor(const Graph& h, const Graph& g);

// Closure predicates: membership in the minor-closed families named in the
// growth classification.
bool is_path_forest(const Graph& h);
bool is_star_forest(const Graph& h);
bool is_matching_graph(const Graph& h);
bool is_star_plus_isolated(const Graph& h);
bool has_at_most_one_edge(const Graph& h);
bool is_caterpillar_forest(const Graph& h);
bool is_apex_path_forest(const Graph& h);

}  // namespace minorgrowth
