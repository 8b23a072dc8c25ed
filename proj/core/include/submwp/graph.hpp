#pragma once

#include <vector>

#include "submwp/ground_set.hpp"
#include "submwp/rational.hpp"

namespace submwp {

/// Undirected graph with non-negative rational edge weights. Self-loops are
/// allowed; a loop is covered by any set containing its vertex and is never
/// cut. Parallel edges are kept as given (coverage and cut both sum weights).
struct WeightedGraph {
  struct Edge {
    int u;
    int v;
    Rational w;
  };

  GroundSet vertices;
  std::vector<Edge> edges;

  WeightedGraph() = default;
  WeightedGraph(GroundSet verts, std::vector<Edge> es);

  Rational total_weight() const;

  /// b(S): total weight of edges meeting S.
  Rational coverage(Mask s) const;

  /// d(S): total weight of edges with exactly one endpoint in S.
  Rational cut(Mask s) const;
};

/// Unweighted simple graph (max-cut side of the hardness reduction).
struct SimpleGraph {
  GroundSet vertices;
  std::vector<std::pair<int, int>> edges;

  SimpleGraph() = default;
  SimpleGraph(GroundSet verts, std::vector<std::pair<int, int>> es);

  /// Number of edges crossing U.
  long cut_size(Mask u_side) const;
};

}  // namespace submwp
