#include "submwp/graph.hpp"

#include "submwp/errors.hpp"

namespace submwp {

namespace {
void check_endpoint(const GroundSet& g, int v) {
  if (v < 0 || v >= g.size()) throw DomainError("edge endpoint outside vertex set");
}
}  // namespace

WeightedGraph::WeightedGraph(GroundSet verts, std::vector<Edge> es)
    : vertices(std::move(verts)), edges(std::move(es)) {
  for (const auto& e : edges) {
    check_endpoint(vertices, e.u);
    check_endpoint(vertices, e.v);
    if (e.w < 0) throw DomainError("negative edge weight");
  }
}

Rational WeightedGraph::total_weight() const {
  Rational t = 0;
  for (const auto& e : edges) t += e.w;
  return t;
}

Rational WeightedGraph::coverage(Mask s) const {
  Rational t = 0;
  for (const auto& e : edges)
    if (contains(s, e.u) || contains(s, e.v)) t += e.w;
  return t;
}

Rational WeightedGraph::cut(Mask s) const {
  Rational t = 0;
  for (const auto& e : edges)
    if (contains(s, e.u) != contains(s, e.v)) t += e.w;
  return t;
}

SimpleGraph::SimpleGraph(GroundSet verts, std::vector<std::pair<int, int>> es)
    : vertices(std::move(verts)), edges(std::move(es)) {
  for (const auto& [u, v] : edges) {
    check_endpoint(vertices, u);
    check_endpoint(vertices, v);
    if (u == v) throw DomainError("self-loop in simple graph");
  }
}

long SimpleGraph::cut_size(Mask u_side) const {
  long c = 0;
  for (const auto& [u, v] : edges)
    if (contains(u_side, u) != contains(u_side, v)) ++c;
  return c;
}

}  // namespace submwp
