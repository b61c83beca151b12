#pragma once

#include <vector>

#include "tropskel/graph.hpp"

namespace tropskel::detail {

// Subgraph of `parent` on the flagged vertices and edges, keeping ids.
struct Induced {
  const MetricGraph* parent;
  MetricGraph g;

  Induced(const MetricGraph& p, const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge)
      : parent(&p), g(build(p, keep_vertex, keep_edge)) {}

  static MetricGraph build(const MetricGraph& p, const std::vector<bool>& kv, const std::vector<bool>& ke) {
    GraphDescription d;
    auto full = p.description();
    for (std::size_t v = 0; v < p.num_vertices(); ++v) {
      if (kv[v]) d.vertices.push_back(full.vertices[v]);
    }
    for (std::size_t e = 0; e < p.num_edges(); ++e) {
      if (ke[e]) d.edges.push_back(full.edges[e]);
    }
    return MetricGraph::build(std::move(d));
  }

  GraphPoint up(const GraphPoint& x) const {
    if (x.is_vertex()) return GraphPoint::vertex(parent->vertex_index(g.vertex(x.index).id));
    return {GraphPoint::Kind::Edge, parent->edge_index(g.edge(x.index).id), x.offset};
  }
  GraphPoint down(const GraphPoint& x) const {
    if (x.is_vertex()) return GraphPoint::vertex(g.vertex_index(parent->vertex(x.index).id));
    return {GraphPoint::Kind::Edge, g.edge_index(parent->edge(x.index).id), x.offset};
  }
};

}  // namespace tropskel::detail
