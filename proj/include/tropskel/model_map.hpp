#pragma once

#include <utility>
#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/graph.hpp"
#include "tropskel/pl_function.hpp"

namespace tropskel {

/// Identification of a coarse graph with a refinement of it (same metric
/// space, more vertices). Each coarse edge is a chain of fine edges; each
/// link says where its fine edge sits on the coarse edge and whether it runs
/// against the coarse orientation. Rays correspond one to one.
class ModelMap {
 public:
  struct Link {
    std::size_t fine_edge;
    bool reversed;
    Rational start;  // coarse offset of the link's first point
  };

  /// Validates that the links tile every coarse edge and that endpoints match.
  ModelMap(MetricGraph coarse, MetricGraph fine, std::vector<std::size_t> vertex_to_fine,
           std::vector<std::vector<Link>> links, std::vector<std::size_t> ray_to_fine);

  const MetricGraph& coarse() const { return coarse_; }
  const MetricGraph& fine() const { return fine_; }
  const std::vector<Link>& links(std::size_t coarse_edge) const { return links_.at(coarse_edge); }
  /// Coarse edge containing fine edge fe.
  std::size_t coarse_edge_of(std::size_t fe) const { return owner_.at(fe).first; }

  GraphPoint to_fine(const GraphPoint& p) const;
  GraphPoint to_coarse(const GraphPoint& p) const;
  Divisor to_fine(const Divisor& d) const;
  Divisor to_coarse(const Divisor& d) const;
  PLFunction to_fine(const PLFunction& f) const;
  PLFunction to_coarse(const PLFunction& f) const;

 private:
  MetricGraph coarse_;
  MetricGraph fine_;
  std::vector<std::size_t> vertex_to_fine_;
  std::vector<GraphPoint> fine_vertex_to_coarse_;
  std::vector<std::vector<Link>> links_;
  std::vector<std::pair<std::size_t, std::size_t>> owner_;  // fine edge -> (coarse edge, link)
  std::vector<std::size_t> ray_to_fine_;
  std::vector<std::size_t> ray_to_coarse_;
};

/// Inserts the given edge-interior points as new vertices. A cut edge "e"
/// becomes pieces "e#0", "e#1", ... joined at new vertices "e#p1", ...;
/// uncut edges keep their ids. Returns the refined graph inside the map.
ModelMap subdivide(const MetricGraph& g, const std::vector<GraphPoint>& points);

/// x -> clamp(dist(p, x) - lo, 0, hi - lo) for a finite point p and 0 <= lo < hi.
PLFunction clamped_distance(const MetricGraph& g, const GraphPoint& p, const Rational& lo, const Rational& hi);

}  // namespace tropskel
