#pragma once

#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/model_map.hpp"

namespace tropskel {

/// The coarsest model of g: vertices are the points of valence != 2 or
/// positive weight, and chains of other vertices are merged into single
/// edges. A bare cycle keeps its smallest vertex. Each merged edge takes the
/// id and orientation of the smallest-id edge of its chain. Rays are dropped;
/// valences are counted without them. The map's coarse side is the model,
/// its fine side is g without rays.
ModelMap canonical_model(const MetricGraph& g);

/// Throws InvalidArgument if some vertex of g (rays ignored) has valence 1 and weight 0.
void check_standing_assumption(const MetricGraph& g);

struct IslandDecomposition {
  ModelMap model;                   // coarse side is the canonical model H
  std::vector<std::size_t> bridges;  // disconnected-type edges of H, in id order
  std::vector<long> vertex_island;   // per vertex of H
  std::vector<long> edge_island;     // per edge of H; -1 for bridges
  std::vector<long> island_genus;    // weighted genus per island

  std::size_t num_islands() const { return island_genus.size(); }
  /// Island containing a point of the input graph, or -1 on a bridge interior.
  long island_of(const GraphPoint& p) const;
};

/// Components of the canonical model minus its open bridges.
IslandDecomposition islands(const MetricGraph& g);

/// Effective representative of d when deg(d) >= weighted genus (reduction on
/// the underlying graph). Throws when the class has no effective member.
Divisor weighted_riemann(const MetricGraph& g, const Divisor& d);

/// Effective E ~ d with at least one chip on every island, none inside a
/// bridge, and at most one inside any other edge of the canonical model.
/// Requires weighted genus >= 2, deg(d) >= weighted genus and the standing
/// assumption.
Divisor good_effective_divisor(const MetricGraph& g, const Divisor& d);

struct GoodDivisorReport {
  bool effective = false;
  std::vector<long> island_degree;         // per island
  std::vector<long> island_genus;          // per island
  struct EdgeDegree {
    std::string id;
    bool bridge;
    long degree;  // chips in the open edge
  };
  std::vector<EdgeDegree> edges;  // per edge of H

  bool condition_i() const { return effective; }
  bool condition_ii() const;
  bool condition_iii() const;
  bool ok() const { return condition_i() && condition_ii() && condition_iii(); }
};

/// Evaluates the three conditions for E directly (equivalence to the input
/// class is checked separately).
GoodDivisorReport check_good_divisor(const MetricGraph& g, const Divisor& e);

}  // namespace tropskel
