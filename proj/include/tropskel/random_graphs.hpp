#pragma once

#include <random>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"

namespace tropskel {

struct RandomGraphOptions {
  int max_vertices = 6;
  int max_edges = 9;
  long max_length = 3;
  /// Lengths are integers when true, otherwise p/q with q <= 3.
  bool integral = true;
  bool loops = true;
  long max_weight = 0;
  /// Give weight 1 to every weight-0 leaf.
  bool no_weightless_leaves = false;
};

GraphDescription random_graph_description(std::mt19937_64& rng, const RandomGraphOptions& opt);
MetricGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {});

/// Random weighted graph satisfying the standing assumption, with weighted
/// genus >= min_genus and every island of positive weighted genus (bare
/// weight-0 vertices whose edges are all bridges get weight 1).
MetricGraph random_weighted_graph(std::mt19937_64& rng, RandomGraphOptions opt, long min_genus);

/// A random point of g (vertex or edge interior). With `lattice`, edge
/// offsets are integers; otherwise multiples of length/4.
GraphPoint random_point(const MetricGraph& g, std::mt19937_64& rng, bool lattice);

Divisor random_divisor(const MetricGraph& g, std::mt19937_64& rng, int points, long max_coeff, bool lattice);

/// Random effective divisor of the given degree.
Divisor random_effective(const MetricGraph& g, std::mt19937_64& rng, long degree, bool lattice);

/// Sum of a few integer multiples of clamped distance functions.
PLFunction random_pl_function(const MetricGraph& g, std::mt19937_64& rng);

}  // namespace tropskel
