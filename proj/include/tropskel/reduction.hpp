#pragma once

#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"

namespace tropskel {

struct ReductionMove {
  enum class Kind { Layer, Burn };
  Kind kind;
  /// Layer moves: chips pulled across the annulus between two distance
  /// spheres around v0, `multiplicity` times, `distance` = annulus width.
  /// Burn moves: the unburnt region `fired` slides chips `distance` toward
  /// the fire.
  long multiplicity = 1;
  Rational distance;
  std::vector<GraphPoint> fired;
  Divisor after;
};

struct ReductionResult {
  Divisor reduced;
  /// reduced == input + div(witness)
  PLFunction witness;
  std::vector<ReductionMove> transcript;
};

/// The unique v0-reduced divisor equivalent to d. Throws InvalidArgument on
/// graphs with rays.
ReductionResult reduce_divisor(const MetricGraph& g, const Divisor& d, const GraphPoint& v0);

/// Effective off v0 and every closed set avoiding v0 has a non-saturated
/// boundary point (checked by burning from v0).
bool is_reduced(const MetricGraph& g, const Divisor& d, const GraphPoint& v0);

/// |d| non-empty, decided by reduction at the smallest vertex.
bool has_effective_representative(const MetricGraph& g, const Divisor& d);

/// The reduced form of d when it is effective; throws InvalidArgument when
/// the class has no effective member.
Divisor effective_of_bounded_class(const MetricGraph& g, const Divisor& d);

/// Independent check: chip-firing on the unit subdivision of a graph with
/// integer lengths, support and v0 on lattice points. Throws InvalidArgument
/// on non-integral data.
Divisor dhar_oracle(const MetricGraph& g, const Divisor& d, const GraphPoint& v0);

}  // namespace tropskel
