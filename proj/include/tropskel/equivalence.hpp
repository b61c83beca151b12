#pragma once

#include <optional>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"

namespace tropskel {

struct EquivalenceResult {
  bool equivalent = false;
  /// When equivalent: d1 + div(witness) == d2.
  std::optional<PLFunction> witness;
};

/// Compares the reduced forms at the smallest vertex.
EquivalenceResult is_linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2);

/// For a graph that is a single cycle: sum of coeff * (arc length from the
/// smallest vertex, following edge orientations around the cycle), reduced
/// modulo the circumference. Throws InvalidArgument on any other graph.
Rational circle_class_invariant(const MetricGraph& g, const Divisor& d);

}  // namespace tropskel
