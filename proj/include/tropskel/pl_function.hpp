#pragma once

#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/graph.hpp"

namespace tropskel {

struct Knot {
  Rational offset;
  Rational value;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Continuous piecewise-linear function with integer slopes on a metric graph.
///
/// Each edge carries the list of its breakpoints as (offset, value) knots,
/// starting at offset 0 (the tail) and ending at the edge length (the head).
/// Each ray carries knots starting at its base plus the slope of the final,
/// unbounded piece. The representation is normalized: knots strictly
/// increase and redundant knots (equal slopes on both sides) are dropped, so
/// two functions are equal iff their members are equal.
class PLFunction {
 public:
  struct RayProfile {
    std::vector<Knot> knots;
    long terminal_slope = 0;

    friend bool operator==(const RayProfile&, const RayProfile&) = default;
  };

  PLFunction() = default;

  static PLFunction constant(const MetricGraph& g, const Rational& c = Rational());

  std::size_t num_vertices() const { return vertex_values_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_rays() const { return rays_.size(); }

  const Rational& vertex_value(std::size_t v) const { return vertex_values_.at(v); }
  const std::vector<Knot>& edge_knots(std::size_t e) const { return edges_.at(e); }
  const RayProfile& ray_profile(std::size_t r) const { return rays_.at(r); }

  Rational value(const GraphPoint& p) const;
  Rational value_on_edge(std::size_t e, const Rational& offset) const;
  Rational value_on_ray(std::size_t r, const Rational& offset) const;

  /// Slope of edge e just after (right = true) or just before `offset`.
  long edge_slope(std::size_t e, const Rational& offset, bool right) const;
  long ray_slope(std::size_t r, const Rational& offset, bool right) const;
  /// Slopes of the consecutive pieces of edge e.
  std::vector<long> edge_slopes(std::size_t e) const;

  bool is_constant() const;

  PLFunction operator-() const { return combine(-1, *this, 0, *this); }
  PLFunction& operator+=(const PLFunction& o) { return *this = combine(1, *this, 1, o); }
  PLFunction& operator-=(const PLFunction& o) { return *this = combine(1, *this, -1, o); }
  friend PLFunction operator+(const PLFunction& a, const PLFunction& b) { return combine(1, a, 1, b); }
  friend PLFunction operator-(const PLFunction& a, const PLFunction& b) { return combine(1, a, -1, b); }
  friend PLFunction operator*(long k, const PLFunction& f) { return combine(k, f, 0, f); }
  PLFunction plus_constant(const Rational& c) const;

  /// a*f + b*g over the common refinement of breakpoints.
  friend PLFunction combine(long a, const PLFunction& f, long b, const PLFunction& g);

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  friend class PLBuilder;

  void normalize();

  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Knot>> edges_;
  std::vector<RayProfile> rays_;
};

/// Assembles a PLFunction from vertex values and per-edge/per-ray knots and
/// validates continuity and integrality of slopes. Edges without explicit
/// knots interpolate linearly between their endpoint values; rays without a
/// profile are constant.
class PLBuilder {
 public:
  explicit PLBuilder(const MetricGraph& g);

  PLBuilder& vertex(std::size_t v, const Rational& value);
  /// Knots may or may not include the endpoints; endpoints given must match
  /// the vertex values at build time.
  PLBuilder& edge(std::size_t e, std::vector<Knot> knots);
  PLBuilder& ray(std::size_t r, std::vector<Knot> knots, long terminal_slope);

  /// Throws InvalidArgument on discontinuity or non-integer slopes.
  PLFunction build() const;

 private:
  const MetricGraph* graph_;
  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Knot>> edges_;
  std::vector<PLFunction::RayProfile> rays_;
};

/// Sum of outgoing slopes of f at p.
long order_at(const MetricGraph& g, const PLFunction& f, const GraphPoint& p);

/// div(f) on the finite points of g (vertices, edge and ray interiors).
Divisor principal_divisor(const MetricGraph& g, const PLFunction& f);

/// Per-ray order at the end at infinity: minus the terminal slope. For every
/// f, degree(principal_divisor(f)) + sum(end_orders(f)) == 0.
std::vector<long> end_orders(const PLFunction& f);

}  // namespace tropskel
