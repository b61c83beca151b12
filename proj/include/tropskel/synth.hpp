#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropskel/divisor.hpp"
#include "tropskel/pl_function.hpp"
#include "tropskel/tropical.hpp"

namespace tropskel {

/// 0 on the component of g - e containing `zero_end`, slope 1 along e away
/// from it, length(e) on the other component. e must be a bridge.
PLFunction synth_edge_disconnected(const MetricGraph& g, std::size_t e, std::size_t zero_end);

/// Distance to the nearer endpoint along e, 0 off e. e must not be a bridge.
PLFunction synth_edge_connected(const MetricGraph& g, std::size_t e);

enum class Half { First, Second };

/// sign * (tent of height length/4 on one half of e), 0 elsewhere. e must
/// not be a bridge.
PLFunction synth_half_separator(const MetricGraph& g, std::size_t e, Half half, int sign);

/// Separates the interior of e from the interior of f (e != f, e not a
/// bridge): the tent on e.
PLFunction synth_edge_pair_separator(const MetricGraph& g, std::size_t e, std::size_t f);

struct VertexSeparator {
  std::optional<PLFunction> function;  // f(first) > 0 >= f(second)
  std::size_t first = 0, second = 0;   // (v1, v2) or swapped
  Divisor base;                        // effective, ~ d, base + div(f) effective
  std::string reason;                  // why no candidate fit the budget
};

/// Small radial functions around v1 or v2 with radius a quarter of the
/// shortest incident edge, in both orientations. A candidate fits when
/// d - neg(div f) has an effective representative. Rays are ignored.
VertexSeparator synth_vertex_separator(const MetricGraph& g, std::size_t v1, std::size_t v2, const Divisor& d);

/// Finite core of g: repeatedly strips weight-0 vertices of finite valence
/// at most 1 (smallest index first), keeping at least one vertex. Ids are
/// shared with g.
struct Core {
  MetricGraph graph;
  std::vector<bool> vertex_in, edge_in;  // per vertex / edge of g
  std::vector<std::size_t> parent;       // per g vertex outside the core: next vertex toward it
  std::vector<std::size_t> parent_edge;
  std::vector<Rational> depth;           // distance to the core along the tree

  GraphPoint up(const MetricGraph& g, const GraphPoint& p) const;
  GraphPoint down(const MetricGraph& g, const GraphPoint& p) const;
  Divisor up(const MetricGraph& g, const Divisor& d) const;
  Divisor down(const MetricGraph& g, const Divisor& d) const;
  /// Extends a function on the core to g, constant along hanging trees and rays.
  PLFunction extend(const MetricGraph& g, const PLFunction& f) const;
};

Core core_of(const MetricGraph& g);

/// 0 on the core, slope 1 along the path from the core to the base of ray r
/// and along r, locally constant everywhere else.
PLFunction synth_end_function(const MetricGraph& g, std::size_t r);

struct SynthesisResult {
  bool feasible = false;
  std::string reason;                    // the construction that broke the budget
  std::vector<std::string> coordinates;  // label of each f_i
  std::optional<TropMap> map;
  std::optional<FaithfulnessCertificate> certificate;

  bool faithful() const { return certificate && certificate->verdict == Verdict::Faithful; }
};

/// Builds D0 of degree d and coordinate functions from the constructions
/// above, then certifies the result. Requires every weight-0 vertex to have
/// valence at least 2 counting rays.
SynthesisResult synthesize_faithful(const MetricGraph& g, long d);

}  // namespace tropskel
