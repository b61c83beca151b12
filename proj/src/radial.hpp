#pragma once

#include <set>
#include <vector>

#include "tropskel/pl_function.hpp"

namespace tropskel::detail {

// shape(dist(v0, x)) where dv holds the distances from v0 to every vertex
// and v0 itself is a vertex. `breaks` lists the breakpoints of the PL
// `shape`, whose slope past the last break is `tail_slope`.
template <typename Shape>
PLFunction radial(const MetricGraph& h, const std::vector<Rational>& dv, const std::vector<Rational>& breaks,
                  Shape shape, long tail_slope = 0) {
  PLBuilder b(h);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) b.vertex(v, shape(dv[v]));
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    const Rational& dt = dv[edge.tail];
    const Rational& dh = dv[edge.head];
    Rational peak = (dh + edge.length - dt) / Rational(2);
    std::set<Rational> offs{Rational(), edge.length, peak};
    for (auto& r : breaks) {
      Rational up = r - dt;
      if (up.is_positive() && up < peak) offs.insert(up);
      Rational down = dh + edge.length - r;
      if (down > peak && down < edge.length) offs.insert(down);
    }
    std::vector<Knot> k;
    for (auto& o : offs) k.push_back({o, shape(min(dt + o, dh + (edge.length - o)))});
    b.edge(e, std::move(k));
  }
  for (std::size_t r = 0; r < h.num_rays(); ++r) {
    const Rational& db = dv[h.ray(r).base];
    std::vector<Knot> k;
    for (auto& x : breaks) {
      if (x > db) k.push_back({x - db, shape(x)});
    }
    b.ray(r, std::move(k), tail_slope);
  }
  return b.build();
}

}  // namespace tropskel::detail
