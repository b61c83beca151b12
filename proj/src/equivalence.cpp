#include "tropskel/equivalence.hpp"

#include "tropskel/reduction.hpp"

namespace tropskel {

EquivalenceResult is_linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2) {
  if (d1.degree() != d2.degree()) return {};
  auto base = GraphPoint::vertex(0);
  auto r1 = reduce_divisor(g, d1, base);
  auto r2 = reduce_divisor(g, d2, base);
  if (r1.reduced != r2.reduced) return {};
  return {true, r1.witness - r2.witness};
}

Rational circle_class_invariant(const MetricGraph& g, const Divisor& d) {
  if (g.has_rays() || g.genus() != 1 || g.num_edges() != g.num_vertices()) {
    throw InvalidArgument("circle_class_invariant needs a graph that is a single cycle");
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) != 2) throw InvalidArgument("circle_class_invariant needs a graph that is a single cycle");
  }
  // walk the cycle from vertex 0, recording the arc position of every vertex
  // and the direction in which each edge is traversed
  const std::size_t n = g.num_edges();
  std::vector<Rational> vpos(g.num_vertices());
  std::vector<Rational> estart(n);
  std::vector<bool> forward(n), used(n, false);
  Rational pos;
  std::size_t at = 0;
  for (std::size_t step = 0; step < n; ++step) {
    vpos[at] = pos;
    std::size_t next_edge = n;
    for (auto& inc : g.incidences(at)) {
      if (!used[inc.index]) {
        next_edge = inc.index;
        forward[next_edge] = inc.kind == Incidence::Kind::EdgeTail;
        break;
      }
    }
    used[next_edge] = true;
    estart[next_edge] = pos;
    const Edge& e = g.edge(next_edge);
    pos += e.length;
    at = forward[next_edge] ? e.head : e.tail;
  }
  const Rational circumference = pos;

  Rational sum;
  for (auto& [p, c] : d) {
    g.check_point(p);
    Rational x = p.is_vertex() ? vpos[p.index]
                               : estart[p.index] + (forward[p.index] ? p.offset : g.edge(p.index).length - p.offset);
    sum += Rational(c) * x;
  }
  Rational k(sum / circumference);
  return sum - Rational(k.floor()) * circumference;
}

}  // namespace tropskel
