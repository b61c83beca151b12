#include "tropskel/random_graphs.hpp"

#include "tropskel/model_map.hpp"
#include "tropskel/weighted.hpp"

namespace tropskel {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

GraphDescription random_graph_description(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  GraphDescription d;
  const long n = uniform(rng, 1, opt.max_vertices);
  for (long i = 0; i < n; ++i) d.vertices.push_back({"v" + std::to_string(i), uniform(rng, 0, opt.max_weight)});

  auto length = [&] {
    if (opt.integral) return Rational(uniform(rng, 1, opt.max_length));
    long den = uniform(rng, 1, 3);
    return Rational(uniform(rng, 1, opt.max_length * den), den);
  };
  std::vector<std::pair<long, long>> ends;
  for (long i = 1; i < n; ++i) ends.push_back({uniform(rng, 0, i - 1), i});
  const long m = uniform(rng, std::max<long>(n - 1, 1), std::max<long>(opt.max_edges, n - 1));
  while (static_cast<long>(ends.size()) < m) {
    long a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    if (a == b && !opt.loops) {
      if (n == 1) break;
      continue;
    }
    ends.push_back({a, b});
  }
  for (std::size_t k = 0; k < ends.size(); ++k) {
    auto [a, b] = ends[k];
    if (uniform(rng, 0, 1)) std::swap(a, b);
    d.edges.push_back({"e" + std::to_string(k), d.vertices[a].id, d.vertices[b].id, length()});
  }
  if (opt.no_weightless_leaves) {
    std::vector<int> val(n, 0);
    for (auto& [a, b] : ends) ++val[a], ++val[b];
    for (long i = 0; i < n; ++i) {
      if (val[i] <= 1 && d.vertices[i].weight == 0) d.vertices[i].weight = 1;
    }
  }
  return d;
}

MetricGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  return MetricGraph::build(random_graph_description(rng, opt));
}

MetricGraph random_weighted_graph(std::mt19937_64& rng, RandomGraphOptions opt, long min_genus) {
  opt.no_weightless_leaves = true;
  auto desc = random_graph_description(rng, opt);
  for (;;) {
    auto g = MetricGraph::build(desc);
    if (g.weighted_genus() < min_genus) {
      desc.vertices[0].weight += min_genus - g.weighted_genus();
      continue;
    }
    auto dec = islands(g);
    bool changed = false;
    for (std::size_t v = 0; v < dec.model.coarse().num_vertices(); ++v) {
      if (dec.island_genus[dec.vertex_island[v]] == 0) {
        auto id = dec.model.coarse().vertex(v).id;
        for (auto& vs : desc.vertices) {
          if (vs.id == id) vs.weight = 1;
        }
        changed = true;
      }
    }
    if (!changed) return g;
  }
}

GraphPoint random_point(const MetricGraph& g, std::mt19937_64& rng, bool lattice) {
  const long nv = static_cast<long>(g.num_vertices()), ne = static_cast<long>(g.num_edges());
  long k = uniform(rng, 0, nv + ne - 1);
  if (k < nv) return GraphPoint::vertex(static_cast<std::size_t>(k));
  auto e = static_cast<std::size_t>(k - nv);
  const Rational& len = g.edge(e).length;
  if (lattice) {
    long top = len.floor();
    return g.point_on_edge(e, Rational(uniform(rng, 0, top)));
  }
  return g.point_on_edge(e, len * Rational(uniform(rng, 0, 4), 4));
}

Divisor random_divisor(const MetricGraph& g, std::mt19937_64& rng, int points, long max_coeff, bool lattice) {
  Divisor d;
  for (int i = 0; i < points; ++i) d.add(random_point(g, rng, lattice), uniform(rng, -max_coeff, max_coeff));
  return d;
}

Divisor random_effective(const MetricGraph& g, std::mt19937_64& rng, long degree, bool lattice) {
  Divisor d;
  for (long i = 0; i < degree; ++i) d.add(random_point(g, rng, lattice), 1);
  return d;
}

PLFunction random_pl_function(const MetricGraph& g, std::mt19937_64& rng) {
  PLFunction f = PLFunction::constant(g);
  const long terms = uniform(rng, 1, 3);
  for (long i = 0; i < terms; ++i) {
    auto p = random_point(g, rng, false);
    Rational lo(uniform(rng, 0, 4), 2);
    Rational hi = lo + Rational(uniform(rng, 1, 6), 2);
    f += uniform(rng, -2, 2) * clamped_distance(g, p, lo, hi);
  }
  return f;
}

}  // namespace tropskel
