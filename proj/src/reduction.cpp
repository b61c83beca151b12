#include "tropskel/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropskel/model_map.hpp"
#include "radial.hpp"

namespace tropskel {

namespace {

constexpr long kMaxBurnMoves = 200000;

Rational dist_at(const MetricGraph& h, const std::vector<Rational>& dv, const GraphPoint& p) {
  if (p.is_vertex()) return dv[p.index];
  const Edge& e = h.edge(p.index);
  return min(dv[e.tail] + p.offset, dv[e.head] + (e.length - p.offset));
}

struct Segment {
  std::size_t edge;
  Rational a, b;
  std::size_t na, nb;
};

// Nodes are the vertices of h plus the support of d; segments are the
// pieces of edges between consecutive nodes.
struct Model {
  std::vector<GraphPoint> nodes;
  std::map<GraphPoint, std::size_t> index;
  std::vector<Segment> segs;
  std::vector<std::vector<std::size_t>> incident;

  Model(const MetricGraph& h, const Divisor& d) {
    for (std::size_t v = 0; v < h.num_vertices(); ++v) add(GraphPoint::vertex(v));
    std::vector<std::vector<Rational>> cuts(h.num_edges());
    for (auto& [p, c] : d) {
      if (p.on_ray()) throw InvalidArgument("divisor has support on a ray");
      if (p.on_edge()) {
        add(p);
        cuts[p.index].push_back(p.offset);
      }
    }
    incident.resize(nodes.size());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const Edge& edge = h.edge(e);
      Rational prev;
      std::size_t prev_node = edge.tail;
      cuts[e].push_back(edge.length);
      for (auto& o : cuts[e]) {
        std::size_t n = o == edge.length ? edge.head : index.at({GraphPoint::Kind::Edge, e, o});
        incident[prev_node].push_back(segs.size());
        incident[n].push_back(segs.size());
        segs.push_back({e, prev, o, prev_node, n});
        prev = o;
        prev_node = n;
      }
    }
  }

  void add(const GraphPoint& p) {
    index.emplace(p, nodes.size());
    nodes.push_back(p);
  }

  std::size_t other(std::size_t s, std::size_t x) const { return segs[s].na == x ? segs[s].nb : segs[s].na; }
};

std::vector<bool> burn(const Model& m, const Divisor& d, std::size_t source) {
  std::vector<bool> burnt(m.nodes.size(), false), seg_burnt(m.segs.size(), false);
  std::vector<long> hits(m.nodes.size(), 0);
  std::vector<std::size_t> stack{source};
  burnt[source] = true;
  while (!stack.empty()) {
    auto y = stack.back();
    stack.pop_back();
    for (auto s : m.incident[y]) {
      if (seg_burnt[s]) continue;
      seg_burnt[s] = true;
      auto x = m.other(s, y);
      if (x == y) continue;
      if (!burnt[x] && ++hits[x] > d[m.nodes[x]]) {
        burnt[x] = true;
        stack.push_back(x);
      }
    }
  }
  return burnt;
}

// Step 1: pull chips outward across the distance spheres around v0 until
// the divisor is effective away from v0.
void make_effective_off_base(const MetricGraph& h, std::size_t v0, Divisor& d, PLFunction& witness,
                             std::vector<ReductionMove>& transcript, const ModelMap& map) {
  auto dv = h.vertex_distances(GraphPoint::vertex(v0));
  std::set<Rational> radii{Rational()};
  for (auto& r : dv) radii.insert(r);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    radii.insert((dv[edge.tail] + dv[edge.head] + edge.length) / Rational(2));
  }
  for (auto& [p, c] : d) radii.insert(dist_at(h, dv, p));
  std::vector<Rational> r(radii.begin(), radii.end());

  for (std::size_t j = r.size() - 1; j-- > 0;) {
    const Rational lo = r[j], hi = r[j + 1];
    const Rational width = hi - lo;
    auto phi = detail::radial(h, dv, {lo, hi}, [&](const Rational& x) {
      if (x <= lo) return Rational();
      if (x >= hi) return width;
      return x - lo;
    });
    long c = 0;
    for (auto& [p, coeff] : d) {
      if (coeff >= 0 || dist_at(h, dv, p) != hi) continue;
      long in = -order_at(h, phi, p);
      if (in <= 0) throw Error("reduction: sphere point without an inward branch");
      c = std::max(c, (-coeff + in - 1) / in);
    }
    if (c == 0) continue;
    auto move = (-c) * phi;
    d += principal_divisor(h, move);
    witness += move;
    transcript.push_back({ReductionMove::Kind::Layer, c, width, {}, map.to_coarse(d)});
  }
}

// Step 2: metric burning from v0; slide the unburnt region toward the fire.
void burn_to_reduced(const MetricGraph& h, std::size_t v0, Divisor& d, PLFunction& witness,
                     std::vector<ReductionMove>& transcript, const ModelMap& map) {
  for (long iter = 0;; ++iter) {
    if (iter == kMaxBurnMoves) throw Error("reduction: burning did not terminate");
    Model m(h, d);
    auto burnt = burn(m, d, v0);
    if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) return;

    std::optional<Rational> delta;
    for (auto& s : m.segs) {
      if (burnt[s.na] != burnt[s.nb]) {
        Rational len = s.b - s.a;
        if (!delta || len < *delta) delta = len;
      }
    }
    const Rational step = *delta;
    const Rational low = -step;

    PLBuilder b(h);
    for (std::size_t v = 0; v < h.num_vertices(); ++v) b.vertex(v, burnt[v] ? low : Rational());
    std::vector<std::vector<Knot>> knots(h.num_edges());
    for (auto& s : m.segs) {
      auto& k = knots[s.edge];
      bool ba = burnt[s.na], bb = burnt[s.nb];
      if (!ba && bb) {
        k.insert(k.end(), {{s.a, Rational()}, {s.a + step, low}, {s.b, low}});
      } else if (ba && !bb) {
        k.insert(k.end(), {{s.a, low}, {s.b - step, low}, {s.b, Rational()}});
      } else {
        Rational val = ba ? low : Rational();
        k.insert(k.end(), {{s.a, val}, {s.b, val}});
      }
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e) b.edge(e, std::move(knots[e]));
    auto psi = b.build();

    d += principal_divisor(h, psi);
    witness += psi;
    std::vector<GraphPoint> fired;
    for (std::size_t x = 0; x < m.nodes.size(); ++x) {
      if (!burnt[x]) fired.push_back(map.to_coarse(m.nodes[x]));
    }
    std::sort(fired.begin(), fired.end());
    transcript.push_back({ReductionMove::Kind::Burn, 1, step, std::move(fired), map.to_coarse(d)});
  }
}

void require_compact(const MetricGraph& g) {
  if (g.has_rays()) throw InvalidArgument("reduction works on the compact core only; remove the rays first");
}

}  // namespace

ReductionResult reduce_divisor(const MetricGraph& g, const Divisor& d, const GraphPoint& v0) {
  require_compact(g);
  g.check_point(v0);
  for (auto& [p, c] : d) g.check_point(p);

  std::vector<GraphPoint> cut;
  if (v0.on_edge()) cut.push_back(v0);
  ModelMap map = subdivide(g, cut);
  const MetricGraph& h = map.fine();
  std::size_t base = map.to_fine(v0).index;

  Divisor work = map.to_fine(d);
  PLFunction witness = PLFunction::constant(h);
  ReductionResult out;
  make_effective_off_base(h, base, work, witness, out.transcript, map);
  burn_to_reduced(h, base, work, witness, out.transcript, map);

  out.reduced = map.to_coarse(work);
  out.witness = map.to_coarse(witness);
  return out;
}

bool is_reduced(const MetricGraph& g, const Divisor& d, const GraphPoint& v0) {
  require_compact(g);
  for (auto& [p, c] : d) {
    if (c < 0 && p != v0) return false;
  }
  std::vector<GraphPoint> cut;
  if (v0.on_edge()) cut.push_back(v0);
  ModelMap map = subdivide(g, cut);
  Divisor fd = map.to_fine(d);
  Model m(map.fine(), fd);
  auto burnt = burn(m, fd, map.to_fine(v0).index);
  return std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; });
}

bool has_effective_representative(const MetricGraph& g, const Divisor& d) {
  return reduce_divisor(g, d, GraphPoint::vertex(0)).reduced.is_effective();
}

Divisor effective_of_bounded_class(const MetricGraph& g, const Divisor& d) {
  auto red = reduce_divisor(g, d, GraphPoint::vertex(0)).reduced;
  if (!red.is_effective()) {
    throw InvalidArgument("class of degree " + std::to_string(d.degree()) + " has no effective member (genus " +
                          std::to_string(g.genus()) + ")");
  }
  return red;
}

Divisor dhar_oracle(const MetricGraph& g, const Divisor& d, const GraphPoint& v0) {
  require_compact(g);
  // node numbering: vertices first, then the interior lattice points of each edge
  std::vector<std::size_t> first_interior(g.num_edges());
  std::size_t n = g.num_vertices();
  std::vector<long> len(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!g.edge(e).length.is_integer()) throw InvalidArgument("oracle needs integer edge lengths");
    len[e] = g.edge(e).length.to_long();
    first_interior[e] = n;
    n += static_cast<std::size_t>(len[e] - 1);
  }
  auto node_of = [&](const GraphPoint& p) -> std::size_t {
    g.check_point(p);
    if (p.is_vertex()) return p.index;
    if (p.on_ray() || !p.offset.is_integer()) throw InvalidArgument("oracle needs support on lattice points");
    return first_interior[p.index] + static_cast<std::size_t>(p.offset.to_long() - 1);
  };
  std::vector<GraphPoint> point_of(n);
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) point_of[v] = GraphPoint::vertex(v);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t prev = g.edge(e).tail;
    for (long k = 1; k < len[e]; ++k) {
      std::size_t x = first_interior[e] + static_cast<std::size_t>(k - 1);
      point_of[x] = {GraphPoint::Kind::Edge, e, Rational(k)};
      links.push_back({prev, x});
      prev = x;
    }
    links.push_back({prev, g.edge(e).head});
  }
  std::erase_if(links, [](auto& l) { return l.first == l.second; });

  std::vector<long> chips(n, 0);
  for (auto& [p, c] : d) chips[node_of(p)] += c;
  const std::size_t q = node_of(v0);

  std::vector<std::vector<std::size_t>> adj(n);
  for (auto& [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // layers by hop count; push chips out one layer at a time
  std::vector<long> layer(n, -1);
  std::vector<std::size_t> order{q};
  layer[q] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto y : adj[order[i]]) {
      if (layer[y] < 0) {
        layer[y] = layer[order[i]] + 1;
        order.push_back(y);
      }
    }
  }
  long top = layer[order.back()];
  for (long i = top; i >= 1; --i) {
    long k = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (layer[x] != i || chips[x] >= 0) continue;
      long in = std::count_if(adj[x].begin(), adj[x].end(), [&](std::size_t y) { return layer[y] == i - 1; });
      k = std::max(k, (-chips[x] + in - 1) / in);
    }
    if (k == 0) continue;
    for (auto& [a, b] : links) {
      bool ia = layer[a] < i, ib = layer[b] < i;
      if (ia && !ib) chips[a] -= k, chips[b] += k;
      if (ib && !ia) chips[b] -= k, chips[a] += k;
    }
  }

  // Dhar burning; fire the whole unburnt set until everything burns
  for (;;) {
    std::vector<bool> burnt(n, false);
    burnt[q] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (burnt[x]) continue;
        long hot = std::count_if(adj[x].begin(), adj[x].end(), [&](std::size_t y) { return burnt[y]; });
        if (hot > chips[x]) burnt[x] = changed = true;
      }
    }
    if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) break;
    for (auto& [a, b] : links) {
      if (!burnt[a] && burnt[b]) chips[a]--, chips[b]++;
      if (!burnt[b] && burnt[a]) chips[b]--, chips[a]++;
    }
  }

  Divisor out;
  for (std::size_t x = 0; x < n; ++x) out.add(point_of[x], chips[x]);
  return out;
}

}  // namespace tropskel
