#include "tropskel/synth.hpp"

#include <algorithm>
#include <deque>

#include "induced.hpp"
#include "tropskel/equivalence.hpp"
#include "tropskel/model_map.hpp"
#include "tropskel/reduction.hpp"
#include "tropskel/weighted.hpp"

namespace tropskel {

namespace {

void require_edge(const MetricGraph& g, std::size_t e) {
  if (e >= g.num_edges()) throw InvalidArgument("edge index out of range");
}

void require_connected_type(const MetricGraph& g, std::size_t e, const char* what) {
  require_edge(g, e);
  if (g.classify_edge(e) != EdgeType::Connected) {
    throw InvalidArgument(std::string(what) + ": edge \"" + g.edge(e).id + "\" is a bridge");
  }
}

// Copies a function on g.without_rays() back onto g, constant on the rays.
PLFunction with_rays(const MetricGraph& g, const PLFunction& f) {
  if (!g.has_rays()) return f;
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(v, f.vertex_value(v));
  for (std::size_t e = 0; e < g.num_edges(); ++e) b.edge(e, f.edge_knots(e));
  return b.build();
}

}  // namespace

PLFunction synth_edge_disconnected(const MetricGraph& g, std::size_t e, std::size_t zero_end) {
  require_edge(g, e);
  const Edge& ed = g.edge(e);
  if (zero_end != ed.tail && zero_end != ed.head) {
    throw InvalidArgument("bridge function: zero end is not an endpoint of \"" + ed.id + "\"");
  }
  if (g.classify_edge(e) != EdgeType::Disconnected) {
    throw InvalidArgument("bridge function: edge \"" + ed.id + "\" is not a bridge");
  }
  std::vector<bool> removed(g.num_edges(), false);
  removed[e] = true;
  auto zero_side = g.reachable(zero_end, removed);
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(v, zero_side[v] ? Rational() : ed.length);
  return b.build();
}

PLFunction synth_edge_connected(const MetricGraph& g, std::size_t e) {
  require_connected_type(g, e, "edge tent");
  Rational half = g.edge(e).length / Rational(2);
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(v, Rational());
  b.edge(e, {{half, half}});
  return b.build();
}

PLFunction synth_half_separator(const MetricGraph& g, std::size_t e, Half half, int sign) {
  require_connected_type(g, e, "half separator");
  if (sign != 1 && sign != -1) throw InvalidArgument("half separator: sign must be +1 or -1");
  const Rational& len = g.edge(e).length;
  Rational q = len / Rational(4);
  Rational h = q * Rational(sign);
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(v, Rational());
  if (half == Half::First) b.edge(e, {{q, h}, {len / Rational(2), Rational()}});
  else b.edge(e, {{len / Rational(2), Rational()}, {len - q, h}});
  return b.build();
}

PLFunction synth_edge_pair_separator(const MetricGraph& g, std::size_t e, std::size_t f) {
  require_edge(g, f);
  if (e == f) throw InvalidArgument("pair separator: the two edges coincide");
  return synth_edge_connected(g, e);
}

VertexSeparator synth_vertex_separator(const MetricGraph& g, std::size_t v1, std::size_t v2, const Divisor& d) {
  if (v1 >= g.num_vertices() || v2 >= g.num_vertices()) throw InvalidArgument("vertex separator: vertex out of range");
  if (v1 == v2) throw InvalidArgument("vertex separator: the two vertices coincide");
  MetricGraph fin = g.without_rays();
  std::optional<Rational> shortest;
  for (std::size_t e = 0; e < fin.num_edges(); ++e) {
    const Edge& ed = fin.edge(e);
    bool touches = ed.tail == v1 || ed.head == v1 || ed.tail == v2 || ed.head == v2;
    if (touches && (!shortest || ed.length < *shortest)) shortest = ed.length;
  }
  VertexSeparator out;
  if (!shortest) {
    out.reason = "no edge at either vertex";
    return out;
  }
  Rational eps = *shortest / Rational(4);

  struct Candidate {
    std::size_t first, second;
    PLFunction f;
  };
  auto peak = [&](std::size_t v) { return (-clamped_distance(fin, GraphPoint::vertex(v), 0, eps)).plus_constant(eps); };
  auto well = [&](std::size_t v) { return clamped_distance(fin, GraphPoint::vertex(v), 0, eps); };
  std::vector<Candidate> candidates{{v1, v2, peak(v1)}, {v1, v2, well(v2)}, {v2, v1, peak(v2)}, {v2, v1, well(v1)}};

  for (auto& c : candidates) {
    Divisor neg = principal_divisor(fin, c.f).negative_part();
    Divisor rest = d - neg;
    if (!has_effective_representative(fin, rest)) continue;
    out.function = with_rays(g, c.f);
    out.first = c.first;
    out.second = c.second;
    out.base = effective_of_bounded_class(fin, rest) + neg;
    return out;
  }
  out.reason = "no radial separator of \"" + g.vertex(v1).id + "\" and \"" + g.vertex(v2).id +
               "\" fits a divisor of degree " + std::to_string(d.degree());
  return out;
}

GraphPoint Core::up(const MetricGraph& g, const GraphPoint& p) const {
  if (p.is_vertex()) return GraphPoint::vertex(g.vertex_index(graph.vertex(p.index).id));
  if (p.on_ray()) throw InvalidArgument("core: points on rays are not in the core");
  return {GraphPoint::Kind::Edge, g.edge_index(graph.edge(p.index).id), p.offset};
}

GraphPoint Core::down(const MetricGraph& g, const GraphPoint& p) const {
  if (p.is_vertex() && vertex_in[p.index]) return GraphPoint::vertex(graph.vertex_index(g.vertex(p.index).id));
  if (p.on_edge() && edge_in[p.index]) return {GraphPoint::Kind::Edge, graph.edge_index(g.edge(p.index).id), p.offset};
  throw InvalidArgument("core: point " + g.point_label(p) + " lies outside the core");
}

Divisor Core::up(const MetricGraph& g, const Divisor& d) const {
  Divisor out;
  for (auto& [p, c] : d) out.add(up(g, p), c);
  return out;
}

Divisor Core::down(const MetricGraph& g, const Divisor& d) const {
  Divisor out;
  for (auto& [p, c] : d) out.add(down(g, p), c);
  return out;
}

PLFunction Core::extend(const MetricGraph& g, const PLFunction& f) const {
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::size_t at = v;
    while (!vertex_in[at]) at = parent[at];
    b.vertex(v, f.vertex_value(graph.vertex_index(g.vertex(at).id)));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (edge_in[e]) b.edge(e, f.edge_knots(graph.edge_index(g.edge(e).id)));
  }
  return b.build();
}

Core core_of(const MetricGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> vin(n, true), ein(g.num_edges(), true);
  std::vector<int> val(n);
  for (std::size_t v = 0; v < n; ++v) val[v] = g.finite_valence(v);
  std::size_t left = n;
  for (bool changed = true; changed && left > 1;) {
    changed = false;
    for (std::size_t v = 0; v < n && left > 1; ++v) {
      if (!vin[v] || g.vertex(v).weight != 0 || val[v] > 1) continue;
      vin[v] = false;
      --left;
      for (auto& inc : g.incidences(v)) {
        if (inc.kind == Incidence::Kind::Ray || !ein[inc.index]) continue;
        ein[inc.index] = false;
        const Edge& ed = g.edge(inc.index);
        --val[ed.tail == v ? ed.head : ed.tail];
      }
      changed = true;
      break;
    }
  }

  detail::Induced ind(g.without_rays(), vin, ein);
  Core core{std::move(ind.g), vin, ein, std::vector<std::size_t>(n, n), std::vector<std::size_t>(n, g.num_edges()),
            std::vector<Rational>(n)};
  std::deque<std::size_t> queue;
  std::vector<bool> seen = vin;
  for (std::size_t v = 0; v < n; ++v) {
    if (vin[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto& inc : g.incidences(u)) {
      if (inc.kind == Incidence::Kind::Ray || ein[inc.index]) continue;
      const Edge& ed = g.edge(inc.index);
      std::size_t w = ed.tail == u ? ed.head : ed.tail;
      if (seen[w]) continue;
      seen[w] = true;
      core.parent[w] = u;
      core.parent_edge[w] = inc.index;
      core.depth[w] = core.depth[u] + ed.length;
      queue.push_back(w);
    }
  }
  return core;
}

PLFunction synth_end_function(const MetricGraph& g, std::size_t r) {
  if (r >= g.num_rays()) throw InvalidArgument("end function: ray index out of range");
  Core core = core_of(g);
  const std::size_t n = g.num_vertices();
  std::vector<bool> on_path(n, false);
  for (std::size_t v = g.ray(r).base; !core.vertex_in[v]; v = core.parent[v]) on_path[v] = true;
  PLBuilder b(g);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t at = v;
    while (!core.vertex_in[at] && !on_path[at]) at = core.parent[at];
    b.vertex(v, core.depth[at]);
  }
  b.ray(r, {}, 1);
  return b.build();
}

SynthesisResult synthesize_faithful(const MetricGraph& g, long d) {
  if (d < 1) throw InvalidArgument("synthesis needs degree >= 1");
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).weight == 0 && g.valence(v) == 1) {
      throw InvalidArgument("vertex \"" + g.vertex(v).id + "\" has valence 1 and weight 0");
    }
  }
  Core core = core_of(g);
  const MetricGraph& k = core.graph;
  const long wg = k.weighted_genus();

  struct Item {
    std::string label;
    PLFunction f;
  };
  std::vector<Item> items;
  SynthesisResult out;

  IslandDecomposition isl = islands(k);
  const ModelMap& model = isl.model;
  const MetricGraph& h = model.coarse();
  auto lift = [&](const PLFunction& fh) { return core.extend(g, model.to_fine(fh)); };
  Divisor base_h;

  if (h.num_vertices() == 1 && h.num_edges() == 1 && h.vertex(0).weight == 0) {
    const Edge& loop = h.edge(0);
    base_h = Divisor::point(GraphPoint::vertex(0)) + Divisor::point(h.point_on_edge(0, loop.length / Rational(2)), d - 1);
    items.push_back({"tent " + loop.id, lift(synth_edge_connected(h, 0))});
    items.push_back({"half " + loop.id, lift(synth_half_separator(h, 0, Half::Second, -1))});
  } else {
    Divisor start = Divisor::point(GraphPoint::vertex(0), d);
    Divisor dk = start;
    if (wg >= 2 && d >= wg) dk = good_effective_divisor(k, start);
    else if (d >= wg) dk = weighted_riemann(k, start);
    base_h = model.to_coarse(dk);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const Edge& ed = h.edge(e);
      if (isl.edge_island[e] < 0) {
        items.push_back({"bridge " + ed.id, lift(synth_edge_disconnected(h, e, ed.tail))});
      } else {
        items.push_back({"tent " + ed.id, lift(synth_edge_connected(h, e))});
        items.push_back({"half " + ed.id, lift(synth_half_separator(h, e, Half::First, 1))});
      }
    }
    for (std::size_t v1 = 0; v1 < h.num_vertices(); ++v1) {
      for (std::size_t v2 = v1 + 1; v2 < h.num_vertices(); ++v2) {
        if (isl.vertex_island[v1] != isl.vertex_island[v2]) continue;
        std::string label = "vertex " + h.vertex(v1).id + "|" + h.vertex(v2).id;
        auto vs = synth_vertex_separator(h, v1, v2, base_h);
        if (!vs.function) {
          out.reason = label + ": " + vs.reason;
          return out;
        }
        items.push_back({label, lift(*vs.function)});
      }
    }
  }
  for (std::size_t r = 0; r < g.num_rays(); ++r) items.push_back({"end " + g.ray(r).id, -synth_end_function(g, r)});

  const Divisor base_k = model.to_fine(base_h);
  const Divisor base = core.up(g, base_k);
  std::vector<std::string> labels;
  std::vector<PLFunction> coords;
  auto push = [&](std::string label, PLFunction f) {
    if (f.is_constant() || std::find(coords.begin(), coords.end(), f) != coords.end()) return;
    labels.push_back(std::move(label));
    coords.push_back(std::move(f));
  };

  for (auto& item : items) {
    Divisor div = principal_divisor(g, item.f);
    if ((base + div).is_effective()) {
      push(item.label, item.f);
      continue;
    }
    // Move D0 within its class so that it absorbs the poles of f.
    Divisor neg = core.down(g, div.negative_part());
    Divisor rest = base_k - neg;
    if (!has_effective_representative(k, rest)) {
      out.reason = item.label + ": D0 - neg(div f) has degree " + std::to_string(rest.degree()) +
                   " and no effective member";
      return out;
    }
    Divisor moved = effective_of_bounded_class(k, rest) + neg;
    PLFunction shift = core.extend(g, *is_linearly_equivalent(k, base_k, moved).witness);
    push("shift for " + item.label, shift);
    push(item.label + " (shifted)", shift + item.f);
  }

  out.feasible = true;
  out.coordinates = std::move(labels);
  out.map = TropMap::assemble(g, base, std::move(coords));
  out.certificate = certify_faithful(*out.map);
  return out;
}

}  // namespace tropskel
