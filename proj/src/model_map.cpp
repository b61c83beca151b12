#include "tropskel/model_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "radial.hpp"

namespace tropskel {

ModelMap::ModelMap(MetricGraph coarse, MetricGraph fine, std::vector<std::size_t> vertex_to_fine,
                   std::vector<std::vector<Link>> links, std::vector<std::size_t> ray_to_fine)
    : coarse_(std::move(coarse)),
      fine_(std::move(fine)),
      vertex_to_fine_(std::move(vertex_to_fine)),
      links_(std::move(links)),
      ray_to_fine_(std::move(ray_to_fine)) {
  if (vertex_to_fine_.size() != coarse_.num_vertices() || links_.size() != coarse_.num_edges() ||
      ray_to_fine_.size() != coarse_.num_rays() || coarse_.num_rays() != fine_.num_rays()) {
    throw InvalidArgument("model map: size mismatch");
  }

  const std::size_t unset = static_cast<std::size_t>(-1);
  owner_.assign(fine_.num_edges(), {unset, unset});
  fine_vertex_to_coarse_.assign(fine_.num_vertices(), GraphPoint{GraphPoint::Kind::Ray, unset, Rational()});
  std::vector<bool> assigned(fine_.num_vertices(), false);

  auto assign = [&](std::size_t fv, const GraphPoint& p) {
    if (assigned[fv] && fine_vertex_to_coarse_[fv] != p) throw InvalidArgument("model map: vertex assigned twice");
    fine_vertex_to_coarse_[fv] = p;
    assigned[fv] = true;
  };

  for (std::size_t v = 0; v < coarse_.num_vertices(); ++v) {
    if (fine_.vertex(vertex_to_fine_[v]).weight != coarse_.vertex(v).weight) {
      throw InvalidArgument("model map: weights differ at \"" + coarse_.vertex(v).id + "\"");
    }
    assign(vertex_to_fine_[v], GraphPoint::vertex(v));
  }

  for (std::size_t c = 0; c < coarse_.num_edges(); ++c) {
    const Edge& ce = coarse_.edge(c);
    Rational pos;
    std::size_t at = vertex_to_fine_[ce.tail];
    for (std::size_t i = 0; i < links_[c].size(); ++i) {
      const Link& l = links_[c][i];
      const Edge& fe = fine_.edge(l.fine_edge);
      if (owner_[l.fine_edge].first != unset) throw InvalidArgument("model map: fine edge used twice");
      owner_[l.fine_edge] = {c, i};
      if (l.start != pos) throw InvalidArgument("model map: links of \"" + ce.id + "\" do not tile it");
      std::size_t from = l.reversed ? fe.head : fe.tail;
      std::size_t to = l.reversed ? fe.tail : fe.head;
      if (from != at) throw InvalidArgument("model map: links of \"" + ce.id + "\" are not a chain");
      pos += fe.length;
      if (i + 1 < links_[c].size()) {
        if (fine_.vertex(to).weight != 0) throw InvalidArgument("model map: weighted vertex inside a coarse edge");
        assign(to, coarse_.point_on_edge(c, pos));
      }
      at = to;
    }
    if (links_[c].empty() || pos != ce.length || at != vertex_to_fine_[ce.head]) {
      throw InvalidArgument("model map: links of \"" + ce.id + "\" do not tile it");
    }
  }
  for (std::size_t fe = 0; fe < fine_.num_edges(); ++fe) {
    if (owner_[fe].first == unset) throw InvalidArgument("model map: fine edge \"" + fine_.edge(fe).id + "\" unused");
  }
  for (std::size_t fv = 0; fv < fine_.num_vertices(); ++fv) {
    if (!assigned[fv]) throw InvalidArgument("model map: fine vertex \"" + fine_.vertex(fv).id + "\" unused");
  }
  ray_to_coarse_.assign(fine_.num_rays(), unset);
  for (std::size_t r = 0; r < coarse_.num_rays(); ++r) {
    std::size_t fr = ray_to_fine_[r];
    if (vertex_to_fine_[coarse_.ray(r).base] != fine_.ray(fr).base) throw InvalidArgument("model map: ray bases differ");
    ray_to_coarse_[fr] = r;
  }
}

GraphPoint ModelMap::to_fine(const GraphPoint& p) const {
  coarse_.check_point(p);
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      return GraphPoint::vertex(vertex_to_fine_[p.index]);
    case GraphPoint::Kind::Ray:
      return fine_.point_on_ray(ray_to_fine_[p.index], p.offset);
    case GraphPoint::Kind::Edge:
      break;
  }
  for (const Link& l : links_[p.index]) {
    const Rational& len = fine_.edge(l.fine_edge).length;
    if (p.offset <= l.start + len) {
      Rational o = p.offset - l.start;
      return fine_.point_on_edge(l.fine_edge, l.reversed ? len - o : o);
    }
  }
  throw InvalidArgument("model map: offset beyond coarse edge");
}

GraphPoint ModelMap::to_coarse(const GraphPoint& p) const {
  fine_.check_point(p);
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      return fine_vertex_to_coarse_[p.index];
    case GraphPoint::Kind::Ray:
      return coarse_.point_on_ray(ray_to_coarse_[p.index], p.offset);
    case GraphPoint::Kind::Edge:
      break;
  }
  auto [c, i] = owner_[p.index];
  const Link& l = links_[c][i];
  const Rational& len = fine_.edge(l.fine_edge).length;
  return coarse_.point_on_edge(c, l.start + (l.reversed ? len - p.offset : p.offset));
}

Divisor ModelMap::to_fine(const Divisor& d) const {
  Divisor out;
  for (auto& [p, c] : d) out.add(to_fine(p), c);
  return out;
}

Divisor ModelMap::to_coarse(const Divisor& d) const {
  Divisor out;
  for (auto& [p, c] : d) out.add(to_coarse(p), c);
  return out;
}

PLFunction ModelMap::to_fine(const PLFunction& f) const {
  PLBuilder b(fine_);
  for (std::size_t fv = 0; fv < fine_.num_vertices(); ++fv) b.vertex(fv, f.value(fine_vertex_to_coarse_[fv]));
  for (std::size_t c = 0; c < coarse_.num_edges(); ++c) {
    const auto& knots = f.edge_knots(c);
    for (const Link& l : links_[c]) {
      const Rational& len = fine_.edge(l.fine_edge).length;
      Rational end = l.start + len;
      std::vector<Knot> k;
      for (auto& knot : knots) {
        if (knot.offset > l.start && knot.offset < end) {
          Rational o = knot.offset - l.start;
          k.push_back({l.reversed ? len - o : o, knot.value});
        }
      }
      b.edge(l.fine_edge, std::move(k));
    }
  }
  for (std::size_t r = 0; r < coarse_.num_rays(); ++r) {
    const auto& rp = f.ray_profile(r);
    b.ray(ray_to_fine_[r], rp.knots, rp.terminal_slope);
  }
  return b.build();
}

PLFunction ModelMap::to_coarse(const PLFunction& f) const {
  PLBuilder b(coarse_);
  for (std::size_t v = 0; v < coarse_.num_vertices(); ++v) b.vertex(v, f.vertex_value(vertex_to_fine_[v]));
  for (std::size_t c = 0; c < coarse_.num_edges(); ++c) {
    std::vector<Knot> k;
    for (const Link& l : links_[c]) {
      const Rational& len = fine_.edge(l.fine_edge).length;
      for (auto& knot : f.edge_knots(l.fine_edge)) {
        k.push_back({l.start + (l.reversed ? len - knot.offset : knot.offset), knot.value});
      }
    }
    b.edge(c, std::move(k));
  }
  for (std::size_t r = 0; r < coarse_.num_rays(); ++r) {
    const auto& rp = f.ray_profile(ray_to_fine_[r]);
    b.ray(r, rp.knots, rp.terminal_slope);
  }
  return b.build();
}

ModelMap subdivide(const MetricGraph& g, const std::vector<GraphPoint>& points) {
  std::map<std::size_t, std::set<Rational>> cuts;
  for (auto& p : points) {
    g.check_point(p);
    if (!p.on_edge()) throw InvalidArgument("subdivide: only edge-interior points can become vertices");
    cuts[p.index].insert(p.offset);
  }

  GraphDescription d = g.description();
  GraphDescription out;
  out.vertices = d.vertices;
  out.rays = d.rays;
  struct Pending {
    std::size_t coarse;
    std::vector<std::pair<std::string, Rational>> pieces;  // fine id, start
  };
  std::vector<Pending> pending;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    Pending pd{e, {}};
    auto it = cuts.find(e);
    if (it == cuts.end()) {
      out.edges.push_back(d.edges[e]);
      pd.pieces.push_back({edge.id, Rational()});
    } else {
      std::string prev = g.vertex(edge.tail).id;
      Rational start;
      std::size_t k = 0;
      for (auto& off : it->second) {
        std::string vid = edge.id + "#p" + std::to_string(k + 1);
        std::string eid = edge.id + "#" + std::to_string(k);
        out.vertices.push_back({vid, 0});
        out.edges.push_back({eid, prev, vid, off - start});
        pd.pieces.push_back({eid, start});
        prev = vid;
        start = off;
        ++k;
      }
      std::string eid = edge.id + "#" + std::to_string(k);
      out.edges.push_back({eid, prev, g.vertex(edge.head).id, edge.length - start});
      pd.pieces.push_back({eid, start});
    }
    pending.push_back(std::move(pd));
  }

  MetricGraph fine = MetricGraph::build(out);
  std::vector<std::size_t> vmap(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vmap[v] = fine.vertex_index(g.vertex(v).id);
  std::vector<std::vector<ModelMap::Link>> links(g.num_edges());
  for (auto& pd : pending) {
    for (auto& [id, start] : pd.pieces) links[pd.coarse].push_back({fine.edge_index(id), false, start});
  }
  std::vector<std::size_t> rmap(g.num_rays());
  for (std::size_t r = 0; r < g.num_rays(); ++r) rmap[r] = fine.ray_index(g.ray(r).id);
  return ModelMap(g, std::move(fine), std::move(vmap), std::move(links), std::move(rmap));
}

PLFunction clamped_distance(const MetricGraph& g, const GraphPoint& p, const Rational& lo, const Rational& hi) {
  if (p.on_ray()) throw InvalidArgument("clamped_distance: centre must be a finite point");
  if (lo.is_negative() || hi <= lo) throw InvalidArgument("clamped_distance: need 0 <= lo < hi");
  std::vector<GraphPoint> cut;
  if (p.on_edge()) cut.push_back(p);
  ModelMap map = subdivide(g, cut);
  const MetricGraph& h = map.fine();
  auto dv = h.vertex_distances(map.to_fine(p));
  auto f = detail::radial(h, dv, {lo, hi}, [&](const Rational& x) {
    if (x <= lo) return Rational();
    if (x >= hi) return hi - lo;
    return x - lo;
  });
  return map.to_coarse(f);
}

}  // namespace tropskel
