#include "tropskel/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropskel {

const char* to_string(EdgeType t) { return t == EdgeType::Connected ? "connected" : "disconnected"; }

namespace {

void check_id(const std::string& id, const char* what) {
  if (id.empty()) throw GraphError(std::string("empty ") + what + " id");
  if (id.find('@') != std::string::npos) {
    throw GraphError(std::string(what) + " id \"" + id + "\" contains '@'");
  }
}

template <typename T>
std::optional<std::size_t> find_by_id(const std::vector<T>& items, std::string_view id) {
  auto it = std::lower_bound(items.begin(), items.end(), id,
                             [](const T& item, std::string_view key) { return item.id < key; });
  if (it == items.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - items.begin());
}

}  // namespace

MetricGraph MetricGraph::build(GraphDescription d) {
  if (d.vertices.empty()) throw GraphError("graph has no vertices");

  std::set<std::string> ids;
  auto claim = [&](const std::string& id, const char* what) {
    check_id(id, what);
    if (!ids.insert(id).second) throw GraphError("duplicate id \"" + id + "\"");
  };

  MetricGraph g;
  std::sort(d.vertices.begin(), d.vertices.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (auto& v : d.vertices) {
    claim(v.id, "vertex");
    if (v.weight < 0) throw GraphError("vertex \"" + v.id + "\" has negative weight");
    g.vertices_.push_back({v.id, v.weight});
  }

  auto endpoint = [&](const std::string& id, const std::string& owner) {
    auto idx = find_by_id(g.vertices_, id);
    if (!idx) throw GraphError("\"" + owner + "\" references unknown vertex \"" + id + "\"");
    return *idx;
  };

  std::sort(d.edges.begin(), d.edges.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (auto& e : d.edges) {
    claim(e.id, "edge");
    if (!e.length.is_positive()) throw GraphError("edge \"" + e.id + "\" has non-positive length " + e.length.str());
    g.edges_.push_back({e.id, endpoint(e.tail, e.id), endpoint(e.head, e.id), e.length});
  }

  std::sort(d.rays.begin(), d.rays.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (auto& r : d.rays) {
    claim(r.id, "ray");
    g.rays_.push_back({r.id, endpoint(r.base, r.id)});
  }

  g.incidences_.assign(g.vertices_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.incidences_[g.edges_[e].tail].push_back({Incidence::Kind::EdgeTail, e});
    g.incidences_[g.edges_[e].head].push_back({Incidence::Kind::EdgeHead, e});
  }
  for (std::size_t r = 0; r < g.rays_.size(); ++r) {
    g.incidences_[g.rays_[r].base].push_back({Incidence::Kind::Ray, r});
  }

  auto seen = g.reachable(0, std::vector<bool>(g.edges_.size(), false));
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw GraphError("graph is disconnected: vertex \"" + g.vertices_[v].id + "\" unreachable");
  }
  return g;
}

GraphDescription MetricGraph::description() const {
  GraphDescription d;
  for (auto& v : vertices_) d.vertices.push_back({v.id, v.weight});
  for (auto& e : edges_) d.edges.push_back({e.id, vertices_[e.tail].id, vertices_[e.head].id, e.length});
  for (auto& r : rays_) d.rays.push_back({r.id, vertices_[r.base].id});
  return d;
}

std::optional<std::size_t> MetricGraph::find_vertex(std::string_view id) const { return find_by_id(vertices_, id); }
std::optional<std::size_t> MetricGraph::find_edge(std::string_view id) const { return find_by_id(edges_, id); }
std::optional<std::size_t> MetricGraph::find_ray(std::string_view id) const { return find_by_id(rays_, id); }

std::size_t MetricGraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw InvalidArgument("unknown vertex \"" + std::string(id) + "\"");
}
std::size_t MetricGraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InvalidArgument("unknown edge \"" + std::string(id) + "\"");
}
std::size_t MetricGraph::ray_index(std::string_view id) const {
  if (auto r = find_ray(id)) return *r;
  throw InvalidArgument("unknown ray \"" + std::string(id) + "\"");
}

int MetricGraph::finite_valence(std::size_t v) const {
  int n = 0;
  for (auto& inc : incidences_.at(v)) n += inc.kind != Incidence::Kind::Ray;
  return n;
}

int MetricGraph::valence(const GraphPoint& p) const { return p.is_vertex() ? valence(p.index) : 2; }

long MetricGraph::genus() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
}

long MetricGraph::total_weight() const {
  long w = 0;
  for (auto& v : vertices_) w += v.weight;
  return w;
}

Rational MetricGraph::total_length() const {
  Rational t;
  for (auto& e : edges_) t += e.length;
  return t;
}

std::vector<bool> MetricGraph::reachable(std::size_t start, const std::vector<bool>& removed) const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto& inc : incidences_[v]) {
      if (inc.kind == Incidence::Kind::Ray || removed[inc.index]) continue;
      const Edge& e = edges_[inc.index];
      auto w = inc.kind == Incidence::Kind::EdgeTail ? e.head : e.tail;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

EdgeType MetricGraph::classify_edge(std::size_t e) const {
  const Edge& edge = edges_.at(e);
  if (edge.is_loop()) return EdgeType::Connected;
  std::vector<bool> removed(edges_.size(), false);
  removed[e] = true;
  return reachable(edge.tail, removed)[edge.head] ? EdgeType::Connected : EdgeType::Disconnected;
}

GraphPoint MetricGraph::point_on_edge(std::size_t e, const Rational& offset) const {
  const Edge& edge = edges_.at(e);
  if (offset.is_negative() || offset > edge.length) {
    throw InvalidArgument("offset " + offset.str() + " outside edge \"" + edge.id + "\" of length " + edge.length.str());
  }
  if (offset.is_zero()) return GraphPoint::vertex(edge.tail);
  if (offset == edge.length) return GraphPoint::vertex(edge.head);
  return {GraphPoint::Kind::Edge, e, offset};
}

GraphPoint MetricGraph::point_on_ray(std::size_t r, const Rational& offset) const {
  const Ray& ray = rays_.at(r);
  if (offset.is_negative()) throw InvalidArgument("negative offset on ray \"" + ray.id + "\"");
  if (offset.is_zero()) return GraphPoint::vertex(ray.base);
  return {GraphPoint::Kind::Ray, r, offset};
}

GraphPoint MetricGraph::middle_point(std::size_t e) const {
  if (e >= edges_.size()) throw InvalidArgument("middle_point: unknown edge index");
  return point_on_edge(e, edges_[e].length / Rational(2));
}

bool MetricGraph::contains(const GraphPoint& p) const {
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      return p.index < vertices_.size() && p.offset.is_zero();
    case GraphPoint::Kind::Edge:
      return p.index < edges_.size() && p.offset.is_positive() && p.offset < edges_[p.index].length;
    case GraphPoint::Kind::Ray:
      return p.index < rays_.size() && p.offset.is_positive();
  }
  return false;
}

void MetricGraph::check_point(const GraphPoint& p) const {
  if (!contains(p)) throw InvalidArgument("point is not a normalized point of this graph");
}

std::string MetricGraph::point_label(const GraphPoint& p) const {
  check_point(p);
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      return vertices_[p.index].id;
    case GraphPoint::Kind::Edge:
      return edges_[p.index].id + "@" + p.offset.str();
    case GraphPoint::Kind::Ray:
      return rays_[p.index].id + "@" + p.offset.str();
  }
  return {};
}

GraphPoint MetricGraph::parse_point(std::string_view label) const {
  auto at = label.find('@');
  if (at == std::string_view::npos) {
    if (auto v = find_vertex(label)) return GraphPoint::vertex(*v);
    throw FormatError("unknown vertex \"" + std::string(label) + "\"");
  }
  auto owner = label.substr(0, at);
  Rational off = Rational::parse(label.substr(at + 1));
  try {
    if (auto e = find_edge(owner)) return point_on_edge(*e, off);
    if (auto r = find_ray(owner)) return point_on_ray(*r, off);
  } catch (const InvalidArgument& ex) {
    throw FormatError(ex.what(), std::string(label));
  }
  throw FormatError("unknown edge or ray \"" + std::string(owner) + "\"");
}

std::vector<Rational> MetricGraph::vertex_distances(const GraphPoint& p) const {
  check_point(p);
  const std::size_t n = vertices_.size();
  std::vector<std::optional<Rational>> dist(n);
  auto relax = [&](std::size_t v, const Rational& d) {
    if (!dist[v] || d < *dist[v]) dist[v] = d;
  };
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      relax(p.index, Rational());
      break;
    case GraphPoint::Kind::Edge: {
      const Edge& e = edges_[p.index];
      relax(e.tail, p.offset);
      relax(e.head, e.length - p.offset);
      break;
    }
    case GraphPoint::Kind::Ray:
      relax(rays_[p.index].base, p.offset);
      break;
  }
  std::vector<bool> done(n, false);
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (!best || *dist[v] < *dist[*best])) best = v;
    }
    if (!best) break;
    done[*best] = true;
    for (auto& inc : incidences_[*best]) {
      if (inc.kind == Incidence::Kind::Ray) continue;
      const Edge& e = edges_[inc.index];
      auto w = inc.kind == Incidence::Kind::EdgeTail ? e.head : e.tail;
      relax(w, *dist[*best] + e.length);
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = *dist[v];
  return out;
}

Rational MetricGraph::distance(const GraphPoint& a, const GraphPoint& b) const {
  check_point(a);
  check_point(b);
  if (a.on_ray() && b.on_ray() && a.index == b.index) return abs(a.offset - b.offset);
  if (a.on_ray()) return a.offset + distance(GraphPoint::vertex(rays_[a.index].base), b);
  if (b.on_ray()) return b.offset + distance(a, GraphPoint::vertex(rays_[b.index].base));

  auto d = vertex_distances(a);
  if (b.is_vertex()) return d[b.index];
  const Edge& e = edges_[b.index];
  Rational best = min(d[e.tail] + b.offset, d[e.head] + (e.length - b.offset));
  if (a.on_edge() && a.index == b.index) best = min(best, abs(a.offset - b.offset));
  return best;
}

MetricGraph MetricGraph::without_rays() const {
  MetricGraph g = *this;
  g.rays_.clear();
  for (auto& incs : g.incidences_) {
    std::erase_if(incs, [](const Incidence& i) { return i.kind == Incidence::Kind::Ray; });
  }
  return g;
}

}  // namespace tropskel
