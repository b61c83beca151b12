#include "tropskel/pl_function.hpp"

#include <algorithm>

namespace tropskel {

namespace {

long segment_slope(const Knot& a, const Knot& b) {
  Rational s = (b.value - a.value) / (b.offset - a.offset);
  if (!s.is_integer()) {
    throw InvalidArgument("non-integer slope " + s.str() + " between offsets " + a.offset.str() + " and " +
                          b.offset.str());
  }
  return s.to_long();
}

// Value of the piecewise-linear interpolation of `knots` at `offset`; beyond
// the last knot the line continues with `tail_slope`.
Rational interpolate(const std::vector<Knot>& knots, const Rational& offset, long tail_slope) {
  auto it = std::upper_bound(knots.begin(), knots.end(), offset,
                             [](const Rational& o, const Knot& k) { return o < k.offset; });
  if (it == knots.begin()) throw InvalidArgument("offset " + offset.str() + " before first knot");
  const Knot& lo = *std::prev(it);
  if (lo.offset == offset) return lo.value;
  if (it == knots.end()) return lo.value + Rational(tail_slope) * (offset - lo.offset);
  const Knot& hi = *it;
  return lo.value + (hi.value - lo.value) * (offset - lo.offset) / (hi.offset - lo.offset);
}

// Drops knots whose neighbouring slopes agree. The first knot always stays;
// the last stays unless `tail_slope` continues it (rays).
void drop_redundant(std::vector<Knot>& knots, const long* tail_slope) {
  if (knots.size() < 2) return;
  std::vector<Knot> out{knots.front()};
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    if (segment_slope(out.back(), knots[i]) != segment_slope(knots[i], knots[i + 1])) out.push_back(knots[i]);
  }
  if (!tail_slope || segment_slope(out.back(), knots.back()) != *tail_slope) out.push_back(knots.back());
  knots = std::move(out);
}

std::vector<Rational> merged_offsets(const std::vector<Knot>& a, const std::vector<Knot>& b) {
  std::vector<Rational> offs;
  offs.reserve(a.size() + b.size());
  for (auto& k : a) offs.push_back(k.offset);
  for (auto& k : b) offs.push_back(k.offset);
  std::sort(offs.begin(), offs.end());
  offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
  return offs;
}

}  // namespace

PLFunction PLFunction::constant(const MetricGraph& g, const Rational& c) {
  PLBuilder b(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) b.vertex(v, c);
  return b.build();
}

Rational PLFunction::value(const GraphPoint& p) const {
  switch (p.kind) {
    case GraphPoint::Kind::Vertex:
      return vertex_value(p.index);
    case GraphPoint::Kind::Edge:
      return value_on_edge(p.index, p.offset);
    case GraphPoint::Kind::Ray:
      return value_on_ray(p.index, p.offset);
  }
  return {};
}

Rational PLFunction::value_on_edge(std::size_t e, const Rational& offset) const {
  const auto& k = edges_.at(e);
  if (offset > k.back().offset) throw InvalidArgument("offset " + offset.str() + " beyond edge end");
  return interpolate(k, offset, 0);
}

Rational PLFunction::value_on_ray(std::size_t r, const Rational& offset) const {
  const auto& rp = rays_.at(r);
  return interpolate(rp.knots, offset, rp.terminal_slope);
}

long PLFunction::edge_slope(std::size_t e, const Rational& offset, bool right) const {
  const auto& k = edges_.at(e);
  if (right && offset >= k.back().offset) throw InvalidArgument("no slope to the right of the edge head");
  if (!right && offset <= k.front().offset) throw InvalidArgument("no slope to the left of the edge tail");
  // index of the piece containing (offset, offset+) or (offset-, offset)
  std::size_t i = 0;
  while (i + 1 < k.size() && (right ? k[i + 1].offset <= offset : k[i + 1].offset < offset)) ++i;
  return segment_slope(k[i], k[i + 1]);
}

long PLFunction::ray_slope(std::size_t r, const Rational& offset, bool right) const {
  const auto& rp = rays_.at(r);
  const auto& k = rp.knots;
  if (!right && offset <= 0) throw InvalidArgument("no slope before the ray base");
  std::size_t i = 0;
  while (i + 1 < k.size() && (right ? k[i + 1].offset <= offset : k[i + 1].offset < offset)) ++i;
  if (i + 1 == k.size()) return rp.terminal_slope;
  return segment_slope(k[i], k[i + 1]);
}

std::vector<long> PLFunction::edge_slopes(std::size_t e) const {
  const auto& k = edges_.at(e);
  std::vector<long> s;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) s.push_back(segment_slope(k[i], k[i + 1]));
  return s;
}

bool PLFunction::is_constant() const {
  if (vertex_values_.empty()) return true;
  const Rational& c = vertex_values_.front();
  for (auto& v : vertex_values_) {
    if (v != c) return false;
  }
  for (auto& k : edges_) {
    if (k.size() != 2) return false;
  }
  for (auto& r : rays_) {
    if (r.knots.size() != 1 || r.terminal_slope != 0) return false;
  }
  return true;
}

PLFunction PLFunction::plus_constant(const Rational& c) const {
  PLFunction f = *this;
  for (auto& v : f.vertex_values_) v += c;
  for (auto& k : f.edges_) {
    for (auto& knot : k) knot.value += c;
  }
  for (auto& r : f.rays_) {
    for (auto& knot : r.knots) knot.value += c;
  }
  return f;
}

PLFunction combine(long a, const PLFunction& f, long b, const PLFunction& g) {
  if (f.num_vertices() != g.num_vertices() || f.num_edges() != g.num_edges() || f.num_rays() != g.num_rays()) {
    throw InvalidArgument("combining functions on different graphs");
  }
  Rational ra(a), rb(b);
  PLFunction h;
  h.vertex_values_.resize(f.num_vertices());
  for (std::size_t v = 0; v < f.num_vertices(); ++v) {
    h.vertex_values_[v] = ra * f.vertex_values_[v] + rb * g.vertex_values_[v];
  }
  h.edges_.resize(f.num_edges());
  for (std::size_t e = 0; e < f.num_edges(); ++e) {
    for (auto& o : merged_offsets(f.edges_[e], g.edges_[e])) {
      h.edges_[e].push_back({o, ra * f.value_on_edge(e, o) + rb * g.value_on_edge(e, o)});
    }
  }
  h.rays_.resize(f.num_rays());
  for (std::size_t r = 0; r < f.num_rays(); ++r) {
    auto& out = h.rays_[r];
    for (auto& o : merged_offsets(f.rays_[r].knots, g.rays_[r].knots)) {
      out.knots.push_back({o, ra * f.value_on_ray(r, o) + rb * g.value_on_ray(r, o)});
    }
    out.terminal_slope = a * f.rays_[r].terminal_slope + b * g.rays_[r].terminal_slope;
  }
  h.normalize();
  return h;
}

void PLFunction::normalize() {
  for (auto& k : edges_) drop_redundant(k, nullptr);
  for (auto& r : rays_) drop_redundant(r.knots, &r.terminal_slope);
}

PLBuilder::PLBuilder(const MetricGraph& g)
    : graph_(&g),
      vertex_values_(g.num_vertices()),
      edges_(g.num_edges()),
      rays_(g.num_rays()) {}

PLBuilder& PLBuilder::vertex(std::size_t v, const Rational& value) {
  vertex_values_.at(v) = value;
  return *this;
}

PLBuilder& PLBuilder::edge(std::size_t e, std::vector<Knot> knots) {
  edges_.at(e) = std::move(knots);
  return *this;
}

PLBuilder& PLBuilder::ray(std::size_t r, std::vector<Knot> knots, long terminal_slope) {
  rays_.at(r) = {std::move(knots), terminal_slope};
  return *this;
}

PLFunction PLBuilder::build() const {
  const MetricGraph& g = *graph_;
  PLFunction f;
  f.vertex_values_ = vertex_values_;

  auto sorted = [](std::vector<Knot> k, const std::string& owner) {
    std::sort(k.begin(), k.end(), [](const Knot& a, const Knot& b) { return a.offset < b.offset; });
    for (std::size_t i = 1; i < k.size(); ++i) {
      if (k[i].offset == k[i - 1].offset) {
        if (k[i].value != k[i - 1].value) throw InvalidArgument("two values at one offset on \"" + owner + "\"");
      }
    }
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  };

  f.edges_.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    auto k = sorted(edges_[e], edge.id);
    if (!k.empty() && (k.front().offset.is_negative() || k.back().offset > edge.length)) {
      throw InvalidArgument("knot outside edge \"" + edge.id + "\"");
    }
    const Rational& vt = vertex_values_[edge.tail];
    const Rational& vh = vertex_values_[edge.head];
    if (k.empty() || k.front().offset.is_positive()) k.insert(k.begin(), {Rational(), vt});
    if (k.back().offset != edge.length) k.push_back({edge.length, vh});
    if (k.front().value != vt || k.back().value != vh) {
      throw InvalidArgument("function is discontinuous at an endpoint of edge \"" + edge.id + "\"");
    }
    for (std::size_t i = 0; i + 1 < k.size(); ++i) segment_slope(k[i], k[i + 1]);
    f.edges_[e] = std::move(k);
  }

  f.rays_.resize(g.num_rays());
  for (std::size_t r = 0; r < g.num_rays(); ++r) {
    const Ray& ray = g.ray(r);
    auto k = sorted(rays_[r].knots, ray.id);
    if (!k.empty() && k.front().offset.is_negative()) throw InvalidArgument("knot before base of ray \"" + ray.id + "\"");
    const Rational& vb = vertex_values_[ray.base];
    if (k.empty() || k.front().offset.is_positive()) k.insert(k.begin(), {Rational(), vb});
    if (k.front().value != vb) throw InvalidArgument("function is discontinuous at the base of ray \"" + ray.id + "\"");
    for (std::size_t i = 0; i + 1 < k.size(); ++i) segment_slope(k[i], k[i + 1]);
    f.rays_[r] = {std::move(k), rays_[r].terminal_slope};
  }

  f.normalize();
  return f;
}

long order_at(const MetricGraph& g, const PLFunction& f, const GraphPoint& p) {
  g.check_point(p);
  switch (p.kind) {
    case GraphPoint::Kind::Vertex: {
      long ord = 0;
      for (auto& inc : g.incidences(p.index)) {
        switch (inc.kind) {
          case Incidence::Kind::EdgeTail:
            ord += f.edge_slopes(inc.index).front();
            break;
          case Incidence::Kind::EdgeHead:
            ord -= f.edge_slopes(inc.index).back();
            break;
          case Incidence::Kind::Ray:
            ord += f.ray_slope(inc.index, Rational(), true);
            break;
        }
      }
      return ord;
    }
    case GraphPoint::Kind::Edge:
      return f.edge_slope(p.index, p.offset, true) - f.edge_slope(p.index, p.offset, false);
    case GraphPoint::Kind::Ray:
      return f.ray_slope(p.index, p.offset, true) - f.ray_slope(p.index, p.offset, false);
  }
  return 0;
}

Divisor principal_divisor(const MetricGraph& g, const PLFunction& f) {
  Divisor d;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) d.add(GraphPoint::vertex(v), order_at(g, f, GraphPoint::vertex(v)));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& k = f.edge_knots(e);
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
      d.add({GraphPoint::Kind::Edge, e, k[i].offset}, segment_slope(k[i], k[i + 1]) - segment_slope(k[i - 1], k[i]));
    }
  }
  for (std::size_t r = 0; r < g.num_rays(); ++r) {
    const auto& rp = f.ray_profile(r);
    const auto& k = rp.knots;
    for (std::size_t i = 1; i < k.size(); ++i) {
      long after = i + 1 < k.size() ? segment_slope(k[i], k[i + 1]) : rp.terminal_slope;
      d.add({GraphPoint::Kind::Ray, r, k[i].offset}, after - segment_slope(k[i - 1], k[i]));
    }
  }
  return d;
}

std::vector<long> end_orders(const PLFunction& f) {
  std::vector<long> out;
  for (std::size_t r = 0; r < f.num_rays(); ++r) out.push_back(-f.ray_profile(r).terminal_slope);
  return out;
}

}  // namespace tropskel
