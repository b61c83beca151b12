#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropskel/rational.hpp"

namespace tropskel {

/// A location on a metric graph: a vertex, an interior point of an edge, or
/// a point on a ray. Offsets on edges are measured from the edge's tail and
/// lie in the open interval (0, length); offsets on rays are > 0. Endpoint
/// offsets are always normalized to vertex loci by MetricGraph, so equal
/// geometric points compare equal.
struct GraphPoint {
  enum class Kind : std::uint8_t { Vertex = 0, Edge = 1, Ray = 2 };

  Kind kind = Kind::Vertex;
  std::size_t index = 0;
  Rational offset;

  static GraphPoint vertex(std::size_t v) { return {Kind::Vertex, v, Rational()}; }

  bool is_vertex() const { return kind == Kind::Vertex; }
  bool on_edge() const { return kind == Kind::Edge; }
  bool on_ray() const { return kind == Kind::Ray; }

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
  friend std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

enum class EdgeType { Connected, Disconnected };

const char* to_string(EdgeType t);

struct VertexSpec {
  std::string id;
  long weight = 0;
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  Rational length;
};

struct RaySpec {
  std::string id;
  std::string base;
};

/// Unvalidated graph input, as read from a file or assembled in code.
struct GraphDescription {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<RaySpec> rays;
};

struct Vertex {
  std::string id;
  long weight = 0;
};

struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
};

struct Ray {
  std::string id;
  std::size_t base = 0;
};

/// One branch leaving a vertex: the tail or head end of an edge, or a ray.
struct Incidence {
  enum class Kind : std::uint8_t { EdgeTail, EdgeHead, Ray };
  Kind kind;
  std::size_t index;
};

/// Connected metric graph with exact rational edge lengths, optional rays
/// (unbounded ends attached at one vertex) and non-negative vertex weights.
///
/// Vertices, edges and rays are stored sorted by id, so indices are a
/// deterministic function of the description. Instances are immutable.
class MetricGraph {
 public:
  /// Validates and builds. Throws GraphError on disconnected input,
  /// non-positive lengths, negative weights, duplicate or dangling ids.
  static MetricGraph build(GraphDescription description);

  GraphDescription description() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const Ray& ray(std::size_t r) const { return rays_.at(r); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_rays() const { return rays_.size(); }
  bool has_rays() const { return !rays_.empty(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::optional<std::size_t> find_ray(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;
  std::size_t ray_index(std::string_view id) const;

  const std::vector<Incidence>& incidences(std::size_t v) const { return incidences_.at(v); }
  /// Number of branches at v: loops count twice, rays count.
  int valence(std::size_t v) const { return static_cast<int>(incidences_.at(v).size()); }
  /// Valence ignoring rays.
  int finite_valence(std::size_t v) const;
  /// Valence of an arbitrary point (2 for edge/ray interior points).
  int valence(const GraphPoint& p) const;

  /// First Betti number #E - #V + 1 (rays ignored).
  long genus() const;
  long total_weight() const;
  /// Betti number plus total vertex weight.
  long weighted_genus() const { return genus() + total_weight(); }
  Rational total_length() const;

  /// Connected iff deleting the open edge keeps the graph connected.
  EdgeType classify_edge(std::size_t e) const;
  /// Vertices reachable from `start` when the edges flagged in `removed` are deleted.
  std::vector<bool> reachable(std::size_t start, const std::vector<bool>& removed) const;

  /// Point at `offset` from the tail of edge e; offsets 0 and length map to vertices.
  GraphPoint point_on_edge(std::size_t e, const Rational& offset) const;
  GraphPoint point_on_ray(std::size_t r, const Rational& offset) const;
  GraphPoint middle_point(std::size_t e) const;
  bool contains(const GraphPoint& p) const;
  void check_point(const GraphPoint& p) const;

  /// Text locator: "v" for a vertex, "e@p/q" on an edge, "r@p/q" on a ray.
  std::string point_label(const GraphPoint& p) const;
  GraphPoint parse_point(std::string_view label) const;

  /// Shortest-path distances from p to every vertex (Dijkstra, exact).
  std::vector<Rational> vertex_distances(const GraphPoint& p) const;
  /// Shortest-path distance. Points on rays are reached through the ray base.
  Rational distance(const GraphPoint& a, const GraphPoint& b) const;

  /// Same vertices and edges, no rays. Indices of vertices and edges are unchanged.
  MetricGraph without_rays() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Ray> rays_;
  std::vector<std::vector<Incidence>> incidences_;
};

}  // namespace tropskel
