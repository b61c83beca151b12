#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/graph.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/2"), q(3, 2));
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse("4").str(), "4/1");
  EXPECT_THROW(Rational::parse("1/0"), FormatError);
  EXPECT_THROW(Rational::parse("x"), FormatError);
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(-7, 2).ceil(), -3);
}

TEST(Graph, CatalogGenus) {
  EXPECT_EQ(catalog_graph("circle-4").genus(), 1);
  EXPECT_EQ(catalog_graph("theta").genus(), 2);
  EXPECT_EQ(catalog_graph("path-3").genus(), 0);
  EXPECT_EQ(catalog_graph("dumbbell").genus(), 2);
  EXPECT_EQ(catalog_graph("circle-with-ray").genus(), 1);
  for (auto& e : catalog()) EXPECT_NO_THROW(MetricGraph::build(e.description)) << e.name;
}

TEST(Graph, RejectsBadInput) {
  GraphDescription two_loops{{{"a", 0}, {"b", 0}}, {{"x", "a", "a", q(1)}, {"y", "b", "b", q(1)}}, {}};
  EXPECT_THROW(MetricGraph::build(two_loops), GraphError);
  GraphDescription zero_len{{{"a", 0}, {"b", 0}}, {{"x", "a", "b", q(0)}}, {}};
  EXPECT_THROW(MetricGraph::build(zero_len), GraphError);
  GraphDescription dangling{{{"a", 0}}, {{"x", "a", "c", q(1)}}, {}};
  EXPECT_THROW(MetricGraph::build(dangling), GraphError);
  GraphDescription dup{{{"a", 0}}, {{"a", "a", "a", q(1)}}, {}};
  EXPECT_THROW(MetricGraph::build(dup), GraphError);
  GraphDescription reserved{{{"a@1", 0}}, {}, {}};
  EXPECT_THROW(MetricGraph::build(reserved), GraphError);
}

TEST(Graph, ClassifyEdges) {
  auto db = catalog_graph("dumbbell");
  EXPECT_EQ(db.classify_edge(db.edge_index("b")), EdgeType::Disconnected);
  EXPECT_EQ(db.classify_edge(db.edge_index("l1")), EdgeType::Connected);
  EXPECT_EQ(db.classify_edge(db.edge_index("l2")), EdgeType::Connected);
  auto th = catalog_graph("theta");
  for (std::size_t e = 0; e < th.num_edges(); ++e) EXPECT_EQ(th.classify_edge(e), EdgeType::Connected);
  auto path = catalog_graph("path-3");
  for (std::size_t e = 0; e < path.num_edges(); ++e) EXPECT_EQ(path.classify_edge(e), EdgeType::Disconnected);
}

TEST(Graph, Distances) {
  auto c4 = catalog_graph("circle-4");
  auto v0 = GraphPoint::vertex(0);
  EXPECT_EQ(c4.distance(v0, c4.point_on_edge(0, q(3))), q(1));
  EXPECT_EQ(c4.distance(c4.point_on_edge(0, q(1, 2)), c4.point_on_edge(0, q(7, 2))), q(1));
  EXPECT_EQ(c4.distance(v0, v0), q(0));
  auto th = catalog_graph("theta");
  EXPECT_EQ(th.distance(GraphPoint::vertex(th.vertex_index("u")), GraphPoint::vertex(th.vertex_index("v"))), q(1));
  // across the long edge the direct path loses to the detour through the short one
  auto a = th.point_on_edge(th.edge_index("e3"), q(1, 2));
  auto b = th.point_on_edge(th.edge_index("e3"), q(5, 2));
  EXPECT_EQ(th.distance(a, b), q(2));
  auto cr = catalog_graph("circle-with-ray");
  EXPECT_EQ(cr.distance(cr.point_on_ray(0, q(3)), cr.point_on_edge(0, q(1))), q(4));
}

TEST(Graph, DistanceIsAMetric) {
  for (const char* name : {"theta", "dumbbell", "circle-4", "path-3"}) {
    auto g = catalog_graph(name);
    std::vector<GraphPoint> pts;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) pts.push_back(GraphPoint::vertex(v));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      for (long k = 1; k < 4; ++k) pts.push_back(g.point_on_edge(e, g.edge(e).length * q(k, 4)));
    }
    for (auto& x : pts) {
      for (auto& y : pts) {
        auto dxy = g.distance(x, y);
        EXPECT_EQ(dxy, g.distance(y, x));
        EXPECT_EQ(dxy.is_zero(), x == y);
        for (auto& z : pts) EXPECT_LE(g.distance(x, z), dxy + g.distance(y, z));
      }
    }
  }
}

TEST(Graph, PointsAndLabels) {
  auto c4 = catalog_graph("circle-4");
  EXPECT_EQ(c4.point_on_edge(0, q(0)), GraphPoint::vertex(0));
  EXPECT_EQ(c4.point_on_edge(0, q(4)), GraphPoint::vertex(0));
  EXPECT_EQ(c4.middle_point(0).offset, q(2));
  EXPECT_EQ(catalog_graph("theta").middle_point(2).offset, q(3, 2));
  EXPECT_EQ(catalog_graph("dumbbell").middle_point(0).offset, q(1, 2));
  auto p = c4.point_on_edge(0, q(3, 2));
  EXPECT_EQ(c4.point_label(p), "e0@3/2");
  EXPECT_EQ(c4.parse_point("e0@3/2"), p);
  EXPECT_EQ(c4.parse_point("e0@4"), GraphPoint::vertex(0));
  EXPECT_THROW(c4.parse_point("e0@5"), FormatError);
  EXPECT_THROW(c4.parse_point("zz"), FormatError);
}
