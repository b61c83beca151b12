#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/pl_function.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

// min(t, 4 - t) on the loop of circle-4
PLFunction c4_tent(const MetricGraph& c4) { return PLBuilder(c4).edge(0, {{q(2), q(2)}}).build(); }

}  // namespace

TEST(Divisor, DegreeAndRestriction) {
  auto c4 = catalog_graph("circle-4");
  auto v0 = GraphPoint::vertex(0);
  auto w = c4.point_on_edge(0, q(2));
  EXPECT_EQ((Divisor{{v0, 2}, {w, -2}}).degree(), 0);
  EXPECT_EQ(Divisor::point(v0, 3).degree(), 3);
  EXPECT_EQ(Divisor().degree(), 0);

  auto th = catalog_graph("theta");
  auto u = GraphPoint::vertex(th.vertex_index("u"));
  auto v = GraphPoint::vertex(th.vertex_index("v"));
  auto m = th.middle_point(th.edge_index("e2"));
  Divisor d{{u, 1}, {v, 1}, {m, 1}};
  auto on_e2 = [&](const GraphPoint& p) { return p.on_edge() && p.index == m.index; };
  EXPECT_EQ(d.restrict_degree(on_e2), 1);
  EXPECT_EQ(d.restrict_degree([](auto&) { return true; }), 3);
  EXPECT_EQ(d.restrict_degree([](auto& p) { return p.on_ray(); }), 0);
}

TEST(Divisor, ZeroCoefficientsVanish) {
  auto p = GraphPoint::vertex(0);
  Divisor d{{p, 2}};
  d.add(p, -2);
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d, Divisor());
  Divisor e{{p, 1}, {GraphPoint::vertex(1), -3}};
  EXPECT_EQ(e.positive_part() - e.negative_part(), e);
}

TEST(PLFunction, TentOrdersOnSegment) {
  GraphDescription seg{{{"a", 0}, {"b", 0}}, {{"e", "a", "b", q(3)}}, {}};
  auto g = MetricGraph::build(seg);
  auto f = PLBuilder(g).vertex(1, q(-1)).edge(0, {{q(1), q(1)}}).build();
  EXPECT_EQ(order_at(g, f, GraphPoint::vertex(0)), 1);
  EXPECT_EQ(order_at(g, f, g.point_on_edge(0, q(1))), -2);
  EXPECT_EQ(order_at(g, f, GraphPoint::vertex(1)), 1);
  EXPECT_EQ(order_at(g, f, g.point_on_edge(0, q(2))), 0);
  EXPECT_EQ(f.value(g.point_on_edge(0, q(2))), q(0));
}

TEST(PLFunction, CircleTent) {
  auto c4 = catalog_graph("circle-4");
  auto f = c4_tent(c4);
  auto w = c4.point_on_edge(0, q(2));
  EXPECT_EQ(order_at(c4, f, GraphPoint::vertex(0)), 2);
  EXPECT_EQ(order_at(c4, f, w), -2);
  EXPECT_EQ(principal_divisor(c4, f), (Divisor{{GraphPoint::vertex(0), 2}, {w, -2}}));
  EXPECT_EQ(f.value(c4.point_on_edge(0, q(3))), q(1));
  EXPECT_TRUE(principal_divisor(c4, PLFunction::constant(c4, q(5))).empty());
}

TEST(PLFunction, RayLedger) {
  auto g = catalog_graph("circle-with-ray");
  auto f = PLBuilder(g).ray(0, {}, 1).build();
  EXPECT_EQ(principal_divisor(g, f), Divisor::point(GraphPoint::vertex(0), 1));
  EXPECT_EQ(end_orders(f), std::vector<long>{-1});
  EXPECT_EQ(f.value(g.point_on_ray(0, q(5, 2))), q(5, 2));

  // bend on the ray: slope 2 up to offset 1, then flat
  auto h = PLBuilder(g).ray(0, {{q(1), q(2)}}, 0).build();
  EXPECT_EQ(principal_divisor(g, h), (Divisor{{GraphPoint::vertex(0), 2}, {g.point_on_ray(0, q(1)), -2}}));
  EXPECT_EQ(end_orders(h), std::vector<long>{0});
}

TEST(PLFunction, RejectsBadData) {
  auto c4 = catalog_graph("circle-4");
  EXPECT_THROW(PLBuilder(c4).edge(0, {{q(2), q(1)}, {q(4), q(1)}}).build(), InvalidArgument);
  EXPECT_THROW(PLBuilder(c4).edge(0, {{q(3), q(1)}}).build(), InvalidArgument);  // slope 1/3
  EXPECT_THROW(PLBuilder(c4).edge(0, {{q(1), q(1)}, {q(1), q(2)}}).build(), InvalidArgument);
}

TEST(PLFunction, CanonicalForm) {
  auto c4 = catalog_graph("circle-4");
  auto f = c4_tent(c4);
  auto redundant = PLBuilder(c4).edge(0, {{q(1), q(1)}, {q(2), q(2)}, {q(3), q(1)}}).build();
  EXPECT_EQ(f, redundant);
  EXPECT_EQ(f.edge_knots(0).size(), 3u);
  EXPECT_EQ(f + (-1) * f, PLFunction::constant(c4));
  EXPECT_EQ(f - f, PLFunction::constant(c4));
}

TEST(PLFunction, CombineIsLinearOnDivisors) {
  auto c4 = catalog_graph("circle-4");
  auto f = c4_tent(c4);
  auto shifted = PLBuilder(c4).edge(0, {{q(1), q(0)}, {q(3), q(2)}}).build();
  EXPECT_EQ(principal_divisor(c4, f + shifted), principal_divisor(c4, f) + principal_divisor(c4, shifted));
  EXPECT_EQ(principal_divisor(c4, 2 * f), 2 * principal_divisor(c4, f));
}
