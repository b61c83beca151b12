#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/model_map.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Subdivide, Circle) {
  auto c4 = catalog_graph("circle-4");
  auto m = subdivide(c4, {c4.point_on_edge(0, q(2))});
  const auto& h = m.fine();
  EXPECT_EQ(h.num_vertices(), 2u);
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge(0).length, q(2));
  EXPECT_EQ(h.edge(1).length, q(2));
  EXPECT_EQ(h.genus(), 1);
  EXPECT_EQ(h.total_length(), q(4));
  EXPECT_EQ(m.to_fine(c4.point_on_edge(0, q(2))), GraphPoint::vertex(h.vertex_index("e0#p1")));
}

TEST(Subdivide, ThetaPreservesInvariants) {
  auto th = catalog_graph("theta");
  auto e2 = th.edge_index("e2");
  auto m = subdivide(th, {th.middle_point(e2)});
  const auto& h = m.fine();
  EXPECT_EQ(h.num_edges(), 4u);
  EXPECT_EQ(h.genus(), 2);
  EXPECT_EQ(h.total_length(), th.total_length());
  for (std::size_t e = 0; e < th.num_edges(); ++e) {
    if (e == e2) continue;
    EXPECT_EQ(h.classify_edge(h.edge_index(th.edge(e).id)), th.classify_edge(e));
  }

  std::vector<GraphPoint> pts;
  for (std::size_t e = 0; e < th.num_edges(); ++e) {
    for (long k = 1; k < 6; ++k) pts.push_back(th.point_on_edge(e, th.edge(e).length * q(k, 6)));
  }
  for (auto& x : pts) {
    EXPECT_EQ(m.to_coarse(m.to_fine(x)), x);
    for (auto& y : pts) EXPECT_EQ(h.distance(m.to_fine(x), m.to_fine(y)), th.distance(x, y));
  }
}

TEST(Subdivide, EmptyIsIdentity) {
  auto db = catalog_graph("dumbbell");
  auto m = subdivide(db, {});
  EXPECT_EQ(m.fine().num_edges(), db.num_edges());
  for (std::size_t e = 0; e < db.num_edges(); ++e) EXPECT_EQ(m.fine().edge(e).id, db.edge(e).id);
}

TEST(Subdivide, TransfersFunctions) {
  auto c4 = catalog_graph("circle-4");
  auto f = PLBuilder(c4).edge(0, {{q(1), q(1)}, {q(3), q(-1)}}).build();
  auto m = subdivide(c4, {c4.point_on_edge(0, q(1, 2)), c4.point_on_edge(0, q(3))});
  auto ff = m.to_fine(f);
  EXPECT_EQ(m.to_coarse(ff), f);
  EXPECT_EQ(m.to_coarse(principal_divisor(m.fine(), ff)), principal_divisor(c4, f));
}
