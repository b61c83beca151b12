#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/equivalence.hpp"
#include "tropskel/random_graphs.hpp"
#include "tropskel/weighted.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

MetricGraph loop_bridge_weighted() {
  return MetricGraph::build({{{"a", 0}, {"b", 1}}, {{"br", "a", "b", q(1)}, {"l", "a", "a", q(3)}}, {}});
}

}  // namespace

TEST(Weighted, Genus) {
  EXPECT_EQ(catalog_graph("circle-4").weighted_genus(), 1);
  EXPECT_EQ(MetricGraph::build({{{"x", 2}}, {}, {}}).weighted_genus(), 2);
  EXPECT_EQ(catalog_graph("dumbbell").weighted_genus(), 2);
}

TEST(Weighted, CanonicalModelMergesChains) {
  // a square with one extra vertex of weight 1 keeps only the weighted vertex
  GraphDescription sq{{{"a", 0}, {"b", 0}, {"c", 1}, {"d", 0}},
                      {{"e1", "a", "b", q(1)}, {"e2", "c", "b", q(2)}, {"e3", "c", "d", q(1)}, {"e4", "d", "a", q(1, 2)}},
                      {}};
  auto g = MetricGraph::build(sq);
  auto m = canonical_model(g);
  ASSERT_EQ(m.coarse().num_vertices(), 1u);
  ASSERT_EQ(m.coarse().num_edges(), 1u);
  EXPECT_EQ(m.coarse().edge(0).id, "e1");
  EXPECT_EQ(m.coarse().edge(0).length, q(9, 2));
  // e1 runs a -> b, so the loop starts at c going backwards through e2
  EXPECT_EQ(m.to_coarse(GraphPoint::vertex(g.vertex_index("b"))), m.coarse().point_on_edge(0, q(5, 2)));
  auto f = PLBuilder(m.coarse()).edge(0, {{q(1), q(1)}, {q(2), q(0)}}).build();
  EXPECT_EQ(m.to_coarse(m.to_fine(f)), f);

  auto c4 = canonical_model(catalog_graph("circle-with-two-rays"));
  EXPECT_EQ(c4.coarse().num_vertices(), 1u);
  EXPECT_FALSE(c4.coarse().has_rays());
}

TEST(Islands, Catalog) {
  auto db = islands(catalog_graph("dumbbell"));
  EXPECT_EQ(db.num_islands(), 2u);
  EXPECT_EQ(db.bridges.size(), 1u);
  EXPECT_EQ(db.island_genus, (std::vector<long>{1, 1}));
  auto th = islands(catalog_graph("theta"));
  EXPECT_EQ(th.num_islands(), 1u);
  EXPECT_TRUE(th.bridges.empty());
  EXPECT_EQ(th.island_genus, std::vector<long>{2});
  auto lw = islands(loop_bridge_weighted());
  EXPECT_EQ(lw.num_islands(), 2u);
  EXPECT_EQ(lw.island_genus, (std::vector<long>{1, 1}));
  EXPECT_THROW(islands(catalog_graph("path-3")), InvalidArgument);
}

TEST(Islands, GenusAdds) {
  std::mt19937_64 rng(21);
  RandomGraphOptions opt;
  opt.max_weight = 1;
  for (int i = 0; i < 100; ++i) {
    auto g = random_weighted_graph(rng, opt, 1);
    auto dec = islands(g);
    long sum = 0;
    for (auto x : dec.island_genus) {
      EXPECT_GE(x, 1);
      sum += x;
    }
    EXPECT_EQ(sum, g.weighted_genus());
  }
}

TEST(WeightedRiemann, Examples) {
  auto v = MetricGraph::build({{{"x", 3}}, {}, {}});
  EXPECT_EQ(weighted_riemann(v, Divisor::point(GraphPoint::vertex(0), 3)), Divisor::point(GraphPoint::vertex(0), 3));
  for (const char* name : {"dumbbell", "theta"}) {
    auto g = catalog_graph(name);
    Divisor d{{g.middle_point(0), 3}, {GraphPoint::vertex(1), -1}};
    auto e = weighted_riemann(g, d);
    EXPECT_TRUE(e.is_effective());
    EXPECT_TRUE(is_linearly_equivalent(g, d, e).equivalent);
  }
}

TEST(GoodDivisor, Dumbbell) {
  auto g = catalog_graph("dumbbell");
  auto l1 = g.edge_index("l1");
  Divisor d{{g.point_on_edge(l1, q(1, 2)), 1}, {g.point_on_edge(l1, q(3, 2)), 1}};
  auto e = good_effective_divisor(g, d);
  auto rep = check_good_divisor(g, e);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.island_degree, (std::vector<long>{1, 1}));
  EXPECT_TRUE(is_linearly_equivalent(g, d, e).equivalent);
  EXPECT_EQ(e.restrict_degree([&](const GraphPoint& p) { return p.on_edge() && p.index == g.edge_index("b"); }), 0);
}

TEST(GoodDivisor, ThetaSpreadsEdges) {
  auto g = catalog_graph("theta");
  auto e3 = g.edge_index("e3");
  Divisor d{{g.point_on_edge(e3, q(1)), 2}};
  auto e = good_effective_divisor(g, d);
  EXPECT_TRUE(check_good_divisor(g, e).ok()) << to_string(g, e);
  EXPECT_TRUE(is_linearly_equivalent(g, d, e).equivalent);
}

TEST(GoodDivisor, RejectsPreconditions) {
  EXPECT_THROW(good_effective_divisor(catalog_graph("circle-4"), Divisor::point(GraphPoint::vertex(0), 2)),
               InvalidArgument);
  EXPECT_THROW(good_effective_divisor(catalog_graph("theta"), Divisor::point(GraphPoint::vertex(0), 1)),
               InvalidArgument);
}

TEST(GoodDivisor, RandomWeightedGraphs) {
  std::mt19937_64 rng(31);
  RandomGraphOptions opt;
  opt.max_weight = 1;
  opt.integral = false;
  for (int i = 0; i < 60; ++i) {
    auto g = random_weighted_graph(rng, opt, 2);
    auto d = random_divisor(g, rng, 3, 2, false);
    d.add(GraphPoint::vertex(0), g.weighted_genus() - d.degree());
    auto e = good_effective_divisor(g, d);
    auto rep = check_good_divisor(g, e);
    ASSERT_TRUE(rep.ok()) << to_string(g, e);
    EXPECT_TRUE(is_linearly_equivalent(g, d, e).equivalent);
  }
}
