#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "tropskel/catalog.hpp"
#include "tropskel/random_graphs.hpp"
#include "tropskel/tropical.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

GraphPoint at(const MetricGraph& g, const std::string& label) { return g.parse_point(label); }

// The degree-3 family on the circle of length 4: D0 = [v0] + 2[w].
TropMap circle_family(bool both) {
  auto g = catalog_graph("circle-4");
  auto f1 = PLBuilder(g).vertex(0, 0).edge(0, {{q(2), q(2)}}).build();
  auto f2 = PLBuilder(g).vertex(0, 0).edge(0, {{q(2), q(0)}, {q(3), q(-1)}}).build();
  Divisor d0 = Divisor::point(GraphPoint::vertex(0)) + Divisor::point(at(g, "e0@2"), 2);
  std::vector<PLFunction> fs{f1};
  if (both) fs.push_back(f2);
  return TropMap::assemble(g, d0, fs);
}

// D0 large enough for every function: the sum of their pole parts.
TropMap absorb(const MetricGraph& g, std::vector<PLFunction> fs) {
  Divisor d0;
  for (auto& f : fs) d0 += principal_divisor(g, f).negative_part();
  return TropMap::assemble(g, d0, std::move(fs));
}

std::vector<GraphPoint> grid(const MetricGraph& g, long den) {
  std::vector<GraphPoint> pts;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) pts.push_back(GraphPoint::vertex(v));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (long k = 1; Rational(k, den) < g.edge(e).length; ++k) pts.push_back(g.point_on_edge(e, Rational(k, den)));
  }
  return pts;
}

}  // namespace

TEST(TropPoint, ShiftAndCharts) {
  TropPoint a({q(0), q(1), q(5, 2)});
  TropPoint b({q(3), q(4), q(11, 2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.chart(1), (std::vector<Rational>{q(-1), q(3, 2)}));
  TropPoint c({std::nullopt, q(1), q(2)});
  EXPECT_FALSE(a == c);
  EXPECT_THROW(c.chart(0), InvalidArgument);
  EXPECT_THROW(TropPoint({std::nullopt}), InvalidArgument);
}

TEST(TropPoint, LatticeLengthIsChartInvariant) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> v(3);
    for (auto& x : v) x = coord(rng);
    Rational len(1 + trial % 5, 1 + trial % 3);
    for (std::size_t i = 0; i <= v.size(); ++i) {
      EXPECT_EQ(lattice_length(chart_direction(v, i), len), lattice_length(v, len));
    }
  }
}

TEST(TropMap, CircleFamilyInducedDivisors) {
  auto m = circle_family(true);
  const auto& g = m.graph();
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.induced()[0], Divisor::point(GraphPoint::vertex(0), 3));
  EXPECT_EQ(m.induced()[1], Divisor::point(at(g, "e0@2")) + Divisor::point(at(g, "e0@3"), 2));
  EXPECT_EQ(m.evaluate(at(g, "e0@3")), TropPoint({q(0), q(1), q(-1)}));
}

TEST(TropMap, RejectsIneffective) {
  auto g = catalog_graph("circle-4");
  auto f1 = PLBuilder(g).vertex(0, 0).edge(0, {{q(2), q(2)}}).build();
  Divisor two = Divisor::point(GraphPoint::vertex(0)) + Divisor::point(at(g, "e0@2"));
  EXPECT_THROW(TropMap::assemble(g, two, {f1}), InvalidArgument);
  EXPECT_THROW(TropMap::assemble(g, -two, {}), InvalidArgument);
}

TEST(Faithful, CircleFamily) {
  auto cert = certify_faithful(circle_family(true));
  const auto& cells = cert.unimodular.cells;
  ASSERT_EQ(cells.size(), 4u);
  std::vector<std::vector<long>> vectors;
  for (auto& c : cells) vectors.push_back(c.vector);
  EXPECT_EQ(vectors, (std::vector<std::vector<long>>{{1, 0}, {1, 0}, {-1, -1}, {-1, 1}}));
  EXPECT_EQ(cells[1].from, q(1));
  EXPECT_TRUE(cert.unimodular.unimodular);
  EXPECT_TRUE(cert.injectivity.injective);
  EXPECT_EQ(cert.verdict, Verdict::Faithful);
}

TEST(Faithful, TentAloneFoldsTheCircle) {
  auto m = circle_family(false);
  auto cert = certify_faithful(m);
  EXPECT_EQ(cert.verdict, Verdict::UnimodularOnly);
  ASSERT_TRUE(cert.injectivity.witness);
  const auto& w = *cert.injectivity.witness;
  EXPECT_EQ(w.x, at(m.graph(), "e0@1"));
  EXPECT_EQ(w.y, at(m.graph(), "e0@3"));
  EXPECT_EQ(w.image, std::vector<Rational>{q(1)});
}

TEST(Faithful, DegenerateMaps) {
  auto g = MetricGraph::build({{{"a", 0}, {"b", 0}}, {{"e", "a", "b", q(1)}}, {}});
  auto empty = TropMap::assemble(g, {}, {});
  auto c = certify_faithful(empty);
  EXPECT_EQ(c.verdict, Verdict::Fails);
  EXPECT_FALSE(c.injectivity.injective);

  auto constant = TropMap::assemble(g, {}, {PLFunction::constant(g, 3)});
  auto u = verify_unimodular(constant);
  EXPECT_FALSE(u.unimodular);
  EXPECT_EQ(u.first_failure, 0u);

  auto doubled = absorb(g, {PLBuilder(g).vertex(0, 0).vertex(1, 2).build()});
  auto cd = certify_faithful(doubled);
  EXPECT_TRUE(cd.injectivity.injective);
  EXPECT_EQ(cd.verdict, Verdict::Fails);
}

TEST(Faithful, RaysAreCells) {
  auto g = catalog_graph("circle-with-ray");
  auto f = PLBuilder(g).vertex(0, 0).ray(0, {}, -1).build();
  auto m = TropMap::assemble(g, Divisor::point(GraphPoint::vertex(0)), {f});
  EXPECT_EQ(m.induced_ends()[0], std::vector<long>{1});
  auto cells = cell_decomposition(m);
  ASSERT_EQ(cells.size(), 5u);
  EXPECT_FALSE(cells[4].to);
  // the whole circle collapses to one point
  auto cert = certify_faithful(m);
  EXPECT_EQ(cert.verdict, Verdict::Fails);
  ASSERT_TRUE(cert.injectivity.witness);
  EXPECT_EQ(cert.injectivity.witness->cell_a, 0u);
}

TEST(Injectivity, SerialAndParallelAgree) {
  std::mt19937_64 rng(2024);
  RandomGraphOptions opt;
  opt.max_vertices = 4;
  opt.max_edges = 6;
  int injective = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, opt);
    std::vector<PLFunction> fs;
    int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i) fs.push_back(random_pl_function(g, rng));
    auto m = absorb(g, fs);
    auto s = verify_injective_serial(m);
    auto p = verify_injective(m);
    ASSERT_EQ(s.injective, p.injective);
    injective += s.injective;
    if (!s.injective) {
      ASSERT_TRUE(s.witness && p.witness);
      EXPECT_EQ(s.witness->x, p.witness->x);
      EXPECT_EQ(s.witness->y, p.witness->y);
      EXPECT_EQ(s.witness->cell_a, p.witness->cell_a);
      EXPECT_EQ(s.witness->cell_b, p.witness->cell_b);
    }
  }
  EXPECT_GT(injective, 0);
}

TEST(Injectivity, WitnessesAreRealAndGridCollisionsAreFound) {
  std::mt19937_64 rng(99);
  RandomGraphOptions opt;
  opt.max_vertices = 4;
  opt.max_edges = 5;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, opt);
    std::vector<PLFunction> fs;
    for (int i = 0; i < 1 + trial % 3; ++i) fs.push_back(random_pl_function(g, rng));
    auto m = absorb(g, fs);
    auto rep = verify_injective(m);
    if (rep.witness) {
      EXPECT_NE(rep.witness->x, rep.witness->y);
      EXPECT_EQ(m.evaluate_affine(rep.witness->x), m.evaluate_affine(rep.witness->y));
      EXPECT_EQ(m.evaluate_affine(rep.witness->x), rep.witness->image);
    }
    std::map<std::vector<Rational>, GraphPoint> seen;
    bool grid_collision = false;
    for (auto& p : grid(g, 24)) {
      auto [it, fresh] = seen.emplace(m.evaluate_affine(p), p);
      if (!fresh) grid_collision = true;
    }
    if (grid_collision) EXPECT_FALSE(rep.injective) << "trial " << trial;
  }
}

TEST(Injectivity, ThreadCapFromEnvironment) {
  setenv("TROPSKEL_THREADS", "1", 1);
  EXPECT_EQ(injectivity_threads(), 1);
  unsetenv("TROPSKEL_THREADS");
  EXPECT_GE(injectivity_threads(), 1);
}

TEST(PlotData, CircleFamily) {
  auto lines = plot_data(circle_family(true));
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].owner, "e0");
  ASSERT_EQ(lines[0].points.size(), 5u);
  EXPECT_EQ(lines[0].points[2], (std::vector<Rational>{q(2), q(0)}));
  EXPECT_EQ(lines[0].points[3], (std::vector<Rational>{q(1), q(-1)}));
  EXPECT_EQ(lines[0].points.back(), (std::vector<Rational>{q(0), q(0)}));
}
