#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/equivalence.hpp"
#include "tropskel/random_graphs.hpp"
#include "tropskel/reduction.hpp"

using namespace tropskel;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

GraphPoint vtx(const MetricGraph& g, const char* id) { return GraphPoint::vertex(g.vertex_index(id)); }

void expect_witness(const MetricGraph& g, const Divisor& d, const ReductionResult& r) {
  EXPECT_EQ(d + principal_divisor(g, r.witness), r.reduced);
}

}  // namespace

TEST(Reduce, UnitThetaTwoChipsStay) {
  auto g = catalog_graph("unit-theta");
  Divisor d = Divisor::point(vtx(g, "v"), 2);
  auto r = reduce_divisor(g, d, vtx(g, "u"));
  EXPECT_EQ(r.reduced, d);
  EXPECT_TRUE(r.transcript.empty());
  EXPECT_EQ(dhar_oracle(g, d, vtx(g, "u")), d);
}

TEST(Reduce, ZeroDivisor) {
  auto g = catalog_graph("theta");
  auto r = reduce_divisor(g, {}, GraphPoint::vertex(0));
  EXPECT_TRUE(r.reduced.empty());
  EXPECT_TRUE(r.witness.is_constant());
  EXPECT_TRUE(dhar_oracle(g, {}, GraphPoint::vertex(0)).empty());
}

TEST(Reduce, CircleThreeChipsAtAntipode) {
  auto g = catalog_graph("circle-4");
  auto v0 = GraphPoint::vertex(0);
  auto w = g.point_on_edge(0, q(2));
  Divisor d = Divisor::point(w, 3);
  auto r = reduce_divisor(g, d, v0);
  EXPECT_EQ(r.reduced, (Divisor{{v0, 2}, {w, 1}}));
  expect_witness(g, d, r);
  EXPECT_FALSE(r.transcript.empty());
  EXPECT_EQ(dhar_oracle(g, d, v0), r.reduced);
}

// A tree has genus 0, so a single chip anywhere is equivalent to one at the base.
TEST(Reduce, PathChipSlidesToBase) {
  auto g = catalog_graph("path-3");
  Divisor d = Divisor::point(vtx(g, "p2"), 1);
  Divisor expected = Divisor::point(vtx(g, "p0"), 1);
  auto r = reduce_divisor(g, d, vtx(g, "p0"));
  EXPECT_EQ(r.reduced, expected);
  expect_witness(g, d, r);
  EXPECT_EQ(dhar_oracle(g, d, vtx(g, "p0")), expected);
  EXPECT_EQ(reduce_divisor(g, d, vtx(g, "p2")).reduced, d);
}

TEST(Reduce, BaseOnEdgeInterior) {
  auto g = catalog_graph("theta");
  auto base = g.point_on_edge(g.edge_index("e3"), q(3, 2));
  Divisor d{{vtx(g, "u"), 2}, {g.point_on_edge(0, q(1, 3)), -1}};
  auto r = reduce_divisor(g, d, base);
  expect_witness(g, d, r);
  EXPECT_TRUE(is_reduced(g, r.reduced, base));
  EXPECT_EQ(reduce_divisor(g, r.reduced, base).reduced, r.reduced);
}

TEST(Reduce, RejectsRays) {
  auto g = catalog_graph("circle-with-ray");
  EXPECT_THROW(reduce_divisor(g, {}, GraphPoint::vertex(0)), InvalidArgument);
}

TEST(Reduce, OracleRejectsFractions) {
  auto g = catalog_graph("circle-4");
  EXPECT_THROW(dhar_oracle(g, Divisor::point(g.point_on_edge(0, q(1, 2))), GraphPoint::vertex(0)), InvalidArgument);
}

TEST(Reduce, RandomAgreesWithOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    auto g = random_graph(rng);
    auto d = random_divisor(g, rng, 4, 5, true);
    auto base = random_point(g, rng, true);
    auto r = reduce_divisor(g, d, base);
    ASSERT_EQ(r.reduced, dhar_oracle(g, d, base)) << "case " << i << ": " << to_string(g, d);
    expect_witness(g, d, r);
    EXPECT_TRUE(is_reduced(g, r.reduced, base));
  }
}

TEST(Reduce, RandomRationalProperties) {
  std::mt19937_64 rng(12);
  RandomGraphOptions opt;
  opt.integral = false;
  for (int i = 0; i < 80; ++i) {
    auto g = random_graph(rng, opt);
    auto d = random_divisor(g, rng, 4, 4, false);
    auto base = random_point(g, rng, false);
    auto r = reduce_divisor(g, d, base);
    expect_witness(g, d, r);
    ASSERT_TRUE(is_reduced(g, r.reduced, base)) << to_string(g, r.reduced);
    EXPECT_EQ(reduce_divisor(g, r.reduced, base).reduced, r.reduced);
    auto f = random_pl_function(g, rng);
    EXPECT_EQ(reduce_divisor(g, d + principal_divisor(g, f), base).reduced, r.reduced);
    if (d.degree() >= g.genus()) {
      EXPECT_TRUE(r.reduced.is_effective());
      EXPECT_GE(r.reduced[base], d.degree() - g.genus());
    }
  }
}

TEST(Equivalence, CircleExamples) {
  auto g = catalog_graph("circle-4");
  auto v0 = GraphPoint::vertex(0);
  auto a = g.point_on_edge(0, q(1)), b = g.point_on_edge(0, q(3)), w = g.point_on_edge(0, q(2));
  Divisor two_v0 = Divisor::point(v0, 2);
  auto yes = is_linearly_equivalent(g, two_v0, Divisor{{a, 1}, {b, 1}});
  ASSERT_TRUE(yes.equivalent);
  EXPECT_EQ(two_v0 + principal_divisor(g, *yes.witness), (Divisor{{a, 1}, {b, 1}}));
  EXPECT_FALSE(is_linearly_equivalent(g, two_v0, Divisor{{v0, 1}, {w, 1}}).equivalent);
  auto self = is_linearly_equivalent(g, two_v0, two_v0);
  ASSERT_TRUE(self.equivalent);
  EXPECT_TRUE(self.witness->is_constant());
  EXPECT_FALSE(is_linearly_equivalent(g, two_v0, Divisor::point(v0)).equivalent);
}

TEST(Equivalence, CircleInvariant) {
  auto g = catalog_graph("circle-4");
  auto w = g.point_on_edge(0, q(2));
  EXPECT_EQ(circle_class_invariant(g, Divisor::point(w, 3)), q(2));
  EXPECT_EQ(circle_class_invariant(g, Divisor::point(GraphPoint::vertex(0), 2)), q(0));
  EXPECT_EQ(circle_class_invariant(g, Divisor{}), q(0));
  EXPECT_THROW(circle_class_invariant(catalog_graph("theta"), {}), InvalidArgument);
}

TEST(Equivalence, AgreesWithCircleInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    // random cycle with 1..4 vertices and mixed orientations
    long n = std::uniform_int_distribution<long>(1, 4)(rng);
    GraphDescription desc;
    for (long i = 0; i < n; ++i) desc.vertices.push_back({"c" + std::to_string(i), 0});
    for (long i = 0; i < n; ++i) {
      std::string a = "c" + std::to_string(i), b = "c" + std::to_string((i + 1) % n);
      if (rng() % 2) std::swap(a, b);
      desc.edges.push_back({"k" + std::to_string(i), a, b, Rational(static_cast<long>(rng() % 5 + 1), 2)});
    }
    auto g = MetricGraph::build(desc);
    auto d1 = random_divisor(g, rng, 3, 2, false);
    auto d2 = random_divisor(g, rng, 3, 2, false);
    d2.add(GraphPoint::vertex(0), d1.degree() - d2.degree());
    bool same = circle_class_invariant(g, d1) == circle_class_invariant(g, d2);
    EXPECT_EQ(is_linearly_equivalent(g, d1, d2).equivalent, same) << to_string(g, d1) << " vs " << to_string(g, d2);
  }
}

TEST(Effective, CircleClasses) {
  auto g = catalog_graph("circle-4");
  auto a = g.point_on_edge(0, q(1)), b = g.point_on_edge(0, q(5, 2)), c = g.point_on_edge(0, q(3));
  EXPECT_TRUE(has_effective_representative(g, Divisor{{a, 1}, {b, -1}, {c, 1}}));
  EXPECT_FALSE(has_effective_representative(g, Divisor{{a, 1}, {b, -1}}));
  EXPECT_TRUE(has_effective_representative(g, Divisor{{a, 3}}));
  EXPECT_THROW(effective_of_bounded_class(g, Divisor{{a, 1}, {b, -1}}), InvalidArgument);
}

TEST(Effective, ThetaAndDumbbellDegreeTwo) {
  std::mt19937_64 rng(3);
  for (const char* name : {"theta", "dumbbell"}) {
    auto g = catalog_graph(name);
    for (int i = 0; i < 20; ++i) {
      auto d = random_divisor(g, rng, 3, 3, false);
      d.add(GraphPoint::vertex(0), 2 - d.degree());
      auto e = effective_of_bounded_class(g, d);
      EXPECT_TRUE(e.is_effective());
      EXPECT_TRUE(is_linearly_equivalent(g, d, e).equivalent);
    }
  }
  EXPECT_TRUE(effective_of_bounded_class(catalog_graph("theta"), {}).empty());
}
