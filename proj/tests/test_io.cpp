#include <gtest/gtest.h>

#include "tropskel/catalog.hpp"
#include "tropskel/io.hpp"
#include "tropskel/random_graphs.hpp"

using namespace tropskel;

TEST(Io, GraphRoundTrip) {
  for (auto& entry : catalog()) {
    auto g = catalog_graph(entry.name);
    auto j = graph_to_json(g);
    auto back = graph_from_json(Json::parse(j.dump()));
    EXPECT_EQ(graph_to_json(back), j) << entry.name;
  }
  std::mt19937_64 rng(3);
  RandomGraphOptions opt;
  opt.integral = false;
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, opt);
    EXPECT_EQ(graph_to_json(graph_from_json(graph_to_json(g))), graph_to_json(g));
  }
}

TEST(Io, DivisorAndFunctionRoundTrip) {
  std::mt19937_64 rng(4);
  RandomGraphOptions opt;
  opt.integral = false;
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, opt);
    auto d = random_divisor(g, rng, 4, 3, false);
    EXPECT_EQ(divisor_from_json(g, Json::parse(divisor_to_json(g, d).dump())), d);
    auto f = random_pl_function(g, rng);
    EXPECT_EQ(function_from_json(g, Json::parse(function_to_json(g, f).dump())), f);
  }
}

TEST(Io, MapRoundTripWithRays) {
  auto g = catalog_graph("circle-with-two-rays");
  auto r = synthesize_faithful(g, 3);
  ASSERT_TRUE(r.map);
  auto j = map_to_json(*r.map, r.coordinates);
  auto back = map_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.functions(), r.map->functions());
  EXPECT_EQ(back.base(), r.map->base());
  auto cert = certificate_to_json(back, certify_faithful(back));
  EXPECT_EQ(cert["verdict"], "faithful");
  EXPECT_TRUE(cert["witness"].is_null());
}

TEST(Io, ErrorsCarryLocations) {
  auto bad_length = R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","a"],"length":"1/0"}]})";
  try {
    graph_from_json(Json::parse(bad_length));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.where(), "/edges/0/length");
  }
  auto float_length = R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","a"],"length":1.5}]})";
  EXPECT_THROW(graph_from_json(Json::parse(float_length)), FormatError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"schema":"other/2","vertices":[]})")), FormatError);
  auto g = catalog_graph("theta");
  try {
    divisor_from_json(g, Json::parse(R"([{"at":"e9@1","coeff":1}])"), "/base");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.where(), "/base/0/at");
  }
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), FormatError);
}
