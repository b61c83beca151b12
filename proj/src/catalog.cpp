#include "tropskel/catalog.hpp"

#include <algorithm>

namespace tropskel {

namespace {

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"circle-4", "single loop of length 4 at v0",
               {{{"v0", 0}}, {{"e0", "v0", "v0", Rational(4)}}, {}}});
  c.push_back({"theta", "two vertices joined by edges of length 1, 2, 3",
               {{{"u", 0}, {"v", 0}},
                {{"e1", "u", "v", Rational(1)}, {"e2", "u", "v", Rational(2)}, {"e3", "u", "v", Rational(3)}},
                {}}});
  c.push_back({"dumbbell", "loops of length 2 at v1 and v2, bridge of length 1",
               {{{"v1", 0}, {"v2", 0}},
                {{"b", "v1", "v2", Rational(1)}, {"l1", "v1", "v1", Rational(2)}, {"l2", "v2", "v2", Rational(2)}},
                {}}});
  c.push_back({"unit-theta", "theta graph with three unit edges",
               {{{"u", 0}, {"v", 0}},
                {{"e1", "u", "v", Rational(1)}, {"e2", "u", "v", Rational(1)}, {"e3", "u", "v", Rational(1)}},
                {}}});
  c.push_back({"path-3", "path on three vertices, unit edges",
               {{{"p0", 0}, {"p1", 0}, {"p2", 0}},
                {{"e0", "p0", "p1", Rational(1)}, {"e1", "p1", "p2", Rational(1)}},
                {}}});
  c.push_back({"circle-with-ray", "circle-4 with one ray at v0",
               {{{"v0", 0}}, {{"e0", "v0", "v0", Rational(4)}}, {{"r0", "v0"}}}});
  c.push_back({"circle-with-two-rays", "circle of length 4 through v0 and its antipode w, one ray at each",
               {{{"v0", 0}, {"w", 0}},
                {{"e0", "v0", "w", Rational(2)}, {"e1", "w", "v0", Rational(2)}},
                {{"r0", "v0"}, {"r1", "w"}}}});
  return c;
}

std::string canonical_name(const std::string& name) { return name == "circle4" ? "circle-4" : name; }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

bool in_catalog(const std::string& name) {
  auto n = canonical_name(name);
  return std::any_of(catalog().begin(), catalog().end(), [&](auto& e) { return e.name == n; });
}

MetricGraph catalog_graph(const std::string& name) {
  auto n = canonical_name(name);
  for (auto& e : catalog()) {
    if (e.name == n) return MetricGraph::build(e.description);
  }
  throw InvalidArgument("no catalog graph named \"" + name + "\"");
}

}  // namespace tropskel
