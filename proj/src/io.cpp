#include "tropskel/io.hpp"

#include <fstream>
#include <sstream>

namespace tropskel {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError("expected an object", where.empty() ? "/" : where);
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing \"") + key + "\"", where.empty() ? "/" : where);
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError("expected a string", where);
  return j.get<std::string>();
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError("expected an integer", where);
  return j.get<long>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError("expected an array", where);
  return j;
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw FormatError("expected an object", "/");
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema)) {
    throw FormatError(std::string("unsupported schema, expected \"") + kSchema + "\"", "/schema");
  }
}

GraphPoint point(const MetricGraph& g, const Json& j, const std::string& where) {
  std::string label = text(j, where);
  try {
    return g.parse_point(label);
  } catch (const Error& e) {
    throw FormatError(e.what(), where);
  }
}

Json knots_to_json(const std::vector<Knot>& knots, bool interior, const Rational& end) {
  Json out = Json::array();
  for (auto& k : knots) {
    if (interior && (k.offset.is_zero() || k.offset == end)) continue;
    out.push_back(Json::array({to_json(k.offset), to_json(k.value)}));
  }
  return out;
}

std::vector<Knot> knots_from_json(const Json& j, const std::string& where) {
  std::vector<Knot> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    const Json& k = j[i];
    std::string w = at(where, i);
    if (!k.is_array() || k.size() != 2) throw FormatError("expected [offset, value]", w);
    out.push_back({rational_from_json(k[0], at(w, 0)), rational_from_json(k[1], at(w, 1))});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw FormatError("expected a rational \"p/q\"", where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw FormatError(e.what(), where);
  }
}

Json graph_to_json(const MetricGraph& g) {
  Json out;
  out["schema"] = kSchema;
  out["vertices"] = Json::array();
  for (auto& v : g.vertices()) out["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  out["edges"] = Json::array();
  for (auto& e : g.edges()) {
    out["edges"].push_back({{"id", e.id},
                            {"ends", Json::array({g.vertex(e.tail).id, g.vertex(e.head).id})},
                            {"length", to_json(e.length)}});
  }
  out["rays"] = Json::array();
  for (auto& r : g.rays()) out["rays"].push_back({{"id", r.id}, {"base", g.vertex(r.base).id}});
  return out;
}

MetricGraph graph_from_json(const Json& j) {
  check_schema(j);
  GraphDescription d;
  const Json& vs = array(member(j, "vertices", ""), "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string w = at("/vertices", i);
    VertexSpec v{text(member(vs[i], "id", w), at(w, "id")), 0};
    if (vs[i].contains("weight")) v.weight = integer(vs[i]["weight"], at(w, "weight"));
    d.vertices.push_back(std::move(v));
  }
  if (j.contains("edges")) {
    const Json& es = array(j["edges"], "/edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::string w = at("/edges", i);
      const Json& ends = member(es[i], "ends", w);
      if (!ends.is_array() || ends.size() != 2) throw FormatError("expected [tail, head]", at(w, "ends"));
      d.edges.push_back({text(member(es[i], "id", w), at(w, "id")), text(ends[0], at(w, "ends/0")),
                         text(ends[1], at(w, "ends/1")), rational_from_json(member(es[i], "length", w), at(w, "length"))});
    }
  }
  if (j.contains("rays")) {
    const Json& rs = array(j["rays"], "/rays");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::string w = at("/rays", i);
      d.rays.push_back({text(member(rs[i], "id", w), at(w, "id")), text(member(rs[i], "base", w), at(w, "base"))});
    }
  }
  return MetricGraph::build(std::move(d));
}

Json divisor_to_json(const MetricGraph& g, const Divisor& d) {
  Json out = Json::array();
  for (auto& [p, c] : d) out.push_back({{"at", g.point_label(p)}, {"coeff", c}});
  return out;
}

Divisor divisor_from_json(const MetricGraph& g, const Json& j, const std::string& where) {
  Divisor d;
  for (std::size_t i = 0; i < array(j, where.empty() ? "/" : where).size(); ++i) {
    std::string w = at(where, i);
    d.add(point(g, member(j[i], "at", w), at(w, "at")), integer(member(j[i], "coeff", w), at(w, "coeff")));
  }
  return d;
}

Json function_to_json(const MetricGraph& g, const PLFunction& f) {
  Json out;
  out["vertices"] = Json::object();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out["vertices"][g.vertex(v).id] = to_json(f.vertex_value(v));
  out["edges"] = Json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Json k = knots_to_json(f.edge_knots(e), true, g.edge(e).length);
    if (!k.empty()) out["edges"][g.edge(e).id] = std::move(k);
  }
  out["rays"] = Json::object();
  for (std::size_t r = 0; r < g.num_rays(); ++r) {
    const auto& rp = f.ray_profile(r);
    out["rays"][g.ray(r).id] = {{"knots", knots_to_json(rp.knots, false, Rational())}, {"slope", rp.terminal_slope}};
  }
  return out;
}

PLFunction function_from_json(const MetricGraph& g, const Json& j, const std::string& where) {
  PLBuilder b(g);
  const Json& vs = member(j, "vertices", where);
  if (!vs.is_object()) throw FormatError("expected an object", at(where, "vertices"));
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::string w = at(at(where, "vertices"), g.vertex(v).id);
    auto it = vs.find(g.vertex(v).id);
    if (it == vs.end()) throw FormatError("missing vertex value", w);
    b.vertex(v, rational_from_json(*it, w));
  }
  for (auto& [id, value] : vs.items()) {
    if (!g.find_vertex(id)) throw FormatError("unknown vertex", at(at(where, "vertices"), id));
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_object()) throw FormatError("expected an object", at(where, "edges"));
    for (auto& [id, knots] : j["edges"].items()) {
      std::string w = at(at(where, "edges"), id);
      auto e = g.find_edge(id);
      if (!e) throw FormatError("unknown edge", w);
      b.edge(*e, knots_from_json(knots, w));
    }
  }
  if (j.contains("rays")) {
    if (!j["rays"].is_object()) throw FormatError("expected an object", at(where, "rays"));
    for (auto& [id, prof] : j["rays"].items()) {
      std::string w = at(at(where, "rays"), id);
      auto r = g.find_ray(id);
      if (!r) throw FormatError("unknown ray", w);
      std::vector<Knot> knots;
      if (prof.contains("knots")) knots = knots_from_json(prof["knots"], at(w, "knots"));
      b.ray(*r, std::move(knots), integer(member(prof, "slope", w), at(w, "slope")));
    }
  }
  try {
    return b.build();
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what(), where.empty() ? "/" : where);
  }
}

Json map_to_json(const TropMap& m, const std::vector<std::string>& labels) {
  Json out;
  out["schema"] = kSchema;
  out["graph"] = graph_to_json(m.graph());
  out["graph"].erase("schema");
  out["degree"] = m.degree();
  out["base"] = divisor_to_json(m.graph(), m.base());
  out["functions"] = Json::array();
  for (std::size_t i = 0; i < m.functions().size(); ++i) {
    Json f = function_to_json(m.graph(), m.functions()[i]);
    if (i < labels.size()) f["label"] = labels[i];
    out["functions"].push_back(std::move(f));
  }
  return out;
}

TropMap map_from_json(const Json& j) {
  check_schema(j);
  MetricGraph g = [&] {
    try {
      return graph_from_json(member(j, "graph", ""));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), "/graph");
    }
  }();
  Divisor base = divisor_from_json(g, member(j, "base", ""), "/base");
  std::vector<PLFunction> fs;
  const Json& arr = array(member(j, "functions", ""), "/functions");
  for (std::size_t i = 0; i < arr.size(); ++i) fs.push_back(function_from_json(g, arr[i], at("/functions", i)));
  return TropMap::assemble(g, std::move(base), std::move(fs));
}

Json cell_to_json(const MetricGraph& g, const Cell& c) {
  Json out;
  if (c.kind == GraphPoint::Kind::Edge) out["edge"] = g.edge(c.index).id;
  else out["ray"] = g.ray(c.index).id;
  out["from"] = to_json(c.from);
  out["to"] = c.to ? Json(to_json(*c.to)) : Json(nullptr);
  out["vector"] = c.vector;
  out["primitive"] = c.primitive;
  return out;
}

Json certificate_to_json(const TropMap& m, const FaithfulnessCertificate& c) {
  const MetricGraph& g = m.graph();
  Json out;
  out["schema"] = kSchema;
  out["verdict"] = to_string(c.verdict);
  out["unimodular"] = c.unimodular.unimodular;
  out["injective"] = c.injectivity.injective;
  out["degree"] = m.degree();
  out["dimension"] = m.dimension();
  out["induced"] = Json::array();
  for (std::size_t i = 0; i < m.induced().size(); ++i) {
    Json d = divisor_to_json(g, m.induced()[i]);
    Json ends = Json::array();
    for (std::size_t r = 0; r < g.num_rays(); ++r) {
      if (long o = m.induced_ends()[i][r]) ends.push_back({{"ray", g.ray(r).id}, {"coeff", o}});
    }
    out["induced"].push_back({{"finite", d}, {"ends", ends}});
  }
  out["cells"] = Json::array();
  for (auto& cell : c.unimodular.cells) out["cells"].push_back(cell_to_json(g, cell));
  if (c.unimodular.first_failure) out["first_non_primitive"] = *c.unimodular.first_failure;
  if (c.injectivity.witness) {
    const auto& w = *c.injectivity.witness;
    Json image = Json::array();
    for (auto& x : w.image) image.push_back(to_json(x));
    out["witness"] = {{"x", g.point_label(w.x)}, {"y", g.point_label(w.y)}, {"image", image},
                      {"cells", Json::array({w.cell_a, w.cell_b})}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json islands_to_json(const MetricGraph& g, const IslandDecomposition& isl) {
  const MetricGraph& h = isl.model.coarse();
  Json out;
  out["schema"] = kSchema;
  out["weighted_genus"] = g.weighted_genus();
  Json model = graph_to_json(h);
  model.erase("schema");
  out["model"] = std::move(model);
  out["bridges"] = Json::array();
  for (auto b : isl.bridges) out["bridges"].push_back(h.edge(b).id);
  out["islands"] = Json::array();
  for (std::size_t i = 0; i < isl.num_islands(); ++i) {
    Json vs = Json::array(), es = Json::array();
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
      if (isl.vertex_island[v] == static_cast<long>(i)) vs.push_back(h.vertex(v).id);
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      if (isl.edge_island[e] == static_cast<long>(i)) es.push_back(h.edge(e).id);
    }
    out["islands"].push_back({{"vertices", vs}, {"edges", es}, {"genus", isl.island_genus[i]}});
  }
  return out;
}

Json good_report_to_json(const MetricGraph&, const GoodDivisorReport& r) {
  Json out;
  out["effective"] = r.effective;
  out["island_degree"] = r.island_degree;
  out["island_genus"] = r.island_genus;
  out["edges"] = Json::array();
  for (auto& e : r.edges) out["edges"].push_back({{"id", e.id}, {"bridge", e.bridge}, {"degree", e.degree}});
  out["condition_i"] = r.condition_i();
  out["condition_ii"] = r.condition_ii();
  out["condition_iii"] = r.condition_iii();
  out["ok"] = r.ok();
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file", path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what(), path);
  }
}

}  // namespace tropskel
