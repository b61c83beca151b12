// Command-line front end. Every command prints one JSON document on stdout.
// Exit status: 0 success, 1 verification failed or infeasible, 2 bad usage or input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tropskel/bounds.hpp"
#include "tropskel/catalog.hpp"
#include "tropskel/io.hpp"
#include "tropskel/reduction.hpp"
#include "tropskel/selftest.hpp"
#include "tropskel/synth.hpp"
#include "tropskel/weighted.hpp"

using namespace tropskel;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// A graph argument is a file path or a catalog name.
MetricGraph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    try {
      return graph_from_json(read_json_file(arg));
    } catch (const FormatError& e) {
      if (e.where().rfind(arg, 0) == 0) throw;
      throw FormatError(e.what(), arg);
    } catch (const GraphError& e) {
      throw FormatError(e.what(), arg);
    }
  }
  if (in_catalog(arg)) return catalog_graph(arg);
  throw FormatError("no such file or catalog graph", arg);
}

// Inline JSON when the argument starts with '[', a file otherwise.
Json load_inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(e.what(), "argument");
    }
  }
  return read_json_file(arg);
}

Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void emit(const Json& j, const std::string& out_path = "") {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw FormatError("cannot write file", out_path);
  out << j.dump(2) << "\n";
}

Divisor divisor_arg(const MetricGraph& g, const std::string& arg) { return divisor_from_json(g, load_inline_or_file(arg)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropskel: divisors, reduced forms and faithful tropicalizations of metric graphs"};
  app.require_subcommand(1);
  std::string graph_arg, divisor_arg_s, map_arg, base_label, out_path, name;
  long degree = 0;
  bool rays = false, planar = false;
  std::optional<long> g_opt, d_opt, n_opt;
  std::uint64_t seed = 20240601;

  auto* genus = app.add_subcommand("genus", "Betti number, weights and edge types");
  genus->add_option("--graph", graph_arg, "graph file or catalog name")->required();

  auto* reduce = app.add_subcommand("reduce", "reduced divisor at a base point, with transcript");
  reduce->add_option("--graph", graph_arg)->required();
  reduce->add_option("--divisor", divisor_arg_s, "divisor file or inline JSON")->required();
  reduce->add_option("--base", base_label, "base point label (default: smallest vertex)");

  auto* effective = app.add_subcommand("effective", "effective representative of a class, if any");
  effective->add_option("--graph", graph_arg)->required();
  effective->add_option("--divisor", divisor_arg_s)->required();

  auto* isl = app.add_subcommand("islands", "canonical model, bridges and islands");
  isl->add_option("--graph", graph_arg)->required();

  auto* good = app.add_subcommand("gooddiv", "good effective divisor in a class");
  good->add_option("--graph", graph_arg)->required();
  auto* good_div = good->add_option("--divisor", divisor_arg_s);
  good->add_option("--degree", degree, "use degree * [smallest vertex]")->excludes(good_div);

  auto* synth = app.add_subcommand("synth", "synthesize and certify a faithful tropicalization");
  synth->add_option("--graph", graph_arg)->required();
  synth->add_option("--degree", degree)->required();
  synth->add_flag("--rays", rays, "keep the rays of the graph and add end functions");
  synth->add_option("--out", out_path, "also write the map file here");

  auto* verify = app.add_subcommand("verify", "certify a map file");
  verify->add_option("--graph", graph_arg, "graph the map must live on");
  verify->add_option("--map", map_arg)->required();

  auto* bounds = app.add_subcommand("bounds", "t(g), D(d, N), Castelnuovo's number and the ell-bound");
  bounds->add_option("--g", g_opt);
  bounds->add_option("--d", d_opt);
  bounds->add_option("--n", n_opt);
  bounds->add_flag("--planar", planar);

  auto* plot = app.add_subcommand("plotdata", "chart-0 polylines of a map");
  plot->add_option("--graph", graph_arg);
  plot->add_option("--map", map_arg)->required();

  auto* cat = app.add_subcommand("catalog", "list the built-in graphs or print one");
  cat->add_option("--name", name);

  auto* self = app.add_subcommand("selftest", "run the property suites of every module");
  self->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (genus->parsed()) {
      auto g = load_graph(graph_arg);
      Json j = header("genus");
      j["genus"] = g.genus();
      j["total_weight"] = g.total_weight();
      j["weighted_genus"] = g.weighted_genus();
      j["total_length"] = to_json(g.total_length());
      j["edges"] = Json::array();
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        j["edges"].push_back({{"id", g.edge(e).id}, {"type", to_string(g.classify_edge(e))}});
      }
      emit(j);
      return kOk;
    }

    if (reduce->parsed()) {
      auto g = load_graph(graph_arg);
      auto d = divisor_arg(g, divisor_arg_s);
      GraphPoint v0 = base_label.empty() ? GraphPoint::vertex(0) : g.parse_point(base_label);
      auto r = reduce_divisor(g, d, v0);
      Json j = header("reduce");
      j["base"] = g.point_label(v0);
      j["input"] = divisor_to_json(g, d);
      j["reduced"] = divisor_to_json(g, r.reduced);
      j["witness"] = function_to_json(g, r.witness);
      j["transcript"] = Json::array();
      for (auto& m : r.transcript) {
        Json fired = Json::array();
        for (auto& p : m.fired) fired.push_back(g.point_label(p));
        j["transcript"].push_back({{"kind", m.kind == ReductionMove::Kind::Layer ? "layer" : "burn"},
                                   {"multiplicity", m.multiplicity},
                                   {"distance", to_json(m.distance)},
                                   {"fired", fired},
                                   {"after", divisor_to_json(g, m.after)}});
      }
      emit(j);
      return kOk;
    }

    if (effective->parsed()) {
      auto g = load_graph(graph_arg);
      auto d = divisor_arg(g, divisor_arg_s);
      auto red = reduce_divisor(g.without_rays(), d, GraphPoint::vertex(0)).reduced;
      Json j = header("effective");
      j["degree"] = d.degree();
      j["effective"] = red.is_effective();
      j["representative"] = red.is_effective() ? divisor_to_json(g, red) : Json(nullptr);
      emit(j);
      return red.is_effective() ? kOk : kFailed;
    }

    if (isl->parsed()) {
      auto g = load_graph(graph_arg);
      Json j = header("islands");
      j.update(islands_to_json(g, islands(g)));
      emit(j);
      return kOk;
    }

    if (good->parsed()) {
      auto g = load_graph(graph_arg);
      Divisor d = divisor_arg_s.empty() ? Divisor::point(GraphPoint::vertex(0), degree) : divisor_arg(g, divisor_arg_s);
      auto e = good_effective_divisor(g, d);
      auto rep = check_good_divisor(g, e);
      Json j = header("gooddiv");
      j["input"] = divisor_to_json(g, d);
      j["divisor"] = divisor_to_json(g, e);
      j["report"] = good_report_to_json(g, rep);
      emit(j);
      return rep.ok() ? kOk : kFailed;
    }

    if (synth->parsed()) {
      auto g = load_graph(graph_arg);
      if (!rays) g = g.without_rays();
      auto r = synthesize_faithful(g, degree);
      Json j = header("synth");
      j["degree"] = degree;
      j["feasible"] = r.feasible;
      if (!r.feasible) {
        j["reason"] = r.reason;
        emit(j);
        return kFailed;
      }
      j["map"] = map_to_json(*r.map, r.coordinates);
      j["certificate"] = certificate_to_json(*r.map, *r.certificate);
      if (!out_path.empty()) emit(map_to_json(*r.map, r.coordinates), out_path);
      emit(j);
      return r.faithful() ? kOk : kFailed;
    }

    if (verify->parsed() || plot->parsed()) {
      Json mj = read_json_file(map_arg);
      if (!graph_arg.empty()) {
        Json gj = graph_to_json(load_graph(graph_arg));
        gj.erase("schema");
        if (!mj.contains("graph")) mj["graph"] = gj;
        else if (graph_to_json(graph_from_json(mj["graph"])).dump() != graph_to_json(graph_from_json(gj)).dump()) {
          throw FormatError("map lives on a different graph", map_arg + ": /graph");
        }
      }
      TropMap m = [&] {
        try {
          return map_from_json(mj);
        } catch (const FormatError& e) {
          throw FormatError(e.what(), map_arg + ": " + e.where());
        }
      }();
      if (verify->parsed()) {
        auto cert = certify_faithful(m);
        Json j = header("verify");
        j["certificate"] = certificate_to_json(m, cert);
        emit(j);
        return cert.verdict == Verdict::Faithful ? kOk : kFailed;
      }
      Json j = header("plotdata");
      j["chart"] = 0;
      j["polylines"] = Json::array();
      for (auto& pl : plot_data(m)) {
        Json pts = Json::array();
        for (auto& p : pl.points) {
          Json row = Json::array();
          for (auto& x : p) row.push_back(to_json(x));
          pts.push_back(row);
        }
        j["polylines"].push_back({{"owner", pl.owner}, {"unbounded", pl.unbounded}, {"points", pts}});
      }
      emit(j);
      return kOk;
    }

    if (bounds->parsed()) {
      if (!g_opt && !(d_opt && n_opt)) throw InvalidArgument("bounds needs --g, or --d with --n");
      auto r = bound_report(g_opt, d_opt, n_opt, planar);
      Json j = header("bounds");
      auto put = [&](const char* key, const std::optional<long>& v) { j[key] = v ? Json(*v) : Json(nullptr); };
      put("g", r.g);
      put("d", r.d);
      put("N", r.n);
      j["planar"] = r.planar;
      put("t_g", r.t_g);
      put("D_bound", r.d_bound);
      put("ell_bound", r.ell_bound);
      if (r.castelnuovo) {
        j["m0"] = r.castelnuovo->m0;
        j["eps0"] = r.castelnuovo->eps0;
        j["pi"] = r.castelnuovo->pi;
      } else {
        j["m0"] = j["eps0"] = j["pi"] = nullptr;
      }
      if (r.d && r.n && *r.n >= 3 && *r.d >= *r.n) j["consistent"] = check_bound_consistency(*r.d, *r.n);
      emit(j);
      return kOk;
    }

    if (cat->parsed()) {
      if (!name.empty()) {
        emit(graph_to_json(catalog_graph(name)));
        return kOk;
      }
      Json j = header("catalog");
      j["graphs"] = Json::array();
      for (auto& e : catalog()) j["graphs"].push_back({{"name", e.name}, {"notes", e.notes}});
      emit(j);
      return kOk;
    }

    if (self->parsed()) {
      Json j = header("selftest");
      j["suites"] = Json::array();
      long passed = 0, failed = 0;
      for (auto& s : run_all_suites(seed)) {
        Json sj{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"seconds", s.seconds}};
        if (!s.first_failure.empty()) sj["first_failure"] = s.first_failure;
        j["suites"].push_back(sj);
        passed += s.cases - s.failures;
        failed += s.failures;
      }
      j["passed"] = passed;
      j["failed"] = failed;
      emit(j);
      return failed == 0 ? kOk : kFailed;
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
