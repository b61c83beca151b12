#include "tropskel/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "tropskel/bounds.hpp"
#include "tropskel/catalog.hpp"
#include "tropskel/equivalence.hpp"
#include "tropskel/random_graphs.hpp"
#include "tropskel/reduction.hpp"
#include "tropskel/synth.hpp"
#include "tropskel/weighted.hpp"

namespace tropskel {

namespace {

class Runner {
 public:
  explicit Runner(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }

  // Runs one case; exceptions count as failures.
  template <typename F>
  void run(const std::string& what, F&& body) {
    try {
      check(body(), what);
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  SuiteResult r_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe(const MetricGraph& g, const Divisor& d) {
  std::ostringstream os;
  os << g.num_vertices() << " vertices, " << g.num_edges() << " edges, D = " << to_string(g, d);
  return os.str();
}

Divisor with_degree(const MetricGraph& g, Divisor d, long degree, std::mt19937_64& rng, bool lattice) {
  d.add(random_point(g, rng, lattice), degree - d.degree());
  return d;
}

}  // namespace

SuiteResult suite_reduction_oracle(long cases, std::uint64_t seed) {
  Runner run("reduction-oracle");
  std::mt19937_64 rng(seed);
  RandomGraphOptions opt;  // integral, <= 6 vertices, <= 9 edges
  for (long i = 0; i < cases; ++i) {
    auto g = random_graph(rng, opt);
    auto d = random_divisor(g, rng, 1 + static_cast<int>(i % 5), 5, true);
    auto v0 = GraphPoint::vertex(rng() % g.num_vertices());
    run.run("case " + std::to_string(i) + " (" + describe(g, d) + ")", [&] {
      auto r = reduce_divisor(g, d, v0);
      return r.reduced == dhar_oracle(g, d, v0) && d + principal_divisor(g, r.witness) == r.reduced;
    });
  }
  return run.finish();
}

SuiteResult suite_riemann(long cases, std::uint64_t seed) {
  Runner run("riemann");
  std::mt19937_64 rng(seed);
  RandomGraphOptions opt;
  for (long i = 0; i < cases; ++i) {
    opt.integral = i % 2 == 0;
    auto g = random_graph(rng, opt);
    const long genus = g.genus();
    auto d = with_degree(g, random_divisor(g, rng, 3, 4, false), genus, rng, false);
    run.run("case " + std::to_string(i) + " (" + describe(g, d) + ")", [&] {
      auto v0 = GraphPoint::vertex(0);
      auto red = reduce_divisor(g, d, v0).reduced;
      return red.is_effective() && red[v0] >= d.degree() - genus && has_effective_representative(g, d);
    });
  }
  return run.finish();
}

SuiteResult suite_good_divisor(long cases, std::uint64_t seed) {
  Runner run("good-divisor");
  std::mt19937_64 rng(seed);
  RandomGraphOptions opt;
  opt.max_vertices = 5;
  opt.max_edges = 7;
  opt.max_weight = 2;
  for (long i = 0; i < cases; ++i) {
    opt.integral = i % 3 != 0;
    auto g = random_weighted_graph(rng, opt, 2);
    const long wg = g.weighted_genus();
    auto d = with_degree(g, random_divisor(g, rng, 3, 3, false), wg, rng, false);
    run.run("case " + std::to_string(i) + " (" + describe(g, d) + ")", [&] {
      auto e = good_effective_divisor(g, d);
      return check_good_divisor(g, e).ok() && e.degree() == wg && is_linearly_equivalent(g, d, e).equivalent;
    });
  }
  return run.finish();
}

SuiteResult suite_invariants(long cases, std::uint64_t seed) {
  Runner run("invariants");
  std::mt19937_64 rng(seed);
  RandomGraphOptions opt;
  opt.max_vertices = 5;
  opt.max_edges = 7;
  std::uniform_int_distribution<long> coord(-5, 5);
  long i = 0;
  while (true) {
    opt.integral = i % 2 == 0;
    auto g = random_graph(rng, opt);
    auto d = random_divisor(g, rng, 3, 3, false);
    auto f = random_pl_function(g, rng);
    auto h = random_pl_function(g, rng);
    auto v0 = GraphPoint::vertex(rng() % g.num_vertices());
    std::string tag = " case " + std::to_string(i) + " (" + describe(g, d) + ")";

    run.run("idempotence" + tag, [&] {
      auto once = reduce_divisor(g, d, v0).reduced;
      return reduce_divisor(g, once, v0).reduced == once && is_reduced(g, once, v0);
    });
    run.run("class invariance" + tag, [&] {
      return reduce_divisor(g, d + principal_divisor(g, f), v0).reduced == reduce_divisor(g, d, v0).reduced;
    });
    run.run("div additivity" + tag, [&] {
      return principal_divisor(g, f + h) == principal_divisor(g, f) + principal_divisor(g, h) &&
             principal_divisor(g, 3 * f) == 3 * principal_divisor(g, f);
    });
    run.run("chart lattice length" + tag, [&] {
      std::vector<long> v(1 + i % 4);
      for (auto& x : v) x = coord(rng);
      Rational len(1 + static_cast<long>(i % 7), 1 + static_cast<long>(i % 3));
      for (std::size_t c = 0; c <= v.size(); ++c) {
        if (lattice_length(chart_direction(v, c), len) != lattice_length(v, len)) return false;
      }
      return true;
    });
    if (i % 10 == 0) {
      RandomGraphOptions wopt;
      wopt.max_vertices = 4;
      wopt.max_edges = 5;
      wopt.max_weight = 1;
      auto w = random_weighted_graph(rng, wopt, 2);
      run.run("augmentation and isometry on a synthesized map, case " + std::to_string(i), [&] {
        auto s = synthesize_faithful(w, t_of_g(w.weighted_genus()));
        if (!s.map) return false;
        auto cert = certify_faithful(*s.map);
        for (auto& cell : cert.unimodular.cells) {
          for (std::size_t k = 1; k <= cell.vector.size(); ++k) {
            std::vector<long> sub(cell.vector.begin(), cell.vector.begin() + static_cast<long>(k));
            if (gcd_of(sub) == 1 && !cell.primitive) return false;
          }
          Rational len = *cell.to - cell.from;
          if (cell.primitive && lattice_length(cell.vector, len) != len) return false;
        }
        return cert.verdict == Verdict::Faithful;
      });
    }
    ++i;
    if (run.finish().cases >= cases) break;
  }
  return run.finish();
}

SuiteResult suite_synthesis() {
  Runner run("synthesis");
  for (const char* name : {"circle-4", "theta", "dumbbell", "unit-theta", "circle-with-ray", "circle-with-two-rays"}) {
    auto g = catalog_graph(name);
    long d = t_of_g(g.weighted_genus());
    run.run(std::string(name) + " at degree " + std::to_string(d), [&] {
      auto r = synthesize_faithful(g, d);
      return r.faithful();
    });
  }
  run.run("circle-4 at degree 2 is infeasible", [] { return !synthesize_faithful(catalog_graph("circle-4"), 2).feasible; });
  return run.finish();
}

SuiteResult suite_bounds() {
  Runner run("bounds");
  run.check(t_of_g(0) == 1 && t_of_g(1) == 3 && t_of_g(2) == 5 && t_of_g(10) == 29, "t(g) table");
  run.check(d_bound(3, 2, true) == 1 && d_bound(4, 2, true) == 2, "D(3,2) and D(4,2)");
  for (long d = 3; d <= 50; ++d) {
    for (long n = 3; n <= d; ++n) run.check(check_bound_consistency(d, n), "consistency at d=" + std::to_string(d) + ", N=" + std::to_string(n));
    run.check(d_bound(d, 2, true) >= ell_bound(plane_genus(d), d, 2), "planar branch at d=" + std::to_string(d));
  }
  return run.finish();
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  return {suite_bounds(),
          suite_reduction_oracle(200, seed),
          suite_riemann(200, seed + 1),
          suite_good_divisor(200, seed + 2),
          suite_invariants(1000, seed + 3),
          suite_synthesis()};
}

}  // namespace tropskel
