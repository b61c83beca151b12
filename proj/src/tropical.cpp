#include "tropskel/tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropskel {

TropPoint::TropPoint(std::vector<std::optional<Rational>> coords) : coords_(std::move(coords)) {
  if (std::none_of(coords_.begin(), coords_.end(), [](auto& c) { return c.has_value(); })) {
    throw InvalidArgument("tropical point: all coordinates infinite");
  }
}

std::vector<Rational> TropPoint::chart(std::size_t i) const {
  if (i >= coords_.size() || !coords_[i]) throw InvalidArgument("tropical point: chart coordinate is infinite");
  std::vector<Rational> out;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j == i) continue;
    if (!coords_[j]) throw InvalidArgument("tropical point: infinite coordinate in chart");
    out.push_back(*coords_[j] - *coords_[i]);
  }
  return out;
}

bool operator==(const TropPoint& a, const TropPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i].has_value() != b.coords_[i].has_value()) return false;
    if (!a.coords_[i]) continue;
    Rational s = *b.coords_[i] - *a.coords_[i];
    if (!shift) shift = s;
    else if (*shift != s) return false;
  }
  return true;
}

long gcd_of(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

Rational lattice_length(const std::vector<long>& v, const Rational& len) { return len * Rational(gcd_of(v)); }

std::vector<long> chart_direction(const std::vector<long>& v, std::size_t i) {
  if (i > v.size()) throw InvalidArgument("chart_direction: chart out of range");
  std::vector<long> full{0};
  full.insert(full.end(), v.begin(), v.end());
  std::vector<long> out;
  for (std::size_t j = 0; j < full.size(); ++j) {
    if (j != i) out.push_back(full[j] - full[i]);
  }
  return out;
}

TropMap TropMap::assemble(const MetricGraph& g, Divisor base, std::vector<PLFunction> functions) {
  TropMap m(g);
  for (auto& [p, c] : base) g.check_point(p);
  if (!base.is_effective()) throw InvalidArgument("tropical map: base divisor is not effective");
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const PLFunction& f = functions[i];
    if (f.num_vertices() != g.num_vertices() || f.num_edges() != g.num_edges() || f.num_rays() != g.num_rays()) {
      throw InvalidArgument("tropical map: function " + std::to_string(i + 1) + " lives on another graph");
    }
    Divisor di = base + principal_divisor(g, f);
    auto ends = end_orders(f);
    if (!di.is_effective() || std::any_of(ends.begin(), ends.end(), [](long o) { return o < 0; })) {
      throw InvalidArgument("tropical map: D0 + div(f_" + std::to_string(i + 1) + ") is not effective");
    }
    m.induced_.push_back(std::move(di));
    m.induced_ends_.push_back(std::move(ends));
  }
  m.base_ = std::move(base);
  m.functions_ = std::move(functions);
  return m;
}

std::vector<Rational> TropMap::evaluate_affine(const GraphPoint& p) const {
  graph_.check_point(p);
  std::vector<Rational> out;
  out.reserve(functions_.size());
  for (auto& f : functions_) out.push_back(f.value(p));
  return out;
}

TropPoint TropMap::evaluate(const GraphPoint& p) const {
  std::vector<std::optional<Rational>> c{Rational()};
  for (auto& x : evaluate_affine(p)) c.emplace_back(std::move(x));
  return TropPoint(std::move(c));
}

std::vector<Cell> cell_decomposition(const TropMap& m) {
  const MetricGraph& g = m.graph();
  const auto& fs = m.functions();

  // Cut at every multiple of 1/den, den the common denominator of all
  // lengths and breakpoints: the unit subdivision after rescaling.
  std::vector<Rational> all;
  for (auto& e : g.edges()) all.push_back(e.length);
  for (auto& f : fs) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      for (auto& k : f.edge_knots(e)) all.push_back(k.offset);
    }
    for (std::size_t r = 0; r < g.num_rays(); ++r) {
      for (auto& k : f.ray_profile(r).knots) all.push_back(k.offset);
    }
  }
  const Rational step(mpq_class(1, common_denominator(all.begin(), all.end())));

  std::vector<Cell> cells;
  auto finish = [&](Cell c) {
    c.primitive = gcd_of(c.vector) == 1;
    cells.push_back(std::move(c));
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Rational& len = g.edge(e).length;
    for (Rational at; at < len; at += step) {
      Cell c{GraphPoint::Kind::Edge, e, at, at + step, {}, {}};
      for (auto& f : fs) {
        c.vector.push_back(f.edge_slope(e, at, true));
        c.start_image.push_back(f.value_on_edge(e, at));
      }
      finish(std::move(c));
    }
  }
  for (std::size_t r = 0; r < g.num_rays(); ++r) {
    Rational last;
    for (auto& f : fs) {
      const auto& knots = f.ray_profile(r).knots;
      if (!knots.empty()) last = max(last, knots.back().offset);
    }
    for (Rational at;; at += step) {
      std::optional<Rational> to;
      if (at < last) to = at + step;
      Cell c{GraphPoint::Kind::Ray, r, at, to, {}, {}};
      for (auto& f : fs) {
        c.vector.push_back(f.ray_slope(r, at, true));
        c.start_image.push_back(f.value_on_ray(r, at));
      }
      finish(std::move(c));
      if (!to) break;
    }
  }
  return cells;
}

UnimodularReport verify_unimodular(const TropMap& m) {
  UnimodularReport rep;
  rep.cells = cell_decomposition(m);
  rep.unimodular = true;
  for (std::size_t i = 0; i < rep.cells.size(); ++i) {
    if (!rep.cells[i].primitive) {
      rep.unimodular = false;
      rep.first_failure = i;
      break;
    }
  }
  return rep;
}

namespace {

GraphPoint point_in(const MetricGraph& g, const Cell& c, const Rational& t) {
  Rational off = c.from + t;
  return c.kind == GraphPoint::Kind::Edge ? g.point_on_edge(c.index, off) : g.point_on_ray(c.index, off);
}

std::optional<Rational> length_of(const Cell& c) {
  if (!c.to) return std::nullopt;
  return *c.to - c.from;
}

bool in_range(const Rational& t, const std::optional<Rational>& len) {
  return !t.is_negative() && (!len || t <= *len);
}

// An interior parameter of the cell, away from both ends.
Rational inner(const std::optional<Rational>& len) { return len ? *len / Rational(2) : Rational(1); }

bool is_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

std::vector<Rational> image_at(const Cell& c, const Rational& t) {
  std::vector<Rational> out = c.start_image;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += t * Rational(c.vector[k]);
  return out;
}

std::optional<Collision> make(const MetricGraph& g, const Cell& a, std::size_t ia, const Rational& ta, const Cell& b,
                              std::size_t ib, const Rational& tb) {
  GraphPoint x = point_in(g, a, ta);
  GraphPoint y = point_in(g, b, tb);
  if (x == y) return std::nullopt;
  return Collision{x, y, image_at(a, ta), ia, ib};
}

// Point of cell b's image line hit by the constant image `p`, if any.
std::optional<Rational> locate(const std::vector<Rational>& p, const Cell& b) {
  std::size_t n = p.size();
  std::optional<Rational> t;
  for (std::size_t k = 0; k < n; ++k) {
    Rational delta = p[k] - b.start_image[k];
    if (b.vector[k] == 0) {
      if (!delta.is_zero()) return std::nullopt;
      continue;
    }
    Rational tk = delta / Rational(b.vector[k]);
    if (t && *t != tk) return std::nullopt;
    t = tk;
  }
  return t;
}

std::optional<Collision> collide(const MetricGraph& g, const std::vector<Cell>& cells, std::size_t ia, std::size_t ib) {
  const Cell& a = cells[ia];
  const Cell& b = cells[ib];
  auto la = length_of(a);
  auto lb = length_of(b);
  bool za = is_zero(a.vector), zb = is_zero(b.vector);

  if (ia == ib) {
    if (!za) return std::nullopt;
    return make(g, a, ia, Rational(), a, ia, inner(la));
  }
  if (za && zb) {
    if (a.start_image != b.start_image) return std::nullopt;
    return make(g, a, ia, inner(la), b, ib, inner(lb));
  }
  if (za || zb) {
    const Cell& fixed = za ? a : b;
    const Cell& moving = za ? b : a;
    auto t = locate(fixed.start_image, moving);
    if (!t || !in_range(*t, length_of(moving))) return std::nullopt;
    Rational tf = inner(length_of(fixed));
    return za ? make(g, a, ia, tf, b, ib, *t) : make(g, a, ia, *t, b, ib, tf);
  }

  const std::size_t n = a.vector.size();
  std::vector<Rational> delta(n);
  for (std::size_t k = 0; k < n; ++k) delta[k] = b.start_image[k] - a.start_image[k];

  // Solve ta*a - tb*b = delta on a pair of independent coordinates.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      long det = -a.vector[i] * b.vector[j] + b.vector[i] * a.vector[j];
      if (det == 0) continue;
      Rational d(det);
      Rational ta = (-delta[i] * Rational(b.vector[j]) + Rational(b.vector[i]) * delta[j]) / d;
      Rational tb = (Rational(a.vector[i]) * delta[j] - delta[i] * Rational(a.vector[j])) / d;
      for (std::size_t k = 0; k < n; ++k) {
        if (ta * Rational(a.vector[k]) - tb * Rational(b.vector[k]) != delta[k]) return std::nullopt;
      }
      if (!in_range(ta, la) || !in_range(tb, lb)) return std::nullopt;
      return make(g, a, ia, ta, b, ib, tb);
    }
  }

  // Parallel directions: b's image is t -> tau + lambda*t in a's parameter.
  std::size_t k0 = 0;
  while (a.vector[k0] == 0) ++k0;
  Rational lambda = Rational(b.vector[k0]) / Rational(a.vector[k0]);
  Rational tau = delta[k0] / Rational(a.vector[k0]);
  for (std::size_t k = 0; k < n; ++k) {
    if (delta[k] != tau * Rational(a.vector[k])) return std::nullopt;
  }
  // Overlap of [0, la] with tau + lambda*[0, lb], either end possibly infinite.
  std::optional<Rational> lo = Rational(), hi = la;
  std::optional<Rational> blo, bhi;
  if (lambda.is_positive()) {
    blo = tau;
    if (lb) bhi = tau + lambda * *lb;
  } else {
    bhi = tau;
    if (lb) blo = tau + lambda * *lb;
  }
  if (blo && *blo > *lo) lo = blo;
  if (bhi && (!hi || *bhi < *hi)) hi = bhi;
  if (hi && *hi < *lo) return std::nullopt;
  Rational ta = !hi ? *lo + Rational(1) : (*lo + *hi) / Rational(2);
  return make(g, a, ia, ta, b, ib, (ta - tau) / lambda);
}

// Per-coordinate image ranges; nullopt stands for an infinite end.
struct Box {
  std::vector<std::optional<Rational>> lo, hi;
};

Box box_of(const Cell& c) {
  Box b;
  auto len = length_of(c);
  for (std::size_t k = 0; k < c.vector.size(); ++k) {
    const Rational& s = c.start_image[k];
    std::optional<Rational> e;
    if (len) e = s + *len * Rational(c.vector[k]);
    if (c.vector[k] >= 0) {
      b.lo.push_back(s);
      b.hi.push_back(c.vector[k] == 0 ? std::optional<Rational>(s) : e);
    } else {
      b.lo.push_back(e);
      b.hi.push_back(s);
    }
  }
  return b;
}

bool apart(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] && b.lo[k] && *a.hi[k] < *b.lo[k]) return true;
    if (b.hi[k] && a.lo[k] && *b.hi[k] < *a.lo[k]) return true;
  }
  return false;
}

std::size_t first_partner(const MetricGraph& g, const std::vector<Cell>& cells, const std::vector<Box>& boxes,
                          std::size_t i, std::optional<Collision>* out) {
  for (std::size_t j = i; j < cells.size(); ++j) {
    if (j != i && apart(boxes[i], boxes[j])) continue;
    if (auto c = collide(g, cells, i, j)) {
      if (out) *out = std::move(c);
      return j;
    }
  }
  return cells.size();
}

}  // namespace

int injectivity_threads() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("TROPSKEL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

InjectivityReport verify_injective(const MetricGraph& g, const std::vector<Cell>& cells, bool parallel) {
  InjectivityReport rep;
  rep.cells = cells.size();
  const long n = static_cast<long>(cells.size());
  long best = n;
  std::vector<Box> boxes;
  boxes.reserve(cells.size());
  for (auto& c : cells) boxes.push_back(box_of(c));

  if (parallel) {
    const int threads = injectivity_threads();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best) num_threads(threads)
    for (long i = 0; i < n; ++i) {
      if (i >= best) continue;
      if (first_partner(g, cells, boxes, static_cast<std::size_t>(i), nullptr) < cells.size()) best = std::min(best, i);
    }
  } else {
    for (long i = 0; i < n && best == n; ++i) {
      if (first_partner(g, cells, boxes, static_cast<std::size_t>(i), nullptr) < cells.size()) best = i;
    }
  }

  if (best == n) {
    rep.injective = true;
    return rep;
  }
  std::optional<Collision> c;
  first_partner(g, cells, boxes, static_cast<std::size_t>(best), &c);
  rep.witness = std::move(c);
  return rep;
}

InjectivityReport verify_injective(const TropMap& m) {
  return verify_injective(m.graph(), cell_decomposition(m), true);
}

InjectivityReport verify_injective_serial(const TropMap& m) {
  return verify_injective(m.graph(), cell_decomposition(m), false);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Faithful:
      return "faithful";
    case Verdict::UnimodularOnly:
      return "unimodular-only";
    case Verdict::Fails:
      return "fails";
  }
  return "?";
}

FaithfulnessCertificate certify_faithful(const TropMap& m) {
  FaithfulnessCertificate cert;
  cert.unimodular = verify_unimodular(m);
  cert.injectivity = verify_injective(m.graph(), cert.unimodular.cells, true);
  if (!cert.unimodular.unimodular) cert.verdict = Verdict::Fails;
  else if (!cert.injectivity.injective) cert.verdict = Verdict::UnimodularOnly;
  else cert.verdict = Verdict::Faithful;
  return cert;
}

std::vector<Polyline> plot_data(const TropMap& m) {
  const MetricGraph& g = m.graph();
  std::vector<Polyline> out;
  auto cells = cell_decomposition(m);
  std::size_t k = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Polyline pl{g.edge(e).id, false, {}};
    for (; k < cells.size() && cells[k].kind == GraphPoint::Kind::Edge && cells[k].index == e; ++k) {
      pl.points.push_back(cells[k].start_image);
      if (k + 1 == cells.size() || cells[k + 1].index != e || cells[k + 1].kind != GraphPoint::Kind::Edge) {
        pl.points.push_back(image_at(cells[k], *length_of(cells[k])));
      }
    }
    out.push_back(std::move(pl));
  }
  for (std::size_t r = 0; r < g.num_rays(); ++r) {
    Polyline pl{g.ray(r).id, true, {}};
    for (; k < cells.size() && cells[k].index == r; ++k) {
      pl.points.push_back(cells[k].start_image);
      if (!cells[k].to) pl.points.push_back(image_at(cells[k], Rational(1)));
    }
    out.push_back(std::move(pl));
  }
  return out;
}

}  // namespace tropskel
