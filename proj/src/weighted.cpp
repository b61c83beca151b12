#include "tropskel/weighted.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "induced.hpp"
#include "tropskel/reduction.hpp"

namespace tropskel {

namespace {

using detail::Induced;

struct Chain {
  std::vector<std::pair<std::size_t, bool>> links;  // edge, traversed head-to-tail
  std::size_t from = 0, to = 0;
};

long side_genus(const MetricGraph& g, const std::vector<bool>& kv, const std::vector<bool>& ke) {
  long v = 0, e = 0, w = 0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (kv[i]) ++v, w += g.vertex(i).weight;
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) e += ke[i];
  return e - v + 1 + w;
}

bool in_side(const GraphPoint& p, const std::vector<bool>& kv, const std::vector<bool>& ke) {
  return p.is_vertex() ? kv[p.index] : ke[p.index];
}

// Step 2: push genus surplus across bridges until every island carries at
// least its genus. Works on induced subgraphs, recursing on either side.
Divisor spread_over_bridges(const MetricGraph& s, const Divisor& e_in) {
  std::vector<bool> is_bridge(s.num_edges(), false);
  std::vector<std::size_t> bridges;
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    if (s.classify_edge(e) == EdgeType::Disconnected) {
      is_bridge[e] = true;
      bridges.push_back(e);
    }
  }
  // a chip inside a bridge is equivalent to one at either end
  Divisor e;
  for (auto& [p, c] : e_in) {
    if (p.on_edge() && is_bridge[p.index]) e.add(GraphPoint::vertex(s.edge(p.index).tail), c);
    else e.add(p, c);
  }
  if (bridges.empty()) return e;

  const std::size_t b = bridges.front();
  std::vector<bool> removed(s.num_edges(), false);
  removed[b] = true;
  std::vector<bool> tail_side = s.reachable(s.edge(b).tail, removed);

  std::array<std::vector<bool>, 2> kv{tail_side, tail_side};
  kv[1].flip();
  std::array<std::vector<bool>, 2> ke{std::vector<bool>(s.num_edges()), std::vector<bool>(s.num_edges())};
  for (std::size_t x = 0; x < s.num_edges(); ++x) {
    if (x == b) continue;
    ke[tail_side[s.edge(x).tail] ? 0 : 1][x] = true;
  }
  std::array<long, 2> genus{side_genus(s, kv[0], ke[0]), side_genus(s, kv[1], ke[1])};
  std::array<long, 2> degree{0, 0};
  for (auto& [p, c] : e) degree[in_side(p, kv[0], ke[0]) ? 0 : 1] += c;
  std::array<bool, 2> enough{degree[0] >= genus[0], degree[1] >= genus[1]};
  std::array<std::size_t, 2> end{s.edge(b).tail, s.edge(b).head};

  // the side whose degree already meets its genus gives up its surplus; on
  // a tie, the side holding the smaller vertex index
  int rich;
  if (enough[0] && enough[1]) {
    auto first = [&](int k) { return std::find(kv[k].begin(), kv[k].end(), true) - kv[k].begin(); };
    rich = first(0) < first(1) ? 0 : 1;
  } else {
    rich = enough[0] ? 0 : 1;
  }
  const int poor = 1 - rich;
  const long surplus = degree[rich] - genus[rich];

  Induced rich_g(s, kv[rich], ke[rich]), poor_g(s, kv[poor], ke[poor]);
  Divisor rich_d, poor_d;
  for (auto& [p, c] : e) {
    if (in_side(p, kv[rich], ke[rich])) rich_d.add(rich_g.down(p), c);
    else poor_d.add(poor_g.down(p), c);
  }
  rich_d.add(rich_g.down(GraphPoint::vertex(end[rich])), -surplus);
  poor_d.add(poor_g.down(GraphPoint::vertex(end[poor])), surplus);
  rich_d = reduce_divisor(rich_g.g, rich_d, GraphPoint::vertex(0)).reduced;

  if (genus[rich] >= 2) rich_d = spread_over_bridges(rich_g.g, rich_d);
  if (genus[poor] >= 2) poor_d = spread_over_bridges(poor_g.g, poor_d);

  Divisor out;
  for (auto& [p, c] : rich_d) out.add(rich_g.up(p), c);
  for (auto& [p, c] : poor_d) out.add(poor_g.up(p), c);
  return out;
}

// Step 3: while an open edge holds two or more chips, push its outermost
// pair apart symmetrically until one of them reaches an endpoint.
void thin_edges(const MetricGraph& h, Divisor& e) {
  for (std::size_t x = 0; x < h.num_edges(); ++x) {
    const Rational& len = h.edge(x).length;
    for (;;) {
      std::vector<std::pair<Rational, long>> inside;
      long total = 0;
      for (auto& [p, c] : e) {
        if (p.on_edge() && p.index == x) {
          inside.push_back({p.offset, c});
          total += c;
        }
      }
      if (total < 2) break;
      Rational t1 = inside.front().first, t2 = inside.back().first;
      Rational m = min(t1, len - t2);
      e.add(h.point_on_edge(x, t1), -1);
      e.add(h.point_on_edge(x, t2), -1);
      e.add(h.point_on_edge(x, t1 - m), 1);
      e.add(h.point_on_edge(x, t2 + m), 1);
    }
  }
}

}  // namespace

void check_standing_assumption(const MetricGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.finite_valence(v) == 1 && g.vertex(v).weight == 0) {
      throw InvalidArgument("vertex \"" + g.vertex(v).id + "\" has valence 1 and weight 0");
    }
  }
}

ModelMap canonical_model(const MetricGraph& g_in) {
  MetricGraph g = g_in.without_rays();
  const std::size_t n = g.num_vertices();
  std::vector<bool> keep(n);
  for (std::size_t v = 0; v < n; ++v) keep[v] = g.valence(v) != 2 || g.vertex(v).weight > 0;
  if (std::none_of(keep.begin(), keep.end(), [](bool k) { return k; })) keep[0] = true;

  std::vector<bool> used(g.num_edges(), false);
  std::vector<Chain> chains;
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    for (const Incidence& start : g.incidences(k)) {
      if (used[start.index]) continue;
      Chain ch;
      ch.from = k;
      Incidence half = start;
      for (;;) {
        const Edge& e = g.edge(half.index);
        used[half.index] = true;
        bool rev = half.kind == Incidence::Kind::EdgeHead;
        ch.links.push_back({half.index, rev});
        std::size_t next = rev ? e.tail : e.head;
        if (keep[next]) {
          ch.to = next;
          break;
        }
        auto arrive = rev ? Incidence::Kind::EdgeTail : Incidence::Kind::EdgeHead;
        const auto& incs = g.incidences(next);
        auto it = std::find_if(incs.begin(), incs.end(), [&](const Incidence& i) {
          return !(i.index == half.index && i.kind == arrive);
        });
        half = *it;
      }
      auto smallest = std::min_element(ch.links.begin(), ch.links.end());
      if (smallest->second) {
        std::reverse(ch.links.begin(), ch.links.end());
        for (auto& l : ch.links) l.second = !l.second;
        std::swap(ch.from, ch.to);
      }
      chains.push_back(std::move(ch));
    }
  }

  GraphDescription hd;
  for (std::size_t v = 0; v < n; ++v) {
    if (keep[v]) hd.vertices.push_back({g.vertex(v).id, g.vertex(v).weight});
  }
  for (auto& ch : chains) {
    Rational len;
    for (auto& [e, rev] : ch.links) len += g.edge(e).length;
    auto id = g.edge(std::min_element(ch.links.begin(), ch.links.end())->first).id;
    hd.edges.push_back({id, g.vertex(ch.from).id, g.vertex(ch.to).id, len});
  }
  MetricGraph h = MetricGraph::build(hd);

  std::vector<std::size_t> vmap(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) vmap[v] = g.vertex_index(h.vertex(v).id);
  std::vector<std::vector<ModelMap::Link>> links(h.num_edges());
  for (auto& ch : chains) {
    auto c = h.edge_index(g.edge(std::min_element(ch.links.begin(), ch.links.end())->first).id);
    Rational pos;
    for (auto& [e, rev] : ch.links) {
      links[c].push_back({e, rev, pos});
      pos += g.edge(e).length;
    }
  }
  return ModelMap(std::move(h), std::move(g), std::move(vmap), std::move(links), {});
}

long IslandDecomposition::island_of(const GraphPoint& p) const {
  auto c = model.to_coarse(p);
  return c.is_vertex() ? vertex_island[c.index] : edge_island[c.index];
}

IslandDecomposition islands(const MetricGraph& g) {
  check_standing_assumption(g.without_rays());
  IslandDecomposition dec{canonical_model(g), {}, {}, {}, {}};
  const MetricGraph& h = dec.model.coarse();

  std::vector<std::size_t> parent(h.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> is_bridge(h.num_edges(), false);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (h.classify_edge(e) == EdgeType::Disconnected) {
      is_bridge[e] = true;
      dec.bridges.push_back(e);
    } else {
      parent[find(h.edge(e).tail)] = find(h.edge(e).head);
    }
  }
  // islands numbered by their smallest vertex
  std::vector<long> label(h.num_vertices(), -1);
  dec.vertex_island.assign(h.num_vertices(), -1);
  long count = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto r = find(v);
    if (label[r] < 0) label[r] = count++;
    dec.vertex_island[v] = label[r];
  }
  dec.island_genus.assign(count, 1);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    dec.island_genus[dec.vertex_island[v]] += h.vertex(v).weight - 1;
  }
  dec.edge_island.assign(h.num_edges(), -1);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (is_bridge[e]) continue;
    dec.edge_island[e] = dec.vertex_island[h.edge(e).tail];
    dec.island_genus[dec.edge_island[e]] += 1;
  }
  return dec;
}

Divisor weighted_riemann(const MetricGraph& g, const Divisor& d) {
  auto core = g.without_rays();
  auto red = reduce_divisor(core, d, GraphPoint::vertex(0)).reduced;
  if (!red.is_effective()) {
    throw InvalidArgument("class of degree " + std::to_string(d.degree()) + " has no effective member (weighted genus " +
                          std::to_string(g.weighted_genus()) + ")");
  }
  return red;
}

Divisor good_effective_divisor(const MetricGraph& g, const Divisor& d) {
  check_standing_assumption(g.without_rays());
  const long wg = g.weighted_genus();
  if (wg < 2) throw InvalidArgument("good divisor needs weighted genus >= 2, got " + std::to_string(wg));
  if (d.degree() < wg) {
    throw InvalidArgument("good divisor needs degree >= weighted genus " + std::to_string(wg) + ", got " +
                          std::to_string(d.degree()));
  }
  ModelMap model = canonical_model(g);
  const MetricGraph& h = model.coarse();
  Divisor e = reduce_divisor(h, model.to_coarse(d), GraphPoint::vertex(0)).reduced;
  e = spread_over_bridges(h, e);
  thin_edges(h, e);
  return model.to_fine(e);
}

bool GoodDivisorReport::condition_ii() const {
  return std::all_of(island_degree.begin(), island_degree.end(), [](long x) { return x >= 1; });
}

bool GoodDivisorReport::condition_iii() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const EdgeDegree& x) { return x.bridge ? x.degree == 0 : x.degree <= 1; });
}

GoodDivisorReport check_good_divisor(const MetricGraph& g, const Divisor& e) {
  auto dec = islands(g);
  const MetricGraph& h = dec.model.coarse();
  GoodDivisorReport rep;
  rep.effective = e.is_effective();
  rep.island_genus = dec.island_genus;
  rep.island_degree.assign(dec.num_islands(), 0);
  std::vector<long> inside(h.num_edges(), 0);
  for (auto& [p, c] : e) {
    auto hp = dec.model.to_coarse(p);
    if (hp.on_edge()) inside[hp.index] += c;
    if (long i = dec.island_of(p); i >= 0) rep.island_degree[i] += c;
  }
  for (std::size_t x = 0; x < h.num_edges(); ++x) {
    rep.edges.push_back({h.edge(x).id, dec.edge_island[x] < 0, inside[x]});
  }
  return rep;
}

}  // namespace tropskel
