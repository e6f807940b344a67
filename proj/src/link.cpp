#include "raag/link.hpp"

#include <algorithm>

#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag {

LinkGraph link_graph(const SimplicialGraph& g, Vertex v) {
  LinkGraph out;
  out.graph = std::make_shared<const SimplicialGraph>(g.induced(g.link(v)));
  out.to_ambient = g.link(v).members();
  out.to_link.assign(g.size(), -1);
  for (std::size_t i = 0; i < out.to_ambient.size(); ++i) out.to_link[out.to_ambient[i]] = static_cast<int>(i);
  return out;
}

namespace {

GroupElement translate(const GroupElement& e, const SimplicialGraph& target, const std::vector<Vertex>& map) {
  Word w;
  for (Letter l : e.letters()) {
    Vertex t = map.at(l.vertex());
    if (t < 0) throw PreconditionError("letter outside the target vertex set");
    w.emplace_back(t, l.sign());
  }
  return GroupElement::reduce(target, w);
}

}  // namespace

ExtVertex to_link_vertex(const LinkGraph& link, Vertex v, const ExtVertex& x) {
  if (!ext_adjacent(base_vertex(x.graph(), v), x)) {
    throw PreconditionError(x.to_string() + " is not in the link of " + x.graph().label(v));
  }
  // A canonical neighbour of v carries no v letters: v lies in the star of its base.
  return canonical_vertex(*link.graph, link.to_link.at(x.base),
                          translate(x.conjugator, *link.graph, link.to_link));
}

ExtVertex from_link_vertex(const LinkGraph& link, const SimplicialGraph& g, const ExtVertex& x) {
  return canonical_vertex(g, link.to_ambient.at(x.base), translate(x.conjugator, g, link.to_ambient));
}

LinkDistance link_distance(const ExtVertex& center, const ExtVertex& a, const ExtVertex& b) {
  const SimplicialGraph& g = center.graph();
  GroupElement back = center.conjugator.inverse();
  LinkGraph link = link_graph(g, center.base);
  ExtVertex la = to_link_vertex(link, center.base, act(a, back));
  ExtVertex lb = to_link_vertex(link, center.base, act(b, back));
  return {free_ext_distance(la, lb), free_ext_distance_bounds(la, lb)};
}

VertexSet LinkModel::link_set_in_z() const {
  VertexSet s;
  for (Vertex x : link_in_z) s.insert(x);
  return s;
}

VertexSet LinkModel::link_set_in_collapsed() const {
  return VertexSet::first(static_cast<int>(link_in_z.size()));
}

LinkModel build_link_model(const SimplicialGraph& g, Vertex v) {
  if (!is_connected(g) || !is_triangle_free(g) || !is_square_free(g)) {
    throw PreconditionError("link model needs a connected triangle- and square-free graph");
  }
  if (v < 0 || v >= g.size()) throw UnknownVertex("#" + std::to_string(v));
  LinkModel m;
  m.v = v;

  std::vector<std::string> labels;
  std::vector<Vertex> to_z(g.size(), -1);
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    to_z[u] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(u));
    m.z_to_ambient.push_back(u);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) edges.emplace_back(to_z[a], to_z[b]);
  }
  for (Vertex x : g.link(v).members()) {
    m.link_in_z.push_back(to_z[x]);
    if (g.degree(x) == 1) {
      Vertex patch = static_cast<Vertex>(labels.size());
      labels.push_back(g.label(x) + "'");
      m.z_to_ambient.push_back(-1);
      edges.emplace_back(to_z[x], patch);
    }
  }
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) throw BudgetExceeded("Z_v exceeds 64 vertices");
  std::vector<VertexSet> adj(labels.size());
  for (auto [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (Vertex x : m.link_in_z) m.boundary.push_back(adj[x]);
  for (std::size_t i = 0; i < m.boundary.size(); ++i) {
    for (std::size_t j = 0; j < m.boundary.size(); ++j) {
      if (i == j) continue;
      for (Vertex z : m.boundary[i].members()) adj[z] |= m.boundary[j];
    }
  }
  m.z = std::make_shared<const SimplicialGraph>(labels, adj);
  m.diam_z = diameter(*m.z);
  m.m = 3 * m.diam_z;
  m.m_prime = 18 * m.diam_z;

  const int k = static_cast<int>(m.link_in_z.size());
  std::vector<std::string> c_labels;
  std::vector<VertexSet> c_adj(2 * k);
  for (int i = 0; i < k; ++i) c_labels.push_back(labels[m.link_in_z[i]]);
  for (int i = 0; i < k; ++i) c_labels.push_back("B(" + labels[m.link_in_z[i]] + ")");
  for (int i = 0; i < k; ++i) {
    c_adj[i].insert(k + i);
    c_adj[k + i].insert(i);
    for (int j = 0; j < k; ++j) {
      if (i != j) c_adj[k + i].insert(k + j);
    }
  }
  m.collapsed = std::make_shared<const SimplicialGraph>(c_labels, c_adj);
  return m;
}

ExtSnapshot y_snapshot(const LinkModel& model, Budget budget, EdgeKernel edges) {
  return ExtSnapshot::build(*model.z, budget,
                            {.vertex_cap = 1000000, .edges = edges, .conjugator_support = model.link_set_in_z()});
}

ExtSnapshot c_snapshot(const LinkModel& model, Budget budget, EdgeKernel edges) {
  return ExtSnapshot::build(*model.collapsed, budget,
                            {.vertex_cap = 1000000, .edges = edges,
                             .conjugator_support = model.link_set_in_collapsed()});
}

namespace {

LinkDistance diameter_of(const ExtSnapshot& s, const ExtVertex& center, const std::vector<int>& entries) {
  LinkDistance best;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      auto d = link_distance(center, s.vertex(entries[i]), s.vertex(entries[j]));
      best.exact = std::max(best.exact, d.exact);
      best.bounds.lo = std::max(best.bounds.lo, d.bounds.lo);
      best.bounds.hi = std::max(best.bounds.hi, d.bounds.hi);
    }
  }
  return best;
}

}  // namespace

Projection project(const ExtSnapshot& s, const ExtVertex& center, const std::vector<ExtVertex>& targets) {
  if (!s.has_edges()) throw PreconditionError("projection needs a snapshot with edges");
  const int c = s.require(center);
  Projection p;
  p.exact = true;
  p.distance = kInfinity;
  std::vector<int> entries;
  for (const auto& target : targets) {
    const int t = s.require(target);
    if (t == c) throw PreconditionError("projection target equals the center");
    auto from_target = bfs_distances(s.adjacency(), t);
    const int d = from_target[c];
    p.distance = std::min(p.distance, d);
    if (d == kInfinity) {
      p.exact = false;
      continue;
    }
    if (d != covering_lower_bound(center, target)) p.exact = false;
    for (int u : s.neighbours(c)) {
      if (from_target[u] == d - 1) entries.push_back(u);
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  p.entries = std::move(entries);
  p.diameter = diameter_of(s, center, p.entries);
  return p;
}

Projection project(const ExtSnapshot& s, const ExtVertex& center, const ExtVertex& target) {
  return project(s, center, std::vector<ExtVertex>{target});
}

namespace {

std::vector<int> snapshot_geodesic(const ExtSnapshot& s, int from, int to) {
  auto dist = bfs_distances(s.adjacency(), from);
  if (dist[to] == kInfinity) return {};
  std::vector<int> path{to};
  for (int cur = to; cur != from;) {
    for (int u : s.neighbours(cur)) {
      if (dist[u] == dist[cur] - 1) {
        cur = u;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct Draw {
  std::string kind;
  Vertex center;
  std::vector<int> targets;
  int bound;
};

}  // namespace

BgitReport bgit_scan(const SimplicialGraph& g, Budget budget, int samples, std::uint64_t seed) {
  if (!is_connected(g) || !is_triangle_free(g) || !is_square_free(g)) {
    throw PreconditionError("bgit-scan needs a connected triangle- and square-free graph");
  }
  BgitReport r;
  r.budget_length = budget.length;
  r.budget_exponent = budget.exponent;
  r.tree = is_tree(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    auto model = build_link_model(g, v);
    r.m.push_back(model.m);
    r.m_prime.push_back(model.m_prime);
  }
  auto s = ExtSnapshot::build(g, budget, {.vertex_cap = 2000000, .keep_copies = false});
  std::vector<std::vector<int>> from_base;
  for (Vertex v = 0; v < g.size(); ++v) from_base.push_back(bfs_distances(s.adjacency(), s.require(base_vertex(g, v))));

  Rng rng(seed);
  auto far_vertices = [&](Vertex v, int min_dist) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      if (from_base[v][i] >= min_dist && from_base[v][i] != kInfinity) out.push_back(i);
    }
    return out;
  };
  std::vector<std::vector<int>> far3(g.size());
  std::vector<std::vector<int>> far2(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    far3[v] = far_vertices(v, 3);
    far2[v] = far_vertices(v, 2);
  }

  std::vector<Draw> draws;
  for (int i = 0; i < samples; ++i) {
    Vertex v = rng.uniform(0, g.size() - 1);
    if (far3[v].empty()) continue;
    int t = far3[v][rng.uniform(0, static_cast<int>(far3[v].size()) - 1)];
    draws.push_back({"pair", v, {t}, r.tree ? 0 : r.m[v]});
  }
  const int segment_samples = std::max(1, samples / 4);
  for (const auto& [kind, min_dist] : {std::pair<std::string, int>{"ball2-segment", 3}, {"star-segment", 2}}) {
    int made = 0;
    for (int attempt = 0; made < segment_samples && attempt < 50 * segment_samples; ++attempt) {
      Vertex v = rng.uniform(0, g.size() - 1);
      const auto& pool = min_dist == 3 ? far3[v] : far2[v];
      if (pool.size() < 2) continue;
      int a = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
      int b = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
      if (a == b) continue;
      auto path = snapshot_geodesic(s, a, b);
      bool clear = !path.empty() && std::all_of(path.begin(), path.end(), [&](int u) {
        return from_base[v][u] >= min_dist;
      });
      if (!clear) continue;
      int bound = r.tree ? 0 : (min_dist == 3 ? r.m[v] : r.m_prime[v]);
      draws.push_back({kind, v, path, bound});
      ++made;
    }
  }

  r.cases.resize(draws.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < static_cast<int>(draws.size()); ++i) {
    const auto& d = draws[i];
    std::vector<ExtVertex> targets;
    for (int id : d.targets) targets.push_back(s.vertex(id));
    ExtVertex center = base_vertex(g, d.center);
    auto p = project(s, center, targets);
    BgitCase c;
    c.kind = d.kind;
    c.center = g.label(d.center);
    c.target = targets.front().to_string();
    if (targets.size() > 1) c.target += " .. " + targets.back().to_string();
    c.distance = p.distance;
    c.diameter = p.diameter.exact;
    c.diameter_upper = p.diameter.bounds.hi;
    c.bound = d.bound;
    c.exact = p.exact;
    c.pass = c.diameter <= c.bound;
    r.cases[i] = std::move(c);
  }
  for (const auto& c : r.cases) {
    if (c.kind == "pair") {
      r.max_pair_diameter = std::max(r.max_pair_diameter, c.diameter);
    } else {
      r.max_segment_diameter = std::max(r.max_segment_diameter, c.diameter);
    }
    r.pass = r.pass && c.pass;
  }
  return r;
}

C4Demo c4_demonstration(int max_length) {
  static const SimplicialGraph c4 = SimplicialGraph::cycle(4);
  C4Demo demo;
  ExtVertex a = base_vertex(c4, 0);
  ExtVertex c = base_vertex(c4, 2);
  for (int len = 1; len <= max_length; ++len) {
    auto s = ExtSnapshot::build(c4, {len, 1}, {.keep_copies = false});
    auto p = project(s, a, c);
    demo.lengths.push_back(len);
    demo.projection_sizes.push_back(static_cast<int>(p.entries.size()));
    demo.link_sizes.push_back(static_cast<int>(s.neighbours(s.require(a)).size()));
    demo.diameters.push_back(p.diameter.exact);
  }
  return demo;
}

}  // namespace raag
