#include "raag/extension.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <json.hpp>

#include "raag/errors.hpp"
#include "raag/lengths.hpp"

namespace raag {

GroupElement ExtVertex::element() const {
  return conjugator.inverse() * GroupElement::generator(graph(), base) * conjugator;
}

std::string ExtVertex::to_string() const {
  if (conjugator.is_identity()) return graph().label(base);
  return graph().label(base) + "^(" + conjugator.to_string() + ")";
}

ExtVertex canonical_vertex(const SimplicialGraph& g, Vertex v, const GroupElement& conj) {
  if (v < 0 || v >= g.size()) throw UnknownVertex("#" + std::to_string(v));
  return {v, split_prefix(conj, g.star(v)).rest};
}

ExtVertex base_vertex(const SimplicialGraph& g, Vertex v) { return canonical_vertex(g, v, GroupElement(g)); }

ExtVertex act(const ExtVertex& x, const GroupElement& g) {
  return canonical_vertex(x.graph(), x.base, x.conjugator * g);
}

bool ext_adjacent(const ExtVertex& x, const ExtVertex& y) {
  return !(x == y) && commutator(x.element(), y.element()).is_identity();
}

VertexSet copy_intersection(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  if (!is_triangle_free(gr) || !is_square_free(gr)) {
    throw PreconditionError("copy intersection needs a triangle- and square-free graph");
  }
  const VertexSet supp = g.support();
  if (supp.empty()) return gr.vertices();
  if (supp.size() == 1) return gr.star(supp.min());
  for (Vertex y = 0; y < gr.size(); ++y) {
    if (!supp.subset_of(gr.star(y)) || !supp.contains(y)) continue;
    VertexSet in_link = supp & gr.link(y);
    if (in_link.size() >= 2) return VertexSet::single(y);
    // supp = {a, y}: both syllables present, so g moves everything but a and y.
    return VertexSet::single(y) | in_link;
  }
  // The only remaining star words have support inside a link, with at least two vertices.
  for (Vertex y = 0; y < gr.size(); ++y) {
    if (supp.subset_of(gr.link(y))) return VertexSet::single(y);
  }
  return {};
}

std::vector<GroupElement> enumerate_ball(const SimplicialGraph& g, Budget budget, VertexSet gens) {
  if (budget.length < 0 || budget.exponent < 1) throw PreconditionError("budget needs L >= 0 and E >= 1");
  std::vector<GroupElement> all{GroupElement(g)};
  std::unordered_set<GroupElement, ElementHash> seen{all.front()};
  std::vector<GroupElement> frontier = all;
  std::vector<GroupElement> gen_elems;
  for (Vertex v : gens.members()) {
    gen_elems.push_back(GroupElement::generator(g, v, -1));
    gen_elems.push_back(GroupElement::generator(g, v, 1));
  }
  for (int len = 1; len <= budget.length; ++len) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier) {
      for (const auto& x : gen_elems) {
        GroupElement f = x * e;
        if (static_cast<int>(f.length()) != len || max_syllable_exponent(f) > budget.exponent) continue;
        if (seen.insert(f).second) next.push_back(std::move(f));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

ExtSnapshot ExtSnapshot::build(const SimplicialGraph& g, Budget budget, SnapshotOptions options) {
  ExtSnapshot s;
  s.graph_ = &g;
  s.budget_ = budget;
  VertexSet gens = options.conjugator_support.empty() ? g.vertices() : options.conjugator_support;
  s.conjugators_ = enumerate_ball(g, budget, gens);

  std::vector<std::vector<char>> canonical(g.size(), std::vector<char>(s.conjugators_.size(), 0));
  std::size_t count = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < s.conjugators_.size(); ++i) {
      if (iota(s.conjugators_[i], g.star(v)).is_identity()) {
        canonical[v][i] = 1;
        ++count;
      }
    }
  }
  if (count > options.vertex_cap) {
    throw BudgetExceeded("snapshot would have " + std::to_string(count) + " vertices, cap is " +
                         std::to_string(options.vertex_cap));
  }
  s.vertices_.reserve(count);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < s.conjugators_.size(); ++i) {
      if (canonical[v][i]) s.vertices_.push_back({v, s.conjugators_[i]});
    }
  }
  s.ids_.reserve(count);
  for (std::size_t i = 0; i < s.vertices_.size(); ++i) s.ids_.emplace(s.vertices_[i], static_cast<int>(i));

  if (options.keep_copies) {
    std::unordered_set<std::string> seen_copies;
    for (const auto& c : s.conjugators_) {
      std::vector<int> copy;
      std::string key;
      for (Vertex v = 0; v < g.size(); ++v) {
        int id = s.ids_.at(canonical_vertex(g, v, c));
        copy.push_back(id);
        key.append(reinterpret_cast<const char*>(&id), sizeof id);
      }
      if (seen_copies.insert(key).second) s.copies_.push_back(std::move(copy));
    }
  }

  s.adjacency_.assign(s.vertices_.size(), {});
  switch (options.edges) {
    case EdgeKernel::none: break;
    case EdgeKernel::pairwise: s.build_edges_pairwise(); break;
    case EdgeKernel::neighbours: s.build_edges_neighbours(); break;
  }
  return s;
}

void ExtSnapshot::build_edges_pairwise() {
  const int n = static_cast<int>(vertices_.size());
  std::vector<GroupElement> elems;
  elems.reserve(n);
  for (const auto& x : vertices_) elems.push_back(x.element());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (commutator(elems[i], elems[j]).is_identity()) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
      }
    }
  }
  edges_built_ = true;
}

void ExtSnapshot::build_edges_neighbours() {
  const SimplicialGraph& g = *graph_;
  const int n = static_cast<int>(vertices_.size());
  VertexSet gens;
  for (const auto& c : conjugators_) gens |= c.support();

  // Left factors b in <st(w)> with no st(u) ∩ st(w) prefix, per ordered adjacent pair (w, u).
  std::vector<std::vector<std::vector<GroupElement>>> factors(g.size(),
                                                              std::vector<std::vector<GroupElement>>(g.size()));
  for (Vertex w = 0; w < g.size(); ++w) {
    auto local = enumerate_ball(g, budget_, g.star(w) & gens);
    for (Vertex u : g.link(w).members()) {
      if (u < w) continue;
      VertexSet shared = g.star(u) & g.star(w);
      for (const auto& b : local) {
        if (iota(b, shared).is_identity()) factors[w][u].push_back(b);
      }
      std::stable_sort(factors[w][u].begin(), factors[w][u].end(),
                       [](const GroupElement& a, const GroupElement& b) { return a.length() < b.length(); });
    }
  }

  std::vector<std::pair<int, int>> found;
#pragma omp parallel
  {
    std::vector<std::pair<int, int>> mine;
#pragma omp for schedule(dynamic, 64)
    for (int i = 0; i < n; ++i) {
      const ExtVertex& y = vertices_[i];
      for (Vertex u : g.link(y.base).members()) {
        if (u < y.base) continue;
        const int bound = budget_.length - static_cast<int>(y.conjugator.length()) +
                          static_cast<int>(iota(y.conjugator, g.star(u)).length());
        for (const auto& b : factors[y.base][u]) {
          if (static_cast<int>(b.length()) > bound) break;
          ExtVertex x = canonical_vertex(g, u, b * y.conjugator);
          if (static_cast<int>(x.conjugator.length()) > budget_.length) continue;
          if (auto it = ids_.find(x); it != ids_.end()) mine.emplace_back(i, it->second);
        }
      }
    }
#pragma omp critical
    found.insert(found.end(), mine.begin(), mine.end());
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto [a, b] : found) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  edges_built_ = true;
}

std::optional<int> ExtSnapshot::id_of(const ExtVertex& x) const {
  if (auto it = ids_.find(x); it != ids_.end()) return it->second;
  return std::nullopt;
}

int ExtSnapshot::require(const ExtVertex& x) const {
  auto id = id_of(x);
  if (!id) throw BudgetExceeded("vertex " + x.to_string() + " is outside the snapshot budget");
  return *id;
}

std::size_t ExtSnapshot::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) total += nb.size();
  return total / 2;
}

std::vector<std::pair<int, int>> ExtSnapshot::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(adjacency_.size()); ++i) {
    for (int j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string ExtSnapshot::to_json() const {
  using nlohmann::json;
  json gj;
  gj["vertices"] = graph_->labels();
  gj["edges"] = json::array();
  for (auto [u, v] : graph_->edges()) gj["edges"].push_back({graph_->label(u), graph_->label(v)});
  json out;
  out["graph"] = gj;
  out["budget"] = {{"L", budget_.length}, {"E", budget_.exponent}};
  out["vertices"] = json::array();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out["vertices"].push_back({{"id", i},
                               {"base", graph_->label(vertices_[i].base)},
                               {"conjugator", vertices_[i].conjugator.to_string()}});
  }
  out["edges"] = json::array();
  for (auto [a, b] : edges()) out["edges"].push_back({a, b});
  return out.dump(2);
}

std::string ExtSnapshot::to_dot() const {
  std::string out = "graph snapshot {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"" + vertices_[i].to_string() + "\"";
    if (vertices_[i].conjugator.is_identity()) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (auto [a, b] : edges()) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  return out + "}\n";
}

int covering_lower_bound(const ExtVertex& x, const ExtVertex& y) {
  if (x == y) return 0;
  GroupElement k = y.conjugator * x.conjugator.inverse();
  int s = star_length(k);
  return std::max(1, x.base == y.base ? s - 1 : s - 2);
}

DistanceReport graph_distance(const ExtSnapshot& s, const ExtVertex& x, const ExtVertex& y) {
  if (!s.has_edges()) throw PreconditionError("snapshot was built without edges");
  DistanceReport r;
  r.lower = covering_lower_bound(x, y);
  r.value = bfs_distances(s.adjacency(), s.require(x))[s.require(y)];
  r.exact = r.value == r.lower;
  return r;
}

DistanceReport covering_distance(const ExtSnapshot& s, const ExtVertex& x, const ExtVertex& y) {
  DistanceReport r;
  r.lower = covering_lower_bound(x, y);
  const int xi = s.require(x);
  const int yi = s.require(y);
  if (xi == yi) {
    r.value = 0;
    r.exact = true;
    return r;
  }
  const auto& copies = s.copies();
  if (copies.empty()) throw PreconditionError("snapshot was built without copies");
  std::vector<std::vector<int>> containing(s.size());
  for (std::size_t c = 0; c < copies.size(); ++c) {
    for (int v : copies[c]) containing[v].push_back(static_cast<int>(c));
  }
  std::vector<int> dist(copies.size(), 0);
  std::deque<int> queue;
  for (int c : containing[xi]) {
    dist[c] = 1;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    if (std::find(copies[c].begin(), copies[c].end(), yi) != copies[c].end()) {
      r.value = dist[c];
      break;
    }
    for (int v : copies[c]) {
      for (int c2 : containing[v]) {
        if (dist[c2] == 0) {
          dist[c2] = dist[c] + 1;
          queue.push_back(c2);
        }
      }
    }
  }
  r.exact = r.value == r.lower;
  return r;
}

DistanceReport stable_distance(const SimplicialGraph& g, Budget budget, const ExtVertex& x, const ExtVertex& y,
                               SnapshotOptions options) {
  options.keep_copies = false;
  DistanceReport r;
  r.lower = covering_lower_bound(x, y);
  int prev = -1;
  int agree = 0;
  for (int step = 0; step < 3; ++step) {
    auto s = ExtSnapshot::build(g, {budget.length + step, budget.exponent}, options);
    int d = graph_distance(s, x, y).value;
    agree = d == prev ? agree + 1 : 0;
    prev = d;
    r.value = d;
    if (d == r.lower) break;
  }
  r.exact = r.value == r.lower || agree >= 2;
  return r;
}

namespace {

void require_discrete(const ExtVertex& x) {
  if (x.graph().edge_count() != 0) throw PreconditionError("free extension graphs need a discrete graph");
}

int free_syllables(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i].vertex() != w[i - 1].vertex()) ++s;
  }
  return s;
}

Word strip_leading(Word w, Vertex v) {
  std::size_t i = 0;
  while (i < w.size() && w[i].vertex() == v) ++i;
  w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  return w;
}

Word strip_trailing(Word w, Vertex v) {
  while (!w.empty() && w.back().vertex() == v) w.pop_back();
  return w;
}

}  // namespace

namespace {

// Fewest syllables of a k with y = b^k, after moving x to its base copy; both end strippings apply.
int min_free_syllables(const ExtVertex& x, const ExtVertex& y) {
  Word k = (y.conjugator * x.conjugator.inverse()).letters();
  int one = free_syllables(strip_trailing(strip_leading(k, y.base), x.base));
  int two = free_syllables(strip_leading(strip_trailing(k, x.base), y.base));
  return std::min(one, two);
}

}  // namespace

int free_ext_distance(const ExtVertex& x, const ExtVertex& y) {
  require_discrete(x);
  if (x == y) return 0;
  // Copies through x are Γ^c for c in <a> p; chains between copies cost one per syllable.
  return 1 + min_free_syllables(x, y);
}

IntInterval free_ext_distance_bounds(const ExtVertex& x, const ExtVertex& y) {
  require_discrete(x);
  if (x == y) return {0, 0};
  int s = min_free_syllables(x, y);
  return {std::max(1, s - 1), s + 1};
}

}  // namespace raag
