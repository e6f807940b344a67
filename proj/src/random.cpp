#include "raag/random.hpp"

#include <string>
#include <vector>

namespace raag {

Letter random_letter(Rng& rng, const SimplicialGraph& g) {
  return Letter(rng.uniform(0, g.size() - 1), rng.coin() ? 1 : -1);
}

GroupElement random_element(Rng& rng, const SimplicialGraph& g, int length) {
  GroupElement e(g);
  while (static_cast<int>(e.length()) < length) {
    GroupElement next = e.times(random_letter(rng, g));
    if (next.length() > e.length()) e = std::move(next);
  }
  return e;
}

GroupElement random_syllable_word(Rng& rng, const SimplicialGraph& g, int syllables, int max_exp) {
  GroupElement e(g);
  Vertex prev = -1;
  for (int i = 0; i < syllables; ++i) {
    Vertex v = rng.uniform(0, g.size() - 1);
    if (g.size() > 1) {
      while (v == prev) v = rng.uniform(0, g.size() - 1);
    }
    int exp = rng.uniform(1, max_exp) * (rng.coin() ? 1 : -1);
    e = e * GroupElement::generator(g, v, exp);
    prev = v;
  }
  return e;
}

SimplicialGraph random_girth5_graph(Rng& rng, int n, int extra) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  auto join = [&](int u, int v) {
    adj[u] = adj[u] | VertexSet::single(v);
    adj[v] = adj[v] | VertexSet::single(u);
  };
  for (int v = 1; v < n; ++v) join(v, rng.uniform(0, v - 1));
  for (int i = 0; i < extra && n > 1; ++i) {
    int u = rng.uniform(0, n - 1);
    int v = rng.uniform(0, n - 1);
    SimplicialGraph current(labels, adj);
    // A chord closes a cycle of length d(u, v) + 1.
    if (u != v && distance(current, u, v) >= 4) join(u, v);
  }
  return SimplicialGraph(std::move(labels), std::move(adj));
}

}  // namespace raag
