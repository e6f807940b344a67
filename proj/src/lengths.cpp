#include "raag/lengths.hpp"

#include <unordered_map>
#include <unordered_set>

namespace raag {

namespace {

std::string cache_key(const GroupElement& g) {
  std::string key(sizeof(std::uint64_t), '\0');
  std::uint64_t uid = g.graph().uid();
  for (std::size_t i = 0; i < sizeof uid; ++i) key[i] = static_cast<char>((uid >> (8 * i)) & 0xFFU);
  for (Letter l : g.letters()) key.push_back(static_cast<char>(l.code()));
  return key;
}

LruCache<int>& star_cache() {
  static LruCache<int> cache(kDefaultCacheEntries);
  return cache;
}

LruCache<int>& syllable_cache() {
  static LruCache<int> cache(kDefaultCacheEntries);
  return cache;
}

VertexSet leading_vertices(const GroupElement& g) {
  VertexSet s;
  for (std::size_t i : leading_positions(g)) s.insert(g.letters()[i].vertex());
  return s;
}

// Breadth-first search where one step strips the maximal prefix supported in sets[v].
Factorization peel_search(const GroupElement& g, const std::vector<VertexSet>& sets) {
  const SimplicialGraph& gr = g.graph();
  Factorization out{{}, g};
  if (g.is_identity()) return out;

  struct Node {
    GroupElement elem;
    int parent;
    Vertex center;
    GroupElement factor;
  };
  std::vector<Node> nodes;
  std::unordered_set<GroupElement, ElementHash> seen;
  nodes.push_back({g, -1, -1, GroupElement(gr)});
  seen.insert(g);
  std::size_t level_begin = 0;
  while (level_begin < nodes.size()) {
    std::size_t level_end = nodes.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      VertexSet lead = leading_vertices(nodes[i].elem);
      for (Vertex v = 0; v < gr.size(); ++v) {
        if (!sets[v].intersects(lead)) continue;
        auto split = split_prefix(nodes[i].elem, sets[v]);
        if (!seen.insert(split.rest).second) continue;
        nodes.push_back({split.rest, static_cast<int>(i), v, split.prefix});
        if (split.rest.is_identity()) {
          // Walk back; the first peeled factor is the leftmost one.
          std::vector<StarFactor> prefix_order;
          for (int k = static_cast<int>(nodes.size()) - 1; nodes[k].parent >= 0; k = nodes[k].parent) {
            prefix_order.push_back({nodes[k].center, nodes[k].factor});
          }
          out.factors = std::move(prefix_order);  // already rightmost first
          return out;
        }
      }
    }
    level_begin = level_end;
  }
  return out;  // unreachable: every element peels to the identity
}

std::vector<VertexSet> star_sets(const SimplicialGraph& g) {
  std::vector<VertexSet> s;
  for (Vertex v = 0; v < g.size(); ++v) s.push_back(g.star(v));
  return s;
}

std::vector<VertexSet> singleton_sets(const SimplicialGraph& g) {
  std::vector<VertexSet> s;
  for (Vertex v = 0; v < g.size(); ++v) s.push_back(VertexSet::single(v));
  return s;
}

}  // namespace

GroupElement Factorization::product() const {
  GroupElement p(target.graph());
  for (const auto& f : factors) p = f.word * p;
  return p;
}

bool Factorization::valid() const {
  for (const auto& f : factors) {
    if (!f.word.support().subset_of(target.graph().star(f.center))) return false;
  }
  return product() == target;
}

int syllable_length(const GroupElement& g) {
  if (g.is_identity()) return 0;
  std::string key = cache_key(g);
  if (auto hit = syllable_cache().get(key)) return *hit;
  int len = static_cast<int>(peel_search(g, singleton_sets(g.graph())).factors.size());
  syllable_cache().put(key, len);
  return len;
}

Factorization star_factorization(const GroupElement& g) {
  auto f = peel_search(g, star_sets(g.graph()));
  star_cache().put(cache_key(g), static_cast<int>(f.factors.size()));
  return f;
}

int star_length(const GroupElement& g) {
  if (g.is_identity()) return 0;
  if (auto hit = star_cache().get(cache_key(g))) return *hit;
  return static_cast<int>(star_factorization(g).factors.size());
}

std::size_t length_cache_size() { return star_cache().size(); }

std::vector<GroupElement> all_prefixes(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  std::vector<GroupElement> out{GroupElement(gr)};
  std::unordered_set<GroupElement, ElementHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    GroupElement rest = out[i].inverse() * g;
    for (std::size_t pos : leading_positions(rest)) {
      GroupElement next = out[i].times(rest.letters()[pos]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

struct MinSylChoice {
  int cost;
  Vertex center;
  GroupElement factor;  // leftmost factor of an optimal factorization
};

class MinSyllableSearch {
 public:
  explicit MinSyllableSearch(const SimplicialGraph& g) : graph_(g) {}

  const MinSylChoice& solve(const GroupElement& h) {
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    MinSylChoice best{0, -1, GroupElement(graph_)};
    if (!h.is_identity()) {
      const int remaining = star_length(h);
      best.cost = -1;
      std::unordered_set<GroupElement, ElementHash> tried;
      for (Vertex v = 0; v < graph_.size(); ++v) {
        GroupElement top = iota(h, graph_.star(v));
        if (top.is_identity()) continue;
        for (const auto& p : all_prefixes(top)) {
          if (p.is_identity() || !tried.insert(p).second) continue;
          GroupElement rest = p.inverse() * h;
          if (star_length(rest) != remaining - 1) continue;
          int cost = syllable_length(p) + solve(rest).cost;
          if (best.cost < 0 || cost < best.cost) best = {cost, v, p};
        }
      }
    }
    return memo_.emplace(h, std::move(best)).first->second;
  }

 private:
  const SimplicialGraph& graph_;
  std::unordered_map<GroupElement, MinSylChoice, ElementHash> memo_;
};

}  // namespace

int syllable_via_star(const GroupElement& g) {
  MinSyllableSearch search(g.graph());
  return search.solve(g).cost;
}

Factorization min_syllable_star_factorization(const GroupElement& g) {
  MinSyllableSearch search(g.graph());
  std::vector<StarFactor> prefix_order;
  GroupElement h = g;
  while (!h.is_identity()) {
    const auto& choice = search.solve(h);
    prefix_order.push_back({choice.center, choice.factor});
    h = choice.factor.inverse() * h;
  }
  return {std::vector<StarFactor>(prefix_order.rbegin(), prefix_order.rend()), g};
}

}  // namespace raag
