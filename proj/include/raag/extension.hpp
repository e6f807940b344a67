#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "raag/element.hpp"

namespace raag {

// The vertex base^conjugator of the extension graph; conjugator carries no st(base) prefix.
struct ExtVertex {
  Vertex base;
  GroupElement conjugator;

  const SimplicialGraph& graph() const { return conjugator.graph(); }
  // conjugator^-1 * base * conjugator
  GroupElement element() const;
  std::string to_string() const;

  bool operator==(const ExtVertex& o) const { return base == o.base && conjugator == o.conjugator; }
  auto operator<=>(const ExtVertex& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return conjugator <=> o.conjugator;
  }
};

struct ExtVertexHash {
  std::size_t operator()(const ExtVertex& x) const {
    return hash_word(x.conjugator.letters()) * 31U + static_cast<std::size_t>(x.base);
  }
};

ExtVertex canonical_vertex(const SimplicialGraph& g, Vertex v, const GroupElement& conj);
ExtVertex base_vertex(const SimplicialGraph& g, Vertex v);
ExtVertex act(const ExtVertex& x, const GroupElement& g);

// Commutation test on the underlying group elements.
bool ext_adjacent(const ExtVertex& x, const ExtVertex& y);

// Γ ∩ Γ^g as a set of base vertices, by the case analysis valid for triangle- and square-free Γ.
VertexSet copy_intersection(const GroupElement& g);

struct Budget {
  int length = 0;    // conjugator word length
  int exponent = 1;  // largest syllable exponent
};

// Elements with |g| <= length and syllable exponents <= exponent, supported in gens, sorted.
std::vector<GroupElement> enumerate_ball(const SimplicialGraph& g, Budget budget, VertexSet gens);

enum class EdgeKernel {
  none,        // vertices and copies only
  pairwise,    // serial reference: commutator test on every pair
  neighbours,  // enumerates candidate neighbours of each vertex (OpenMP)
};

struct SnapshotOptions {
  std::size_t vertex_cap = 100000;
  EdgeKernel edges = EdgeKernel::neighbours;
  // Generators allowed in conjugators; empty means all vertices.
  VertexSet conjugator_support{};
  bool keep_copies = true;
};

// Finite induced subgraph of the extension graph.
class ExtSnapshot {
 public:
  static ExtSnapshot build(const SimplicialGraph& g, Budget budget, SnapshotOptions options = {});

  const SimplicialGraph& graph() const { return *graph_; }
  Budget budget() const { return budget_; }
  std::size_t size() const { return vertices_.size(); }
  const ExtVertex& vertex(int id) const { return vertices_.at(id); }
  const std::vector<ExtVertex>& vertices() const { return vertices_; }
  std::optional<int> id_of(const ExtVertex& x) const;
  int require(const ExtVertex& x) const;
  const AdjacencyList& adjacency() const { return adjacency_; }
  const std::vector<int>& neighbours(int id) const { return adjacency_.at(id); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  bool has_edges() const { return edges_built_; }
  // Each copy lists its vertex ids in base order.
  const std::vector<std::vector<int>>& copies() const { return copies_; }
  const std::vector<GroupElement>& conjugators() const { return conjugators_; }

  std::string to_json() const;
  std::string to_dot() const;

 private:
  void build_edges_pairwise();
  void build_edges_neighbours();

  const SimplicialGraph* graph_ = nullptr;
  Budget budget_;
  std::vector<GroupElement> conjugators_;
  std::vector<ExtVertex> vertices_;
  std::unordered_map<ExtVertex, int, ExtVertexHash> ids_;
  AdjacencyList adjacency_;
  std::vector<std::vector<int>> copies_;
  bool edges_built_ = false;
};

struct DistanceReport {
  int value = kInfinity;  // upper bound on the distance in the full extension graph
  int lower = 0;          // certified lower bound
  bool exact = false;
};

// Lower bounds from star length: for x = a^p and y = b^q with k = q p^-1.
int covering_lower_bound(const ExtVertex& x, const ExtVertex& y);

DistanceReport graph_distance(const ExtSnapshot& s, const ExtVertex& x, const ExtVertex& y);
DistanceReport covering_distance(const ExtSnapshot& s, const ExtVertex& x, const ExtVertex& y);

// Graph distance at budgets (L, E), (L+1, E), (L+2, E); exact if all three agree or a lower bound is met.
DistanceReport stable_distance(const SimplicialGraph& g, Budget budget, const ExtVertex& x, const ExtVertex& y,
                               SnapshotOptions options = {});

// Extension graph of a discrete graph, with the diagonal-conjugation adjacency. Vertices are
// ExtVertex values over the discrete graph; its distance equals the covering distance.
int free_ext_distance(const ExtVertex& x, const ExtVertex& y);

struct IntInterval {
  int lo;
  int hi;
  bool contains(int v) const { return lo <= v && v <= hi; }
};
// Syllable sandwich for the same distance.
IntInterval free_ext_distance_bounds(const ExtVertex& x, const ExtVertex& y);

}  // namespace raag
