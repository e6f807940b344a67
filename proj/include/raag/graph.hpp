#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using Vertex = int;

// Subset of the vertices of a SimplicialGraph, as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr Vertex min() const { return std::countr_zero(bits_); }

  constexpr VertexSet& insert(Vertex v) { bits_ |= std::uint64_t{1} << v; return *this; }
  constexpr VertexSet& erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

inline constexpr int kMaxVertices = 64;
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Finite simple graph with an ordered vertex list. Immutable once built.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);
  SimplicialGraph(std::vector<std::string> labels, std::vector<VertexSet> adjacency);

  // "v: u w x" per line; '#' starts a comment.
  static SimplicialGraph parse(std::string_view text);
  static SimplicialGraph from_file(const std::string& path);

  static SimplicialGraph cycle(int n);
  static SimplicialGraph path(int n);
  static SimplicialGraph discrete(int n);
  static SimplicialGraph complete(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  VertexSet vertices() const { return VertexSet::first(size()); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  Vertex index(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  VertexSet link(Vertex v) const { return adjacency_.at(v); }
  VertexSet star(Vertex v) const { return adjacency_.at(v) | VertexSet::single(v); }
  // Vertices outside s adjacent to every vertex of s.
  VertexSet common_link(VertexSet s) const;
  int degree(Vertex v) const { return adjacency_[v].size(); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  SimplicialGraph opposite() const;
  // Induced subgraph; vertices keep their relative order.
  SimplicialGraph induced(VertexSet s) const;

  // Process-unique id shared by copies; used to key caches.
  std::uint64_t uid() const { return uid_; }

  std::string to_text() const;
  std::string to_dot(std::string_view name = "G") const;

  bool operator==(const SimplicialGraph& o) const {
    return labels_ == o.labels_ && adjacency_ == o.adjacency_;
  }

 private:
  void validate_and_stamp();

  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
  std::uint64_t uid_ = 0;
};

using AdjacencyList = std::vector<std::vector<int>>;

AdjacencyList adjacency_list(const SimplicialGraph& g);
std::vector<int> bfs_distances(const AdjacencyList& adj, int source);
// Shortest cycle length, or kInfinity for forests.
int girth(const AdjacencyList& adj);
int girth(const SimplicialGraph& g);
std::vector<std::vector<int>> components(const AdjacencyList& adj);

bool is_connected(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g, VertexSet s);
bool is_anti_connected(const SimplicialGraph& g);
bool is_triangle_free(const SimplicialGraph& g);
bool is_square_free(const SimplicialGraph& g);
bool is_tree(const SimplicialGraph& g);
// kInfinity if disconnected.
int diameter(const SimplicialGraph& g);
int distance(const SimplicialGraph& g, Vertex u, Vertex v);
// Lexicographically least shortest path (by vertex order), endpoints included.
std::vector<Vertex> shortest_path(const SimplicialGraph& g, Vertex from, Vertex to);

std::optional<std::pair<VertexSet, VertexSet>> split_join(const SimplicialGraph& g, VertexSet s);

inline constexpr int kCliqueGraphCap = 16;
std::vector<VertexSet> cliques(const SimplicialGraph& g);
SimplicialGraph clique_graph(const SimplicialGraph& g, int cap = kCliqueGraphCap);

// image[i] is the vertex of b matched with vertex i of a.
std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b);

std::string format_set(const SimplicialGraph& g, VertexSet s);

}  // namespace raag
