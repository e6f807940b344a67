#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "raag/extension.hpp"

namespace raag {

// lk_Γ(v) as a discrete graph, with the vertex correspondence back to Γ.
struct LinkGraph {
  std::shared_ptr<const SimplicialGraph> graph;
  std::vector<Vertex> to_ambient;  // link index -> vertex of Γ
  std::vector<Vertex> to_link;     // vertex of Γ -> link index, or -1
};
LinkGraph link_graph(const SimplicialGraph& g, Vertex v);

// Identifies a neighbour of the base vertex v in Γ^e with a vertex of (lk v)^e.
ExtVertex to_link_vertex(const LinkGraph& link, Vertex v, const ExtVertex& x);
ExtVertex from_link_vertex(const LinkGraph& link, const SimplicialGraph& g, const ExtVertex& x);

struct LinkDistance {
  int exact = 0;
  IntInterval bounds{0, 0};  // syllable sandwich
};
// Distance in lk(center) between two of its vertices.
LinkDistance link_distance(const ExtVertex& center, const ExtVertex& a, const ExtVertex& b);

struct LinkModel {
  Vertex v = 0;
  std::shared_ptr<const SimplicialGraph> z;  // Z_v
  std::vector<Vertex> z_to_ambient;          // -1 for pendant patches
  std::vector<Vertex> link_in_z;             // lk(v) in Z_v order
  std::vector<VertexSet> boundary;           // B_x in Z_v, parallel to link_in_z
  std::shared_ptr<const SimplicialGraph> collapsed;  // c_v: link vertices then one b_x each
  int diam_z = 0;
  int m = 0;        // 3 diam(Z_v)
  int m_prime = 0;  // 18 diam(Z_v)

  VertexSet link_set_in_z() const;
  VertexSet link_set_in_collapsed() const;
  bool patched(Vertex z_vertex) const { return z_to_ambient.at(z_vertex) < 0; }
};
// Requires Γ connected, triangle- and square-free.
LinkModel build_link_model(const SimplicialGraph& g, Vertex v);

// Conjugates of Z_v (resp. c_v) by <lk v> within the budget.
ExtSnapshot y_snapshot(const LinkModel& model, Budget budget, EdgeKernel edges = EdgeKernel::neighbours);
ExtSnapshot c_snapshot(const LinkModel& model, Budget budget, EdgeKernel edges = EdgeKernel::neighbours);

struct Projection {
  std::vector<int> entries;  // snapshot ids in lk(center)
  LinkDistance diameter;     // largest pairwise link distance (exact and sandwich upper end)
  int distance = 0;          // snapshot distance from center to target
  bool exact = false;        // snapshot distance meets the star-length lower bound
};
// pi_center(target) inside the snapshot, from all snapshot geodesics.
Projection project(const ExtSnapshot& s, const ExtVertex& center, const ExtVertex& target);
Projection project(const ExtSnapshot& s, const ExtVertex& center, const std::vector<ExtVertex>& targets);

struct BgitCase {
  std::string kind;  // "pair", "ball2-segment" or "star-segment"
  std::string center;
  std::string target;
  int distance = 0;
  int diameter = 0;
  int diameter_upper = 0;
  int bound = 0;
  bool exact = false;
  bool pass = false;
};

struct BgitReport {
  int budget_length = 0;
  int budget_exponent = 0;
  std::vector<int> m;  // per base vertex
  std::vector<int> m_prime;
  int max_pair_diameter = 0;
  int max_segment_diameter = 0;
  std::vector<BgitCase> cases;
  bool tree = false;
  bool pass = true;
};

BgitReport bgit_scan(const SimplicialGraph& g, Budget budget, int samples, std::uint64_t seed);

// pi_a(c) in C4 snapshots: the projection is all of lk(a) and its diameter grows with the budget.
struct C4Demo {
  std::vector<int> lengths;
  std::vector<int> projection_sizes;
  std::vector<int> link_sizes;
  std::vector<int> diameters;
};
C4Demo c4_demonstration(int max_length);

}  // namespace raag
