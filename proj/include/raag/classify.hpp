#pragma once

#include <string>
#include <utility>
#include <vector>

#include "raag/element.hpp"

namespace raag {

enum class Kind { identity, elliptic, loxodromic };

std::string to_string(Kind k);

struct ElementType {
  Kind kind = Kind::identity;
  // Cyclically reduced support.
  VertexSet support;
  // Elliptic: sides of a join containing the support. The second side is empty only when the
  // support is a single isolated vertex.
  std::pair<VertexSet, VertexSet> join;
  // Loxodromic: closed walk in the complement graph visiting every support vertex.
  std::vector<Vertex> loop;
};

ElementType classify(const GroupElement& g);
// Checks the witness against the graph.
bool witness_valid(const SimplicialGraph& g, const ElementType& t);

bool is_pure(const GroupElement& g);

std::vector<int> power_star_growth(const GroupElement& g, int n_max);

struct Rational {
  long num;
  long den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};
std::string to_string(const Rational& r);

struct Interval {
  Rational lo;
  Rational hi;
};

// Bounds on d(v, v^{g^n}) / n for any base vertex v.
Interval translation_length_estimate(const GroupElement& g, int n);

struct DivergenceSeries {
  std::vector<int> values;  // star length of lambda^n g lambda^-n, n = 0..n_max
  bool trivial = false;     // g is the identity
};
DivergenceSeries conjugate_divergence(const GroupElement& lambda, const GroupElement& g, int n_max);

// Freely reduced words in the generators lambda_i^N, as index sequences with signs (i+1 or -(i+1)).
using FreeWord = std::vector<int>;
std::vector<FreeWord> sample_free_relations(const std::vector<GroupElement>& lambdas, int power, int max_len);
std::string format_free_word(const FreeWord& w);

SimplicialGraph commutation_graph(const std::vector<GroupElement>& elements);

}  // namespace raag
