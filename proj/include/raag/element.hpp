#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A generator or its inverse. Ordered by (vertex, sign) with the inverse first.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Vertex v, int sign)
      : code_(static_cast<std::uint8_t>(2 * v + (sign > 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr Vertex vertex() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1U) != 0 ? 1 : -1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1U); }
  constexpr std::uint8_t code() const { return code_; }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

using Word = std::vector<Letter>;

// Tokens `a`, `a^-1`, `a^3`, separated by whitespace; `1` or an empty string is the identity.
Word parse_word(const SimplicialGraph& g, std::string_view text);
std::string format_word(const SimplicialGraph& g, std::span<const Letter> w);
Word inverse_word(std::span<const Letter> w);

// Appends x to a reduced word, cancelling against the last letter that x can reach.
void append_reduced(const SimplicialGraph& g, Word& reduced, Letter x);
// Rewrites a reduced word into the lexicographically least word for the same element.
void canonicalize(const SimplicialGraph& g, Word& reduced);

// Element of A(g) stored in normal form. The graph must outlive the element.
class GroupElement {
 public:
  explicit GroupElement(const SimplicialGraph& g) : graph_(&g) {}

  static GroupElement reduce(const SimplicialGraph& g, std::span<const Letter> word);
  static GroupElement parse(const SimplicialGraph& g, std::string_view text);
  static GroupElement generator(const SimplicialGraph& g, Vertex v, int exponent = 1);
  // Trusts that word is already the normal form.
  static GroupElement from_normal_form(const SimplicialGraph& g, Word word);

  const SimplicialGraph& graph() const { return *graph_; }
  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  VertexSet support() const;

  GroupElement inverse() const;
  GroupElement pow(int n) const;
  // this * letter, without re-parsing.
  GroupElement times(Letter x) const;

  std::string to_string() const { return format_word(*graph_, letters_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  bool operator==(const GroupElement& o) const { return letters_ == o.letters_; }
  auto operator<=>(const GroupElement& o) const { return letters_ <=> o.letters_; }

 private:
  const SimplicialGraph* graph_;
  Word letters_;
};

std::size_t hash_word(std::span<const Letter> w);

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return hash_word(g.letters()); }
};

bool commutes(const GroupElement& a, const GroupElement& b);
GroupElement commutator(const GroupElement& a, const GroupElement& b);
GroupElement conjugate(const GroupElement& g, const GroupElement& by);  // by^-1 g by

struct CyclicReduction {
  GroupElement core;
  GroupElement conjugator;  // input = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const GroupElement& g);
bool is_cyclically_reduced(const GroupElement& g);

// Positions of the normal form that can be moved to the front (resp. back) by commutations.
std::vector<std::size_t> leading_positions(const GroupElement& g);
std::vector<std::size_t> trailing_positions(const GroupElement& g);

struct PrefixSplit {
  GroupElement prefix;
  GroupElement rest;  // g = prefix * rest, lengths add
};
// Maximal prefix supported in a.
PrefixSplit split_prefix(const GroupElement& g, VertexSet a);
// Maximal suffix supported in a; g = rest * suffix.
PrefixSplit split_suffix(const GroupElement& g, VertexSet a);
GroupElement iota(const GroupElement& g, VertexSet a);
GroupElement tau(const GroupElement& g, VertexSet a);

// Largest power of a single vertex appearing as one syllable block of the normal form.
int max_syllable_exponent(const GroupElement& g);

// True if the lengths of the factors add up to the length of their product.
bool is_reduced_product(std::span<const GroupElement> factors);
GroupElement product(const SimplicialGraph& g, std::span<const GroupElement> factors);

}  // namespace raag

template <>
struct std::hash<raag::GroupElement> {
  std::size_t operator()(const raag::GroupElement& g) const { return raag::hash_word(g.letters()); }
};
