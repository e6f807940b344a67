#pragma once

#include <cstdint>
#include <random>

#include "raag/element.hpp"

namespace raag {

// Seeded generator. Draws use plain modulo reduction so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// A uniformly drawn letter of the graph.
Letter random_letter(Rng& rng, const SimplicialGraph& g);
// Element of word length exactly `length`, built by appending letters that do not cancel.
GroupElement random_element(Rng& rng, const SimplicialGraph& g, int length);
// Product of `syllables` vertex powers with consecutive vertices distinct and exponents in
// [-max_exp, max_exp] \ {0}. The reduced element may have fewer syllables.
GroupElement random_syllable_word(Rng& rng, const SimplicialGraph& g, int syllables, int max_exp);

// Connected graph on n vertices with girth at least five (so triangle- and square-free), labelled
// a, b, c, ...: a random tree plus `extra` attempted chords that keep the girth.
SimplicialGraph random_girth5_graph(Rng& rng, int n, int extra);

}  // namespace raag
