#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "raag/classify.hpp"
#include "raag/errors.hpp"
#include "raag/extension.hpp"
#include "raag/lengths.hpp"
#include "raag/random.hpp"

using namespace raag;

namespace {

const SimplicialGraph kC5 = SimplicialGraph::cycle(5);
const SimplicialGraph kC4 = SimplicialGraph::cycle(4);
const SimplicialGraph kP4 = SimplicialGraph::path(4);

GroupElement el(const SimplicialGraph& g, std::string_view text) { return GroupElement::parse(g, text); }

bool commute_by_closure(const GroupElement& a, const GroupElement& b) {
  Word w = a.letters();
  w.insert(w.end(), b.letters().begin(), b.letters().end());
  auto ai = inverse_word(a.letters());
  auto bi = inverse_word(b.letters());
  w.insert(w.end(), ai.begin(), ai.end());
  w.insert(w.end(), bi.begin(), bi.end());
  return oracle::closure_canonical(a.graph(), w).empty();
}

// Closed walk a_1 .. a_l (a_l adjacent to a_1) in the complement graph, 2 <= l <= max_len.
std::vector<Vertex> random_complement_loop(Rng& rng, const SimplicialGraph& g, int max_len) {
  auto opp = g.opposite();
  for (;;) {
    const int len = rng.uniform(2, max_len);
    std::vector<Vertex> walk{static_cast<Vertex>(rng.uniform(0, g.size() - 1))};
    while (static_cast<int>(walk.size()) < len) {
      auto nbrs = opp.link(walk.back()).members();
      walk.push_back(nbrs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nbrs.size()) - 1))]);
    }
    if (opp.adjacent(walk.back(), walk.front())) return walk;
  }
}

}  // namespace

TEST_CASE("classification examples") {
  auto ad = classify(el(kP4, "a d"));
  CHECK(ad.kind == Kind::loxodromic);
  CHECK(witness_valid(kP4, ad));

  auto abcd = classify(el(kC4, "a b c d"));
  CHECK(abcd.kind == Kind::elliptic);
  CHECK(witness_valid(kC4, abcd));

  for (Vertex v = 0; v < kC5.size(); ++v) {
    auto t = classify(GroupElement::generator(kC5, v));
    CHECK(t.kind == Kind::elliptic);
    CHECK(witness_valid(kC5, t));
  }
  CHECK(classify(GroupElement(kC5)).kind == Kind::identity);

  auto isolated = SimplicialGraph::discrete(2);
  auto t = classify(GroupElement::generator(isolated, 0));
  CHECK(t.kind == Kind::elliptic);
  CHECK(witness_valid(isolated, t));
  CHECK(classify(el(isolated, "a b")).kind == Kind::loxodromic);
}

TEST_CASE("an elliptic element of the square group moves every vertex") {
  auto g = el(kC4, "a b c d");
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto x = canonical_vertex(kC4, static_cast<Vertex>(rng.uniform(0, 3)), random_element(rng, kC4, rng.uniform(0, 5)));
    for (int n : {1, 2}) CHECK_FALSE(act(x, g.pow(n)) == x);
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(el(kP4, "a d")));
  CHECK(oracle::complement_connected(kP4, el(kP4, "a d").support()));
  CHECK_FALSE(oracle::contained_in_join(kP4.induced(el(kP4, "a d").support()),
                                        kP4.induced(el(kP4, "a d").support()).vertices()));
  CHECK_FALSE(is_pure(el(kP4, "a b")));
  CHECK(is_pure(el(kP4, "c")));
  CHECK(is_pure(el(kP4, "c^2")));
  CHECK_FALSE(is_pure(GroupElement(kP4)));
}

TEST_CASE("classification matches subjoin enumeration") {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(seed, 2 + static_cast<int>(seed % 5), 1, 2);
    for (int i = 0; i < 15; ++i) {
      auto x = random_element(rng, g, rng.uniform(1, 6));
      auto t = classify(x);
      CHECK(witness_valid(g, t));
      VertexSet s = cyclic_reduce(x).core.support();
      bool isolated_single = s.size() == 1 && g.link(s.min()).empty();
      bool elliptic = oracle::contained_in_join(g, s) || isolated_single;
      CHECK((t.kind == Kind::elliptic) == elliptic);
      CHECK(is_pure(x) == oracle::complement_connected(g, s));
    }
  }
}

TEST_CASE("classification is a conjugacy invariant") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto g = random_element(rng, kC5, rng.uniform(1, 6));
    auto w = random_element(rng, kC5, rng.uniform(1, 6));
    CHECK(classify(g).kind == classify(w * g * w.inverse()).kind);
  }
}

TEST_CASE("power growth") {
  for (int v : power_star_growth(GroupElement(kC5), 5)) CHECK(v == 0);
  for (auto* text : {"a b", "a e^2 b", "c d^-1"}) {
    auto g = el(kC5, text);
    REQUIRE(classify(g).kind == Kind::elliptic);
    for (int v : power_star_growth(g, 6)) CHECK(v <= 2);
  }
  auto lox = el(kC5, "a c e b d");
  auto growth = power_star_growth(lox, 4);
  REQUIRE(growth.size() == 4);
  for (int n = 1; n <= 4; ++n) CHECK(growth[static_cast<std::size_t>(n - 1)] > n);
}

TEST_CASE("loxodromic powers grow at the guaranteed rate") {
  Rng rng(29);
  const int v2 = 2 * kC5.size() * kC5.size();
  int tested = 0;
  while (tested < 6) {
    auto g = random_element(rng, kC5, rng.uniform(2, 4));
    if (classify(g).kind != Kind::loxodromic) continue;
    ++tested;
    for (int n : {1, 2}) CHECK(star_length(g.pow(v2 * n)) >= n);
  }
}

TEST_CASE("complement loops give long powers") {
  Rng rng(31);
  int tested = 0;
  while (tested < 30) {
    auto loop = random_complement_loop(rng, kC5, 6);
    GroupElement g(kC5);
    for (Vertex a : loop) {
      int e = rng.uniform(1, 2) * (rng.coin() ? 1 : -1);
      g = g * GroupElement::generator(kC5, a, e);
    }
    if (star_length(g) <= 1) continue;
    ++tested;
    for (int n = 1; n <= 3; ++n) CHECK(star_length(g.pow(n)) > n);
  }
}

TEST_CASE("translation length estimates") {
  auto ell = el(kC5, "a b");
  for (int n : {4, 16, 64}) {
    auto iv = translation_length_estimate(ell, n);
    CHECK(iv.lo.value() <= 2.0 / n);
  }
  auto id = translation_length_estimate(GroupElement(kC5), 3);
  CHECK(id.lo == Rational{-1, 3});
  CHECK(id.hi == Rational{2, 3});
  auto lox = translation_length_estimate(el(kC5, "a c e b d"), 4);
  CHECK(lox.lo.value() > 0.0);
  CHECK(lox.lo.value() <= lox.hi.value());
  CHECK_THROWS_AS(translation_length_estimate(ell, 0), PreconditionError);
}

TEST_CASE("conjugate divergence") {
  auto lambda = el(kC5, "a c e b d");
  CHECK_THROWS_AS(conjugate_divergence(lambda, lambda.pow(2), 3), PreconditionError);
  CHECK_THROWS_AS(conjugate_divergence(el(kC5, "a b"), el(kC5, "c"), 3), PreconditionError);
  auto series = conjugate_divergence(lambda, el(kC5, "a"), 3);
  REQUIRE(series.values.size() == 4);
  CHECK(std::is_sorted(series.values.begin(), series.values.end()));
  auto trivial = conjugate_divergence(lambda, GroupElement(kC5), 3);
  CHECK(trivial.trivial);
  for (int v : trivial.values) CHECK(v == 0);

  Rng rng(37);
  for (int i = 0; i < 10; ++i) {
    auto g = random_element(rng, kC5, rng.uniform(1, 3));
    if (commutes(g, lambda)) continue;
    auto s = conjugate_divergence(lambda, g, 3);
    CHECK(std::is_sorted(s.values.begin(), s.values.end()));
  }
}

TEST_CASE("free relation sampling") {
  auto l1 = el(kC5, "a c e b d");
  auto l2 = el(kC5, "b d a c e");
  CHECK(sample_free_relations({l1}, 1, 6).empty());
  CHECK(sample_free_relations({l1}, 2, 6).empty());
  CHECK(sample_free_relations({l1, l2}, 2, 4).empty());
  CHECK_THROWS_AS(sample_free_relations({l1, l1}, 2, 4), PreconditionError);
  CHECK_THROWS_AS(sample_free_relations({el(kC5, "a")}, 2, 4), PreconditionError);
  CHECK(format_free_word({1, -2}) == "L1 L2^-1");
}

TEST_CASE("commutation graphs") {
  std::vector<GroupElement> gens;
  for (Vertex v = 0; v < kC5.size(); ++v) gens.push_back(GroupElement::generator(kC5, v));
  CHECK(find_isomorphism(commutation_graph(gens), kC5).has_value());

  auto g = el(kC5, "a c");
  auto pair = commutation_graph({g, g.pow(2)});
  CHECK(pair.size() == 2);
  CHECK(pair.edge_count() == 1);

  std::vector<GroupElement> conj{el(kC5, "a"), el(kC5, "c^-1 a c"), el(kC5, "d^-1 a d")};
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (std::size_t j = i + 1; j < conj.size(); ++j) CHECK_FALSE(commute_by_closure(conj[i], conj[j]));
  }
  CHECK(commutation_graph(conj).edge_count() == 0);
}
