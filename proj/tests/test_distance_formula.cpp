#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "raag/distance_formula.hpp"
#include "raag/errors.hpp"
#include "raag/random.hpp"

using namespace raag;

namespace {

const SimplicialGraph kC5 = SimplicialGraph::cycle(5);
const SimplicialGraph kP3 = SimplicialGraph::path(3);
const SimplicialGraph kP4 = SimplicialGraph::path(4);

GroupElement el(const SimplicialGraph& g, std::string_view text) { return GroupElement::parse(g, text); }

GroupElement random_bounded(Rng& rng, const SimplicialGraph& g, int max_syllables) {
  for (;;) {
    auto x = random_syllable_word(rng, g, rng.uniform(1, max_syllables), 2);
    if (!x.is_identity() && syllable_length(x) <= max_syllables) return x;
  }
}

// Distance in the link of `center` between two of its neighbours, by the brute-force search.
int link_distance_by_search(const ExtVertex& center, const ExtVertex& a, const ExtVertex& b) {
  const auto& g = center.conjugator.graph();
  auto link = link_graph(g, center.base);
  auto back = center.conjugator.inverse();
  auto la = to_link_vertex(link, center.base, act(a, back));
  auto lb = to_link_vertex(link, center.base, act(b, back));
  return oracle::free_covering_distance(*link.graph, la.base, la.conjugator.letters(), lb.base,
                                        lb.conjugator.letters());
}

}  // namespace

TEST_CASE("normalized minimal star factorizations") {
  Rng rng(101);
  for (const SimplicialGraph* g : {&kC5, &kP4}) {
    for (int i = 0; i < 60; ++i) {
      auto x = random_element(rng, *g, rng.uniform(0, 8));
      auto f = star_factorize_min_syllable(x);
      CHECK(f.valid());
      CHECK(static_cast<int>(f.factors.size()) == star_length(x));
      int total = 0;
      for (const auto& factor : f.factors) {
        total += syllable_length(factor.word);
        auto s = factor.word.support();
        CHECK(s.subset_of(g->star(factor.center)));
        if (s.size() == 1) {
          CHECK(factor.center == s.min());
        } else {
          CHECK(g->degree(factor.center) >= 2);
        }
      }
      CHECK(total == syllable_length(x));
    }
  }
}

TEST_CASE("tree formula examples") {
  auto id = tree_distance_formula_check(GroupElement(kP4));
  CHECK(id.sum == 0);
  CHECK(id.pass);

  auto r = tree_distance_formula_check(el(kP4, "a d"));
  CHECK(r.syl == 2);
  CHECK(r.pass);
  CHECK(r.geodesic.front() == base_vertex(kP4, r.v));
  CHECK(r.geodesic.back() == canonical_vertex(kP4, r.v, el(kP4, "a d")));

  CHECK_THROWS_AS(tree_distance_formula_check(GroupElement(kC5)), PreconditionError);
  CHECK_THROWS_AS(tree_distance_formula_check(GroupElement(SimplicialGraph::path(2))), PreconditionError);
}

TEST_CASE("tree formula on sampled words") {
  Rng rng(103);
  for (const SimplicialGraph* g : {&kP3, &kP4}) {
    int relaxed = 0;
    for (int i = 0; i < 100; ++i) {
      auto x = random_bounded(rng, *g, 20);
      auto r = tree_distance_formula_check(x);
      CHECK(r.formula_ok);
      CHECK(r.proof_bound_ok);
      CHECK(r.markers_ok);
      CHECK(r.others_ok);
      CHECK(r.pass);
      relaxed += r.relaxed ? 1 : 0;
      // Junction terms lie between a third of the factor's syllables and one more than them.
      if (!r.relaxed) {
        auto f = star_factorize_min_syllable(x);
        REQUIRE(r.markers.size() == f.factors.size());
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
          const int h = syllable_length(f.factors[k].word);
          const int d = r.terms[static_cast<std::size_t>(r.markers[k] - 1)].exact;
          CHECK(3 * d >= h);
          CHECK(d <= h + 1);
        }
        CHECK(r.others <= (r.diameter - 1) * r.star + r.diameter + 1);
      }
    }
    if (g == &kP3) CHECK(relaxed > 0);
  }
}

TEST_CASE("tree geodesics are the unique reduced paths") {
  Rng rng(107);
  for (int i = 0; i < 60; ++i) {
    auto x = random_bounded(rng, kP4, 12);
    auto r = tree_distance_formula_check(x);
    const auto& path = r.geodesic;
    CHECK(path.front() == base_vertex(kP4, r.v));
    CHECK(path.back() == canonical_vertex(kP4, r.v, x));
    for (std::size_t p = 0; p + 1 < path.size(); ++p) CHECK(ext_adjacent(path[p], path[p + 1]));
    for (std::size_t p = 0; p + 2 < path.size(); ++p) CHECK_FALSE(path[p] == path[p + 2]);
    for (std::size_t p = 1; p + 1 < path.size(); ++p) {
      CHECK(r.terms[p - 1].exact == link_distance_by_search(path[p], path[p - 1], path[p + 1]));
    }
  }
  // Reduced paths in a tree are geodesics, so a large enough snapshot sees the same length.
  auto s = ExtSnapshot::build(kP4, {4, 2});
  for (const char* text : {"a", "a d", "d^2 a", "a c^-1", "b d a"}) {
    auto x = el(kP4, text);
    auto r = tree_distance_formula_check(x);
    auto d = graph_distance(s, r.geodesic.front(), r.geodesic.back());
    CHECK(d.value == static_cast<int>(r.geodesic.size()) - 1);
  }
}

TEST_CASE("quasi-geodesic certificates") {
  auto cert = build_quasi_geodesic(el(kC5, "a c"));
  CHECK(cert.diameter == 2);
  CHECK(cert.k_const == 20);
  CHECK(cert.c_const == 20);
  CHECK(cert.factorization.valid());
  CHECK(cert.markers.size() == cert.factorization.factors.size());
  for (std::size_t p = 0; p + 1 < cert.path.size(); ++p) CHECK(ext_adjacent(cert.path[p], cert.path[p + 1]));

  CHECK_THROWS_AS(build_quasi_geodesic(GroupElement(kC5)), PreconditionError);
  CHECK_THROWS_AS(build_quasi_geodesic(el(kP3, "a")), PreconditionError);
  CHECK_THROWS_AS(build_quasi_geodesic(el(SimplicialGraph::cycle(4), "a")), PreconditionError);
}

TEST_CASE("general formula on sampled words") {
  Rng rng(109);
  for (int i = 0; i < 100; ++i) {
    auto x = random_bounded(rng, kC5, 15);
    auto cert = build_quasi_geodesic(x);
    auto r = general_distance_formula_check(cert);
    CHECK(r.path_ok);
    CHECK(r.quasi_geodesic_ok);
    CHECK(r.formula_ok);
    CHECK(r.sharp_ok);
    CHECK(r.pass);
    CHECK(r.sum * (cert.diameter + 3) >= r.syl);
    CHECK(r.sum <= (cert.diameter + 3) * r.syl);
  }
  Rng graph_rng(113);
  const auto g = random_girth5_graph(graph_rng, 7, 3);
  for (int i = 0; i < 20; ++i) {
    auto x = random_bounded(rng, g, 6);
    auto r = general_distance_formula_check(build_quasi_geodesic(x));
    CHECK(r.pass);
  }
}

TEST_CASE("path terms agree with the brute-force link search") {
  Rng rng(127);
  for (int i = 0; i < 30; ++i) {
    auto x = random_bounded(rng, kC5, 4);
    auto cert = build_quasi_geodesic(x);
    auto r = general_distance_formula_check(cert);
    for (std::size_t p = 1; p + 1 < cert.path.size(); ++p) {
      CHECK(r.terms[p - 1].exact == link_distance_by_search(cert.path[p], cert.path[p - 1], cert.path[p + 1]));
    }
  }
}

TEST_CASE("one-syllable junctions cost two") {
  for (const char* text : {"a", "c^2", "b^-1"}) {
    auto cert = build_quasi_geodesic(el(kC5, text));
    auto r = general_distance_formula_check(cert);
    REQUIRE(cert.markers.size() == 1);
    const auto& path = cert.path;
    const auto p = static_cast<std::size_t>(cert.markers[0]);
    const int brute = link_distance_by_search(path[p], path[p - 1], path[p + 1]);
    CHECK(brute == 2);
    CHECK(r.terms[p - 1].exact == 2);
    CHECK_FALSE(r.markers_ok);
    CHECK(r.pass);
  }
}

TEST_CASE("a three-syllable junction costs four") {
  // Around a, the copies b and b^(e b e) sit at distance four in the free link.
  const Vertex a = kC5.index("a");
  const Vertex b = kC5.index("b");
  auto center = base_vertex(kC5, a);
  auto from = base_vertex(kC5, b);
  auto conj = el(kC5, "e b e");
  auto to = canonical_vertex(kC5, b, conj);
  REQUIRE(syllable_length(conj) == 3);
  auto link = link_graph(kC5, a);
  CHECK(oracle::free_covering_distance(*link.graph, link.graph->index("b"), Word{}, link.graph->index("b"),
                                       parse_word(*link.graph, "e b e")) == 4);
  CHECK(link_distance(center, from, to).exact == 4);
  CHECK(link_distance(center, from, to).exact > syllable_length(conj));
}
