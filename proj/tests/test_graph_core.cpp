#include <algorithm>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"

using namespace raag;

namespace {

VertexSet set_of(const SimplicialGraph& g, std::initializer_list<const char*> labels) {
  VertexSet s;
  for (const char* l : labels) s.insert(g.index(l));
  return s;
}

bool is_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b, const std::vector<Vertex>& image) {
  if (a.size() != b.size() || static_cast<int>(image.size()) != a.size()) return false;
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = 0; v < a.size(); ++v) {
      if (u != v && a.adjacent(u, v) != b.adjacent(image[u], image[v])) return false;
    }
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

const SimplicialGraph kC5 = SimplicialGraph::cycle(5);
const SimplicialGraph kC4 = SimplicialGraph::cycle(4);
const SimplicialGraph kP4 = SimplicialGraph::path(4);
const SimplicialGraph kP3 = SimplicialGraph::path(3);
const SimplicialGraph kK3 = SimplicialGraph::complete(3);

}  // namespace

TEST_CASE("link of a vertex") {
  CHECK(kC5.link(kC5.index("a")) == set_of(kC5, {"b", "e"}));
  CHECK(SimplicialGraph::discrete(1).link(0).empty());
  CHECK(kP4.link(kP4.index("b")) == set_of(kP4, {"a", "c"}));
  for (Vertex v = 0; v < kC5.size(); ++v) CHECK_FALSE(kC5.link(v).contains(v));
  CHECK_THROWS_AS(kC5.index("z"), UnknownVertex);
}

TEST_CASE("star of a vertex") {
  CHECK(kP4.star(kP4.index("b")) == set_of(kP4, {"a", "b", "c"}));
  auto d3 = SimplicialGraph::discrete(3);
  for (Vertex v = 0; v < 3; ++v) CHECK(d3.star(v) == VertexSet::single(v));
  CHECK(kC5.star(kC5.index("a")) == set_of(kC5, {"a", "b", "e"}));
}

TEST_CASE("opposite graph") {
  auto opp = kC5.opposite();
  auto iso = find_isomorphism(kC5, opp);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(kC5, opp, *iso));
  // a -> a, b -> c, c -> e, d -> b, e -> d is one explicit isomorphism.
  CHECK(is_isomorphism(kC5, opp, {0, 2, 4, 1, 3}));
  CHECK(kK3.opposite() == SimplicialGraph::discrete(3));
  CHECK(SimplicialGraph::discrete(2).opposite() == SimplicialGraph::complete(2));
  CHECK_FALSE(find_isomorphism(kP4, SimplicialGraph::cycle(4)).has_value());
}

TEST_CASE("opposite is an involution on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(seed, 1 + static_cast<int>(seed % 9), 1, 2);
    CHECK(g.opposite().opposite() == g);
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = 0; v < g.size(); ++v) {
        if (u != v) CHECK(g.opposite().adjacent(u, v) != g.adjacent(u, v));
      }
    }
  }
}

TEST_CASE("split_join examples") {
  auto c4 = split_join(kC4, kC4.vertices());
  REQUIRE(c4.has_value());
  auto [a, b] = *c4;
  auto ac = set_of(kC4, {"a", "c"});
  auto bd = set_of(kC4, {"b", "d"});
  CHECK(((a == ac && b == bd) || (a == bd && b == ac)));

  CHECK_FALSE(split_join(kC5, kC5.vertices()).has_value());

  auto p4 = split_join(kP4, set_of(kP4, {"a", "b", "c"}));
  REQUIRE(p4.has_value());
  auto only_b = set_of(kP4, {"b"});
  auto a_c = set_of(kP4, {"a", "c"});
  CHECK(((p4->first == only_b && p4->second == a_c) || (p4->first == a_c && p4->second == only_b)));

  CHECK_THROWS_AS(split_join(kP3, VertexSet::single(5)), Error);
}

TEST_CASE("split_join agrees with complement connectivity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = oracle::random_graph(100 + seed, 6, 1, 2);
    for (std::uint64_t bits = 1; bits < 64; ++bits) {
      VertexSet s(bits);
      auto split = split_join(g, s);
      CHECK(split.has_value() == !oracle::complement_connected(g, s));
      if (!split) continue;
      auto [a, b] = *split;
      CHECK(!a.empty());
      CHECK(!b.empty());
      CHECK((a | b) == s);
      CHECK_FALSE(a.intersects(b));
      for (Vertex u : a.members()) {
        for (Vertex w : b.members()) CHECK(g.adjacent(u, w));
      }
    }
  }
}

TEST_CASE("girth examples") {
  CHECK(girth(kC5) == 5);
  CHECK(girth(kP4) == kInfinity);
  auto with_chord = [](const char* u, const char* v) {
    return SimplicialGraph({"a", "b", "c", "d", "e"},
                           {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {u, v}});
  };
  // Every chord of a pentagon cuts off a triangle.
  for (auto [u, v] : {std::pair{"a", "c"}, {"b", "d"}, {"a", "d"}}) {
    auto g = with_chord(u, v);
    CHECK(girth(g) == oracle::shortest_cycle(g));
    CHECK(girth(g) == 3);
  }
  auto c6 = SimplicialGraph({"a", "b", "c", "d", "e", "f"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}, {"a", "d"}});
  CHECK(girth(c6) == oracle::shortest_cycle(c6));
  CHECK(girth(c6) == 4);
}

TEST_CASE("girth is infinite exactly for forests") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto g = oracle::random_graph(200 + seed, 2 + static_cast<int>(seed % 7), 1, 4);
    const int brute = oracle::shortest_cycle(g);
    CHECK((girth(g) == kInfinity) == !oracle::has_cycle(g));
    CHECK(girth(g) == (brute == 0 ? kInfinity : brute));
  }
}

TEST_CASE("clique graph examples") {
  auto edge = SimplicialGraph::complete(2);
  auto k = clique_graph(edge);
  CHECK(k.size() == 3);
  CHECK(find_isomorphism(k, kK3).has_value());

  CHECK(clique_graph(SimplicialGraph::discrete(2)) == SimplicialGraph::discrete(2));

  auto p3 = clique_graph(kP3);
  REQUIRE(p3.size() == 5);
  auto adj = [&](const char* u, const char* v) { return p3.adjacent(p3.index(u), p3.index(v)); };
  CHECK(adj("a", "b"));
  CHECK(adj("a", "ab"));
  CHECK(adj("b", "ab"));
  CHECK(adj("b", "c"));
  CHECK(adj("b", "bc"));
  CHECK(adj("c", "bc"));
  CHECK_FALSE(adj("ab", "bc"));
  CHECK_FALSE(adj("a", "c"));
  CHECK_FALSE(adj("a", "bc"));
  CHECK_FALSE(adj("c", "ab"));
  CHECK(p3.edge_count() == 6);
}

TEST_CASE("clique graph size matches subset enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(300 + seed, 1 + static_cast<int>(seed % 8), 1, 3);
    const int count = oracle::clique_count(g);
    if (count > kMaxVertices) {
      CHECK_THROWS_AS(clique_graph(g), BudgetExceeded);
      continue;
    }
    CHECK(clique_graph(g).size() == count);
  }
  CHECK_THROWS_AS(clique_graph(SimplicialGraph::discrete(17)), BudgetExceeded);
}

TEST_CASE("graph predicates") {
  CHECK(is_triangle_free(kC5));
  CHECK(is_square_free(kC5));
  CHECK(is_connected(kC5));
  CHECK(is_anti_connected(kC5));
  CHECK_FALSE(is_square_free(kC4));
  CHECK_FALSE(is_triangle_free(kK3));
  CHECK_FALSE(is_anti_connected(kK3));
  CHECK(is_tree(kP4));
  CHECK_FALSE(is_tree(kC5));
  CHECK(diameter(kC5) == 2);
  CHECK(diameter(kP4) == 3);
  CHECK(diameter(SimplicialGraph::discrete(2)) == kInfinity);
}

TEST_CASE("graph file format") {
  auto g = SimplicialGraph::parse("# pentagon\na: b e\nb: a c\nc: b d\nd: c e\ne: d a\n");
  CHECK(g == kC5);

  // Vertices named only as neighbours come after every vertex with its own line.
  auto h = SimplicialGraph::parse("c: a\nb: a\n");
  CHECK(h.labels() == std::vector<std::string>{"c", "b", "a"});
  CHECK(h.adjacent(h.index("a"), h.index("b")));
  CHECK(h.degree(h.index("a")) == 2);

  CHECK(SimplicialGraph::parse(g.to_text()) == g);
  CHECK(g.to_dot().find("\"a\" -- \"b\"") != std::string::npos);
}

TEST_CASE("graph file errors carry positions") {
  try {
    (void)SimplicialGraph::parse("a: b\nb: c\nc: b\n");
    FAIL("asymmetric input was accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  try {
    (void)SimplicialGraph::parse("a: b\nb a\n");
    FAIL("missing colon was accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(SimplicialGraph::parse("a: a\n"), ParseError);
  CHECK_THROWS_AS(SimplicialGraph::parse("a: b\na: c\n"), ParseError);
  CHECK_THROWS_AS(SimplicialGraph::from_file("/nonexistent/graph.g"), Error);
}
