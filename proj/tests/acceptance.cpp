// One PASS/FAIL line per acceptance criterion. The first argument is the path of the CLI binary.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "raag/cancellation.hpp"
#include "raag/classify.hpp"
#include "raag/distance_formula.hpp"
#include "raag/extension.hpp"
#include "raag/lengths.hpp"
#include "raag/link.hpp"
#include "raag/random.hpp"

using namespace raag;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

std::vector<SimplicialGraph> small_graphs() {
  return {SimplicialGraph::cycle(5), SimplicialGraph::path(4), SimplicialGraph::path(3), SimplicialGraph::cycle(4),
          SimplicialGraph::discrete(3)};
}

std::string name_of(const SimplicialGraph& g) {
  std::ostringstream out;
  out << g.size() << "v/" << g.edge_count() << "e";
  return out.str();
}

// Distinct elements of word length at most n.
std::vector<GroupElement> ball(const SimplicialGraph& g, int n) {
  std::set<GroupElement> seen{GroupElement(g)};
  std::vector<GroupElement> all{GroupElement(g)};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (static_cast<int>(all[i].length()) == n) continue;
    for (int c = 0; c < 2 * g.size(); ++c) {
      auto f = all[i].times(Letter::from_code(static_cast<std::uint8_t>(c)));
      if (f.length() == all[i].length() + 1 && seen.insert(f).second) all.push_back(f);
    }
  }
  return all;
}

GroupElement capped_element(Rng& rng, const SimplicialGraph& g, int length, int max_exp) {
  for (;;) {
    auto x = random_element(rng, g, length);
    if (max_syllable_exponent(x) <= max_exp) return x;
  }
}

Outcome normal_forms() {
  Outcome out;
  long words = 0;
  long bad = 0;
  for (const auto& g : small_graphs()) {
    oracle::ClosureTable table(g);
    Word w;
    auto dfs = [&](auto&& self, int cls) -> void {
      ++words;
      auto e = GroupElement::reduce(g, w);
      if (oracle::ClosureTable::pack(e.letters()) != table.key(cls)) ++bad;
      if (w.size() == 8) return;
      for (int c = 0; c < 2 * g.size(); ++c) {
        Letter l = Letter::from_code(static_cast<std::uint8_t>(c));
        w.push_back(l);
        self(self, table.extend(cls, l));
        w.pop_back();
      }
    };
    dfs(dfs, table.identity());
  }
  out.pass = bad == 0;
  out.note = std::to_string(words) + " words, " + std::to_string(bad) + " mismatches";
  return out;
}

Outcome greedy_star() {
  Outcome out;
  long elements = 0;
  long bad = 0;
  for (const auto& g : small_graphs()) {
    oracle::StarOracle star(g);
    for (const auto& e : ball(g, 6)) {
      ++elements;
      if (star_length(e) != star.length(e.letters())) ++bad;
    }
  }
  out.pass = bad == 0;
  out.note = std::to_string(elements) + " elements, " + std::to_string(bad) + " mismatches";
  return out;
}

Outcome syllables_via_star() {
  Outcome out;
  Rng rng(3);
  long bad = 0;
  for (const auto& g : small_graphs()) {
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(rng, g, rng.uniform(0, 10));
      const int syl = oracle::syllable_length(g, x.letters());
      if (syllable_via_star(x) != syllable_length(x) || syllable_length(x) != syl) ++bad;
    }
  }
  out.pass = bad == 0;
  out.note = "2500 words, " + std::to_string(bad) + " mismatches";
  return out;
}

Outcome covering_sandwich() {
  Outcome out;
  Rng rng(4);
  long bad = 0;
  for (const auto& g : {SimplicialGraph::cycle(5), SimplicialGraph::path(4)}) {
    std::map<int, std::vector<std::pair<Vertex, GroupElement>>> by_length;
    for (int i = 0; i < 300; ++i) {
      const int len = rng.uniform(0, 5);
      auto v = static_cast<Vertex>(rng.uniform(0, g.size() - 1));
      by_length[len].emplace_back(v, capped_element(rng, g, len, 2));
    }
    for (const auto& [len, samples] : by_length) {
      auto s = ExtSnapshot::build(g, {len + 2, 2}, {.vertex_cap = 5000000, .edges = EdgeKernel::none});
      for (const auto& [v, x] : samples) {
        auto base = base_vertex(g, v);
        const int d = covering_distance(s, base, act(base, x)).value;
        const int star = star_length(x);
        if (d < star - 1 || d > star + 1) ++bad;
      }
    }
  }
  out.pass = bad == 0;
  out.note = "600 samples, " + std::to_string(bad) + " violations";
  return out;
}

Outcome cycle_girths() {
  Outcome out;
  for (int n : {5, 6, 7}) {
    const auto c = SimplicialGraph::cycle(n);
    auto s = ExtSnapshot::build(c, {3, 1});
    const int g = girth(s.adjacency());
    out.note += "C" + std::to_string(n) + ":" + std::to_string(g) + " ";
    if (g != n) out.pass = false;
  }
  return out;
}

Outcome square_structure() {
  Outcome out;
  const auto c4 = SimplicialGraph::cycle(4);
  long pairs = 0;
  for (Budget b : {Budget{1, 1}, Budget{2, 1}, Budget{2, 2}, Budget{3, 1}, Budget{3, 2}}) {
    auto s = ExtSnapshot::build(c4, b);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      const auto& nb = s.neighbours(i);
      std::set<int> adjacent(nb.begin(), nb.end());
      for (int j = 0; j < static_cast<int>(s.size()); ++j) {
        if (i == j) continue;
        ++pairs;
        // a, c are vertices 0, 2 and b, d are 1, 3.
        const bool cross = (s.vertex(i).base % 2) != (s.vertex(j).base % 2);
        if (cross != adjacent.contains(j)) out.pass = false;
      }
    }
  }
  out.note = std::to_string(pairs) + " ordered pairs";
  return out;
}

Outcome classification_examples() {
  Outcome out;
  const auto p4 = SimplicialGraph::path(4);
  const auto c4 = SimplicialGraph::cycle(4);
  auto ad = classify(GroupElement::parse(p4, "a d"));
  auto abcd_elt = GroupElement::parse(c4, "a b c d");
  auto abcd = classify(abcd_elt);
  out.pass = ad.kind == Kind::loxodromic && witness_valid(p4, ad) && abcd.kind == Kind::elliptic &&
             witness_valid(c4, abcd);
  Rng rng(7);
  int fixed = 0;
  for (int i = 0; i < 100; ++i) {
    auto x = canonical_vertex(c4, static_cast<Vertex>(rng.uniform(0, 3)), random_element(rng, c4, rng.uniform(0, 6)));
    for (int n : {1, 2}) {
      if (act(x, abcd_elt.pow(n)) == x) ++fixed;
    }
  }
  if (fixed != 0) out.pass = false;
  out.note = "ad " + to_string(ad.kind) + ", abcd " + to_string(abcd.kind) + ", " + std::to_string(fixed) + " fixed";
  return out;
}

Outcome power_growth() {
  Outcome out;
  const auto c5 = SimplicialGraph::cycle(5);
  const int scale = 2 * c5.size() * c5.size();
  Rng rng(8);
  int lox = 0;
  int ell = 0;
  int bad = 0;
  while (lox < 20 || ell < 20) {
    auto x = random_element(rng, c5, rng.uniform(1, 4));
    auto kind = classify(x).kind;
    if (kind == Kind::loxodromic && lox < 20) {
      ++lox;
      for (int n : {1, 2, 3, 5, 10, 50, 100, 150}) {
        if (scale * star_length(x.pow(n)) <= n) ++bad;
      }
    } else if (kind == Kind::elliptic && ell < 20) {
      ++ell;
      for (int v : power_star_growth(x, 6)) {
        if (v > 2) ++bad;
      }
    }
  }
  out.pass = bad == 0;
  out.note = "20 loxodromic, 20 elliptic, " + std::to_string(bad) + " violations";
  return out;
}

Outcome bounded_images() {
  Outcome out;
  Rng rng(9);
  std::vector<SimplicialGraph> graphs{SimplicialGraph::cycle(5)};
  while (graphs.size() < 3) {
    auto g = random_girth5_graph(rng, 7, rng.uniform(1, 3));
    if (!is_tree(g)) graphs.push_back(g);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto r = bgit_scan(graphs[i], {4, 1}, 200, 100 + i);
    int worst = 0;
    int pairs = 0;
    for (const auto& c : r.cases) {
      if (c.kind != "pair") continue;
      ++pairs;
      worst = std::max(worst, c.diameter);
      if (c.distance < 3 || c.diameter > c.bound) out.pass = false;
    }
    if (pairs == 0) out.pass = false;
    out.note += name_of(graphs[i]) + " pairs " + std::to_string(pairs) + " max " + std::to_string(worst) + "; ";
  }
  for (const auto& tree : {SimplicialGraph::path(3), SimplicialGraph::path(4)}) {
    auto r = bgit_scan(tree, {4, 1}, 100, 5);
    for (const auto& c : r.cases) {
      if (c.diameter != 0) out.pass = false;
    }
  }
  out.note += "trees 0";
  return out;
}

Outcome tree_formula() {
  Outcome out;
  Rng rng(10);
  int bad = 0;
  for (const auto& g : {SimplicialGraph::path(3), SimplicialGraph::path(4)}) {
    for (int i = 0; i < 100; ++i) {
      GroupElement x(g);
      do {
        x = random_syllable_word(rng, g, rng.uniform(0, 20), 2);
      } while (syllable_length(x) > 20);
      if (!tree_distance_formula_check(x).formula_ok) ++bad;
    }
  }
  out.pass = bad == 0;
  out.note = "200 samples, " + std::to_string(bad) + " violations";
  return out;
}

Outcome general_formula() {
  Outcome out;
  const auto c5 = SimplicialGraph::cycle(5);
  Rng rng(11);
  int bad = 0;
  int worst_slack = kInfinity;
  for (int i = 0; i < 100; ++i) {
    GroupElement x(c5);
    do {
      x = random_syllable_word(rng, c5, rng.uniform(1, 15), 2);
    } while (x.is_identity() || syllable_length(x) > 15);
    auto r = general_distance_formula_check(build_quasi_geodesic(x));
    worst_slack = std::min(worst_slack, r.worst_pair_slack);
    if (!r.path_ok || !r.quasi_geodesic_ok || !r.formula_ok || !r.sharp_ok) ++bad;
  }
  out.pass = bad == 0;
  out.note = "100 samples, " + std::to_string(bad) + " violations, min slack " + std::to_string(worst_slack);
  return out;
}

Outcome acyl_counts() {
  Outcome out;
  const auto c5 = SimplicialGraph::cycle(5);
  auto r = acyl_sample(c5, 1, 1, 2, 50, 12);
  bool gated = true;
  for (const auto& t : r.trials) gated = gated && t.hypothesis;
  out.pass = r.pass && gated && r.bound == 5120 && r.max_count <= r.bound;
  out.note = "max " + std::to_string(r.max_count) + " (untruncated " + std::to_string(r.max_untruncated) +
             ") of " + std::to_string(r.bound);
  return out;
}

Outcome free_sampling() {
  Outcome out;
  const auto c5 = SimplicialGraph::cycle(5);
  auto l1 = GroupElement::parse(c5, "a c e b d");
  auto l2 = GroupElement::parse(c5, "b d a c e");
  const bool valid = classify(l1).kind == Kind::loxodromic && classify(l2).kind == Kind::loxodromic &&
                     !commutes(l1, l2);
  auto relations = sample_free_relations({l1, l2}, 2, 4);
  out.pass = valid && relations.empty();
  out.note = std::to_string(relations.size()) + " relations";
  return out;
}

std::pair<int, std::string> run(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  return {pclose(pipe), output};
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) return {false, "no CLI path given"};
  auto first = run(cli + " verify-all --seed 7");
  auto second = run(cli + " verify-all --seed 7");
  out.pass = first.first == 0 && second.first == 0 && !first.second.empty() && first.second == second.second;
  out.note = std::to_string(first.second.size()) + " bytes, exit " + std::to_string(first.first);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"normal form matches rewriting closure (length <= 8)", normal_forms},
      {"greedy star length matches all-prefixes search (length <= 6)", greedy_star},
      {"syllable length through star factorizations", syllables_via_star},
      {"covering distance within one of star length", covering_sandwich},
      {"cycle snapshot girth", cycle_girths},
      {"square snapshots are complete bipartite", square_structure},
      {"classification examples", classification_examples},
      {"power growth", power_growth},
      {"bounded geodesic image", bounded_images},
      {"tree distance formula", tree_formula},
      {"general distance formula", general_formula},
      {"cancellation cardinality", acyl_counts},
      {"free powers of loxodromics", free_sampling},
      {"verify-all determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " [" << o.note << "] "
              << static_cast<int>(secs) << "s" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
