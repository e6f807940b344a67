#include "verify.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>

#include "raag/cancellation.hpp"
#include "raag/classify.hpp"
#include "raag/distance_formula.hpp"
#include "raag/extension.hpp"
#include "raag/lengths.hpp"
#include "raag/link.hpp"
#include "raag/random.hpp"

namespace raag::cli {

namespace {

// Counts one sample and records the first failing one.
struct Tally {
  CheckResult r;
  void check(bool ok, const std::string& what) {
    ++r.samples;
    if (ok) return;
    ++r.violations;
    r.pass = false;
    if (r.detail.empty()) r.detail = what;
  }
};

using Suite = std::function<CheckResult(std::uint64_t)>;

CheckResult normal_form(std::uint64_t seed) {
  Tally t{{.tag = "def:normal-form", .detail = {}}};
  Rng rng(seed);
  for (const auto& g : {SimplicialGraph::cycle(5), SimplicialGraph::path(4)}) {
    for (int i = 0; i < 200; ++i) {
      auto x = random_element(rng, g, rng.uniform(0, 10));
      auto y = random_element(rng, g, rng.uniform(0, 10));
      bool ok = GroupElement::reduce(g, x.letters()) == x && (x * x.inverse()).is_identity() &&
                (x * y).length() <= x.length() + y.length() && (x * y).inverse() == y.inverse() * x.inverse();
      t.check(ok, x.to_string());
    }
  }
  return t.r;
}

CheckResult syllable_via_star_check(std::uint64_t seed) {
  Tally t{{.tag = "lem:syllable-via-star", .detail = {}}};
  Rng rng(seed);
  for (const auto& g : {SimplicialGraph::cycle(5), SimplicialGraph::path(4)}) {
    for (int i = 0; i < 100; ++i) {
      auto x = random_element(rng, g, rng.uniform(0, 10));
      t.check(syllable_via_star(x) == syllable_length(x), x.to_string());
    }
  }
  return t.r;
}

CheckResult covering(std::uint64_t seed) {
  Tally t{{.tag = "lem:covering-distance", .detail = {}}};
  Rng rng(seed);
  for (const auto& g : {SimplicialGraph::cycle(5), SimplicialGraph::path(4)}) {
    auto s = ExtSnapshot::build(g, {5, 2}, {.edges = EdgeKernel::none});
    for (int i = 0; i < 40; ++i) {
      auto x = random_element(rng, g, rng.uniform(0, 3));
      if (max_syllable_exponent(x) > 2) continue;
      auto v = base_vertex(g, static_cast<Vertex>(rng.uniform(0, g.size() - 1)));
      const int d = covering_distance(s, v, act(v, x)).value;
      const int star = star_length(x);
      t.check(star - 1 <= d && d <= star + 1, x.to_string());
    }
  }
  return t.r;
}

CheckResult cycle_girth(std::uint64_t) {
  Tally t{{.tag = "ex:cycle-girth", .detail = {}}};
  for (int n : {5, 6}) {
    const auto cycle = SimplicialGraph::cycle(n);
    auto s = ExtSnapshot::build(cycle, {3, 1});
    t.check(girth(s.adjacency()) == n, "C" + std::to_string(n));
  }
  return t.r;
}

CheckResult square_join(std::uint64_t) {
  Tally t{{.tag = "ex:square-join", .detail = {}}};
  const auto c4 = SimplicialGraph::cycle(4);
  auto s = ExtSnapshot::build(c4, {3, 1});
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(s.size()); ++j) {
      bool cross = (s.vertex(i).base % 2) != (s.vertex(j).base % 2);
      auto& nb = s.neighbours(i);
      bool adjacent = std::find(nb.begin(), nb.end(), j) != nb.end();
      t.check(cross == adjacent, s.vertex(i).to_string() + " " + s.vertex(j).to_string());
    }
  }
  return t.r;
}

CheckResult classification(std::uint64_t seed) {
  Tally t{{.tag = "prop:classification", .detail = {}}};
  const auto p4 = SimplicialGraph::path(4);
  const auto c4 = SimplicialGraph::cycle(4);
  const auto c5 = SimplicialGraph::cycle(5);
  t.check(classify(GroupElement::parse(p4, "a d")).kind == Kind::loxodromic, "a d");
  t.check(classify(GroupElement::parse(c4, "a b c d")).kind == Kind::elliptic, "a b c d");
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(rng, c5, rng.uniform(1, 6));
    auto w = random_element(rng, c5, rng.uniform(0, 4));
    auto type = classify(x);
    t.check(witness_valid(c5, type) && classify(w * x * w.inverse()).kind == type.kind, x.to_string());
  }
  return t.r;
}

CheckResult power_growth(std::uint64_t seed) {
  Tally t{{.tag = "lem:power-growth", .detail = {}}};
  const auto c5 = SimplicialGraph::cycle(5);
  const int step = 2 * c5.size() * c5.size();
  Rng rng(seed);
  int lox = 0;
  int ell = 0;
  while (lox < 5 || ell < 5) {
    auto x = random_element(rng, c5, rng.uniform(1, 4));
    auto kind = classify(x).kind;
    if (kind == Kind::loxodromic && lox < 5) {
      ++lox;
      for (int n : {1, 2}) t.check(star_length(x.pow(step * n)) >= n, x.to_string());
    } else if (kind == Kind::elliptic && ell < 5) {
      ++ell;
      for (int v : power_star_growth(x, 6)) t.check(v <= 2, x.to_string());
    }
  }
  return t.r;
}

CheckResult bgit(std::uint64_t seed) {
  Tally t{{.tag = "thm:bgit-1", .detail = {}}};
  auto c5 = bgit_scan(SimplicialGraph::cycle(5), {3, 1}, 40, seed);
  for (const auto& c : c5.cases) t.check(c.pass, c.center + " " + c.target);
  auto tree = bgit_scan(SimplicialGraph::path(4), {3, 1}, 20, seed);
  for (const auto& c : tree.cases) t.check(c.diameter == 0, c.center + " " + c.target);
  return t.r;
}

CheckResult tree_distance(std::uint64_t seed) {
  Tally t{{.tag = "prop:tree-distance", .detail = {}}};
  const auto p4 = SimplicialGraph::path(4);
  Rng rng(seed);
  for (int i = 0; i < 30; ++i) {
    auto x = random_syllable_word(rng, p4, rng.uniform(0, 12), 2);
    t.check(tree_distance_formula_check(x).pass, x.to_string());
  }
  return t.r;
}

CheckResult general_distance(std::uint64_t seed) {
  Tally t{{.tag = "prop:general-distance", .detail = {}}};
  const auto c5 = SimplicialGraph::cycle(5);
  Rng rng(seed);
  while (t.r.samples < 20) {
    auto x = random_syllable_word(rng, c5, rng.uniform(1, 8), 2);
    if (x.is_identity()) continue;
    t.check(general_distance_formula_check(build_quasi_geodesic(x)).pass, x.to_string());
  }
  return t.r;
}

CheckResult cancellation(std::uint64_t seed) {
  Tally t{{.tag = "lem:cancellation", .detail = {}}};
  const auto c5 = SimplicialGraph::cycle(5);
  Rng rng(seed);
  auto short_star = [&](int bound) {
    for (;;) {
      auto e = random_syllable_word(rng, c5, rng.uniform(0, bound), 2);
      if (star_length(e) <= bound) return e;
    }
  };
  for (int i = 0; i < 100; ++i) {
    const int s = rng.uniform(1, 2);
    auto x = random_syllable_word(rng, c5, rng.uniform(6, 10), 2);
    auto g = short_star(s);
    auto y = (x * g).inverse() * short_star(2);
    auto seq = find_cancellation(g, x, y, s);
    if (!seq) continue;
    auto m = maximalize(*seq);
    bool ok = check_invariants(*seq, g).ok() && check_invariants(m, g).ok();
    if (seq->hypothesis) {
      auto back = support_determines(m.context, m.g_supports(), m.h_supports(), seq->t);
      ok = ok && back && *back == g;
    }
    t.check(ok, g.to_string());
  }
  return t.r;
}

CheckResult acyl(std::uint64_t seed) {
  Tally t{{.tag = "lem:acyl-count", .detail = {}}};
  const auto c5 = SimplicialGraph::cycle(5);
  auto report = acyl_sample(c5, 1, 1, 2, 10, seed);
  for (const auto& trial : report.trials) {
    t.check(trial.truncated <= report.bound && trial.untruncated <= report.bound, trial.x.to_string());
  }
  t.r.detail = t.r.pass ? "max " + std::to_string(report.max_count) + " of " + std::to_string(report.bound)
                        : t.r.detail;
  return t.r;
}

CheckResult free_powers(std::uint64_t) {
  Tally t{{.tag = "thm:loxodromic-free", .detail = {}}};
  const auto c5 = SimplicialGraph::cycle(5);
  auto l1 = GroupElement::parse(c5, "a c e b d");
  auto l2 = GroupElement::parse(c5, "b d a c e");
  auto relations = sample_free_relations({l1, l2}, 2, 3);
  t.check(relations.empty(), relations.empty() ? "" : format_free_word(relations.front()));
  return t.r;
}

}  // namespace

std::vector<CheckResult> verify_all(std::uint64_t seed, int workers) {
  const std::vector<Suite> suites{normal_form, syllable_via_star_check, covering, cycle_girth, square_join,
                                  classification, power_growth, bgit, tree_distance, general_distance,
                                  cancellation, acyl, free_powers};
  std::vector<CheckResult> results(suites.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
  for (std::size_t i = 0; i < suites.size(); ++i) results[i] = suites[i](seed + 1000 * i);
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.tag < b.tag; });
  return results;
}

}  // namespace raag::cli
