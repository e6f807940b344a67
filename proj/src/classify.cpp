#include "raag/classify.hpp"

#include <numeric>

#include "raag/errors.hpp"
#include "raag/lengths.hpp"

namespace raag {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::identity: return "identity";
    case Kind::elliptic: return "elliptic";
    case Kind::loxodromic: return "loxodromic";
  }
  return "?";
}

namespace {

// Closed walk around a spanning tree of the complement graph induced on s.
std::vector<Vertex> complement_tour(const SimplicialGraph& g, VertexSet s) {
  std::vector<Vertex> walk;
  VertexSet visited;
  auto visit = [&](auto&& self, Vertex v) -> void {
    visited.insert(v);
    walk.push_back(v);
    for (Vertex u : (s - g.link(v) - visited).erase(v).members()) {
      if (visited.contains(u)) continue;
      self(self, u);
      walk.push_back(v);
    }
  };
  visit(visit, s.min());
  return walk;
}

}  // namespace

ElementType classify(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  ElementType t;
  t.support = cyclic_reduce(g).core.support();
  if (t.support.empty()) return t;
  if (auto split = split_join(gr, t.support)) {
    t.kind = Kind::elliptic;
    t.join = *split;
    return t;
  }
  for (Vertex v = 0; v < gr.size(); ++v) {
    if (!t.support.subset_of(gr.star(v))) continue;
    t.kind = Kind::elliptic;
    if (!t.support.contains(v)) {
      t.join = {t.support, VertexSet::single(v)};
    } else if (!gr.link(v).empty()) {
      t.join = {t.support, VertexSet::single(gr.link(v).min())};
    } else {
      t.join = {t.support, VertexSet()};
    }
    return t;
  }
  t.kind = Kind::loxodromic;
  t.loop = complement_tour(gr, t.support);
  return t;
}

bool witness_valid(const SimplicialGraph& g, const ElementType& t) {
  switch (t.kind) {
    case Kind::identity:
      return t.support.empty();
    case Kind::elliptic: {
      auto [a, b] = t.join;
      if (a.empty() || a.intersects(b) || !t.support.subset_of(a | b)) return false;
      if (b.empty()) return t.support.size() == 1 && g.link(t.support.min()).empty();
      for (Vertex x : a.members()) {
        if (!b.subset_of(g.link(x))) return false;
      }
      return true;
    }
    case Kind::loxodromic: {
      if (t.loop.empty() || t.loop.front() != t.loop.back()) return false;
      VertexSet seen;
      for (std::size_t i = 0; i < t.loop.size(); ++i) {
        seen.insert(t.loop[i]);
        if (i > 0 && (t.loop[i] == t.loop[i - 1] || g.adjacent(t.loop[i], t.loop[i - 1]))) return false;
      }
      return seen == t.support && t.support.size() >= 2;
    }
  }
  return false;
}

bool is_pure(const GroupElement& g) {
  VertexSet s = cyclic_reduce(g).core.support();
  return !s.empty() && !split_join(g.graph(), s).has_value();
}

std::vector<int> power_star_growth(const GroupElement& g, int n_max) {
  std::vector<int> out;
  GroupElement p(g.graph());
  for (int n = 1; n <= n_max; ++n) {
    p = p * g;
    out.push_back(star_length(p));
  }
  return out;
}

namespace {

Rational make_rational(long num, long den) {
  long d = std::gcd(num < 0 ? -num : num, den);
  if (d == 0) d = 1;
  return {num / d, den / d};
}

}  // namespace

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Interval translation_length_estimate(const GroupElement& g, int n) {
  if (n < 1) throw PreconditionError("translation length estimate needs n >= 1");
  const int diam = diameter(g.graph());
  if (diam == kInfinity) throw PreconditionError("translation length estimate needs a connected graph");
  long s = star_length(g.pow(n));
  return {make_rational(s - 1, n), make_rational(static_cast<long>(diam) * (s + 1), n)};
}

DivergenceSeries conjugate_divergence(const GroupElement& lambda, const GroupElement& g, int n_max) {
  if (classify(lambda).kind != Kind::loxodromic) {
    throw PreconditionError("conjugate divergence needs a loxodromic element");
  }
  DivergenceSeries out;
  out.trivial = g.is_identity();
  if (!out.trivial && commutes(lambda, g)) {
    throw PreconditionError("element commutes with the loxodromic, so it shares a power with it");
  }
  GroupElement lam_inv = lambda.inverse();
  GroupElement conj = g;
  for (int n = 0; n <= n_max; ++n) {
    out.values.push_back(star_length(conj));
    conj = lambda * conj * lam_inv;
  }
  return out;
}

std::vector<FreeWord> sample_free_relations(const std::vector<GroupElement>& lambdas, int power,
                                            int max_len) {
  if (lambdas.empty()) return {};
  if (power < 1) throw PreconditionError("power must be positive");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (classify(lambdas[i]).kind != Kind::loxodromic) {
      throw PreconditionError("element " + std::to_string(i) + " is not loxodromic");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (commutes(lambdas[i], lambdas[j])) {
        throw PreconditionError("elements " + std::to_string(j) + " and " + std::to_string(i) + " commute");
      }
    }
  }
  const int k = static_cast<int>(lambdas.size());
  std::vector<GroupElement> gens;
  for (const auto& l : lambdas) gens.push_back(l.pow(power));
  for (const auto& l : lambdas) gens.push_back(l.pow(-power));

  std::vector<FreeWord> violations;
  FreeWord word;
  auto extend = [&](auto&& self, const GroupElement& value) -> void {
    if (!word.empty() && value.is_identity()) violations.push_back(word);
    if (static_cast<int>(word.size()) == max_len) return;
    for (int gi = 0; gi < 2 * k; ++gi) {
      int sym = gi < k ? gi + 1 : -(gi - k + 1);
      if (!word.empty() && word.back() == -sym) continue;
      word.push_back(sym);
      self(self, value * gens[gi]);
      word.pop_back();
    }
  };
  extend(extend, GroupElement(lambdas.front().graph()));
  return violations;
}

std::string format_free_word(const FreeWord& w) {
  std::string out;
  for (int s : w) {
    if (!out.empty()) out += ' ';
    out += "L" + std::to_string(s < 0 ? -s : s) + (s < 0 ? "^-1" : "");
  }
  return out.empty() ? "1" : out;
}

SimplicialGraph commutation_graph(const std::vector<GroupElement>& elements) {
  if (elements.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw BudgetExceeded("commutation graph limited to 64 elements");
  }
  std::vector<std::string> labels;
  std::vector<VertexSet> adj(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (commutes(elements[i], elements[j])) {
        adj[i].insert(static_cast<Vertex>(j));
        adj[j].insert(static_cast<Vertex>(i));
      }
    }
  }
  return SimplicialGraph(std::move(labels), std::move(adj));
}

}  // namespace raag
