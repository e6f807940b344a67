#include "raag/distance_formula.hpp"

#include <algorithm>

#include "raag/errors.hpp"

namespace raag {

Factorization star_factorize_min_syllable(const GroupElement& g) {
  Factorization f = min_syllable_star_factorization(g);
  const SimplicialGraph& gr = g.graph();
  for (auto& factor : f.factors) {
    VertexSet s = factor.word.support();
    if (s.size() == 1) {
      factor.center = s.min();
      continue;
    }
    for (Vertex y = 0; y < gr.size(); ++y) {
      if (s.subset_of(gr.star(y)) && gr.degree(y) > 1) {
        factor.center = y;
        break;
      }
    }
  }
  return f;
}

namespace {

void require_standing(const SimplicialGraph& g) {
  if (!is_connected(g) || !is_triangle_free(g) || !is_square_free(g)) {
    throw PreconditionError("the distance formula needs a connected triangle- and square-free graph");
  }
}

// g_i = h_i ... h_1, with g_0 = 1.
std::vector<GroupElement> partial_products(const Factorization& f) {
  std::vector<GroupElement> out{GroupElement(f.target.graph())};
  for (const auto& factor : f.factors) out.push_back(factor.word * out.back());
  return out;
}

void append_segment(std::vector<ExtVertex>& path, const std::vector<Vertex>& vertices, const GroupElement& conj) {
  for (Vertex u : vertices) {
    ExtVertex x = canonical_vertex(conj.graph(), u, conj);
    if (path.empty() || !(path.back() == x)) path.push_back(std::move(x));
  }
}

// Both ends of an interval satisfy lo_num/lo_den - c <= value, i.e. num <= den * (value + c).
bool at_least(long num, long den, long c, long value) { return num <= den * (value + c); }

}  // namespace

TreeFormulaReport tree_distance_formula_check(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  if (!is_tree(gr)) throw PreconditionError("tree distance formula needs a tree");
  TreeFormulaReport r;
  r.diameter = diameter(gr);
  if (r.diameter < 2) throw PreconditionError("tree distance formula needs diameter at least two");
  r.syl = syllable_length(g);
  if (g.is_identity()) {
    r.geodesic.push_back(base_vertex(gr, 0));
    return r;
  }
  Factorization f = star_factorize_min_syllable(g);
  const int k = static_cast<int>(f.factors.size());
  r.star = k;
  const Vertex y1 = f.factors.front().center;
  const Vertex yk = f.factors.back().center;
  VertexSet avoid = gr.star(y1) | gr.star(yk);
  VertexSet free = gr.vertices() - avoid;
  if (free.empty()) {
    r.relaxed = true;
    free = gr.vertices() - VertexSet::single(y1) - VertexSet::single(yk);
  }
  r.v = free.min();
  auto gs = partial_products(f);

  // Walk c_0 c_1 ... c_k with each edge tagged by its segment, then cancel backtracking.
  struct Step {
    ExtVertex x;
    int segment;
  };
  std::vector<Step> stack;
  auto push_walk = [&](const std::vector<Vertex>& vertices, const GroupElement& conj, int segment) {
    for (Vertex u : vertices) {
      ExtVertex x = canonical_vertex(gr, u, conj);
      if (!stack.empty() && stack.back().x == x) continue;
      if (stack.size() >= 2 && stack[stack.size() - 2].x == x) {
        stack.pop_back();
        continue;
      }
      stack.push_back({std::move(x), segment});
    }
  };
  push_walk(shortest_path(gr, r.v, y1), gs[0], 0);
  for (int i = 1; i < k; ++i) {
    push_walk(shortest_path(gr, f.factors[i - 1].center, f.factors[i].center), gs[i], i);
  }
  push_walk(shortest_path(gr, yk, r.v), gs[k], k);
  for (const auto& s : stack) r.geodesic.push_back(s.x);

  const int len = static_cast<int>(stack.size()) - 1;
  for (int p = 1; p < len; ++p) {
    auto d = link_distance(stack[p].x, stack[p - 1].x, stack[p + 1].x);
    r.terms.push_back(d);
    r.sum += d.exact;
    r.sum_lo += d.bounds.lo;
    r.sum_hi += d.bounds.hi;
    if (stack[p].segment != stack[p + 1].segment) {
      r.markers.push_back(p);
    } else {
      ++r.others;
      if (d.exact != 1) r.others_ok = false;
    }
  }

  const long syl = r.syl;
  const long dd = r.diameter;
  if (!r.relaxed) {
    if (static_cast<int>(r.markers.size()) != k) {
      r.markers_ok = false;
    } else {
      for (int i = 0; i < k; ++i) {
        const auto& t = r.terms[r.markers[i] - 1];
        long h = syllable_length(f.factors[i].word);
        if (3L * t.exact < h || t.exact > h + 1) r.markers_ok = false;
      }
    }
    if (r.others > (dd - 1) * k + dd + 1) r.others_ok = false;
  }
  // syl/3 <= sum <= (D+1)(syl+1), or (syl-4)/3 <= sum in the relaxed case.
  const long shift = r.relaxed ? 4 : 0;
  for (long s : {static_cast<long>(r.sum_lo), static_cast<long>(r.sum_hi), static_cast<long>(r.sum)}) {
    if (syl - shift > 3 * s || s > (dd + 1) * (syl + 1)) r.proof_bound_ok = false;
    if (!at_least(syl, 4 * dd, 4 * dd, s) || s > 4 * dd * syl + 4 * dd) r.formula_ok = false;
  }
  r.pass = r.formula_ok && r.proof_bound_ok && r.markers_ok && r.others_ok;
  return r;
}

QuasiGeodesicCertificate build_quasi_geodesic(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  require_standing(gr);
  if (g.is_identity()) throw PreconditionError("quasi-geodesic needs a nontrivial element");
  for (Vertex u = 0; u < gr.size(); ++u) {
    if (gr.star(u) == gr.vertices()) throw PreconditionError("graph is a star, so its extension graph has diameter two");
  }
  QuasiGeodesicCertificate cert{.factorization = star_factorize_min_syllable(g)};
  cert.diameter = diameter(gr);
  cert.k_const = 10 * cert.diameter;
  cert.c_const = 10 * cert.diameter;
  const auto& factors = cert.factorization.factors;
  const int k = static_cast<int>(factors.size());
  for (const auto& f : factors) {
    const Vertex y = f.center;
    cert.y.push_back(y);
    if (syllable_length(f.word) == 1) {
      Vertex z = -1;
      for (Vertex c : gr.link(y).members()) {
        if (!(gr.link(c) - VertexSet::single(y)).empty()) {
          z = c;
          break;
        }
      }
      cert.z.push_back(z);
      cert.v.push_back((gr.link(z) - VertexSet::single(y)).min());
    } else {
      cert.z.push_back(y);
      Vertex chosen = -1;
      for (Vertex c : gr.link(y).members()) {
        if (!canonical_vertex(gr, c, f.word).conjugator.is_identity()) {
          chosen = c;
          break;
        }
      }
      cert.v.push_back(chosen);
    }
  }
  auto gs = partial_products(cert.factorization);
  for (int i = 0; i < k; ++i) {
    append_segment(cert.path, {cert.v[i]}, gs[i]);
    cert.markers.push_back(static_cast<int>(cert.path.size()));
    append_segment(cert.path, {cert.z[i]}, gs[i]);
    append_segment(cert.path, {cert.v[i]}, gs[i + 1]);
    Vertex next = i + 1 < k ? cert.v[i + 1] : cert.v[0];
    append_segment(cert.path, shortest_path(gr, cert.v[i], next), gs[i + 1]);
  }
  return cert;
}

GeneralFormulaReport general_distance_formula_check(const QuasiGeodesicCertificate& cert) {
  GeneralFormulaReport r;
  const auto& path = cert.path;
  const auto& factors = cert.factorization.factors;
  r.syl = syllable_length(cert.factorization.target);
  const int len = static_cast<int>(path.size()) - 1;
  for (int p = 0; p < len; ++p) {
    if (!ext_adjacent(path[p], path[p + 1])) r.path_ok = false;
  }
  if (!r.path_ok) {
    r.pass = false;
    return r;
  }
  for (int p = 1; p < len; ++p) {
    auto d = link_distance(path[p], path[p - 1], path[p + 1]);
    r.terms.push_back(d);
    r.sum += d.exact;
    r.sum_lo += d.bounds.lo;
    r.sum_hi += d.bounds.hi;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& t = r.terms.at(cert.markers[i] - 1);
    const int h = syllable_length(factors[i].word);
    if (h == 1) {
      if (t.exact != 1) r.markers_ok = false;
    } else if (2 * t.exact < h || t.exact > h) {
      r.markers_ok = false;
    }
  }

  const long kk = cert.k_const;
  const long cc = cert.c_const;
  r.worst_pair_slack = kInfinity;
  for (int p = 0; p <= len; ++p) {
    for (int q = p + 1; q <= len; ++q) {
      // d(path[p], path[q]) lies in [lower, q - p]; only the lower end can break q-p <= K d + C.
      long lower = covering_lower_bound(path[p], path[q]);
      long slack = kk * lower + cc - (q - p);
      r.worst_pair_slack = static_cast<int>(std::min<long>(r.worst_pair_slack, slack));
    }
  }
  if (len == 0) r.worst_pair_slack = static_cast<int>(cc);
  r.quasi_geodesic_ok = r.worst_pair_slack >= 0;

  const long syl = r.syl;
  const long d3 = cert.diameter + 3;
  for (long s : {static_cast<long>(r.sum_lo), static_cast<long>(r.sum_hi), static_cast<long>(r.sum)}) {
    if (!at_least(syl, kk, cc, s) || s > kk * syl + cc) r.formula_ok = false;
    if (syl > d3 * s || s > d3 * syl) r.sharp_ok = false;
  }
  r.pass = r.path_ok && r.quasi_geodesic_ok && r.formula_ok && r.sharp_ok;
  return r;
}

}  // namespace raag
