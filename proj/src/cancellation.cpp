#include "raag/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "raag/errors.hpp"
#include "raag/lengths.hpp"
#include "raag/random.hpp"

namespace raag {

namespace {

GroupElement letter_element(const SimplicialGraph& g, Letter l) { return GroupElement(g).times(l); }

// Reduces the concatenation of `pieces` and reports, for each letter, the index of the letter it
// cancelled against (or -1). Letters are numbered in concatenation order.
std::vector<int> pair_letters(const SimplicialGraph& g, const std::vector<const Word*>& pieces) {
  struct Slot {
    Letter letter;
    int id;
  };
  std::vector<Slot> stack;
  std::vector<int> partner;
  int id = 0;
  for (const Word* w : pieces) {
    for (Letter x : *w) {
      partner.push_back(-1);
      const VertexSet lk = g.link(x.vertex());
      bool cancelled = false;
      for (std::size_t j = stack.size(); j-- > 0;) {
        Letter other = stack[j].letter;
        if (other.vertex() == x.vertex()) {
          if (other == x.inverse()) {
            partner[id] = stack[j].id;
            partner[stack[j].id] = id;
            stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(j));
            cancelled = true;
          }
          break;
        }
        if (!lk.contains(other.vertex())) break;
      }
      if (!cancelled) stack.push_back({x, id});
      ++id;
    }
  }
  return partner;
}

GroupElement g_product(const CancellationSequence& seq) {
  return product(seq.context.x.graph(), seq.g_parts);
}

GroupElement h_product(const CancellationSequence& seq) {
  return product(seq.context.x.graph(), seq.h_parts);
}

// Fills overlap, rests, t and the hypothesis flag from the parts.
void settle(CancellationSequence& seq) {
  const auto& ctx = seq.context;
  const SimplicialGraph& gr = ctx.x.graph();
  GroupElement left = ctx.x * g_product(seq);
  GroupElement right = h_product(seq) * ctx.y;
  auto partner = pair_letters(gr, {&left.letters(), &right.letters()});
  Word rest;
  Word shared;
  for (std::size_t i = 0; i < left.length(); ++i) {
    (partner[i] >= 0 ? shared : rest).push_back(left.letters()[i]);
  }
  seq.x_rest = GroupElement::reduce(gr, rest);
  seq.overlap = GroupElement::reduce(gr, shared);
  seq.y_rest = seq.overlap * right;
  seq.t = star_length(left * right);
  seq.hypothesis = std::max(star_length(ctx.x), star_length(ctx.y)) >= ctx.s + seq.t + 2;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

GroupElement CancellationSequence::target() const { return g_product(*this) * h_product(*this); }

std::vector<int> CancellationSequence::complexity() const {
  std::vector<int> out;
  for (const auto& p : g_parts) out.push_back(static_cast<int>(p.length()));
  for (auto it = h_parts.rbegin(); it != h_parts.rend(); ++it) out.push_back(static_cast<int>(it->length()));
  return out;
}

std::vector<VertexSet> CancellationSequence::g_supports() const {
  std::vector<VertexSet> out;
  for (const auto& p : g_parts) out.push_back(p.support());
  return out;
}

std::vector<VertexSet> CancellationSequence::h_supports() const {
  std::vector<VertexSet> out;
  for (const auto& p : h_parts) out.push_back(p.support());
  return out;
}

InvariantCheck check_invariants(const CancellationSequence& seq, const GroupElement& g) {
  InvariantCheck c;
  const auto& ctx = seq.context;
  const SimplicialGraph& gr = ctx.x.graph();
  const auto s = static_cast<std::size_t>(ctx.s);
  if (seq.g_parts.size() != s || seq.h_parts.size() != s || ctx.centers.size() != s) {
    return {false, false, false, false};
  }
  c.product = seq.target() == g;
  for (std::size_t i = 0; i < s; ++i) {
    VertexSet st = gr.star(ctx.centers[i]);
    if (!seq.g_parts[i].support().subset_of(st) || !seq.h_parts[i].support().subset_of(st)) c.supports = false;
  }
  for (std::size_t i = 0; i < s; ++i) {
    VertexSet hs = seq.h_parts[i].support();
    for (std::size_t j = i + 1; j < s; ++j) {
      for (Vertex b : seq.g_parts[j].support().members()) {
        if (!hs.subset_of(gr.link(b))) c.adjacency = false;
      }
    }
  }
  // x = (x_rest, overlap, g_s^-1, ..., g_1^-1) and y = (h_s^-1, ..., h_1^-1, overlap^-1, y_rest).
  std::vector<GroupElement> xs{seq.x_rest, seq.overlap};
  for (std::size_t i = s; i-- > 0;) xs.push_back(seq.g_parts[i].inverse());
  std::vector<GroupElement> ys;
  for (std::size_t i = s; i-- > 0;) ys.push_back(seq.h_parts[i].inverse());
  ys.push_back(seq.overlap.inverse());
  ys.push_back(seq.y_rest);
  c.reduced = is_reduced_product(xs) && product(gr, xs) == ctx.x && is_reduced_product(ys) &&
              product(gr, ys) == ctx.y;
  return c;
}

std::optional<CancellationSequence> find_cancellation(const GroupElement& g, const GroupElement& x,
                                                      const GroupElement& y, int s) {
  const SimplicialGraph& gr = g.graph();
  if (s < 0 || s < star_length(g)) throw PreconditionError("s is smaller than the star length of g");
  Factorization f = star_factorization(g);
  const int k = static_cast<int>(f.factors.size());
  CancellationSequence seq{
      .context = {.s = s, .x = x, .y = y, .centers = {}},
      .g_parts = {},
      .h_parts = {},
      .x_rest = GroupElement(gr),
      .overlap = GroupElement(gr),
      .y_rest = GroupElement(gr),
  };
  // factors[k-1] is leftmost.
  std::vector<const Word*> pieces{&x.letters()};
  std::vector<int> owner;
  for (int i = 0; i < k; ++i) {
    const auto& factor = f.factors[static_cast<std::size_t>(k - 1 - i)];
    seq.context.centers.push_back(factor.center);
    pieces.push_back(&factor.word.letters());
    owner.insert(owner.end(), factor.word.length(), i);
  }
  const Vertex pad = k > 0 ? seq.context.centers.back() : 0;
  while (static_cast<int>(seq.context.centers.size()) < s) seq.context.centers.push_back(pad);
  pieces.push_back(&y.letters());
  if (owner.size() != g.length()) return std::nullopt;

  auto partner = pair_letters(gr, pieces);
  const int xn = static_cast<int>(x.length());
  const int gn = static_cast<int>(owner.size());
  std::vector<Word> gw(static_cast<std::size_t>(s));
  std::vector<Word> hw(static_cast<std::size_t>(s));
  int pos = 0;
  for (std::size_t p = 1; p + 1 < pieces.size(); ++p) {
    for (Letter l : *pieces[p]) {
      int other = partner[static_cast<std::size_t>(xn + pos)];
      auto i = static_cast<std::size_t>(owner[static_cast<std::size_t>(pos)]);
      if (other >= 0 && other < xn) {
        gw[i].push_back(l);
      } else if (other >= xn + gn) {
        hw[i].push_back(l);
      } else {
        return std::nullopt;
      }
      ++pos;
    }
  }
  for (std::size_t i = 0; i < gw.size(); ++i) {
    seq.g_parts.push_back(GroupElement::reduce(gr, gw[i]));
    seq.h_parts.push_back(GroupElement::reduce(gr, hw[i]));
  }
  settle(seq);
  if (!check_invariants(seq, g).ok()) return std::nullopt;
  return seq;
}

CancellationSequence maximalize(const CancellationSequence& seq) {
  const SimplicialGraph& gr = seq.context.x.graph();
  const GroupElement g = seq.target();
  const auto s = static_cast<std::size_t>(seq.context.s);
  CancellationSequence cur = seq;

  auto accept = [&](CancellationSequence cand) {
    settle(cand);
    if (!lex_greater(cand.complexity(), cur.complexity()) || !check_invariants(cand, g).ok()) return false;
    cur = std::move(cand);
    return true;
  };
  auto sorted_letters = [](const GroupElement& e, const std::vector<std::size_t>& positions) {
    std::vector<Letter> out;
    for (auto p : positions) out.push_back(e.letters()[p]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  auto step = [&]() {
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        for (Letter l : sorted_letters(cur.g_parts[b], leading_positions(cur.g_parts[b]))) {
          CancellationSequence cand = cur;
          cand.g_parts[a] = cur.g_parts[a].times(l);
          cand.g_parts[b] = letter_element(gr, l.inverse()) * cur.g_parts[b];
          if (cand.g_parts[a].length() == cur.g_parts[a].length() + 1 && accept(std::move(cand))) return true;
        }
      }
    }
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        for (Letter l : sorted_letters(cur.h_parts[a], trailing_positions(cur.h_parts[a]))) {
          CancellationSequence cand = cur;
          cand.h_parts[a] = cur.h_parts[a].times(l.inverse());
          cand.h_parts[b] = letter_element(gr, l) * cur.h_parts[b];
          if (cand.h_parts[b].length() == cur.h_parts[b].length() + 1 && accept(std::move(cand))) return true;
        }
      }
    }
    for (std::size_t i = 0; i < s; ++i) {
      for (Vertex v : gr.star(cur.context.centers[i]).members()) {
        for (int sign : {-1, 1}) {
          Letter l(v, sign);
          CancellationSequence cand = cur;
          cand.g_parts[i] = cur.g_parts[i].times(l);
          cand.h_parts[i] = letter_element(gr, l.inverse()) * cur.h_parts[i];
          if (cand.g_parts[i].length() == cur.g_parts[i].length() + 1 && accept(std::move(cand))) return true;
        }
      }
    }
    return false;
  };
  while (step()) {
  }
  return cur;
}

std::optional<GroupElement> support_determines(const CancellationContext& ctx, const std::vector<VertexSet>& p,
                                               const std::vector<VertexSet>& q, int t) {
  const SimplicialGraph& gr = ctx.x.graph();
  const auto s = static_cast<std::size_t>(ctx.s);
  if (p.size() != s || q.size() != s || ctx.centers.size() != s) return std::nullopt;
  for (std::size_t i = 0; i < s; ++i) {
    VertexSet st = gr.star(ctx.centers[i]);
    if (!p[i].subset_of(st) || !q[i].subset_of(st)) return std::nullopt;
    for (std::size_t j = i + 1; j < s; ++j) {
      for (Vertex b : p[j].members()) {
        if (!q[i].subset_of(gr.link(b))) return std::nullopt;
      }
    }
  }
  CancellationSequence seq{
      .context = ctx,
      .g_parts = {},
      .h_parts = std::vector<GroupElement>(s, GroupElement(gr)),
      .x_rest = GroupElement(gr),
      .overlap = GroupElement(gr),
      .y_rest = GroupElement(gr),
  };
  GroupElement xi = ctx.x;
  for (std::size_t i = 0; i < s; ++i) {
    GroupElement pi = tau(xi, p[i]);
    xi = xi * pi.inverse();
    seq.g_parts.push_back(pi.inverse());
  }
  // y begins with h_s^-1, so the recursion on y runs from the last index down.
  GroupElement yi = ctx.y;
  for (std::size_t i = s; i-- > 0;) {
    GroupElement qi = iota(yi, q[i]);
    yi = qi.inverse() * yi;
    seq.h_parts[i] = qi.inverse();
  }
  settle(seq);
  GroupElement g = seq.target();
  if (seq.t > t || !check_invariants(seq, g).ok()) return std::nullopt;
  if (seq.g_supports() != p || seq.h_supports() != q) return std::nullopt;
  return g;
}

std::uint64_t acyl_bound(int vertices, int s) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  auto mul = [&](std::uint64_t f) {
    out = (f != 0 && out > kMax / f) ? kMax : out * f;
  };
  for (int i = 0; i < s; ++i) mul(static_cast<std::uint64_t>(vertices));
  for (int i = 0; i < 2 * s * vertices; ++i) mul(2);
  return out;
}

namespace {

// Length of the shortest prefix of w with star length at least `need`, or |w| if there is none.
std::size_t window(const GroupElement& w, int need) {
  std::size_t best = w.length();
  for (const auto& p : all_prefixes(w)) {
    if (p.length() < best && star_length(p) >= need) best = p.length();
  }
  return best;
}

std::uint64_t saturating_pow2(std::size_t e) {
  return e >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << e;
}

}  // namespace

AcylCount acyl_count(const GroupElement& x, const GroupElement& y, int s, int t, int max_exp) {
  AcylCount out{.x = x, .y = y};
  const std::size_t span = window(x.inverse(), s + 2) + window(y, s + 2);
  out.window_bound = saturating_pow2(span * static_cast<std::size_t>(s));
  out.hypothesis = std::max(star_length(x), star_length(y)) >= s + t + 2;
  // sigma^-1 ranges over prefixes of x^-1.
  const auto heads = all_prefixes(x.inverse());
  std::vector<GroupElement> tails;
  for (const auto& pi : all_prefixes(y)) tails.push_back(pi.inverse());

  std::vector<std::vector<GroupElement>> found(heads.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < heads.size(); ++i) {
    for (const auto& tail : tails) {
      GroupElement cand = heads[i] * tail;
      if (star_length(cand) <= s && star_length(x * cand * y) <= t) found[i].push_back(std::move(cand));
    }
  }
  std::vector<GroupElement> all;
  for (auto& f : found) all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.untruncated = all.size();
  for (auto& e : all) {
    if (max_syllable_exponent(e) <= max_exp) out.elements.push_back(e);
  }
  out.truncated = out.elements.size();
  return out;
}

AcylReport acyl_sample(const SimplicialGraph& g, int s, int t, int max_exp, int trials, std::uint64_t seed) {
  AcylReport report{.s = s, .t = t, .max_exp = max_exp, .bound = acyl_bound(g.size(), s)};
  Rng rng(seed);
  const int need = s + t + 2;
  auto draw_long = [&]() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      GroupElement x = random_syllable_word(rng, g, rng.uniform(need, 3 * need), max_exp);
      if (star_length(x) >= need) return x;
    }
    throw PreconditionError("could not draw an element of star length " + std::to_string(need));
  };
  auto draw_short = [&](int bound) {
    GroupElement e(g);
    do {
      e = random_syllable_word(rng, g, rng.uniform(0, bound), max_exp);
    } while (star_length(e) > bound);
    return e;
  };
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (int i = 0; i < trials; ++i) {
    GroupElement x = draw_long();
    GroupElement y(g);
    if (i % 2 == 1) {
      // y nearly undoes x, so that x g y is short for some short g.
      GroupElement core = draw_short(s);
      GroupElement tail = draw_short(t);
      y = (x * core).inverse() * tail;
    } else {
      y = random_syllable_word(rng, g, rng.uniform(0, need), max_exp);
    }
    pairs.emplace_back(std::move(x), std::move(y));
  }
  for (auto& [x, y] : pairs) {
    AcylCount c = acyl_count(x, y, s, t, max_exp);
    report.max_count = std::max(report.max_count, c.truncated);
    report.max_untruncated = std::max(report.max_untruncated, c.untruncated);
    report.min_window_bound = report.trials.empty() ? c.window_bound : std::min(report.min_window_bound, c.window_bound);
    if (c.truncated > report.bound || c.untruncated > report.bound) report.pass = false;
    report.trials.push_back(std::move(c));
  }
  return report;
}

}  // namespace raag
