#include "raag/element.hpp"

#include <algorithm>
#include <charconv>

#include "raag/errors.hpp"

namespace raag {

Word parse_word(const SimplicialGraph& g, std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r' ||
                               text[i] == '*' || text[i] == '.')) {
      ++i;
    }
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r' &&
           text[i] != '*' && text[i] != '.') {
      ++i;
    }
    std::string_view tok = text.substr(start, i - start);
    if (tok == "1" && !g.find("1")) continue;
    long exponent = 1;
    std::string_view name = tok;
    if (auto caret = tok.rfind('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view num = tok.substr(caret + 1);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exponent);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
        throw ParseError(1, start + caret + 2, "bad exponent in '" + std::string(tok) + "'");
      }
      if (exponent > 100000 || exponent < -100000) {
        throw ParseError(1, start + caret + 2, "exponent too large in '" + std::string(tok) + "'");
      }
    }
    auto v = g.find(name);
    if (!v) throw ParseError(1, start + 1, "unknown vertex '" + std::string(name) + "'");
    Letter l(*v, exponent < 0 ? -1 : 1);
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.push_back(l);
  }
  return out;
}

std::string format_word(const SimplicialGraph& g, std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long e = static_cast<long>(j - i) * w[i].sign();
    if (!out.empty()) out += ' ';
    out += g.label(w[i].vertex());
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word inverse_word(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void append_reduced(const SimplicialGraph& g, Word& reduced, Letter x) {
  const Vertex xv = x.vertex();
  const VertexSet lk = g.link(xv);
  for (std::size_t j = reduced.size(); j-- > 0;) {
    Vertex u = reduced[j].vertex();
    if (u == xv) {
      if (reduced[j] == x.inverse()) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
        return;
      }
      break;
    }
    if (!lk.contains(u)) break;
  }
  reduced.push_back(x);
}

namespace {

// Repeatedly takes the least letter that can be commuted to the front of what remains.
template <class Taken>
void canonicalize_with(const SimplicialGraph& g, Word& w, Taken& taken) {
  const std::size_t n = w.size();
  const VertexSet all = g.vertices();
  Word out;
  out.reserve(n);
  std::size_t start = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (taken.test(start)) ++start;
    VertexSet blocked;
    std::size_t best = n;
    for (std::size_t i = start; i < n; ++i) {
      if (taken.test(i)) continue;
      Vertex v = w[i].vertex();
      if (!blocked.contains(v) && (best == n || w[i] < w[best])) best = i;
      blocked |= all - g.link(v);
      if (blocked == all) break;
    }
    out.push_back(w[best]);
    taken.set(best);
  }
  w = std::move(out);
}

struct SmallTaken {
  std::uint64_t bits = 0;
  bool test(std::size_t i) const { return (bits >> i & 1U) != 0; }
  void set(std::size_t i) { bits |= std::uint64_t{1} << i; }
};

struct LargeTaken {
  std::vector<char> bits;
  bool test(std::size_t i) const { return bits[i] != 0; }
  void set(std::size_t i) { bits[i] = 1; }
};

}  // namespace

void canonicalize(const SimplicialGraph& g, Word& w) {
  if (w.size() < 2) return;
  if (w.size() <= 64) {
    SmallTaken taken;
    canonicalize_with(g, w, taken);
  } else {
    LargeTaken taken{std::vector<char>(w.size(), 0)};
    canonicalize_with(g, w, taken);
  }
}

GroupElement GroupElement::reduce(const SimplicialGraph& g, std::span<const Letter> word) {
  GroupElement e(g);
  e.letters_.reserve(word.size());
  for (Letter x : word) {
    if (x.vertex() >= g.size()) throw UnknownVertex("#" + std::to_string(x.vertex()));
    append_reduced(g, e.letters_, x);
  }
  canonicalize(g, e.letters_);
  return e;
}

GroupElement GroupElement::parse(const SimplicialGraph& g, std::string_view text) {
  return reduce(g, parse_word(g, text));
}

GroupElement GroupElement::generator(const SimplicialGraph& g, Vertex v, int exponent) {
  if (v < 0 || v >= g.size()) throw UnknownVertex("#" + std::to_string(v));
  GroupElement e(g);
  e.letters_.assign(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
                    Letter(v, exponent < 0 ? -1 : 1));
  return e;
}

GroupElement GroupElement::from_normal_form(const SimplicialGraph& g, Word word) {
  GroupElement e(g);
  e.letters_ = std::move(word);
  return e;
}

VertexSet GroupElement::support() const {
  VertexSet s;
  for (Letter l : letters_) s.insert(l.vertex());
  return s;
}

GroupElement GroupElement::inverse() const {
  GroupElement e(*graph_);
  e.letters_ = inverse_word(letters_);
  canonicalize(*graph_, e.letters_);
  return e;
}

GroupElement GroupElement::pow(int n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  GroupElement out(*graph_);
  for (int k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
  return out;
}

GroupElement GroupElement::times(Letter x) const {
  GroupElement e = *this;
  append_reduced(*graph_, e.letters_, x);
  canonicalize(*graph_, e.letters_);
  return e;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement e = a;
  for (Letter x : b.letters_) append_reduced(*a.graph_, e.letters_, x);
  canonicalize(*a.graph_, e.letters_);
  return e;
}

std::size_t hash_word(std::span<const Letter> w) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l.code();
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a * b * a.inverse() * b.inverse();
}

bool commutes(const GroupElement& a, const GroupElement& b) {
  return (a * b) == (b * a);
}

GroupElement conjugate(const GroupElement& g, const GroupElement& by) { return by.inverse() * g * by; }

std::vector<std::size_t> leading_positions(const GroupElement& g) {
  const auto& w = g.letters();
  const VertexSet all = g.graph().vertices();
  std::vector<std::size_t> out;
  VertexSet blocked;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Vertex v = w[i].vertex();
    if (!blocked.contains(v)) out.push_back(i);
    blocked |= all - g.graph().link(v);
    if (blocked == all) break;
  }
  return out;
}

std::vector<std::size_t> trailing_positions(const GroupElement& g) {
  const auto& w = g.letters();
  const VertexSet all = g.graph().vertices();
  std::vector<std::size_t> out;
  VertexSet blocked;
  for (std::size_t i = w.size(); i-- > 0;) {
    Vertex v = w[i].vertex();
    if (!blocked.contains(v)) out.push_back(i);
    blocked |= all - g.graph().link(v);
    if (blocked == all) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

CyclicReduction cyclic_reduce(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  Word core = g.letters();
  Word conj;
  for (;;) {
    GroupElement cur = GroupElement::from_normal_form(gr, core);
    auto lead = leading_positions(cur);
    auto trail = trailing_positions(cur);
    std::size_t bi = core.size(), bj = core.size();
    for (std::size_t i : lead) {
      for (std::size_t j : trail) {
        if (i != j && core[j] == core[i].inverse() && (bi == core.size() || core[i] < core[bi])) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == core.size()) break;
    conj.push_back(core[bi]);
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(std::max(bi, bj)));
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(std::min(bi, bj)));
    canonicalize(gr, core);
  }
  return {GroupElement::from_normal_form(gr, std::move(core)), GroupElement::reduce(gr, conj)};
}

bool is_cyclically_reduced(const GroupElement& g) { return cyclic_reduce(g).conjugator.is_identity(); }

PrefixSplit split_prefix(const GroupElement& g, VertexSet a) {
  const SimplicialGraph& gr = g.graph();
  const VertexSet all = gr.vertices();
  Word pre, rest;
  VertexSet blocked;
  for (Letter l : g.letters()) {
    Vertex v = l.vertex();
    if (a.contains(v) && !blocked.contains(v)) {
      pre.push_back(l);
    } else {
      rest.push_back(l);
      blocked |= all - gr.link(v);
    }
  }
  canonicalize(gr, pre);
  canonicalize(gr, rest);
  return {GroupElement::from_normal_form(gr, std::move(pre)), GroupElement::from_normal_form(gr, std::move(rest))};
}

PrefixSplit split_suffix(const GroupElement& g, VertexSet a) {
  const SimplicialGraph& gr = g.graph();
  const VertexSet all = gr.vertices();
  const auto& w = g.letters();
  Word suf, rest;
  VertexSet blocked;
  for (std::size_t i = w.size(); i-- > 0;) {
    Vertex v = w[i].vertex();
    if (a.contains(v) && !blocked.contains(v)) {
      suf.push_back(w[i]);
    } else {
      rest.push_back(w[i]);
      blocked |= all - gr.link(v);
    }
  }
  std::reverse(suf.begin(), suf.end());
  std::reverse(rest.begin(), rest.end());
  canonicalize(gr, suf);
  canonicalize(gr, rest);
  return {GroupElement::from_normal_form(gr, std::move(suf)), GroupElement::from_normal_form(gr, std::move(rest))};
}

GroupElement iota(const GroupElement& g, VertexSet a) { return split_prefix(g, a).prefix; }
GroupElement tau(const GroupElement& g, VertexSet a) { return split_suffix(g, a).prefix; }

int max_syllable_exponent(const GroupElement& g) {
  const SimplicialGraph& gr = g.graph();
  const VertexSet all = gr.vertices();
  std::vector<int> run(gr.size(), 0);
  VertexSet broken = all;
  int best = 0;
  for (Letter l : g.letters()) {
    Vertex v = l.vertex();
    run[v] = broken.contains(v) ? 1 : run[v] + 1;
    best = std::max(best, run[v]);
    broken |= all - gr.star(v);
    broken.erase(v);
  }
  return best;
}

bool is_reduced_product(std::span<const GroupElement> factors) {
  if (factors.empty()) return true;
  std::size_t total = 0;
  for (const auto& f : factors) total += f.length();
  return product(factors.front().graph(), factors).length() == total;
}

GroupElement product(const SimplicialGraph& g, std::span<const GroupElement> factors) {
  Word w;
  for (const auto& f : factors) {
    for (Letter x : f.letters()) append_reduced(g, w, x);
  }
  canonicalize(g, w);
  return GroupElement::from_normal_form(g, std::move(w));
}

}  // namespace raag
