#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "raag/element.hpp"

namespace raag {

struct CancellationContext {
  int s = 0;
  GroupElement x;
  GroupElement y;
  std::vector<Vertex> centers;  // v_1..v_s
};

// g = g_1 ... g_s h_1 ... h_s where the g-part cancels into the end of x and the h-part into the
// start of y. Index i-1 holds the i-th piece.
struct CancellationSequence {
  CancellationContext context;
  std::vector<GroupElement> g_parts;
  std::vector<GroupElement> h_parts;
  // x = x_rest * overlap * G^-1 and y = H^-1 * overlap^-1 * y_rest, both reduced.
  GroupElement x_rest;
  GroupElement overlap;
  GroupElement y_rest;
  int t = 0;                // star length of x g y
  bool hypothesis = false;  // max(|x|_*, |y|_*) >= s + t + 2

  GroupElement target() const;
  // Lengths (|g_1|, ..., |g_s|, |h_s|, ..., |h_1|), compared lexicographically for maximality.
  std::vector<int> complexity() const;
  std::vector<VertexSet> g_supports() const;
  std::vector<VertexSet> h_supports() const;
};

struct InvariantCheck {
  bool product = true;    // g = g_1..g_s h_1..h_s
  bool supports = true;   // each piece lies in st(v_i)
  bool adjacency = true;  // supp(h_i) adjacent to supp(g_j) for i < j
  bool reduced = true;    // pieces peel off x and y without cancellation
  bool ok() const { return product && supports && adjacency && reduced; }
};
// Checks the four defining conditions against the target element g.
InvariantCheck check_invariants(const CancellationSequence& seq, const GroupElement& g);

// Pairs the letters of g with letters of x and y while reducing x g y. Pads to s pieces with
// trivial ones. Throws PreconditionError if s < star_length(g); returns none if some letter of
// g survives into x g y.
std::optional<CancellationSequence> find_cancellation(const GroupElement& g, const GroupElement& x,
                                                      const GroupElement& y, int s);

// Shifts single letters toward the front of the g-chain and the back of the h-chain until no
// valid move remains. Deterministic; idempotent.
CancellationSequence maximalize(const CancellationSequence& seq);

// Rebuilds the only element whose maximal sequence can have the given supports, or none when the
// supports are inconsistent or the rebuilt element is not in x^-1 B_t y^-1.
std::optional<GroupElement> support_determines(const CancellationContext& ctx, const std::vector<VertexSet>& p,
                                               const std::vector<VertexSet>& q, int t);

// |V|^s * 2^(2 s |V|), saturating at UINT64_MAX.
std::uint64_t acyl_bound(int vertices, int s);

struct AcylCount {
  GroupElement x;
  GroupElement y;
  bool hypothesis = false;
  std::vector<GroupElement> elements{};  // with syllable exponents at most E
  std::size_t truncated = 0;
  std::size_t untruncated = 0;
  // (2^(|p'| + |q'|))^s for the shortest suffix p' of x and prefix q' of y of star length s + 2.
  std::uint64_t window_bound = 0;
};
// Counts g with |g|_* <= s and |x g y|_* <= t. Candidates are sigma^-1 pi^-1 for sigma a suffix
// of x and pi a prefix of y, which covers the whole set when the hypothesis holds.
AcylCount acyl_count(const GroupElement& x, const GroupElement& y, int s, int t, int max_exp);

struct AcylReport {
  int s = 0;
  int t = 0;
  int max_exp = 0;
  std::uint64_t bound = 0;
  std::size_t max_count = 0;
  std::size_t max_untruncated = 0;
  std::uint64_t min_window_bound = 0;
  std::vector<AcylCount> trials{};
  bool pass = true;
};
// Draws `trials` pairs with |x|_* >= s + t + 2 and counts each.
AcylReport acyl_sample(const SimplicialGraph& g, int s, int t, int max_exp, int trials, std::uint64_t seed);

}  // namespace raag
