#include "raag/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::atomic<std::uint64_t> next_uid{1};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

SimplicialGraph::SimplicialGraph(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  if (labels_.size() > kMaxVertices) throw Error("graphs are limited to 64 vertices");
  for (const auto& [u, v] : edges) {
    Vertex a = index(u);
    Vertex b = index(v);
    if (a == b) throw Error("loop at vertex '" + u + "'");
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
  }
  validate_and_stamp();
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> labels, std::vector<VertexSet> adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  validate_and_stamp();
}

void SimplicialGraph::validate_and_stamp() {
  if (labels_.size() > kMaxVertices) throw Error("graphs are limited to 64 vertices");
  if (adjacency_.size() != labels_.size()) throw Error("adjacency size mismatch");
  std::map<std::string, int> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("empty vertex label");
    if (!seen.emplace(l, 0).second) throw Error("duplicate vertex '" + l + "'");
  }
  const VertexSet all = vertices();
  for (Vertex v = 0; v < size(); ++v) {
    if (adjacency_[v].contains(v)) throw Error("loop at vertex '" + labels_[v] + "'");
    if (!adjacency_[v].subset_of(all)) throw Error("edge to a missing vertex");
    for (Vertex u : adjacency_[v].members()) {
      if (!adjacency_[u].contains(v)) throw Error("asymmetric adjacency");
    }
  }
  uid_ = next_uid.fetch_add(1);
}

SimplicialGraph SimplicialGraph::parse(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, int, std::less<>> ids;
  std::vector<std::vector<std::string>> listed;  // neighbours as written, per vertex
  std::vector<bool> has_line;
  std::vector<std::pair<std::size_t, std::size_t>> mention_pos;
  std::vector<int> heads;  // vertices in the order of their own lines

  auto intern = [&](const std::string& l, std::size_t line, std::size_t col) {
    auto it = ids.find(l);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(labels.size());
    if (id >= kMaxVertices) throw ParseError(line, col, "more than 64 vertices");
    labels.push_back(l);
    ids.emplace(l, id);
    listed.emplace_back();
    has_line.push_back(false);
    mention_pos.emplace_back(line, col);
    return id;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t colon = line.find(':');
    bool blank = std::all_of(line.begin(), line.end(), is_space);
    if (!blank) {
      if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'vertex: neighbours'");
      std::size_t i = 0;
      while (i < colon && is_space(line[i])) ++i;
      std::size_t j = colon;
      while (j > i && is_space(line[j - 1])) --j;
      if (i == j) throw ParseError(line_no, i + 1, "missing vertex label");
      std::string head(line.substr(i, j - i));
      if (std::any_of(head.begin(), head.end(), is_space)) {
        throw ParseError(line_no, i + 1, "vertex label contains whitespace");
      }
      int v = intern(head, line_no, i + 1);
      if (has_line[v]) throw ParseError(line_no, i + 1, "vertex '" + head + "' listed twice");
      has_line[v] = true;
      heads.push_back(v);
      std::size_t k = colon + 1;
      while (k < line.size()) {
        while (k < line.size() && is_space(line[k])) ++k;
        if (k >= line.size()) break;
        std::size_t start = k;
        while (k < line.size() && !is_space(line[k])) ++k;
        std::string nb(line.substr(start, k - start));
        if (nb.find(':') != std::string::npos) throw ParseError(line_no, start + 1, "unexpected ':'");
        if (nb == head) throw ParseError(line_no, start + 1, "loop at vertex '" + head + "'");
        intern(nb, line_no, start + 1);
        listed[v].push_back(nb);
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }

  std::vector<VertexSet> adjacency(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    for (const auto& nb : listed[v]) adjacency[v].insert(ids.find(nb)->second);
  }
  // Symmetric closure; a vertex with its own line must list every neighbour.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    for (Vertex u : adjacency[v].members()) {
      if (!adjacency[u].contains(static_cast<Vertex>(v))) {
        if (has_line[u]) {
          throw ParseError(mention_pos[u].first, mention_pos[u].second,
                           "asymmetric adjacency: '" + labels[v] + "' lists '" + labels[u] +
                               "' but not conversely");
        }
        adjacency[u].insert(static_cast<Vertex>(v));
      }
    }
  }
  // Vertex order: own lines in file order, then vertices only named as neighbours.
  std::vector<int> order = heads;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!has_line[v]) order.push_back(static_cast<int>(v));
  }
  std::vector<int> rank(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::string> ordered_labels;
  std::vector<VertexSet> ordered_adjacency;
  for (int v : order) {
    ordered_labels.push_back(labels[static_cast<std::size_t>(v)]);
    VertexSet nbrs;
    for (Vertex u : adjacency[static_cast<std::size_t>(v)].members()) nbrs.insert(rank[static_cast<std::size_t>(u)]);
    ordered_adjacency.push_back(nbrs);
  }
  return SimplicialGraph(std::move(ordered_labels), std::move(ordered_adjacency));
}

SimplicialGraph SimplicialGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  }
  return out;
}

}  // namespace

SimplicialGraph SimplicialGraph::cycle(int n) {
  std::vector<VertexSet> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].insert((i + 1) % n).insert((i + n - 1) % n);
  }
  return SimplicialGraph(letter_labels(n), std::move(adj));
}

SimplicialGraph SimplicialGraph::path(int n) {
  std::vector<VertexSet> adj(n);
  for (int i = 0; i + 1 < n; ++i) {
    adj[i].insert(i + 1);
    adj[i + 1].insert(i);
  }
  return SimplicialGraph(letter_labels(n), std::move(adj));
}

SimplicialGraph SimplicialGraph::discrete(int n) {
  return SimplicialGraph(letter_labels(n), std::vector<VertexSet>(n));
}

SimplicialGraph SimplicialGraph::complete(int n) {
  std::vector<VertexSet> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = VertexSet::first(n).erase(i);
  return SimplicialGraph(letter_labels(n), std::move(adj));
}

Vertex SimplicialGraph::index(std::string_view label) const {
  auto v = find(label);
  if (!v) throw UnknownVertex(std::string(label));
  return *v;
}

std::optional<Vertex> SimplicialGraph::find(std::string_view label) const {
  for (Vertex v = 0; v < size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

VertexSet SimplicialGraph::common_link(VertexSet s) const {
  VertexSet out = vertices();
  for (Vertex v : s.members()) out &= adjacency_[v];
  return out - s;
}

int SimplicialGraph::edge_count() const {
  int total = 0;
  for (const auto& a : adjacency_) total += a.size();
  return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimplicialGraph SimplicialGraph::opposite() const {
  std::vector<VertexSet> adj(size());
  for (Vertex v = 0; v < size(); ++v) adj[v] = vertices() - adjacency_[v] - VertexSet::single(v);
  return SimplicialGraph(labels_, std::move(adj));
}

SimplicialGraph SimplicialGraph::induced(VertexSet s) const {
  if (!s.subset_of(vertices())) throw Error("induced: set is not a subset of the vertices");
  auto keep = s.members();
  std::vector<int> pos(size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  std::vector<VertexSet> adj(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(labels_[keep[i]]);
    for (Vertex u : (adjacency_[keep[i]] & s).members()) adj[i].insert(pos[u]);
  }
  return SimplicialGraph(std::move(labels), std::move(adj));
}

std::string SimplicialGraph::to_text() const {
  std::string out;
  for (Vertex v = 0; v < size(); ++v) {
    out += labels_[v] + ":";
    for (Vertex u : adjacency_[v].members()) out += " " + labels_[u];
    out += "\n";
  }
  return out;
}

std::string SimplicialGraph::to_dot(std::string_view name) const {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < size(); ++v) out += "  \"" + labels_[v] + "\";\n";
  for (auto [u, v] : edges()) out += "  \"" + labels_[u] + "\" -- \"" + labels_[v] + "\";\n";
  out += "}\n";
  return out;
}

AdjacencyList adjacency_list(const SimplicialGraph& g) {
  AdjacencyList adj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto m = g.link(v).members();
    adj[v].assign(m.begin(), m.end());
  }
  return adj;
}

std::vector<int> bfs_distances(const AdjacencyList& adj, int source) {
  std::vector<int> dist(adj.size(), kInfinity);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[u]) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int girth(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  int best = kInfinity;
  std::vector<int> dist(n, -1), parent(n, -1);
  std::vector<int> touched;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    for (int t : touched) dist[t] = -1;
    touched.clear();
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    touched.push_back(s);
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (best != kInfinity && 2 * dist[u] + 1 >= best) break;
      for (int w : adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

int girth(const SimplicialGraph& g) { return girth(adjacency_list(g)); }

std::vector<std::vector<int>> components(const AdjacencyList& adj) {
  std::vector<int> comp(adj.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != -1) continue;
    out.emplace_back();
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int w : adj[u]) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const SimplicialGraph& g, VertexSet s) {
  if (s.empty()) return true;
  VertexSet seen = VertexSet::single(s.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier.members()) next |= g.link(v) & s;
    frontier = next - seen;
    seen |= next;
  }
  return seen == s;
}

bool is_connected(const SimplicialGraph& g) { return is_connected(g, g.vertices()); }

bool is_anti_connected(const SimplicialGraph& g) { return is_connected(g.opposite()); }

bool is_triangle_free(const SimplicialGraph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.link(u).intersects(g.link(v))) return false;
  }
  return true;
}

bool is_square_free(const SimplicialGraph& g) {
  // An induced square is a pair of non-adjacent vertices with two non-adjacent common neighbours.
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex w = u + 1; w < g.size(); ++w) {
      if (g.adjacent(u, w)) continue;
      auto common = (g.link(u) & g.link(w)).members();
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const SimplicialGraph& g) {
  return g.size() > 0 && is_connected(g) && g.edge_count() == g.size() - 1;
}

int distance(const SimplicialGraph& g, Vertex u, Vertex v) {
  return bfs_distances(adjacency_list(g), u)[v];
}

int diameter(const SimplicialGraph& g) {
  auto adj = adjacency_list(g);
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (int d : bfs_distances(adj, v)) best = std::max(best, d);
  }
  return best;
}

std::vector<Vertex> shortest_path(const SimplicialGraph& g, Vertex from, Vertex to) {
  auto dist = bfs_distances(adjacency_list(g), to);
  if (dist[from] == kInfinity) throw Error("shortest_path: vertices are not connected");
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.link(cur).members()) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::optional<std::pair<VertexSet, VertexSet>> split_join(const SimplicialGraph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw Error("split_join: set is not a subset of the vertices");
  if (s.size() < 2) return std::nullopt;
  // Component of s.min() in the complement induced on s.
  VertexSet seen = VertexSet::single(s.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier.members()) next |= (s - g.link(v)).erase(v);
    frontier = next - seen;
    seen |= next;
  }
  if (seen == s) return std::nullopt;
  return std::make_pair(seen, s - seen);
}

std::vector<VertexSet> cliques(const SimplicialGraph& g) {
  std::vector<VertexSet> out;
  // Extend each clique only by vertices larger than its maximum, so each is produced once.
  std::vector<VertexSet> stack;
  for (Vertex v = g.size() - 1; v >= 0; --v) stack.push_back(VertexSet::single(v));
  while (!stack.empty()) {
    VertexSet c = stack.back();
    stack.pop_back();
    out.push_back(c);
    Vertex top = 63 - std::countl_zero(c.bits());
    auto ext = (g.common_link(c) - VertexSet::first(top + 1)).members();
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) stack.push_back(VertexSet(c).insert(*it));
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

SimplicialGraph clique_graph(const SimplicialGraph& g, int cap) {
  if (g.size() > cap) {
    throw BudgetExceeded("clique graph: " + std::to_string(g.size()) + " vertices exceeds cap " +
                         std::to_string(cap));
  }
  auto cs = cliques(g);
  if (cs.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw BudgetExceeded("clique graph: " + std::to_string(cs.size()) + " cliques exceed 64");
  }
  std::vector<std::string> labels;
  for (VertexSet c : cs) {
    std::string l;
    for (Vertex v : c.members()) l += g.label(v);
    labels.push_back(l);
  }
  std::vector<VertexSet> adj(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      VertexSet u = cs[i] | cs[j];
      bool clique = true;
      for (Vertex v : u.members()) clique = clique && (u - g.star(v)).empty();
      if (clique) {
        adj[i].insert(static_cast<Vertex>(j));
        adj[j].insert(static_cast<Vertex>(i));
      }
    }
  }
  return SimplicialGraph(std::move(labels), std::move(adj));
}

std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b) {
  const int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<Vertex> image(n, -1);
  VertexSet used;
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (Vertex c = 0; c < n; ++c) {
      if (used.contains(c) || a.degree(i) != b.degree(c)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(c, image[j]);
      if (!ok) continue;
      image[i] = c;
      used.insert(c);
      if (self(self, i + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

std::string format_set(const SimplicialGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace raag
