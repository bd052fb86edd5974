#include "pcgroups/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace pcg {

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index.emplace(names_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate vertex name: " + names_[i]);
    }
  }
  const std::size_t n = names_.size();
  matrix_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw std::invalid_argument("unknown edge endpoint: " + a);
    if (ib == index.end()) throw std::invalid_argument("unknown edge endpoint: " + b);
    const int u = ia->second;
    const int v = ib->second;
    if (u == v) throw std::invalid_argument("self-loop at vertex: " + a);
    if (matrix_[u][v]) throw std::invalid_argument("duplicate edge: " + a + " -- " + b);
    matrix_[u][v] = matrix_[v][u] = true;
  }
  adj_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (matrix_[u][v]) adj_[u].push_back(static_cast<int>(v));
    }
  }
}

int SimplicialGraph::index_of(const std::string& vertex) const {
  auto idx = find_vertex(vertex);
  if (!idx) throw std::invalid_argument("unknown vertex: " + vertex);
  return *idx;
}

std::optional<int> SimplicialGraph::find_vertex(const std::string& vertex) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == vertex) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::size_t SimplicialGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  return total / 2;
}

std::vector<std::pair<int, int>> SimplicialGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimplicialGraph::operator==(const SimplicialGraph& other) const {
  return names_ == other.names_ && matrix_ == other.matrix_;
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<std::string>& s) {
  std::vector<int> picked;
  picked.reserve(s.size());
  for (const auto& name : s) picked.push_back(g.index_of(name));
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());

  std::vector<std::string> names;
  for (int v : picked) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      if (g.adjacent(picked[i], picked[j])) edges.emplace_back(names[i], names[j]);
    }
  }
  return SimplicialGraph(names, edges);
}

SimplicialGraph complement(const SimplicialGraph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  const int n = static_cast<int>(g.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(g.name(u), g.name(v));
    }
  }
  return SimplicialGraph(g.vertex_names(), edges);
}

std::vector<std::string> star(const SimplicialGraph& g, const std::string& v) {
  const int idx = g.index_of(v);
  std::vector<int> members = g.neighbors(idx);
  members.push_back(idx);
  std::sort(members.begin(), members.end());
  std::vector<std::string> out;
  for (int m : members) out.push_back(g.name(m));
  return out;
}

std::vector<std::vector<int>> connected_component_indices(const SimplicialGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    const int id = static_cast<int>(components.size());
    std::queue<int> queue;
    queue.push(start);
    comp[start] = id;
    std::vector<int> members;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      members.push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = id;
          queue.push(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

std::vector<std::vector<std::string>> connected_components(const SimplicialGraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : connected_component_indices(g)) {
    std::vector<std::string> names;
    for (int v : comp) names.push_back(g.name(v));
    out.push_back(std::move(names));
  }
  return out;
}

SimplicialGraph deflation(const SimplicialGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> closed_star_rep(n, -1);  // least vertex with the same closed star
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    std::vector<bool> star_v(n, false);
    for (int u : g.neighbors(v)) star_v[u] = true;
    star_v[v] = true;
    for (int r : reps) {
      std::vector<bool> star_r(n, false);
      for (int u : g.neighbors(r)) star_r[u] = true;
      star_r[r] = true;
      if (star_r == star_v) {
        closed_star_rep[v] = r;
        break;
      }
    }
    if (closed_star_rep[v] == -1) {
      closed_star_rep[v] = v;
      reps.push_back(v);
    }
  }
  std::vector<std::string> names;
  for (int r : reps) names.push_back(g.name(r));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (g.adjacent(reps[i], reps[j])) edges.emplace_back(names[i], names[j]);
    }
  }
  return SimplicialGraph(names, edges);
}

SimplicialGraph inflation(const SimplicialGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("inflation requires n >= 1");
  std::vector<std::string> names;
  for (const auto& v : g.vertex_names()) {
    for (int i = 1; i <= n; ++i) names.push_back(v + "#" + std::to_string(i));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  const int base = static_cast<int>(g.size());
  for (int v = 0; v < base; ++v) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        edges.emplace_back(names[v * n + i - 1], names[v * n + j - 1]);
      }
    }
    for (int w = v + 1; w < base; ++w) {
      if (!g.adjacent(v, w)) continue;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          edges.emplace_back(names[v * n + i], names[w * n + j]);
        }
      }
    }
  }
  return SimplicialGraph(names, edges);
}

SimplicialGraph graph_substitution(const SimplicialGraph& base,
                                   const std::vector<SimplicialGraph>& parts) {
  if (parts.size() != base.size()) {
    throw std::invalid_argument("graph_substitution needs one part per base vertex");
  }
  std::vector<std::string> names;
  std::vector<std::size_t> offset(parts.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = names.size();
    for (const auto& v : parts[i].vertex_names()) {
      names.push_back(base.name(static_cast<int>(i)) + "." + v);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges()) {
      edges.emplace_back(names[offset[i] + u], names[offset[i] + v]);
    }
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!base.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      for (std::size_t u = 0; u < parts[i].size(); ++u) {
        for (std::size_t v = 0; v < parts[j].size(); ++v) {
          edges.emplace_back(names[offset[i] + u], names[offset[j] + v]);
        }
      }
    }
  }
  return SimplicialGraph(names, edges);
}

bool is_connected(const SimplicialGraph& g) {
  return connected_component_indices(g).size() <= 1;
}

bool is_clique(const SimplicialGraph& g) {
  const int n = static_cast<int>(g.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_join(const SimplicialGraph& g) {
  return connected_component_indices(complement(g)).size() >= 2;
}

bool is_forest(const SimplicialGraph& g) {
  return g.edge_count() + connected_component_indices(g).size() == g.size();
}

bool is_triangle_free(const SimplicialGraph& g) {
  const int n = static_cast<int>(g.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (g.adjacent(u, w) && g.adjacent(v, w)) return false;
      }
    }
  }
  return true;
}

bool is_complement_of_forest(const SimplicialGraph& g) { return is_forest(complement(g)); }

namespace {

SimplicialGraph path_graph(int vertices) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < vertices; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(names[i], names[i + 1]);
  return SimplicialGraph(names, edges);
}

SimplicialGraph cycle_graph(int vertices) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < vertices; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i < vertices; ++i) edges.emplace_back(names[i], names[(i + 1) % vertices]);
  return SimplicialGraph(names, edges);
}

bool contains_induced(const SimplicialGraph& pattern, const SimplicialGraph& host) {
  return find_induced_embedding(pattern, host).has_value();
}

}  // namespace

bool is_triangle_built(const SimplicialGraph& g, PathConvention convention) {
  if (contains_induced(cycle_graph(4), g)) return false;
  const int path_vertices = convention == PathConvention::Edges ? 4 : 3;
  return !contains_induced(path_graph(path_vertices), g);
}

bool is_weakly_chordal(const SimplicialGraph& g) {
  return is_triangle_free(g) && !contains_induced(path_graph(5), g);
}

std::optional<int> girth(const SimplicialGraph& g) {
  // Shortest cycle through each edge: drop the edge, measure the
  // remaining distance between its endpoints.
  const int n = static_cast<int>(g.size());
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      std::vector<int> dist(n, -1);
      std::queue<int> queue;
      dist[u] = 0;
      queue.push(u);
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (int y : g.neighbors(x)) {
          if (x == u && y == v) continue;
          if (x == v && y == u) continue;
          if (dist[y] == -1) {
            dist[y] = dist[x] + 1;
            queue.push(y);
          }
        }
      }
      if (dist[v] != -1) {
        int cycle = dist[v] + 1;
        if (!best || cycle < *best) best = cycle;
      }
    }
  }
  return best;
}

bool is_atomic(const SimplicialGraph& g) {
  if (g.empty() || !is_connected(g)) return false;
  const int n = static_cast<int>(g.size());
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  if (auto cycle = girth(g); cycle && *cycle < 5) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<std::string> rest;
    for (int u = 0; u < n; ++u) {
      if (u != v && !g.adjacent(u, v)) rest.push_back(g.name(u));
    }
    if (rest.size() <= 1) continue;
    if (!is_connected(induced_subgraph(g, rest))) return false;
  }
  return true;
}

namespace {

bool extend_clique(const SimplicialGraph& g, std::vector<int>& clique, int from, int target) {
  if (static_cast<int>(clique.size()) == target) return true;
  for (int v = from; v < static_cast<int>(g.size()); ++v) {
    bool ok = true;
    for (int u : clique) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    clique.push_back(v);
    if (extend_clique(g, clique, v + 1, target)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

int max_clique_size(const SimplicialGraph& g) {
  int best = 0;
  for (int target = 1; target <= static_cast<int>(g.size()); ++target) {
    std::vector<int> clique;
    if (!extend_clique(g, clique, 0, target)) break;
    best = target;
  }
  return best;
}

GraphClassification classify(const SimplicialGraph& g, PathConvention convention) {
  GraphClassification c;
  c.connected = is_connected(g);
  c.clique = is_clique(g);
  c.join = is_join(g);
  c.forest = is_forest(g);
  c.complement_of_forest = is_complement_of_forest(g);
  c.triangle_free = is_triangle_free(g);
  c.triangle_built = is_triangle_built(g, convention);
  c.weakly_chordal = is_weakly_chordal(g);
  c.atomic = is_atomic(g);
  return c;
}

namespace {

bool embed_from(const SimplicialGraph& pattern, const SimplicialGraph& host,
                std::vector<int>& image, std::vector<bool>& used) {
  const int next = static_cast<int>(image.size());
  if (next == static_cast<int>(pattern.size())) return true;
  for (int h = 0; h < static_cast<int>(host.size()); ++h) {
    if (used[h]) continue;
    if (host.degree(h) < pattern.degree(next)) continue;
    bool consistent = true;
    for (int q = 0; q < next; ++q) {
      if (pattern.adjacent(q, next) != host.adjacent(image[q], h)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    image.push_back(h);
    used[h] = true;
    if (embed_from(pattern, host, image, used)) return true;
    used[h] = false;
    image.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexMap> find_induced_embedding(const SimplicialGraph& pattern,
                                                const SimplicialGraph& host) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::vector<int> image;
  std::vector<bool> used(host.size(), false);
  if (embed_from(pattern, host, image, used)) return image;
  return std::nullopt;
}

namespace {

bool brute_force_from(const SimplicialGraph& pattern, const SimplicialGraph& host,
                      std::vector<int>& image, std::vector<bool>& used) {
  const int next = static_cast<int>(image.size());
  if (next == static_cast<int>(pattern.size())) {
    for (int i = 0; i < next; ++i) {
      for (int j = i + 1; j < next; ++j) {
        if (pattern.adjacent(i, j) != host.adjacent(image[i], image[j])) return false;
      }
    }
    return true;
  }
  for (int h = 0; h < static_cast<int>(host.size()); ++h) {
    if (used[h]) continue;
    image.push_back(h);
    used[h] = true;
    if (brute_force_from(pattern, host, image, used)) return true;
    used[h] = false;
    image.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexMap> brute_force_induced_embedding(const SimplicialGraph& pattern,
                                                       const SimplicialGraph& host) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::vector<int> image;
  std::vector<bool> used(host.size(), false);
  if (brute_force_from(pattern, host, image, used)) return image;
  return std::nullopt;
}

bool is_isomorphic(const SimplicialGraph& g1, const SimplicialGraph& g2) {
  if (g1.size() != g2.size()) return false;
  return find_induced_embedding(g1, g2).has_value() &&
         find_induced_embedding(g2, g1).has_value();
}

}  // namespace pcg
