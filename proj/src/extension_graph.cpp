#include "pcgroups/extension_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pcg {

BudgetExceeded::BudgetExceeded(int radius_reached_, std::size_t vertices_,
                               std::size_t conjugates_)
    : std::runtime_error("extension graph budget exceeded at radius " +
                         std::to_string(radius_reached_) + " (" +
                         std::to_string(vertices_) + " vertices, " +
                         std::to_string(conjugates_) + " conjugates)"),
      radius_reached(radius_reached_),
      vertices(vertices_),
      conjugates(conjugates_) {}

namespace {

bool shortlex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

}  // namespace

ExtVertex canonical_vertex(std::shared_ptr<const SimplicialGraph> g,
                           const std::string& base, const Word& v) {
  const int base_idx = g->index_of(base);
  std::vector<bool> in_star(g->size(), false);
  in_star[base_idx] = true;
  for (int u : g->neighbors(base_idx)) in_star[u] = true;

  Word conjugator = normal_form(v);
  bool stripped = true;
  while (stripped && !conjugator.is_empty()) {
    stripped = false;
    for (int u = 0; u < static_cast<int>(g->size()) && !stripped; ++u) {
      if (!in_star[u]) continue;
      for (int sign : {1, -1}) {
        Letter l{u, sign};
        if (!letter_right_divides(l, conjugator)) continue;
        conjugator = normal_form(concat(conjugator, Word(g, {l.inverse()})));
        stripped = true;
        break;
      }
    }
  }
  Word base_word(g, {Letter{base_idx, 1}});
  Word element = normal_form(concat({conjugator, base_word, inverse(conjugator)}));
  return ExtVertex{base, std::move(element), std::move(conjugator)};
}

namespace {

SimplicialGraph ball_graph(const std::vector<ExtVertex>& table,
                           const std::vector<std::pair<int, int>>& edge_list) {
  std::vector<std::string> names;
  names.reserve(table.size());
  for (const auto& v : table) names.push_back(v.element.str());
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) edges.emplace_back(names[u], names[v]);
  return SimplicialGraph(names, edges);
}

}  // namespace

Ball ball(std::shared_ptr<const SimplicialGraph> g, int radius, const Budget& budget) {
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  Ball b;
  b.source = g;
  b.radius = 0;
  const int n = static_cast<int>(g->size());
  for (int y = 0; y < n; ++y) {
    Word element = normal_form(Word(g, {Letter{y, 1}}));
    b.table.push_back(ExtVertex{g->name(y), element, Word(g, {})});
    b.frontier.push_back(y);
  }
  b.conjugates_enumerated = b.table.size();
  if (b.table.size() > budget.max_vertices) {
    throw BudgetExceeded(-1, b.table.size(), b.conjugates_enumerated);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (commutes(b.table[u].element, b.table[v].element)) edges.emplace_back(u, v);
    }
  }
  b.graph = ball_graph(b.table, edges);
  while (b.radius < radius) b = grow(b, budget);
  return b;
}

Ball grow(const Ball& b, const Budget& budget) {
  const auto& g = b.source;
  const int n = static_cast<int>(g->size());

  std::map<std::string, ExtVertex> fresh;  // element string -> best candidate
  std::map<std::string, int> known;
  for (std::size_t i = 0; i < b.table.size(); ++i) known[b.table[i].element.str()] = static_cast<int>(i);

  std::size_t enumerated = b.conjugates_enumerated;
  for (int idx : b.frontier) {
    const ExtVertex& vertex = b.table[static_cast<std::size_t>(idx)];
    for (int v = 0; v < n; ++v) {
      for (int sign : {1, -1}) {
        if (++enumerated > budget.max_conjugates) {
          throw BudgetExceeded(b.radius, b.table.size(), enumerated);
        }
        Word l(g, {Letter{v, sign}});
        Word conjugator = normal_form(concat(l, vertex.conjugator));
        // A shorter conjugator means this element already lives in an
        // earlier layer.
        if (conjugator.size() != static_cast<std::size_t>(b.radius) + 1) continue;
        Word element = normal_form(concat({l, vertex.element, inverse(l)}));
        std::string key = element.str();
        if (known.count(key)) continue;
        auto it = fresh.find(key);
        if (it == fresh.end()) {
          fresh.emplace(key, ExtVertex{vertex.base, std::move(element), std::move(conjugator)});
        } else if (shortlex_less(conjugator.letters(), it->second.conjugator.letters())) {
          it->second.conjugator = std::move(conjugator);
        }
      }
    }
  }

  std::vector<ExtVertex> layer;
  layer.reserve(fresh.size());
  for (auto& [key, vertex] : fresh) layer.push_back(std::move(vertex));
  std::sort(layer.begin(), layer.end(), [&](const ExtVertex& a, const ExtVertex& c) {
    const int ba = g->index_of(a.base);
    const int bc = g->index_of(c.base);
    if (ba != bc) return ba < bc;
    return shortlex_less(a.conjugator.letters(), c.conjugator.letters());
  });

  Ball next;
  next.source = g;
  next.radius = b.radius + 1;
  next.table = b.table;
  next.conjugates_enumerated = enumerated;
  const int old_size = static_cast<int>(b.table.size());
  for (auto& vertex : layer) {
    next.frontier.push_back(static_cast<int>(next.table.size()));
    next.table.push_back(std::move(vertex));
  }
  if (next.table.size() > budget.max_vertices) {
    throw BudgetExceeded(b.radius, next.table.size(), enumerated);
  }

  std::vector<std::pair<int, int>> edges = b.graph.edges();
  for (int u = old_size; u < static_cast<int>(next.table.size()); ++u) {
    for (int v = 0; v < u; ++v) {
      if (commutes(next.table[u].element, next.table[v].element)) edges.emplace_back(v, u);
    }
  }
  next.graph = ball_graph(next.table, edges);
  return next;
}

bool stabilized(const Ball& before, const Ball& after) {
  return before.table.size() == after.table.size();
}

BigInt theoretical_radius(const SimplicialGraph& delta, const SimplicialGraph& gamma) {
  if (delta.empty() || gamma.empty()) {
    throw std::invalid_argument("theoretical_radius requires non-empty graphs");
  }
  const BigInt k = connected_component_indices(delta).size();
  const BigInt n = delta.size();
  const BigInt m = gamma.size();
  if (k == 1) return n * n * m;
  BigInt power = 1;
  for (BigInt i = 0; i < k + 1; ++i) power *= m;
  return 4 * k * n * n * power;
}

}  // namespace pcg
