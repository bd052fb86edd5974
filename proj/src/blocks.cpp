#include "pcgroups/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace pcg {

namespace {

inline bool dependent_vertices(const SimplicialGraph& g, int x, int y) {
  return x == y || !g.adjacent(x, y);
}

struct LetterLexLess {
  bool operator()(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
  }
};

// The only possible root of length |b|/m: its projection onto every
// dependent pair of generators is forced to be the 1/m prefix of the
// corresponding projection of b. Reassembles those prefixes into a
// word, or reports inconsistency.
std::optional<std::vector<Letter>> root_candidate(const SimplicialGraph& g,
                                                  const std::vector<Letter>& b, int m) {
  std::map<std::pair<int, int>, int> count;  // (vertex, sign) -> occurrences
  std::vector<int> support;
  for (const auto& l : b) {
    ++count[{l.vertex, l.sign}];
    if (std::find(support.begin(), support.end(), l.vertex) == support.end()) {
      support.push_back(l.vertex);
    }
  }
  for (const auto& [key, c] : count) {
    if (c % m != 0) return std::nullopt;
  }
  std::sort(support.begin(), support.end());

  std::map<std::pair<int, int>, std::deque<Letter>> queues;  // dependent pair (x <= y)
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i; j < support.size(); ++j) {
      const int x = support[i];
      const int y = support[j];
      if (!dependent_vertices(g, x, y)) continue;
      std::deque<Letter> projection;
      for (const auto& l : b) {
        if (l.vertex == x || l.vertex == y) projection.push_back(l);
      }
      projection.resize(projection.size() / static_cast<std::size_t>(m));
      queues[{x, y}] = std::move(projection);
    }
  }

  std::map<std::pair<int, int>, int> remaining;
  for (const auto& [key, c] : count) remaining[key] = c / m;

  std::vector<Letter> out;
  const std::size_t target = b.size() / static_cast<std::size_t>(m);
  while (out.size() < target) {
    bool emitted = false;
    for (int x : support) {
      for (int sign : {1, -1}) {
        Letter l{x, sign};
        if (remaining[{x, sign}] == 0) continue;
        bool head_everywhere = true;
        for (int y : support) {
          if (!dependent_vertices(g, x, y)) continue;
          const auto& q = queues[{std::min(x, y), std::max(x, y)}];
          if (q.empty() || !(q.front() == l)) {
            head_everywhere = false;
            break;
          }
        }
        if (!head_everywhere) continue;
        for (int y : support) {
          if (!dependent_vertices(g, x, y)) continue;
          queues[{std::min(x, y), std::max(x, y)}].pop_front();
        }
        --remaining[{x, sign}];
        out.push_back(l);
        emitted = true;
        break;
      }
      if (emitted) break;
    }
    if (!emitted) return std::nullopt;
  }
  return out;
}

// Least root of a cyclically reduced block (normal form input):
// divisor scan over the geodesic length, each candidate reconstructed
// from the pair projections and verified by the word problem.
std::pair<Word, int> block_root(const Word& block) {
  const int length = static_cast<int>(block.size());
  for (int d = 1; d < length; ++d) {
    if (length % d != 0) continue;
    const int m = length / d;
    auto candidate = root_candidate(block.graph(), block.letters(), m);
    if (!candidate) continue;
    Word root(block.ambient(), *candidate);
    if (equal(power(root, m), block)) return {normal_form(root), m};
  }
  return {block, 1};
}

}  // namespace

BlockDecomposition block_decomposition(const Word& w) {
  CyclicReduction cr = cyclic_reduction(w);
  BlockDecomposition out{cr.conjugator, {}};
  if (cr.core.is_empty()) return out;

  const SimplicialGraph& g = w.graph();
  const auto alpha = alphabet_names(cr.core);
  const auto components = connected_components(induced_subgraph(complement(g), alpha));
  for (const auto& component : components) {
    std::vector<bool> in_component(g.size(), false);
    for (const auto& name : component) in_component[g.index_of(name)] = true;
    std::vector<Letter> letters;
    for (const auto& l : cr.core.letters()) {
      if (in_component[l.vertex]) letters.push_back(l);
    }
    Word block = normal_form(Word(w.ambient(), std::move(letters)));
    out.blocks.push_back(block_root(block));
  }
  return out;
}

std::pair<Word, int> least_root(const Word& w) {
  if (is_trivial(w)) throw std::invalid_argument("least_root of the trivial element");
  BlockDecomposition bd = block_decomposition(w);
  int m = 0;
  for (const auto& [root, e] : bd.blocks) m = std::gcd(m, e);
  Word core_root(w.ambient(), {});
  for (const auto& [root, e] : bd.blocks) core_root = concat(core_root, power(root, e / m));
  Word result = normal_form(concat({bd.conjugator, core_root, inverse(bd.conjugator)}));
  return {result, m};
}

CentralizerBasis centralizer_basis(const Word& w) {
  if (is_trivial(w)) throw std::invalid_argument("centralizer_basis of the trivial element");
  CyclicReduction cr = cyclic_reduction(w);
  BlockDecomposition bd = block_decomposition(cr.core);
  CentralizerBasis basis;
  for (const auto& [root, e] : bd.blocks) {
    basis.cyclic_parts.push_back(normal_form(concat({cr.conjugator, root, inverse(cr.conjugator)})));
  }
  for (int v : disjoint_commuting_indices(cr.core)) {
    Word generator(w.ambient(), {Letter{v, 1}});
    basis.abelian_part.push_back(
        normal_form(concat({cr.conjugator, generator, inverse(cr.conjugator)})));
  }
  return basis;
}

Word canonical_cyclic_form(const Word& w) {
  Word core = cyclic_reduction(w).core;
  if (core.is_empty()) return core;
  std::set<std::vector<Letter>, LetterLexLess> seen;
  std::queue<Word> frontier;
  seen.insert(core.letters());
  frontier.push(core);
  const int n = static_cast<int>(w.graph().size());
  while (!frontier.empty()) {
    Word current = frontier.front();
    frontier.pop();
    for (int v = 0; v < n; ++v) {
      for (int sign : {1, -1}) {
        Word l(w.ambient(), {Letter{v, sign}});
        Word next = normal_form(concat({l, current, inverse(l)}));
        if (next.size() != current.size()) continue;
        if (seen.insert(next.letters()).second) frontier.push(next);
      }
    }
  }
  return Word(w.ambient(), *seen.begin());
}

bool is_conjugate(const Word& a, const Word& b) {
  require_same_ambient(a, b);
  auto signature = [](const Word& w) {
    BlockDecomposition bd = block_decomposition(w);
    std::vector<std::pair<int, std::vector<Letter>>> sig;
    for (const auto& [root, e] : bd.blocks) {
      sig.emplace_back(e, canonical_cyclic_form(root).letters());
    }
    std::sort(sig.begin(), sig.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return LetterLexLess{}(x.second, y.second);
    });
    return sig;
  };
  return signature(a) == signature(b);
}

std::optional<std::pair<std::string, int>> is_generator_power_conjugate(const Word& b) {
  if (is_trivial(b)) {
    throw std::invalid_argument("is_generator_power_conjugate of the trivial element");
  }
  Word core = cyclic_reduction(b).core;
  const auto alpha = alphabet_of(core);
  if (alpha.size() != 1) return std::nullopt;
  const int y = alpha.front();
  const int k = core.letters().front().sign * static_cast<int>(core.size());
  Word candidate = power(Word(b.ambient(), {Letter{y, 1}}), k);
  if (!is_conjugate(b, candidate)) return std::nullopt;
  return std::make_pair(b.graph().name(y), k);
}

}  // namespace pcg
