#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace oracles {

namespace {

// A word state: letters as 4-bit nibbles (vertex << 1 | negative) in
// bits 0..59, length in bits 60..63.
using State = std::uint64_t;

inline State pack(const std::vector<pcg::Letter>& letters) {
  if (letters.size() > 15) throw std::invalid_argument("oracle word longer than 15 letters");
  State s = static_cast<State>(letters.size()) << 60;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].vertex >= 8) throw std::invalid_argument("oracle graph larger than 8 vertices");
    const State nibble =
        (static_cast<State>(letters[i].vertex) << 1) | (letters[i].sign < 0 ? 1u : 0u);
    s |= nibble << (4 * i);
  }
  return s;
}

inline int state_length(State s) { return static_cast<int>(s >> 60); }
inline int nibble_at(State s, int i) { return static_cast<int>((s >> (4 * i)) & 0xf); }

inline State set_length(State s, int len) {
  return (s & ~(State(0xf) << 60)) | (static_cast<State>(len) << 60);
}

State delete_pair(State s, int i) {
  const int len = state_length(s);
  State out = 0;
  int outpos = 0;
  for (int p = 0; p < len; ++p) {
    if (p == i || p == i + 1) continue;
    out |= static_cast<State>(nibble_at(s, p)) << (4 * outpos);
    ++outpos;
  }
  return set_length(out, len - 2);
}

State swap_adjacent(State s, int i) {
  const State a = static_cast<State>(nibble_at(s, i));
  const State b = static_cast<State>(nibble_at(s, i + 1));
  State out = s & ~(State(0xff) << (4 * i));
  out |= (b << (4 * i)) | (a << (4 * (i + 1)));
  return out;
}

}  // namespace

bool trivial(const pcg::SimplicialGraph& g, const std::vector<pcg::Letter>& letters) {
  if (letters.size() % 2 != 0) return false;
  const State start = pack(letters);
  if (state_length(start) == 0) return true;
  std::unordered_set<State> seen{start};
  std::vector<State> stack{start};
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    const int len = state_length(s);
    for (int i = 0; i + 1 < len; ++i) {
      const int x = nibble_at(s, i);
      const int y = nibble_at(s, i + 1);
      const int vx = x >> 1;
      const int vy = y >> 1;
      if (vx == vy && ((x ^ y) & 1)) {
        const State next = delete_pair(s, i);
        if (state_length(next) == 0) return true;
        if (seen.insert(next).second) stack.push_back(next);
      } else if (vx != vy && g.adjacent(vx, vy)) {
        const State next = swap_adjacent(s, i);
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  return false;
}

bool trivial(const pcg::Word& w) { return trivial(w.graph(), w.letters()); }

bool equal(const pcg::Word& a, const pcg::Word& b) {
  return trivial(pcg::concat(a, pcg::inverse(b)));
}

bool commute(const pcg::Word& a, const pcg::Word& b) {
  return trivial(pcg::concat({pcg::inverse(a), pcg::inverse(b), a, b}));
}

std::vector<pcg::Word> minimal_conjugates(const pcg::Word& w) {
  pcg::Word start = pcg::normal_form(w);
  std::map<std::string, pcg::Word> seen;
  seen.emplace(start.str(), start);
  std::queue<pcg::Word> frontier;
  frontier.push(start);
  std::size_t min_length = start.size();
  while (!frontier.empty()) {
    pcg::Word current = frontier.front();
    frontier.pop();
    for (int v = 0; v < static_cast<int>(w.graph().size()); ++v) {
      for (int sign : {1, -1}) {
        pcg::Word l(w.ambient(), {pcg::Letter{v, sign}});
        pcg::Word next = pcg::normal_form(pcg::concat({l, current, pcg::inverse(l)}));
        if (next.size() > current.size()) continue;
        min_length = std::min(min_length, next.size());
        if (seen.emplace(next.str(), next).second) frontier.push(next);
      }
    }
  }
  std::vector<pcg::Word> out;
  for (const auto& [key, word] : seen) {
    if (word.size() == min_length) out.push_back(word);
  }
  return out;
}

bool conjugate(const pcg::Word& a, const pcg::Word& b) {
  auto ma = minimal_conjugates(a);
  auto mb = minimal_conjugates(b);
  std::set<std::string> keys;
  for (const auto& w : ma) keys.insert(w.str());
  for (const auto& w : mb) {
    if (keys.count(w.str())) return true;
  }
  return false;
}

std::pair<std::vector<pcg::Letter>, int> root_of_cyclically_reduced(
    const pcg::SimplicialGraph& g, const std::vector<pcg::Letter>& w) {
  const int length = static_cast<int>(w.size());
  std::vector<int> support;
  for (const auto& l : w) {
    if (std::find(support.begin(), support.end(), l.vertex) == support.end()) {
      support.push_back(l.vertex);
    }
  }
  std::vector<pcg::Letter> alphabet;
  for (int v : support) {
    alphabet.push_back({v, 1});
    alphabet.push_back({v, -1});
  }
  for (int d = 1; d < length; ++d) {
    if (length % d != 0) continue;
    const int m = length / d;
    std::vector<int> odometer(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<pcg::Letter> candidate;
      for (int digit : odometer) candidate.push_back(alphabet[static_cast<std::size_t>(digit)]);
      std::vector<pcg::Letter> repeated;
      for (int i = 0; i < m; ++i) {
        repeated.insert(repeated.end(), candidate.begin(), candidate.end());
      }
      std::vector<pcg::Letter> test = repeated;
      for (auto it = w.rbegin(); it != w.rend(); ++it) test.push_back(it->inverse());
      if (trivial(g, test)) return {candidate, m};
      int pos = d - 1;
      while (pos >= 0 && odometer[static_cast<std::size_t>(pos)] ==
                             static_cast<int>(alphabet.size()) - 1) {
        odometer[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++odometer[static_cast<std::size_t>(pos)];
    }
  }
  return {w, 1};
}

namespace {

const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

pcg::SimplicialGraph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::string> names(kNames, kNames + n);
  std::vector<std::pair<std::string, std::string>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (1ull << bit)) edges.emplace_back(names[i], names[j]);
    }
  }
  return pcg::SimplicialGraph(names, edges);
}

std::uint64_t relabel_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
  auto bit_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - a - 1;
    return idx + (j - i - 1);
  };
  std::uint64_t out = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (1ull << bit)) out |= 1ull << bit_index(perm[i], perm[j]);
    }
  }
  return out;
}

}  // namespace

std::vector<pcg::SimplicialGraph> all_labeled_graphs(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<pcg::SimplicialGraph> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

std::vector<pcg::SimplicialGraph> graphs_up_to_iso(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::uint64_t> canonical;
  std::vector<pcg::SimplicialGraph> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    std::uint64_t best = mask;
    std::vector<int> p = perm;
    do {
      best = std::min(best, relabel_mask(n, mask, p));
    } while (std::next_permutation(p.begin(), p.end()));
    if (canonical.insert(best).second) out.push_back(graph_from_mask(n, best));
  }
  return out;
}

pcg::SimplicialGraph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::string> names(kNames, kNames + n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(names[i], names[j]);
    }
  }
  return pcg::SimplicialGraph(names, edges);
}

std::vector<pcg::Letter> random_letters(std::mt19937_64& rng, const pcg::SimplicialGraph& g,
                                        int length) {
  std::uniform_int_distribution<int> vertex(0, static_cast<int>(g.size()) - 1);
  std::bernoulli_distribution negative(0.5);
  std::vector<pcg::Letter> out;
  for (int i = 0; i < length; ++i) out.push_back({vertex(rng), negative(rng) ? -1 : 1});
  return out;
}

}  // namespace oracles
