#include "pcgroups/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcg {

namespace {

// Occurrences depend on each other when their generators are equal or
// do not commute; independent (commuting) occurrences may be swapped.
inline bool dependent(const SimplicialGraph& g, const Letter& a, const Letter& b) {
  return a.vertex == b.vertex || !g.adjacent(a.vertex, b.vertex);
}

}  // namespace

Word::Word(std::shared_ptr<const SimplicialGraph> ambient, std::vector<Letter> letters)
    : ambient_(std::move(ambient)), letters_(std::move(letters)) {
  if (!ambient_) throw std::invalid_argument("word requires an ambient graph");
  const int n = static_cast<int>(ambient_->size());
  for (const auto& l : letters_) {
    if (l.vertex < 0 || l.vertex >= n) {
      throw std::invalid_argument("letter references a vertex outside the ambient graph");
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

Word Word::parse(std::shared_ptr<const SimplicialGraph> ambient, const std::string& text) {
  if (!ambient) throw std::invalid_argument("word requires an ambient graph");
  std::vector<Letter> letters;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    int sign = 1;
    std::string name = token;
    if (token.size() > 3 && token.compare(token.size() - 3, 3, "^-1") == 0 &&
        ambient->find_vertex(token.substr(0, token.size() - 3))) {
      name = token.substr(0, token.size() - 3);
      sign = -1;
    }
    auto idx = ambient->find_vertex(name);
    if (!idx) throw std::invalid_argument("unknown generator in word: " + token);
    letters.push_back({*idx, sign});
  }
  return Word(std::move(ambient), std::move(letters));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += ambient_->name(letters_[i].vertex);
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

bool Word::same_element(const Word& other) const {
  return normalized_ && other.normalized_ && letters_ == other.letters_;
}

void require_same_ambient(const Word& a, const Word& b) {
  if (a.ambient() == b.ambient()) return;
  if (*a.ambient() == *b.ambient()) return;
  throw std::invalid_argument("words live over different ambient graphs");
}

Word inverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (auto& l : letters) l.sign = -l.sign;
  return Word(w.ambient(), std::move(letters));
}

Word concat(const Word& a, const Word& b) {
  require_same_ambient(a, b);
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.ambient(), std::move(letters));
}

Word concat(std::initializer_list<Word> ws) {
  if (ws.size() == 0) throw std::invalid_argument("concat needs at least one word");
  auto it = ws.begin();
  Word out = *it;
  for (++it; it != ws.end(); ++it) out = concat(out, *it);
  return out;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  std::vector<Letter> letters;
  for (int i = 0; i < std::abs(k); ++i) {
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  }
  return Word(w.ambient(), std::move(letters));
}

namespace {

// Strict reachability over the dependence order of the occurrences:
// reach[i][j] (i < j by position) says occurrence i must stay before j.
std::vector<std::vector<uint8_t>> dependence_reach(const SimplicialGraph& g,
                                                   const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<uint8_t>> reach(n, std::vector<uint8_t>(n, 0));
  for (int i = n - 1; i >= 0; --i) {
    auto& row = reach[i];
    for (int j = i + 1; j < n; ++j) {
      if (!dependent(g, w[i], w[j]) || row[j]) continue;
      row[j] = 1;
      const auto& next = reach[j];
      for (int k = j + 1; k < n; ++k) row[k] |= next[k];
    }
  }
  return reach;
}

// One cancellable inverse pair: same generator, opposite signs, nothing
// dependence-ordered strictly between the two occurrences.
bool find_cancellation(const SimplicialGraph& g, const std::vector<Letter>& w,
                       int* out_i, int* out_j) {
  const auto reach = dependence_reach(g, w);
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i].vertex != w[j].vertex || w[i].sign == w[j].sign) continue;
      bool blocked = false;
      for (int l = i + 1; l < j && !blocked; ++l) {
        if (reach[i][l] && reach[l][j]) blocked = true;
      }
      if (!blocked) {
        *out_i = i;
        *out_j = j;
        return true;
      }
    }
  }
  return false;
}

// Canonical linearization of a geodesic: repeatedly emit the least
// minimal occurrence of the dependence order.
std::vector<Letter> canonical_linearization(const SimplicialGraph& g,
                                            std::vector<Letter> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> successors(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dependent(g, w[i], w[j])) {
        successors[i].push_back(j);
        ++indegree[j];
      }
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  std::vector<bool> emitted(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (emitted[i] || indegree[i] != 0) continue;
      if (best == -1 || letter_less(w[i], w[best])) best = i;
    }
    emitted[best] = true;
    indegree[best] = -1;
    for (int j : successors[best]) --indegree[j];
    out.push_back(w[best]);
  }
  return out;
}

}  // namespace

Word normal_form(const Word& w) {
  if (w.normalized()) return w;
  const SimplicialGraph& g = w.graph();
  std::vector<Letter> letters = w.letters();
  int i = 0;
  int j = 0;
  while (find_cancellation(g, letters, &i, &j)) {
    letters.erase(letters.begin() + j);
    letters.erase(letters.begin() + i);
  }
  letters = canonical_linearization(g, std::move(letters));
  Word out(w.ambient(), std::move(letters));
  out.normalized_ = true;
  return out;
}

bool is_trivial(const Word& w) { return normal_form(w).is_empty(); }

bool equal(const Word& a, const Word& b) {
  require_same_ambient(a, b);
  if (a.normalized() && b.normalized()) return a.letters() == b.letters();
  return is_trivial(concat(a, inverse(b)));
}

std::vector<int> alphabet_of(const Word& w) {
  Word nf = normal_form(w);
  std::vector<bool> present(w.graph().size(), false);
  for (const auto& l : nf.letters()) present[l.vertex] = true;
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(present.size()); ++v) {
    if (present[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::string> alphabet_names(const Word& w) {
  std::vector<std::string> out;
  for (int v : alphabet_of(w)) out.push_back(w.graph().name(v));
  return out;
}

std::vector<int> disjoint_commuting_indices(const Word& w) {
  const SimplicialGraph& g = w.graph();
  const auto alpha = alphabet_of(w);
  std::vector<bool> in_alpha(g.size(), false);
  for (int v : alpha) in_alpha[v] = true;
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (in_alpha[v]) continue;
    bool commutes_with_all = true;
    for (int a : alpha) {
      if (!g.adjacent(v, a)) {
        commutes_with_all = false;
        break;
      }
    }
    if (commutes_with_all) out.push_back(v);
  }
  return out;
}

std::vector<std::string> disjoint_commuting_part(const Word& w) {
  std::vector<std::string> out;
  for (int v : disjoint_commuting_indices(w)) out.push_back(w.graph().name(v));
  return out;
}

bool commutes(const Word& a, const Word& b) {
  require_same_ambient(a, b);
  return is_trivial(concat({inverse(a), inverse(b), a, b}));
}

bool letter_left_divides(const Letter& l, const Word& w) {
  Word nf = normal_form(w);
  const SimplicialGraph& g = w.graph();
  for (std::size_t p = 0; p < nf.letters().size(); ++p) {
    const Letter& cur = nf.letters()[p];
    if (dependent(g, cur, l)) return cur == l;
  }
  return false;
}

bool letter_right_divides(const Letter& l, const Word& w) {
  Word nf = normal_form(w);
  const SimplicialGraph& g = w.graph();
  for (std::size_t p = nf.letters().size(); p-- > 0;) {
    const Letter& cur = nf.letters()[p];
    if (dependent(g, cur, l)) return cur == l;
  }
  return false;
}

CyclicReduction cyclic_reduction(const Word& w) {
  Word core = normal_form(w);
  std::vector<Letter> conjugator;
  bool stripped = true;
  while (stripped && core.size() >= 2) {
    stripped = false;
    for (int v = 0; v < static_cast<int>(w.graph().size()) && !stripped; ++v) {
      for (int sign : {1, -1}) {
        Letter l{v, sign};
        if (!letter_left_divides(l, core) || !letter_right_divides(l.inverse(), core)) continue;
        Word candidate = normal_form(concat({Word(w.ambient(), {l.inverse()}), core,
                                             Word(w.ambient(), {l})}));
        if (candidate.size() + 2 == core.size()) {
          conjugator.push_back(l);
          core = candidate;
          stripped = true;
          break;
        }
      }
    }
  }
  return {Word(w.ambient(), std::move(conjugator)), core};
}

bool parabolic_membership(const Word& w, const std::vector<std::string>& s) {
  std::vector<bool> allowed(w.graph().size(), false);
  for (const auto& name : s) allowed[w.graph().index_of(name)] = true;
  for (int v : alphabet_of(w)) {
    if (!allowed[v]) return false;
  }
  return true;
}

}  // namespace pcg
