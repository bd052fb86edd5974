#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pcgroups/graph.hpp"

namespace pcg {

/// One signed occurrence of a generator, identified by vertex index.
struct Letter {
  int vertex = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {vertex, -sign}; }
  bool operator==(const Letter&) const = default;
};

/// Letter order: vertex order first, positive sign before negative.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  return a.sign > b.sign;
}

/// An element of the pc group over its ambient graph, represented as a
/// sequence of signed letters. Immutable. A Word returned by
/// normal_form is geodesic and is the canonical (shortlex-least)
/// representative, so two normal Words are equal as group elements iff
/// their letter sequences are identical.
class Word {
 public:
  Word(std::shared_ptr<const SimplicialGraph> ambient, std::vector<Letter> letters);

  /// Parses whitespace-separated tokens; a token is a vertex name,
  /// optionally suffixed "^-1". The empty string is the empty word.
  static Word parse(std::shared_ptr<const SimplicialGraph> ambient, const std::string& text);

  const SimplicialGraph& graph() const { return *ambient_; }
  const std::shared_ptr<const SimplicialGraph>& ambient() const { return ambient_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  bool normalized() const { return normalized_; }

  /// Token serialisation; the empty word is the empty string.
  std::string str() const;

  bool same_element(const Word& other) const;  // both must be normalized

 private:
  friend Word normal_form(const Word& w);
  std::shared_ptr<const SimplicialGraph> ambient_;
  std::vector<Letter> letters_;
  bool normalized_ = false;
};

/// Throws std::invalid_argument unless both words live over equal
/// ambient graphs (same pointer or structurally equal).
void require_same_ambient(const Word& a, const Word& b);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> ws);
Word power(const Word& w, int k);

/// Canonical geodesic: repeatedly cancels an inverse pair of
/// occurrences of one generator with nothing dependence-ordered between
/// them, then emits the least available minimal occurrence until the
/// dependence order is exhausted. Idempotent.
Word normal_form(const Word& w);

bool is_trivial(const Word& w);
bool equal(const Word& a, const Word& b);

/// Letters occurring in a geodesic of w, as vertex indices in order.
std::vector<int> alphabet_of(const Word& w);
std::vector<std::string> alphabet_names(const Word& w);

/// Generators outside alphabet_of(w) adjacent to every member of it
/// (the generating set of the subgroup disjointly commuting with w).
std::vector<int> disjoint_commuting_indices(const Word& w);
std::vector<std::string> disjoint_commuting_part(const Word& w);

bool commutes(const Word& a, const Word& b);

/// True iff some geodesic of w begins (ends) with the letter.
bool letter_left_divides(const Letter& l, const Word& w);
bool letter_right_divides(const Letter& l, const Word& w);

struct CyclicReduction {
  Word conjugator;  // minimal length
  Word core;        // cyclically reduced, normal form
};

/// Splits w = conjugator * core * conjugator^-1 with |core * core| =
/// 2 |core| and the conjugator as short as possible.
CyclicReduction cyclic_reduction(const Word& w);

/// Membership in the canonical parabolic subgroup generated by s.
bool parabolic_membership(const Word& w, const std::vector<std::string>& s);

}  // namespace pcg
