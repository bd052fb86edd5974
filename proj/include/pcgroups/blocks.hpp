#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcgroups/word.hpp"

namespace pcg {

/// Decomposition of an element as conjugator * product of commuting
/// block powers * conjugator^-1. Each root is cyclically reduced, in
/// normal form and not a proper power; its alphabet spans a connected
/// subgraph of the non-commutation graph; block alphabets are pairwise
/// disjoint and fully adjacent across blocks. Blocks are ordered by the
/// least vertex of the root alphabet.
struct BlockDecomposition {
  Word conjugator;
  std::vector<std::pair<Word, int>> blocks;  // (root, exponent >= 1)
};

BlockDecomposition block_decomposition(const Word& w);

/// Least root: the pair (root, m) with root^m = w, m maximal and the
/// root in normal form. Throws std::invalid_argument on trivial input.
std::pair<Word, int> least_root(const Word& w);

/// Generating set of the centraliser of a non-trivial element: the
/// conjugated roots of the blocks of its cyclic core plus the
/// conjugated generators disjointly commuting with the core.
struct CentralizerBasis {
  std::vector<Word> cyclic_parts;
  std::vector<Word> abelian_part;
};

CentralizerBasis centralizer_basis(const Word& w);

/// Shortlex-least member of the set of cyclically reduced conjugates
/// of w, reached through length-preserving single-letter conjugations.
Word canonical_cyclic_form(const Word& w);

/// Conjugacy decision: cyclic cores must carry the same multiset of
/// (exponent, root conjugacy class) blocks.
bool is_conjugate(const Word& a, const Word& b);

/// Least (generator, exponent) with b conjugate to generator^exponent,
/// 1 <= |exponent| <= |b|, ordered by vertex then |exponent| with the
/// positive exponent first; nullopt if b is not such a conjugate.
std::optional<std::pair<std::string, int>> is_generator_power_conjugate(const Word& b);

}  // namespace pcg
