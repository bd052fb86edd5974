#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pcgroups/deciders.hpp"
#include "pcgroups/graph.hpp"

namespace pcg {

enum class EqOutcome { Equivalent, NotEquivalent, Inconclusive };

/// Universal-equivalence answer. Conclusive outcomes are produced only
/// under a covered class condition; when the two directional ball
/// searches ran, their verdicts are attached as detail (delta into the
/// inflated gamma first, then gamma into the inflated delta).
struct EqVerdict {
  EqOutcome outcome = EqOutcome::Inconclusive;
  std::string reason;
  std::optional<std::array<Verdict, 2>> detail;
};

/// Graph-level form of the sentence "any three non-trivial pairwise
/// commuting elements include two with equal centralisers": holds iff
/// the deflation of g is triangle-free.
bool deflation_triangle_sentence_holds(const SimplicialGraph& g);

struct UnivEqOptions {
  std::optional<long> cap;
  Budget budget;
  PathConvention convention = PathConvention::Edges;
};

/// Dispatch order: atomic pairs are settled by isomorphism; targets
/// with triangle-free deflation first separate by the deflation
/// sentence, then run the two ball searches of the mutual-embedding
/// characterisation (delta into the |V(delta)|-inflation of gamma and
/// vice versa); triangle-built targets run the same searches. Anything
/// else is Inconclusive.
EqVerdict decide_universal_equivalence(const SimplicialGraph& delta,
                                       const SimplicialGraph& gamma,
                                       const UnivEqOptions& options = {});

/// Copy index (1-based) per inflated vertex, mapped to a non-zero
/// exponent.
using ExponentAssignment = std::map<std::pair<std::string, int>, int>;

/// Retraction of the m-inflation of d onto d sending copy v#j to
/// v^exponents[(v,j)]. A homomorphism by construction (copies share
/// stars); suitable exponent choices separate any fixed finite set of
/// non-trivial elements.
GeneratorMap discriminating_retraction(const SimplicialGraph& d, int m,
                                       const ExponentAssignment& exponents);

}  // namespace pcg
