#include "pcgroups/universal.hpp"

#include <stdexcept>

namespace pcg {

bool deflation_triangle_sentence_holds(const SimplicialGraph& g) {
  return is_triangle_free(deflation(g));
}

namespace {

EqVerdict from_searches(Verdict first, Verdict second, std::string reason) {
  EqVerdict v;
  v.reason = std::move(reason);
  if (first.outcome == Outcome::Yes && second.outcome == Outcome::Yes) {
    v.outcome = EqOutcome::Equivalent;
  } else if (first.outcome == Outcome::No || second.outcome == Outcome::No) {
    v.outcome = EqOutcome::NotEquivalent;
  } else {
    v.outcome = EqOutcome::Inconclusive;
  }
  v.detail = {std::move(first), std::move(second)};
  return v;
}

}  // namespace

EqVerdict decide_universal_equivalence(const SimplicialGraph& delta,
                                       const SimplicialGraph& gamma,
                                       const UnivEqOptions& options) {
  if (delta.empty() || gamma.empty()) {
    throw std::invalid_argument("decide_universal_equivalence requires non-empty graphs");
  }

  if (is_atomic(delta) && is_atomic(gamma)) {
    EqVerdict v;
    v.outcome = is_isomorphic(delta, gamma) ? EqOutcome::Equivalent : EqOutcome::NotEquivalent;
    v.reason = "atomic-rigidity";
    return v;
  }

  DecideOptions search;
  search.cap = options.cap;
  search.budget = options.budget;
  auto both_directions = [&](std::string reason) {
    Verdict into_gamma = decide_ege(delta, inflation(gamma, static_cast<int>(delta.size())), search);
    Verdict into_delta = decide_ege(gamma, inflation(delta, static_cast<int>(gamma.size())), search);
    return from_searches(std::move(into_gamma), std::move(into_delta), std::move(reason));
  };

  if (deflation_triangle_sentence_holds(gamma)) {
    if (!deflation_triangle_sentence_holds(delta)) {
      // gamma satisfies the deflation sentence and delta does not, so a
      // universal sentence separates the two groups.
      EqVerdict v;
      v.outcome = EqOutcome::NotEquivalent;
      v.reason = "deflation-sentence-separation";
      return v;
    }
    return both_directions(is_triangle_free(gamma) ? "triangle-free-target"
                                                   : "deflation-triangle-free-target");
  }
  if (is_triangle_built(gamma, options.convention)) {
    return both_directions("triangle-built-target");
  }

  EqVerdict v;
  v.outcome = EqOutcome::Inconclusive;
  v.reason = "no-covered-class";
  return v;
}

GeneratorMap discriminating_retraction(const SimplicialGraph& d, int m,
                                       const ExponentAssignment& exponents) {
  if (m < 1) throw std::invalid_argument("discriminating_retraction requires m >= 1");
  auto inflated = std::make_shared<const SimplicialGraph>(inflation(d, m));
  auto target = std::make_shared<const SimplicialGraph>(d);
  GeneratorMap map{inflated, target, {}};
  for (const auto& base : d.vertex_names()) {
    for (int copy = 1; copy <= m; ++copy) {
      auto it = exponents.find({base, copy});
      if (it == exponents.end()) {
        throw std::invalid_argument("missing exponent for " + base + "#" + std::to_string(copy));
      }
      if (it->second == 0) {
        throw std::invalid_argument("zero exponent for " + base + "#" + std::to_string(copy));
      }
      map.images.push_back(normal_form(power(Word::parse(target, base), it->second)));
    }
  }
  return map;
}

}  // namespace pcg
