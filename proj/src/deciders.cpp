#include "pcgroups/deciders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pcgroups/blocks.hpp"

namespace pcg {

namespace {

std::shared_ptr<const SimplicialGraph> share(const SimplicialGraph& g) {
  return std::make_shared<const SimplicialGraph>(g);
}

std::vector<WitnessEntry> witness_from_map(const SimplicialGraph& delta, const Ball& b,
                                           const VertexMap& map) {
  std::vector<WitnessEntry> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    out.push_back({delta.name(static_cast<int>(i)), b.table[static_cast<std::size_t>(map[i])]});
  }
  return out;
}

Verdict yes_verdict(std::string reason, std::vector<WitnessEntry> witness) {
  Verdict v;
  v.outcome = Outcome::Yes;
  v.reason = std::move(reason);
  v.witness = std::move(witness);
  return v;
}

Verdict no_verdict(std::string reason) {
  Verdict v;
  v.outcome = Outcome::No;
  v.reason = std::move(reason);
  return v;
}

Verdict inconclusive_verdict(std::string reason, long searched) {
  Verdict v;
  v.outcome = Outcome::Inconclusive;
  v.reason = std::move(reason);
  v.searched_radius = searched;
  return v;
}

// Lifts a witness over an induced subgraph of gamma back to gamma.
// Induced subgraphs keep the relative vertex order, so the canonical
// normal forms are letter-for-letter the same.
std::vector<WitnessEntry> lift_witness(const std::vector<WitnessEntry>& witness,
                                       std::shared_ptr<const SimplicialGraph> gamma) {
  std::vector<WitnessEntry> out;
  for (const auto& entry : witness) {
    ExtVertex lifted{entry.image.base,
                     normal_form(Word::parse(gamma, entry.image.element.str())),
                     normal_form(Word::parse(gamma, entry.image.conjugator.str()))};
    out.push_back({entry.pattern, std::move(lifted)});
  }
  return out;
}

Verdict decide_ege_plain(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                         const DecideOptions& options) {
  if (options.cap && *options.cap < 0) throw std::invalid_argument("radius cap must be >= 0");
  const BigInt bound = theoretical_radius(delta, gamma);
  const bool capped = options.cap.has_value() && BigInt(*options.cap) < bound;
  const BigInt limit = capped ? BigInt(*options.cap) : bound;

  auto gamma_shared = share(gamma);
  Ball current;
  try {
    current = ball(gamma_shared, 0, options.budget);
  } catch (const BudgetExceeded& e) {
    return inconclusive_verdict("budget-exhausted", e.radius_reached);
  }

  for (long radius = 0;; ++radius) {
    if (auto map = find_induced_embedding(delta, current.graph)) {
      return yes_verdict("ege-ball-search", witness_from_map(delta, current, *map));
    }
    if (BigInt(radius) >= limit) {
      if (capped) return inconclusive_verdict("cap-exhausted", radius);
      return no_verdict("radius-bound-exhausted");
    }
    Ball next;
    try {
      next = grow(current, options.budget);
    } catch (const BudgetExceeded& e) {
      return inconclusive_verdict("budget-exhausted", e.radius_reached);
    }
    if (stabilized(current, next)) {
      // No vertex has a longer minimal conjugator, so the ball already
      // carries the whole extension graph.
      return no_verdict("extension-graph-exhausted");
    }
    current = std::move(next);
  }
}

}  // namespace

Verdict decide_ege(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                   const DecideOptions& options) {
  if (delta.empty() || gamma.empty()) {
    throw std::invalid_argument("decide_ege requires non-empty graphs");
  }
  if (options.join_split && is_join(gamma) && !is_connected(delta)) {
    // A disconnected pattern is not a join, so it embeds into a join of
    // extension graphs only through a single factor.
    auto gamma_shared = share(gamma);
    bool any_inconclusive = false;
    long searched = -1;
    for (const auto& component : connected_components(complement(gamma))) {
      Verdict factor = decide_ege(delta, induced_subgraph(gamma, component), options);
      if (factor.outcome == Outcome::Yes) {
        return yes_verdict(factor.reason, lift_witness(*factor.witness, gamma_shared));
      }
      if (factor.outcome == Outcome::Inconclusive) {
        any_inconclusive = true;
        if (searched == -1 || *factor.searched_radius < searched) {
          searched = *factor.searched_radius;
        }
      }
    }
    if (any_inconclusive) return inconclusive_verdict("cap-exhausted", searched);
    return no_verdict("radius-bound-exhausted");
  }
  return decide_ege_plain(delta, gamma, options);
}

namespace {

Verdict clique_witness(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                       std::string reason) {
  auto map = find_induced_embedding(delta, gamma);
  if (!map) return no_verdict(std::move(reason));
  auto gamma_shared = std::make_shared<const SimplicialGraph>(gamma);
  std::vector<WitnessEntry> witness;
  for (std::size_t i = 0; i < map->size(); ++i) {
    const std::string base = gamma.name((*map)[i]);
    ExtVertex image{base, normal_form(Word::parse(gamma_shared, base)), Word(gamma_shared, {})};
    witness.push_back({delta.name(static_cast<int>(i)), std::move(image)});
  }
  return yes_verdict(std::move(reason), std::move(witness));
}

}  // namespace

Verdict decide_embedding(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                         const DecideOptions& options, PathConvention convention) {
  if (delta.empty() || gamma.empty()) {
    throw std::invalid_argument("decide_embedding requires non-empty graphs");
  }
  if (is_clique(delta)) {
    // Free abelian source: embeds iff the target carries a clique of
    // the same size, with an identity-conjugator witness.
    return clique_witness(delta, gamma, "clique-source");
  }
  if (is_clique(gamma)) {
    // Free abelian target admits only free abelian subgroups.
    return no_verdict("clique-target");
  }
  std::string reason;
  if (is_triangle_free(gamma)) {
    reason = "triangle-free-target";
  } else if (is_triangle_built(gamma, convention)) {
    reason = "triangle-built-target";
  } else if (is_forest(delta)) {
    reason = "forest-source";
  } else if (is_complement_of_forest(delta)) {
    reason = "complement-of-forest-source";
  } else {
    return inconclusive_verdict("not-covered", -1);
  }
  Verdict v = decide_ege(delta, gamma, options);
  v.reason = reason;
  return v;
}

bool validate_witness(const SimplicialGraph& delta, const Verdict& verdict) {
  if (verdict.outcome != Outcome::Yes || !verdict.witness) return false;
  const auto& witness = *verdict.witness;
  if (witness.size() != delta.size()) return false;

  std::set<std::string> pattern_seen;
  std::set<std::string> element_seen;
  for (const auto& entry : witness) {
    if (!delta.find_vertex(entry.pattern)) return false;
    if (!pattern_seen.insert(entry.pattern).second) return false;
    if (!element_seen.insert(entry.image.element.str()).second) return false;
    Word base_word = Word::parse(entry.image.element.ambient(), entry.image.base);
    Word rebuilt = normal_form(
        concat({entry.image.conjugator, base_word, inverse(entry.image.conjugator)}));
    if (!rebuilt.same_element(normal_form(entry.image.element))) return false;
  }
  for (std::size_t i = 0; i < witness.size(); ++i) {
    for (std::size_t j = i + 1; j < witness.size(); ++j) {
      const bool pattern_edge =
          delta.adjacent(delta.index_of(witness[i].pattern), delta.index_of(witness[j].pattern));
      if (commutes(witness[i].image.element, witness[j].image.element) != pattern_edge) {
        return false;
      }
    }
  }
  return true;
}

GeneratorMap make_generator_map(std::shared_ptr<const SimplicialGraph> source,
                                std::shared_ptr<const SimplicialGraph> target,
                                const std::vector<std::string>& images) {
  if (images.size() != source->size()) {
    throw std::invalid_argument("generator map needs one image per source vertex");
  }
  GeneratorMap m{std::move(source), std::move(target), {}};
  for (const auto& text : images) m.images.push_back(Word::parse(m.target, text));
  return m;
}

bool check_homomorphism(const GeneratorMap& m) {
  for (const auto& [u, v] : m.source->edges()) {
    if (!commutes(m.images[static_cast<std::size_t>(u)], m.images[static_cast<std::size_t>(v)])) {
      return false;
    }
  }
  return true;
}

Word apply_map(const GeneratorMap& m, const Word& w) {
  if (!(w.graph() == *m.source)) {
    throw std::invalid_argument("apply_map: word is not over the source graph");
  }
  Word out(m.target, {});
  for (const auto& l : w.letters()) {
    const Word& image = m.images[static_cast<std::size_t>(l.vertex)];
    out = concat(out, l.sign > 0 ? image : inverse(image));
  }
  return normal_form(out);
}

bool is_injective_on(const GeneratorMap& m, const std::vector<Word>& words) {
  for (const auto& w : words) {
    if (is_trivial(w) != is_trivial(apply_map(m, w))) return false;
  }
  return true;
}

Word iterated_commutator(std::shared_ptr<const SimplicialGraph> g,
                         const std::vector<std::string>& vs) {
  if (vs.size() < 2) throw std::invalid_argument("iterated commutator needs at least two entries");
  std::set<std::string> unique(vs.begin(), vs.end());
  if (unique.size() != vs.size()) {
    throw std::invalid_argument("iterated commutator entries must be pairwise distinct");
  }
  std::vector<Word> generators;
  for (const auto& name : vs) generators.push_back(Word(g, {Letter{g->index_of(name), 1}}));
  Word c = concat({inverse(generators[0]), inverse(generators[1]), generators[0], generators[1]});
  for (std::size_t k = 2; k < generators.size(); ++k) {
    c = concat({inverse(c), inverse(generators[k]), c, generators[k]});
  }
  return c;
}

bool commutator_nontrivial_criterion(const SimplicialGraph& g,
                                     const std::vector<std::string>& vs) {
  if (vs.size() < 2) throw std::invalid_argument("criterion needs at least two entries");
  std::set<std::string> unique(vs.begin(), vs.end());
  if (unique.size() != vs.size()) {
    throw std::invalid_argument("criterion entries must be pairwise distinct");
  }
  const SimplicialGraph noncomm = complement(g);
  for (std::size_t k = 2; k <= vs.size(); ++k) {
    std::vector<std::string> prefix(vs.begin(), vs.begin() + static_cast<long>(k));
    if (!is_connected(induced_subgraph(noncomm, prefix))) return false;
  }
  return true;
}

ColouredGraph coloured_block_graph(const SimplicialGraph& gamma,
                                   const std::vector<Word>& tuple) {
  std::vector<Word> elements;
  std::vector<int> colours;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!(tuple[i].graph() == gamma)) {
      throw std::invalid_argument("coloured_block_graph: word is not over the given graph");
    }
    BlockDecomposition bd = block_decomposition(tuple[i]);
    for (std::size_t j = 0; j < bd.blocks.size(); ++j) {
      const auto& [root, exponent] = bd.blocks[j];
      elements.push_back(normal_form(
          concat({bd.conjugator, power(root, exponent), inverse(bd.conjugator)})));
      colours.push_back(static_cast<int>(i) + 1);
      names.push_back(std::to_string(i + 1) + "." + std::to_string(j + 1));
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t p = 0; p < elements.size(); ++p) {
    for (std::size_t q = p + 1; q < elements.size(); ++q) {
      if (commutes(elements[p], elements[q])) edges.emplace_back(names[p], names[q]);
    }
  }
  return ColouredGraph{SimplicialGraph(names, edges), colours};
}

}  // namespace pcg
