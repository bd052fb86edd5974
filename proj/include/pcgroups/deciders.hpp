#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcgroups/extension_graph.hpp"
#include "pcgroups/graph.hpp"
#include "pcgroups/word.hpp"

namespace pcg {

enum class Outcome { Yes, No, Inconclusive };

struct WitnessEntry {
  std::string pattern;  // pattern vertex name
  ExtVertex image;
};

/// Uniform decider answer. Yes carries a validated witness;
/// Inconclusive carries the deepest fully searched radius, which is
/// always below the theoretical bound. The reason tag names the
/// dispatch that produced the outcome.
struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;
  std::optional<std::vector<WitnessEntry>> witness;
  std::optional<long> searched_radius;
};

struct DecideOptions {
  std::optional<long> cap;  // radius cap; unset means the theoretical bound
  Budget budget;
  bool join_split = false;  // recurse into join factors for disconnected sources
};

/// Extension-graph embedding by bounded ball search: scans radii
/// 0,1,... up to min(cap, theoretical bound), returning Yes with the
/// lexicographically least witness at the first radius that embeds the
/// pattern. No is returned only when the search space is exhausted
/// (the bound was reached, or the ball stabilized and equals the whole
/// extension graph); a cap or budget stop yields Inconclusive.
Verdict decide_ege(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                   const DecideOptions& options = {});

/// Class-dispatched embedding decision between the groups. Clique
/// sources and targets are settled directly; triangle-free or
/// triangle-built targets and forest or complement-of-forest sources
/// reduce to the extension-graph search; everything else is reported
/// Inconclusive (the general problem is open).
Verdict decide_embedding(const SimplicialGraph& delta, const SimplicialGraph& gamma,
                         const DecideOptions& options = {},
                         PathConvention convention = PathConvention::Edges);

/// Re-checks a Yes witness from first principles: images pairwise
/// distinct as elements, and commutation mirrors pattern adjacency.
bool validate_witness(const SimplicialGraph& delta, const Verdict& verdict);

/// Assignment of a word over the target to each source generator.
struct GeneratorMap {
  std::shared_ptr<const SimplicialGraph> source;
  std::shared_ptr<const SimplicialGraph> target;
  std::vector<Word> images;  // by source vertex index
};

GeneratorMap make_generator_map(std::shared_ptr<const SimplicialGraph> source,
                                std::shared_ptr<const SimplicialGraph> target,
                                const std::vector<std::string>& images);

/// True iff images of adjacent source generators commute in the target,
/// i.e. the assignment extends to a group homomorphism.
bool check_homomorphism(const GeneratorMap& m);

/// Letterwise substitution followed by normalization in the target.
Word apply_map(const GeneratorMap& m, const Word& w);

/// True iff each listed word and its image are trivial together.
bool is_injective_on(const GeneratorMap& m, const std::vector<Word>& words);

/// Left-normed commutator [v1,...,vk] built by the recursion
/// [v1,...,vk] = [v1,...,vk-1]^-1 vk^-1 [v1,...,vk-1] vk with
/// [v1,v2] = v1^-1 v2^-1 v1 v2. Not normalized. Requires k >= 2 and
/// pairwise distinct vertices.
Word iterated_commutator(std::shared_ptr<const SimplicialGraph> g,
                         const std::vector<std::string>& vs);

/// Connectivity criterion equivalent to non-triviality of the iterated
/// commutator: every prefix set of vs spans a connected subgraph of the
/// non-commutation graph.
bool commutator_nontrivial_criterion(const SimplicialGraph& g,
                                     const std::vector<std::string>& vs);

/// Coloured commutation graph of the block occurrences across a tuple:
/// one vertex per block of each entry's decomposition, coloured by the
/// entry index (from 1), adjacent when the block elements commute as
/// group elements. Equal blocks from different entries become distinct
/// mutually adjacent copies.
ColouredGraph coloured_block_graph(const SimplicialGraph& gamma,
                                   const std::vector<Word>& tuple);

}  // namespace pcg
