// pcg: command-line front end for the pc-group deciders.
//
// Every command prints a single JSON document on stdout; --verbose adds
// a human-readable summary on stderr. Exit codes: 0 for any computed
// result (including "no" and "inconclusive"), 2 for input errors, 3
// when the extension-graph budget tripped.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcgroups/blocks.hpp"
#include "pcgroups/deciders.hpp"
#include "pcgroups/extension_graph.hpp"
#include "pcgroups/graph.hpp"
#include "pcgroups/io.hpp"
#include "pcgroups/universal.hpp"
#include "pcgroups/word.hpp"

namespace {

constexpr long kDefaultCap = 3;

struct BudgetFlags {
  std::size_t vertices = 100000;
  std::size_t conjugates = 5000000;
  bool vertices_set = false;
  bool conjugates_set = false;

  pcg::Budget resolve() const {
    pcg::Budget b{vertices, conjugates};
    // Flags win over the environment, the environment over defaults.
    if (!vertices_set) {
      if (const char* env = std::getenv("PCG_BUDGET_VERTICES")) b.max_vertices = std::stoull(env);
    }
    if (!conjugates_set) {
      if (const char* env = std::getenv("PCG_BUDGET_CONJUGATES")) {
        b.max_conjugates = std::stoull(env);
      }
    }
    return b;
  }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& budget) {
  cmd->add_option("--budget-vertices", budget.vertices,
                  "Cap on ball vertices (env PCG_BUDGET_VERTICES)")
      ->each([&budget](const std::string&) { budget.vertices_set = true; });
  cmd->add_option("--budget-conjugates", budget.conjugates,
                  "Cap on enumerated conjugates (env PCG_BUDGET_CONJUGATES)")
      ->each([&budget](const std::string&) { budget.conjugates_set = true; });
}

struct CapFlags {
  long cap = kDefaultCap;
  bool full = false;

  std::optional<long> resolve() const {
    if (full) return std::nullopt;  // search up to the theoretical bound
    return cap;
  }
};

void add_cap_flags(CLI::App* cmd, CapFlags& flags) {
  cmd->add_option("--cap", flags.cap, "Radius cap for ball searches")->default_val(kDefaultCap);
  cmd->add_flag("--full", flags.full,
                "Search up to the theoretical radius bound instead of --cap "
                "(usually ends in a budget stop)");
}

void add_convention_flag(CLI::App* cmd, pcg::PathConvention& convention) {
  cmd->add_option_function<std::string>(
         "--path-convention",
         [&convention](const std::string& value) {
           if (value == "edges") {
             convention = pcg::PathConvention::Edges;
           } else if (value == "vertices") {
             convention = pcg::PathConvention::Vertices;
           } else {
             throw CLI::ValidationError("--path-convention must be 'edges' or 'vertices'");
           }
         },
         "Whether a forbidden path in 'triangle-built' counts 3 edges or 3 vertices "
         "(default edges)")
      ->check(CLI::IsMember({"edges", "vertices"}));
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

bool budget_tripped(const pcg::Verdict& v) {
  return v.outcome == pcg::Outcome::Inconclusive && v.reason == "budget-exhausted";
}

bool budget_tripped(const pcg::EqVerdict& v) {
  if (!v.detail) return false;
  return budget_tripped((*v.detail)[0]) || budget_tripped((*v.detail)[1]);
}

const char* kDispatchHelp =
    "Reason tags:\n"
    "  ege-ball-search        embedding found in a finite ball of the extension graph\n"
    "  radius-bound-exhausted every radius up to the theoretical bound was searched\n"
    "  extension-graph-exhausted  the ball stopped growing, so it is the whole graph\n"
    "  cap-exhausted          --cap radii searched without an answer\n"
    "  budget-exhausted       vertex/conjugate budget hit before an answer\n"
    "  clique-source          abelian source: reduces to a clique in the target\n"
    "  clique-target          abelian target admits only abelian subgroups\n"
    "  triangle-free-target   embedding and extension-graph embedding coincide for\n"
    "                         triangle-free targets\n"
    "  triangle-built-target  same reduction for triangle-built targets\n"
    "  forest-source          same reduction when the source is a forest\n"
    "  complement-of-forest-source  same reduction when the source complement is a forest\n"
    "  not-covered            outside the classes above the problem is open\n";

const char* kUnivEqHelp =
    "Reason tags:\n"
    "  atomic-rigidity        atomic graphs are universally equivalent iff isomorphic\n"
    "  triangle-free-target / deflation-triangle-free-target\n"
    "                         mutual ball searches into the inflated graphs decide\n"
    "                         the answer when the target deflation is triangle-free\n"
    "  triangle-built-target  same searches for triangle-built targets\n"
    "  deflation-sentence-separation  three pairwise commuting elements with pairwise\n"
    "                         distinct centralisers separate the universal theories\n"
    "  no-covered-class       no decision procedure is known\n";

int run(int argc, char** argv) {
  CLI::App app{"pcg: decision procedures for partially commutative groups"};
  app.require_subcommand(1);

  std::string graph_path, source_path, target_path;
  std::string word_text, left_text, right_text, sequence_text;
  int inflate_n = 2;
  int ball_radius = 0;
  bool verbose = false;
  bool join_split = false;
  pcg::PathConvention convention = pcg::PathConvention::Edges;
  BudgetFlags budget;
  CapFlags cap;

  app.add_flag("--verbose", verbose, "Human-readable summary on stderr");

  auto* normalize = app.add_subcommand("normalize", "Canonical geodesic normal form of a word");
  normalize->add_option("--graph", graph_path, "Defining graph (json)")->required();
  normalize->add_option("--word", word_text, "Word, e.g. \"a b a^-1\"")->required();

  auto* conjugate = app.add_subcommand("conjugate", "Decide conjugacy of two words");
  conjugate->add_option("--graph", graph_path)->required();
  conjugate->add_option("--left", left_text, "First word")->required();
  conjugate->add_option("--right", right_text, "Second word")->required();

  auto* blocks = app.add_subcommand("blocks", "Block decomposition with least roots");
  blocks->add_option("--graph", graph_path)->required();
  blocks->add_option("--word", word_text)->required();

  auto* centralizer = app.add_subcommand("centralizer", "Generating set of the centraliser");
  centralizer->add_option("--graph", graph_path)->required();
  centralizer->add_option("--word", word_text)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Predicate report for a graph");
  classify_cmd->add_option("--graph", graph_path)->required();
  add_convention_flag(classify_cmd, convention);

  auto* deflate = app.add_subcommand("deflate", "Deflation graph (equal closed stars merged)");
  deflate->add_option("--graph", graph_path)->required();

  auto* inflate = app.add_subcommand("inflate", "n-inflation graph (vertices cloned into cliques)");
  inflate->add_option("--graph", graph_path)->required();
  inflate->add_option("--n", inflate_n, "Number of copies per vertex")->required();

  auto* ball_cmd = app.add_subcommand("ball", "Finite ball of the extension graph");
  ball_cmd->add_option("--graph", graph_path)->required();
  ball_cmd->add_option("--radius", ball_radius, "Conjugator length bound")->required();
  add_budget_flags(ball_cmd, budget);

  auto* ege = app.add_subcommand("ege", "Extension-graph embedding by bounded ball search");
  ege->footer(kDispatchHelp);
  ege->add_option("--source", source_path, "Pattern graph (json)")->required();
  ege->add_option("--target", target_path, "Host graph (json)")->required();
  ege->add_flag("--join-split", join_split,
                "Recurse into join factors for disconnected sources");
  add_cap_flags(ege, cap);
  add_budget_flags(ege, budget);

  auto* embed = app.add_subcommand("embed", "Class-dispatched group embedding decision");
  embed->footer(kDispatchHelp);
  embed->add_option("--source", source_path)->required();
  embed->add_option("--target", target_path)->required();
  add_cap_flags(embed, cap);
  add_budget_flags(embed, budget);
  add_convention_flag(embed, convention);

  auto* univ = app.add_subcommand("univ-eq", "Universal equivalence of two pc groups");
  univ->footer(kUnivEqHelp);
  univ->add_option("--source", source_path)->required();
  univ->add_option("--target", target_path)->required();
  add_cap_flags(univ, cap);
  add_budget_flags(univ, budget);
  add_convention_flag(univ, convention);

  auto* commutator = app.add_subcommand(
      "commutator-check",
      "Left-normed iterated commutator ([v1,..,vk] = [v1,..,vk-1]^-1 vk^-1 [v1,..,vk-1] vk) "
      "against the prefix-connectivity criterion in the non-commutation graph");
  commutator->add_option("--graph", graph_path)->required();
  commutator->add_option("--sequence", sequence_text, "Distinct vertices, e.g. \"a c b\"")
      ->required();

  // let --verbose appear after the subcommand as well
  for (auto* sub : {normalize, conjugate, blocks, centralizer, classify_cmd, deflate, inflate,
                    ball_cmd, ege, embed, univ, commutator}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }

  if (*normalize) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    pcg::Word nf = pcg::normal_form(pcg::Word::parse(g, word_text));
    nlohmann::ordered_json out;
    out["word"] = nf.str();
    emit(out);
    if (verbose) std::cerr << "normal form has " << nf.size() << " letters\n";
    return 0;
  }
  if (*conjugate) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    const bool answer =
        pcg::is_conjugate(pcg::Word::parse(g, left_text), pcg::Word::parse(g, right_text));
    nlohmann::ordered_json out;
    out["conjugate"] = answer;
    emit(out);
    if (verbose) std::cerr << (answer ? "conjugate" : "not conjugate") << "\n";
    return 0;
  }
  if (*blocks) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    pcg::BlockDecomposition bd = pcg::block_decomposition(pcg::Word::parse(g, word_text));
    nlohmann::ordered_json out;
    out["conjugator"] = bd.conjugator.str();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [root, exponent] : bd.blocks) {
      nlohmann::ordered_json item;
      item["root"] = root.str();
      item["exponent"] = exponent;
      list.push_back(std::move(item));
    }
    out["blocks"] = std::move(list);
    emit(out);
    if (verbose) std::cerr << bd.blocks.size() << " block(s)\n";
    return 0;
  }
  if (*centralizer) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    pcg::CentralizerBasis basis = pcg::centralizer_basis(pcg::Word::parse(g, word_text));
    nlohmann::ordered_json out;
    out["cyclic"] = nlohmann::ordered_json::array();
    for (const auto& w : basis.cyclic_parts) out["cyclic"].push_back(w.str());
    out["abelian"] = nlohmann::ordered_json::array();
    for (const auto& w : basis.abelian_part) out["abelian"].push_back(w.str());
    emit(out);
    if (verbose) {
      std::cerr << basis.cyclic_parts.size() << " cyclic and " << basis.abelian_part.size()
                << " abelian generators\n";
    }
    return 0;
  }
  if (*classify_cmd) {
    pcg::SimplicialGraph g = pcg::load_graph_file(graph_path);
    auto report = pcg::classify(g, convention);
    emit(pcg::classification_to_json(report));
    if (verbose) {
      std::cerr << g.size() << " vertices, " << g.edge_count() << " edges"
                << (report.atomic ? ", atomic" : "") << "\n";
    }
    return 0;
  }
  if (*deflate) {
    pcg::SimplicialGraph d = pcg::deflation(pcg::load_graph_file(graph_path));
    emit(pcg::graph_to_json(d));
    if (verbose) std::cerr << d.size() << " star classes\n";
    return 0;
  }
  if (*inflate) {
    pcg::SimplicialGraph inflated = pcg::inflation(pcg::load_graph_file(graph_path), inflate_n);
    emit(pcg::graph_to_json(inflated));
    if (verbose) std::cerr << inflated.size() << " vertices after inflation\n";
    return 0;
  }
  if (*ball_cmd) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    pcg::Ball b = pcg::ball(g, ball_radius, budget.resolve());
    emit(pcg::ball_to_json(b));
    if (verbose) std::cerr << b.table.size() << " vertices at radius " << b.radius << "\n";
    return 0;
  }
  if (*ege || *embed) {
    pcg::SimplicialGraph delta = pcg::load_graph_file(source_path);
    pcg::SimplicialGraph gamma = pcg::load_graph_file(target_path);
    pcg::DecideOptions options;
    options.cap = cap.resolve();
    options.budget = budget.resolve();
    options.join_split = join_split;
    pcg::Verdict v = *ege ? pcg::decide_ege(delta, gamma, options)
                          : pcg::decide_embedding(delta, gamma, options, convention);
    emit(pcg::verdict_to_json(v));
    if (verbose) std::cerr << "reason: " << v.reason << "\n";
    return budget_tripped(v) ? 3 : 0;
  }
  if (*univ) {
    pcg::SimplicialGraph delta = pcg::load_graph_file(source_path);
    pcg::SimplicialGraph gamma = pcg::load_graph_file(target_path);
    pcg::UnivEqOptions options;
    options.cap = cap.resolve();
    options.budget = budget.resolve();
    options.convention = convention;
    pcg::EqVerdict v = pcg::decide_universal_equivalence(delta, gamma, options);
    emit(pcg::eq_verdict_to_json(v));
    if (verbose) std::cerr << "reason: " << v.reason << "\n";
    return budget_tripped(v) ? 3 : 0;
  }
  if (*commutator) {
    auto g = std::make_shared<const pcg::SimplicialGraph>(pcg::load_graph_file(graph_path));
    std::vector<std::string> sequence;
    std::istringstream stream(sequence_text);
    std::string token;
    while (stream >> token) sequence.push_back(token);
    const bool criterion = pcg::commutator_nontrivial_criterion(*g, sequence);
    pcg::Word c = pcg::normal_form(pcg::iterated_commutator(g, sequence));
    nlohmann::ordered_json out;
    out["sequence"] = sequence;
    out["criterion_nontrivial"] = criterion;
    out["commutator"] = c.str();
    out["commutator_nontrivial"] = !c.is_empty();
    emit(out);
    if (verbose) {
      std::cerr << "criterion and word problem "
                << (criterion == !c.is_empty() ? "agree" : "DISAGREE") << "\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pcg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
