#include "pcgroups/io.hpp"

#include <fstream>
#include <stdexcept>

namespace pcg {

using nlohmann::json;
using nlohmann::ordered_json;

SimplicialGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph json needs \"vertices\" and \"edges\"");
  }
  if (!j["vertices"].is_array() || !j["edges"].is_array()) {
    throw std::invalid_argument("graph json: \"vertices\" and \"edges\" must be arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("graph json: vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw std::invalid_argument("graph json: each edge must be a pair of vertex names");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return SimplicialGraph(std::move(vertices), edges);
}

SimplicialGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed json in " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

ordered_json graph_to_json(const SimplicialGraph& g) {
  ordered_json out;
  out["vertices"] = g.vertex_names();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(ordered_json::array({g.name(u), g.name(v)}));
  }
  out["edges"] = std::move(edges);
  return out;
}

ordered_json classification_to_json(const GraphClassification& c) {
  ordered_json out;
  out["connected"] = c.connected;
  out["clique"] = c.clique;
  out["join"] = c.join;
  out["forest"] = c.forest;
  out["complement_of_forest"] = c.complement_of_forest;
  out["triangle_free"] = c.triangle_free;
  out["triangle_built"] = c.triangle_built;
  out["weakly_chordal"] = c.weakly_chordal;
  out["atomic"] = c.atomic;
  return out;
}

// Graph json extended with a radius and a parallel provenance array, so
// the output is itself loadable as a graph file.
ordered_json ball_to_json(const Ball& b) {
  ordered_json out = graph_to_json(b.graph);
  out["radius"] = b.radius;
  ordered_json provenance = ordered_json::array();
  for (std::size_t i = 0; i < b.table.size(); ++i) {
    ordered_json record;
    record["vertex"] = b.graph.name(static_cast<int>(i));
    record["base"] = b.table[i].base;
    record["conjugator"] = b.table[i].conjugator.str();
    record["element"] = b.table[i].element.str();
    provenance.push_back(std::move(record));
  }
  out["provenance"] = std::move(provenance);
  return out;
}

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* eq_outcome_name(EqOutcome o) {
  switch (o) {
    case EqOutcome::Equivalent: return "equivalent";
    case EqOutcome::NotEquivalent: return "not_equivalent";
    case EqOutcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json out;
  out["outcome"] = outcome_name(v.outcome);
  out["reason"] = v.reason;
  if (v.witness) {
    ordered_json witness = ordered_json::array();
    for (const auto& entry : *v.witness) {
      ordered_json record;
      record["pattern"] = entry.pattern;
      record["base"] = entry.image.base;
      record["conjugator"] = entry.image.conjugator.str();
      record["element"] = entry.image.element.str();
      witness.push_back(std::move(record));
    }
    out["witness"] = std::move(witness);
  } else {
    out["witness"] = nullptr;
  }
  if (v.searched_radius) {
    out["searched_radius"] = *v.searched_radius;
  } else {
    out["searched_radius"] = nullptr;
  }
  return out;
}

ordered_json eq_verdict_to_json(const EqVerdict& v) {
  ordered_json out;
  out["outcome"] = eq_outcome_name(v.outcome);
  out["reason"] = v.reason;
  if (v.detail) {
    ordered_json detail = ordered_json::array();
    const char* directions[2] = {"delta_into_gamma_inflation", "gamma_into_delta_inflation"};
    for (int i = 0; i < 2; ++i) {
      ordered_json entry = verdict_to_json((*v.detail)[static_cast<std::size_t>(i)]);
      ordered_json tagged;
      tagged["direction"] = directions[i];
      for (auto& [key, value] : entry.items()) tagged[key] = std::move(value);
      detail.push_back(std::move(tagged));
    }
    out["detail"] = std::move(detail);
  } else {
    out["detail"] = nullptr;
  }
  return out;
}

}  // namespace pcg
