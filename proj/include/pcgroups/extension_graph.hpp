#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcgroups/graph.hpp"
#include "pcgroups/word.hpp"

namespace pcg {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex of the extension graph: a conjugate v * base * v^-1 of a
/// generator. Identity is the canonical normal form of the element;
/// the stored conjugator is a deterministic minimal-length word
/// realizing it.
struct ExtVertex {
  std::string base;
  Word element;
  Word conjugator;
};

struct Budget {
  std::size_t max_vertices = 100000;
  std::size_t max_conjugates = 5000000;
};

/// Raised when ball enumeration exceeds its budget; carries the last
/// fully constructed radius so callers can report an honest partial
/// answer instead of a silent truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int radius_reached, std::size_t vertices, std::size_t conjugates);
  int radius_reached;
  std::size_t vertices;
  std::size_t conjugates;
};

/// Finite ball of the extension graph: all conjugates of generators
/// with conjugator length <= radius, deduplicated by canonical element,
/// with an edge exactly where two elements commute in the group. The
/// vertex identifiers of `graph` are the serialized canonical elements,
/// in table order: (conjugator length, base order, conjugator shortlex).
struct Ball {
  std::shared_ptr<const SimplicialGraph> source;
  int radius = 0;
  SimplicialGraph graph;
  std::vector<ExtVertex> table;  // aligned with graph vertex order

  // enumeration state reused by grow()
  std::vector<int> frontier;  // table indices with |conjugator| == radius
  std::size_t conjugates_enumerated = 0;
};

/// Canonical vertex for a standalone conjugator: the element is the
/// normal form of v * base * v^-1 and the conjugator is v with right
/// divisors from the star of the base stripped off.
ExtVertex canonical_vertex(std::shared_ptr<const SimplicialGraph> g,
                           const std::string& base, const Word& v);

Ball ball(std::shared_ptr<const SimplicialGraph> g, int radius, const Budget& budget = {});

/// Radius + 1 extension reusing the vertex table; existing vertex
/// identifiers and their order are stable.
Ball grow(const Ball& b, const Budget& budget = {});

/// True when the last grow step added no vertices; the ball then equals
/// the whole extension graph.
bool stabilized(const Ball& before, const Ball& after);

/// Radius bound sufficient for induced-subgraph search in the
/// extension graph: n^2 * M for connected delta, else
/// 4 * K * n^2 * M^(K+1) with K the number of components of delta,
/// n = |V(delta)|, M = |V(gamma)|.
BigInt theoretical_radius(const SimplicialGraph& delta, const SimplicialGraph& gamma);

}  // namespace pcg
