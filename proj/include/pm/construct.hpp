#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pm/polymatroid.hpp"

namespace pm {

/// Edge with two endpoints (u == v is an ordinary loop), or a free loop.
struct Edge {
  std::string label;
  int u = -1;
  int v = -1;
  bool free_loop = false;
};

/// Multigraph on vertices 0..vertices-1.
struct Multigraph {
  int vertices = 0;
  std::vector<Edge> edges;

  void add_edge(std::string label, int u, int v);
  void add_loop(std::string label, int u);
  void add_free_loop(std::string label);
  /// Throws DuplicateLabel or PreconditionViolated.
  void check() const;
  Multigraph without(const std::string& label) const;
  /// Identifies the ends of a non-loop edge; parallel edges become loops.
  Multigraph contracted(const std::string& label) const;
};

/// M2(G): rank of an edge set is the number of incident vertices.
Polymatroid boolean_from_graph(const Multigraph& g);
/// M(G): rank is |V(X)| minus the number of components of (V(X), X).
Polymatroid cycle_matroid(const Multigraph& g);

Polymatroid uniform(int r, int n);

/// Spokes s1..sn and rim edges r1..rn, with r_i joining rim vertices i and i+1.
Multigraph wheel_graph(int n);
Polymatroid wheel(int n);
/// wheel(n) with the rim circuit-hyperplane relaxed; defined for n >= 2.
Polymatroid whirl(int n);

struct FlatAssignment {
  Polymatroid matroid;
  std::vector<std::pair<std::string, Subset>> psi;
};

Polymatroid from_flats(const FlatAssignment& fa);

enum class Filter { All, TwoConnected, ThreeConnected, Compact };

const char* to_string(Filter filter);
Filter parse_filter(const std::string& name);

/// One representative per isomorphism class, labelled a, b, c, ... and
/// sorted by canonical table. n <= 5. `jobs` shards the search tree.
std::vector<Polymatroid> enumerate_small(int n, Filter filter = Filter::All, int jobs = 1);

/// Every labelled 2-polymatroid on n elements in bitmask-DFS order. n <= 5.
void for_each_labelled(int n, const std::function<void(std::span<const std::uint8_t>)>& visit);

std::vector<std::string> default_labels(int n);

}  // namespace pm
