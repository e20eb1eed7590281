#pragma once

#include <map>
#include <string>
#include <vector>

#include "pm/construct.hpp"
#include "pm/polymatroid.hpp"

namespace pmtest {

using Relabel = std::map<std::string, std::string>;

inline pm::Multigraph triangle_graph() {
  pm::Multigraph g;
  g.vertices = 3;
  g.add_edge("e", 0, 1);
  g.add_edge("f", 1, 2);
  g.add_edge("g", 2, 0);
  return g;
}

// M2(C3): three lines, any two span the plane of rank 3.
inline pm::Polymatroid m2_c3() { return pm::boolean_from_graph(triangle_graph()); }

inline pm::Polymatroid from_table(std::vector<std::string> labels, const std::vector<int>& table) {
  return pm::Polymatroid::validate(std::move(labels), table);
}

// Triple-loop axiom check straight from the definition, no pruning.
inline bool axioms_by_definition(const std::vector<int>& t, int n) {
  const pm::Subset full = pm::full_set(n);
  if (t[0] != 0) return false;
  for (int e = 0; e < n; ++e) {
    if (t[pm::bit(e)] > 2) return false;
  }
  for (pm::Subset x = 0; x <= full; ++x) {
    for (pm::Subset y = 0; y <= full; ++y) {
      if (pm::is_subset(x, y) && t[x] > t[y]) return false;
      if (t[x] + t[y] < t[x | y] + t[x & y]) return false;
    }
  }
  return true;
}

// Number of vertices met by an edge set, the M2(G) rank oracle.
inline int vertices_met(const pm::Multigraph& g, const std::vector<std::string>& edges) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertices), false);
  for (const auto& e : g.edges) {
    bool in = false;
    for (const auto& l : edges) in = in || l == e.label;
    if (!in || e.free_loop) continue;
    seen[static_cast<std::size_t>(e.u)] = true;
    seen[static_cast<std::size_t>(e.v)] = true;
  }
  int c = 0;
  for (bool b : seen) c += b ? 1 : 0;
  return c;
}

}  // namespace pmtest
