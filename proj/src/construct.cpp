#include "pm/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "pm/conn.hpp"

namespace pm {

void Multigraph::add_edge(std::string label, int u, int v) {
  edges.push_back({std::move(label), u, v, false});
}

void Multigraph::add_loop(std::string label, int u) { edges.push_back({std::move(label), u, u, false}); }

void Multigraph::add_free_loop(std::string label) { edges.push_back({std::move(label), -1, -1, true}); }

void Multigraph::check() const {
  if (vertices < 0) throw PreconditionViolated("negative vertex count");
  std::set<std::string> seen;
  for (const auto& e : edges) {
    if (e.label.empty()) throw PreconditionViolated("empty edge label");
    if (!seen.insert(e.label).second) throw DuplicateLabel("duplicate edge label '" + e.label + "'");
    if (e.free_loop) continue;
    if (e.u < 0 || e.u >= vertices || e.v < 0 || e.v >= vertices) {
      throw PreconditionViolated("edge '" + e.label + "' has an endpoint outside 0.." +
                                 std::to_string(vertices - 1));
    }
  }
  if (edges.size() > static_cast<std::size_t>(kMaxElements)) {
    throw SizeOutOfRange("graph has more than 16 edges");
  }
}

Multigraph Multigraph::without(const std::string& label) const {
  Multigraph g = *this;
  auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.label == label; });
  if (it == g.edges.end()) throw UnknownElement("unknown edge '" + label + "'");
  g.edges.erase(it);
  return g;
}

Multigraph Multigraph::contracted(const std::string& label) const {
  auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.label == label; });
  if (it == edges.end()) throw UnknownElement("unknown edge '" + label + "'");
  if (it->free_loop || it->u == it->v) throw PreconditionViolated("cannot contract loop '" + label + "'");
  const int keep = std::min(it->u, it->v);
  const int gone = std::max(it->u, it->v);
  auto remap = [&](int x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  Multigraph g;
  g.vertices = vertices - 1;
  for (const auto& e : edges) {
    if (e.label == label) continue;
    if (e.free_loop) {
      g.edges.push_back(e);
    } else {
      g.edges.push_back({e.label, remap(e.u), remap(e.v), false});
    }
  }
  return g;
}

namespace {

std::vector<std::string> edge_labels(const Multigraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) out.push_back(e.label);
  return out;
}

}  // namespace

Polymatroid boolean_from_graph(const Multigraph& g) {
  g.check();
  const int n = static_cast<int>(g.edges.size());
  std::vector<std::uint32_t> cover(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> table(cover.size(), 0);
  for (Subset x = 1; x < cover.size(); ++x) {
    const Edge& e = g.edges[static_cast<std::size_t>(lowest(x))];
    std::uint32_t ends = e.free_loop ? 0u : ((1u << e.u) | (1u << e.v));
    cover[x] = cover[x & (x - 1)] | ends;
    table[x] = static_cast<std::uint8_t>(std::popcount(cover[x]));
  }
  return assemble(edge_labels(g), std::move(table));
}

Polymatroid cycle_matroid(const Multigraph& g) {
  g.check();
  const int n = static_cast<int>(g.edges.size());
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  std::vector<int> parent(static_cast<std::size_t>(g.vertices));
  for (Subset x = 1; x < table.size(); ++x) {
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    int r = 0;
    for_each_index(x, [&](int i) {
      const Edge& e = g.edges[static_cast<std::size_t>(i)];
      if (e.free_loop) return;
      int a = root(e.u);
      int b = root(e.v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    });
    table[x] = static_cast<std::uint8_t>(r);
  }
  return assemble(edge_labels(g), std::move(table));
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return out;
}

Polymatroid uniform(int r, int n) {
  if (n < 0 || n > kMaxElements || r < 0 || r > n) {
    throw SizeOutOfRange("uniform(" + std::to_string(r) + ", " + std::to_string(n) + ") is out of range");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Subset x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(std::min(card(x), r));
  return assemble(default_labels(n), std::move(table));
}

Multigraph wheel_graph(int n) {
  Multigraph g;
  g.vertices = n + 1;
  for (int i = 1; i <= n; ++i) {
    g.add_edge("s" + std::to_string(i), 0, i);
    g.add_edge("r" + std::to_string(i), i, i % n + 1);
  }
  return g;
}

Polymatroid wheel(int n) {
  if (n < 3 || n > 8) throw SizeOutOfRange("wheel(n) needs 3 <= n <= 8");
  return cycle_matroid(wheel_graph(n));
}

Polymatroid whirl(int n) {
  if (n < 2 || n > 8) throw SizeOutOfRange("whirl(n) needs 2 <= n <= 8");
  Polymatroid w = cycle_matroid(wheel_graph(n));
  std::vector<std::uint8_t> table(w.table().begin(), w.table().end());
  Subset rim = 0;
  for (int i = 0; i < n; ++i) rim |= bit(2 * i + 1);
  table[rim] = static_cast<std::uint8_t>(table[rim] + 1);
  std::vector<int> check(table.begin(), table.end());
  return Polymatroid::validate(w.elements(), check);
}

Polymatroid from_flats(const FlatAssignment& fa) {
  const Polymatroid& m = fa.matroid;
  if (!is_matroid(m)) throw PreconditionViolated("from_flats needs a matroid");
  std::vector<std::string> labels;
  for (const auto& [label, flat] : fa.psi) {
    if (!is_subset(flat, m.ground()) || closure(m, flat) != flat) {
      throw NotAFlat("psi(" + label + ") is not a flat");
    }
    labels.push_back(label);
  }
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw SizeOutOfRange("more than 16 labels");
  std::vector<Subset> unions(std::size_t{1} << n, 0);
  std::vector<int> table(unions.size(), 0);
  for (Subset x = 1; x < unions.size(); ++x) {
    unions[x] = unions[x & (x - 1)] | fa.psi[static_cast<std::size_t>(lowest(x))].second;
    table[x] = m.rank(unions[x]);
  }
  return Polymatroid::validate(std::move(labels), table);
}

const char* to_string(Filter filter) {
  switch (filter) {
    case Filter::All: return "all";
    case Filter::TwoConnected: return "two_connected";
    case Filter::ThreeConnected: return "three_connected";
    case Filter::Compact: return "compact";
  }
  return "?";
}

Filter parse_filter(const std::string& name) {
  for (Filter f : {Filter::All, Filter::TwoConnected, Filter::ThreeConnected, Filter::Compact}) {
    if (name == to_string(f)) return f;
  }
  throw PreconditionViolated("unknown filter '" + name + "'");
}

namespace {

// Depth-first extension in bitmask order. Each local submodular inequality
// has a unique largest set, so bounding r(X) by the pairs below X enforces
// all of them exactly once.
struct Extender {
  int n;
  std::vector<std::uint8_t> t;
  const std::function<void(std::span<const std::uint8_t>)>& visit;
  bool singletons_fixed = false;

  void run(Subset x) {
    if (x == t.size()) {
      visit(t);
      return;
    }
    if (card(x) == 1) {
      if (singletons_fixed) return run(x + 1);
      for (int v = 0; v <= 2; ++v) {
        t[x] = static_cast<std::uint8_t>(v);
        run(x + 1);
      }
      return;
    }
    int lo = 0;
    int hi = 255;
    for (int a = 0; a < n; ++a) {
      if (!has(x, a)) continue;
      lo = std::max<int>(lo, t[x & ~bit(a)]);
      for (int b = a + 1; b < n; ++b) {
        if (!has(x, b)) continue;
        hi = std::min<int>(hi, t[x & ~bit(a)] + t[x & ~bit(b)] - t[x & ~bit(a) & ~bit(b)]);
      }
    }
    for (int v = lo; v <= hi; ++v) {
      t[x] = static_cast<std::uint8_t>(v);
      run(x + 1);
    }
  }
};

bool passes(Filter filter, std::span<const std::uint8_t> t, int n) {
  if (filter == Filter::All) return true;
  Polymatroid m = assemble(default_labels(n), std::vector<std::uint8_t>(t.begin(), t.end()));
  switch (filter) {
    case Filter::TwoConnected: return is_2_connected(m);
    case Filter::ThreeConnected: return is_3_connected(m);
    case Filter::Compact: return is_compact(m);
    default: return true;
  }
}

}  // namespace

void for_each_labelled(int n, const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (n < 0 || n > 5) throw SizeOutOfRange("exhaustive enumeration is limited to n <= 5");
  Extender ex{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0), visit};
  ex.run(1);
}

std::vector<Polymatroid> enumerate_small(int n, Filter filter, int jobs) {
  if (n < 0 || n > 5) throw SizeOutOfRange("exhaustive enumeration is limited to n <= 5");
  jobs = std::max(1, jobs);
  // Shards are the 3^n choices of singleton ranks.
  int shards = 1;
  for (int i = 0; i < n; ++i) shards *= 3;
  std::vector<std::set<std::vector<std::uint8_t>>> found(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    auto& bucket = found[static_cast<std::size_t>(worker)];
    std::function<void(std::span<const std::uint8_t>)> leaf = [&](std::span<const std::uint8_t> t) {
      if (passes(filter, t, n)) bucket.insert(canonical_form(t, n).table);
    };
    for (int s = worker; s < shards; s += jobs) {
      Extender ex{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0), leaf, true};
      for (int i = 0, code = s; i < n; ++i, code /= 3) ex.t[bit(i)] = static_cast<std::uint8_t>(code % 3);
      ex.run(1);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::set<std::vector<std::uint8_t>> merged;
  for (auto& b : found) merged.insert(b.begin(), b.end());
  std::vector<Polymatroid> out;
  for (const auto& t : merged) out.push_back(assemble(default_labels(n), t));
  return out;
}

}  // namespace pm
