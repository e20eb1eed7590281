#include "pm/minors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "pm/conn.hpp"
#include "pm/ops.hpp"

namespace pm {

Polymatroid replay(const Polymatroid& m, const MinorWitness& w) {
  Polymatroid p = minor(m, m.subset(w.contract_set), m.subset(w.delete_set));
  if (w.final_compactify) p = compactify(p);
  for (const auto& step : w.compression_chain) {
    const Subset pair = p.subset({step.partner, step.compressed});
    if (!is_prickly(p, pair)) {
      throw PreconditionViolated("{" + step.partner + "," + step.compressed + "} is not prickly");
    }
    p = compress(p, p.index(step.compressed));
  }
  if (w.relabel) p = relabel(p, {{w.relabel->first, w.relabel->second}});
  if (w.to_target) p = relabel(p, *w.to_target);
  return p;
}

namespace {

void require_compact(const Polymatroid& p, const char* which) {
  if (!is_compact(p)) throw NotCompact(std::string(which) + " is not compact");
}

std::array<int, 3> kind_counts(const Polymatroid& p) {
  std::array<int, 3> c{0, 0, 0};
  for (int i = 0; i < p.size(); ++i) c[static_cast<std::size_t>(p.rank(bit(i)))]++;
  return c;
}

// Calls fn(C, D, Q) for Q = (M/C\D) compactified, where E(Q) ranges over
// the `keep` sets of the given size in increasing bitmask order and C over
// subsets of the rest. Stops when fn returns true.
bool for_each_c_minor(const Polymatroid& m, int size, Subset required,
                      const std::function<bool(Subset, Subset, const Polymatroid&)>& fn) {
  const Subset e = m.ground();
  for (Subset keep = 0; keep <= e; ++keep) {
    if (card(keep) != size || !is_subset(required, keep)) continue;
    const Subset rest = e & ~keep;
    bool stop = false;
    for_each_subset(rest, [&](Subset c) {
      if (stop) return;
      Polymatroid q = compactify(minor(m, c, rest & ~c));
      if (fn(c, rest & ~c, q)) stop = true;
    });
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<MinorWitness> is_c_minor(const Polymatroid& m, const Polymatroid& n, MinorMode mode) {
  require_compact(n, "N");
  if (n.size() > m.size()) return std::nullopt;
  std::optional<MinorWitness> found;
  if (mode == MinorMode::Labelled) {
    Subset required = 0;
    for (const auto& l : n.elements()) {
      auto i = m.find(l);
      if (!i) return std::nullopt;
      required |= bit(*i);
    }
    for_each_c_minor(m, n.size(), required, [&](Subset c, Subset d, const Polymatroid& q) {
      if (!(q == n)) return false;
      found = MinorWitness{m.labels(c), m.labels(d), {}, std::nullopt, true, std::nullopt};
      return true;
    });
    return found;
  }
  const auto kinds = kind_counts(n);
  for_each_c_minor(m, n.size(), 0, [&](Subset c, Subset d, const Polymatroid& q) {
    if (kind_counts(q) != kinds) return false;
    auto iso = is_isomorphic(q, n);
    if (!iso) return false;
    found = MinorWitness{m.labels(c), m.labels(d), {}, std::nullopt, true, iso};
    return true;
  });
  return found;
}

std::optional<MinorWitness> special_n_minor(const Polymatroid& m, const Polymatroid& n) {
  require_compact(n, "N");
  if (auto w = is_c_minor(m, n, MinorMode::Labelled)) return w;
  for (int q = 0; q < n.size(); ++q) {
    if (n.rank(bit(q)) != 1) continue;
    for (int s = 0; s < m.size(); ++s) {
      const std::string& sub = m.label(s);
      if (n.find(sub)) continue;
      Polymatroid target = relabel(n, {{n.label(q), sub}});
      if (auto w = is_c_minor(m, target, MinorMode::Labelled)) {
        w->relabel = std::make_pair(sub, n.label(q));
        return w;
      }
    }
  }
  return std::nullopt;
}

namespace {

struct SeriesSearch {
  const Polymatroid& n;
  MinorMode mode;
  std::array<int, 3> target_kinds;
  std::set<std::vector<std::uint8_t>> dead;  // iso mode: canonical tables already explored
  std::vector<CompressionStep> chain;
  std::optional<IsoWitness> iso;

  bool matches(const Polymatroid& p) {
    if (mode == MinorMode::Labelled) return p == n;
    if (kind_counts(p) != target_kinds) return false;
    iso = is_isomorphic(p, n);
    return iso.has_value();
  }

  bool search(const Polymatroid& p) {
    if (p.size() == n.size()) return matches(p);
    if (card(lines(p)) < p.size() - n.size()) return false;
    if (mode == MinorMode::UpToIso && p.size() <= 8) {
      if (!dead.insert(canonical_form(p).table).second) return false;
    }
    const auto pairs = prickly_pairs(p);
    for (int z = 0; z < p.size(); ++z) {
      if (mode == MinorMode::Labelled && n.find(p.label(z))) continue;
      int partner = -1;
      for (Subset pr : pairs) {
        if (has(pr, z)) {
          partner = lowest(pr & ~bit(z));
          break;
        }
      }
      if (partner < 0) continue;
      Polymatroid next = compress(p, z);
      chain.push_back({p.label(partner), p.label(z)});
      if (search(next)) return true;
      chain.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<MinorWitness> is_s_minor(const Polymatroid& m, const Polymatroid& n, MinorMode mode) {
  require_compact(m, "M");
  require_compact(n, "N");
  if (n.size() > m.size()) return std::nullopt;
  Subset required = 0;
  if (mode == MinorMode::Labelled) {
    for (const auto& l : n.elements()) {
      auto i = m.find(l);
      if (!i) return std::nullopt;
      required |= bit(*i);
    }
  }
  SeriesSearch search{n, mode, kind_counts(n), {}, {}, {}};
  std::optional<MinorWitness> found;
  for (int size = n.size(); size <= m.size() && !found; ++size) {
    for_each_c_minor(m, size, required, [&](Subset c, Subset d, const Polymatroid& q) {
      search.chain.clear();
      if (!search.search(q)) return false;
      found = MinorWitness{m.labels(c), m.labels(d), search.chain, std::nullopt, true,
                           mode == MinorMode::UpToIso ? search.iso : std::nullopt};
      return true;
    });
  }
  return found;
}

std::vector<std::string> doubly_labelled(const Polymatroid& m, const Polymatroid& n) {
  Polymatroid target = n;
  if (!is_c_minor(m, n, MinorMode::Labelled)) {
    auto w = is_c_minor(m, n, MinorMode::UpToIso);
    if (!w) throw PreconditionViolated("N is not a c-minor of M");
    target = relabel(n, w->to_target->inverse());
  }
  std::vector<std::string> out;
  for (int l = 0; l < m.size(); ++l) {
    if (special_n_minor(compactified_delete(m, bit(l)), target) &&
        special_n_minor(contract(m, bit(l)), target)) {
      out.push_back(m.label(l));
    }
  }
  return out;
}

}  // namespace pm
