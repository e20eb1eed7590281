#include "pm/ops.hpp"

#include <algorithm>
#include <set>

#include "pm/kernels.hpp"

namespace pm {

namespace {

void require_subset(const Polymatroid& m, Subset x) {
  if (!is_subset(x, m.ground())) throw UnknownElement("subset mentions elements outside the ground set");
}

void require_element(const Polymatroid& m, int x) {
  if (x < 0 || x >= m.size()) throw UnknownElement("element index out of range");
}

// out[y] = source(unpacked y), where y runs over subsets of `keep`.
template <typename Fn>
std::vector<int> over_subsets(Subset keep, Fn&& source) {
  std::vector<int> idx;
  for_each_index(keep, [&](int i) { idx.push_back(i); });
  std::vector<Subset> full(std::size_t{1} << idx.size(), 0);
  std::vector<int> out(full.size());
  out[0] = source(Subset{0});
  for (Subset y = 1; y < full.size(); ++y) {
    full[y] = full[y & (y - 1)] | bit(idx[static_cast<std::size_t>(lowest(y))]);
    out[y] = source(full[y]);
  }
  return out;
}

}  // namespace

Polymatroid minor(const Polymatroid& m, Subset c, Subset d) {
  require_subset(m, c | d);
  if (c & d) throw PreconditionViolated("contract and delete sets overlap");
  const Subset keep = m.ground() & ~(c | d);
  const int rc = m.rank(c);
  auto table = over_subsets(keep, [&](Subset x) { return m.rank(x | c) - rc; });
  return assemble_int(m.labels(keep), table);
}

Polymatroid delete_set(const Polymatroid& m, Subset x) { return minor(m, 0, x); }

Polymatroid contract(const Polymatroid& m, Subset x) { return minor(m, x, 0); }

Polymatroid compactify(const Polymatroid& m) {
  const int n = m.size();
  std::vector<std::int8_t> delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    delta[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(m.rank(m.ground() & ~bit(i)) - m.rank());
  }
  std::vector<std::uint8_t> out(m.table().size());
  kernels::active().add_weights(m.table(), n, delta, out);
  return assemble(m.elements(), std::move(out));
}

Polymatroid compactified_delete(const Polymatroid& m, Subset x) { return compactify(delete_set(m, x)); }

Polymatroid dual(const Polymatroid& m) {
  std::vector<std::uint8_t> out(m.table().size());
  kernels::active().dual(m.table(), m.size(), out);
  return assemble(m.elements(), std::move(out));
}

namespace {

int compressed_rank(const Polymatroid& m, int x, Subset s) {
  const int r = m.rank(s);
  if (m.rank(bit(x)) == 0 || m.rank(s | bit(x)) > r) return r;
  return r - 1;
}

}  // namespace

Polymatroid compress(const Polymatroid& m, int x) {
  require_element(m, x);
  auto table = over_subsets(m.ground() & ~bit(x), [&](Subset s) { return compressed_rank(m, x, s); });
  return assemble_int(m.labels(m.ground() & ~bit(x)), table);
}

Polymatroid compactify_element(const Polymatroid& m, int x) {
  require_element(m, x);
  auto table = over_subsets(m.ground(), [&](Subset s) { return compressed_rank(m, x, s); });
  return assemble_int(m.elements(), table);
}

Polymatroid free_add_point(const Polymatroid& m, int x, const std::string& label) {
  require_element(m, x);
  if (m.find(label)) throw DuplicateLabel("label '" + label + "' already present");
  if (m.size() >= kMaxElements) throw SizeOutOfRange("free addition would exceed 16 elements");
  const Subset half = bit(m.size());
  std::vector<std::uint8_t> table(half * 2);
  for (Subset s = 0; s < half; ++s) {
    const int r = m.rank(s);
    table[s] = static_cast<std::uint8_t>(r);
    table[s | half] = static_cast<std::uint8_t>(m.rank(s | bit(x)) == r ? r : r + 1);
  }
  auto labels = m.elements();
  labels.push_back(label);
  return assemble(std::move(labels), std::move(table));
}

std::string fresh_label(const Polymatroid& m, const std::string& stem) {
  std::string out = stem;
  while (m.find(out)) out += "'";
  return out;
}

NaturalMatroid natural_matroid(const Polymatroid& m) {
  const Subset ls = lines(m);
  if (m.size() + card(ls) > kMaxElements) {
    throw SizeOutOfRange("natural matroid would have more than 16 elements");
  }
  NaturalMatroid out{m, {}};
  std::vector<std::string> order;
  for (int i = 0; i < m.size(); ++i) {
    if (!has(ls, i)) {
      order.push_back(m.label(i));
      continue;
    }
    NaturalLine nl{m.label(i), "", ""};
    nl.s = fresh_label(out.matroid, "s_" + m.label(i));
    out.matroid = free_add_point(out.matroid, i, nl.s);
    nl.t = fresh_label(out.matroid, "t_" + m.label(i));
    out.matroid = free_add_point(out.matroid, i, nl.t);
    order.push_back(nl.s);
    order.push_back(nl.t);
    out.scheme.push_back(nl);
  }
  out.matroid = reorder(delete_set(out.matroid, ls), order);
  return out;
}

Polymatroid direct_sum(const Polymatroid& a, const Polymatroid& b) {
  for (const auto& l : b.elements()) {
    if (a.find(l)) throw DuplicateLabel("label '" + l + "' appears in both summands");
  }
  if (a.size() + b.size() > kMaxElements) throw SizeOutOfRange("direct sum exceeds 16 elements");
  const Subset na = bit(a.size());
  std::vector<std::uint8_t> table(na * bit(b.size()));
  for (Subset y = 0; y < bit(b.size()); ++y) {
    for (Subset x = 0; x < na; ++x) {
      table[x | (y << a.size())] = static_cast<std::uint8_t>(a.rank(x) + b.rank(y));
    }
  }
  auto labels = a.elements();
  labels.insert(labels.end(), b.elements().begin(), b.elements().end());
  return assemble(std::move(labels), std::move(table));
}

Polymatroid parallel_connection(const Polymatroid& a, const Polymatroid& b, const std::string& p) {
  const int pa = a.index(p);
  const int pb = b.index(p);
  for (const auto& l : b.elements()) {
    if (l != p && a.find(l)) throw PreconditionViolated("ground sets share '" + l + "' besides the basepoint");
  }
  if (a.rank(bit(pa)) != b.rank(bit(pb))) {
    throw BasepointRankMismatch("basepoint '" + p + "' has ranks " + std::to_string(a.rank(bit(pa))) +
                                " and " + std::to_string(b.rank(bit(pb))));
  }
  if (a.size() + b.size() - 1 > kMaxElements) throw SizeOutOfRange("parallel connection exceeds 16 elements");
  const int rp = a.rank(bit(pa));
  const Subset b_rest = b.ground() & ~bit(pb);
  const int na = a.size();
  std::vector<std::uint8_t> table(std::size_t{1} << (na + b.size() - 1));
  for (Subset y = 0; y < bit(b.size() - 1); ++y) {
    const Subset yb = unpack_bits(y, b_rest);
    for (Subset x = 0; x < bit(na); ++x) {
      const Subset xb = has(x, pa) ? (yb | bit(pb)) : yb;
      const int plain = a.rank(x) + b.rank(xb);
      const int joined = a.rank(x | bit(pa)) + b.rank(yb | bit(pb)) - rp;
      table[x | (y << na)] = static_cast<std::uint8_t>(std::min(plain, joined));
    }
  }
  auto labels = a.elements();
  for (const auto& l : b.elements()) {
    if (l != p) labels.push_back(l);
  }
  return assemble(std::move(labels), std::move(table));
}

Polymatroid two_sum(const Polymatroid& a, const Polymatroid& b, const std::string& p) {
  const int pa = a.index(p);
  const int pb = b.index(p);
  if (a.rank(bit(pa)) != 1 || b.rank(bit(pb)) != 1) {
    throw BasepointRankMismatch("2-sum basepoint '" + p + "' must be a point in both parts");
  }
  if (a.size() < 2 || b.size() < 2) throw TooSmall("2-sum parts need at least two elements");
  for (const Polymatroid* part : {&a, &b}) {
    const int i = part->index(p);
    if (part->rank(bit(i)) + part->rank(part->ground() & ~bit(i)) == part->rank()) {
      throw DegenerateBasepoint("basepoint '" + p + "' is separated from the rest of a part");
    }
  }
  Polymatroid joined = parallel_connection(a, b, p);
  return delete_set(joined, bit(joined.index(p)));
}

TwoSumParts two_sum_decompose(const Polymatroid& m, Subset x) {
  require_subset(m, x);
  const Subset y = m.ground() & ~x;
  if (x == 0 || y == 0 || m.rank(x) + m.rank(y) != m.rank() + 1) {
    throw NotAnExact2Separation("partition is not an exact 2-separation");
  }
  std::string p;
  for (int k = 0;; ++k) {
    p = "_p" + std::to_string(k);
    if (!m.find(p)) break;
  }
  auto part = [&](Subset side, Subset other) {
    const int ro = m.rank(other);
    const int k = card(side);
    std::vector<int> table(std::size_t{1} << (k + 1));
    for (Subset a = 0; a < bit(k); ++a) {
      const Subset s = unpack_bits(a, side);
      table[a] = m.rank(s);
      table[a | bit(k)] = m.rank(s | other) - ro + 1;
    }
    auto labels = m.labels(side);
    labels.push_back(p);
    return assemble_int(std::move(labels), table);
  };
  return {part(x, y), part(y, x), p};
}

Polymatroid relabel(const Polymatroid& m, const std::map<std::string, std::string>& map) {
  for (const auto& [from, to] : map) m.index(from);
  auto labels = m.elements();
  for (auto& l : labels) {
    auto it = map.find(l);
    if (it != map.end()) l = it->second;
  }
  return assemble(std::move(labels), std::vector<std::uint8_t>(m.table().begin(), m.table().end()));
}

Polymatroid relabel(const Polymatroid& m, const IsoWitness& witness) {
  std::map<std::string, std::string> map(witness.bijection.begin(), witness.bijection.end());
  return relabel(m, map);
}

Polymatroid reorder(const Polymatroid& m, const std::vector<std::string>& order) {
  if (static_cast<int>(order.size()) != m.size()) throw PreconditionViolated("order must list every element once");
  std::vector<int> from;
  Subset seen = 0;
  for (const auto& l : order) {
    int i = m.index(l);
    if (has(seen, i)) throw DuplicateLabel("order repeats '" + l + "'");
    seen |= bit(i);
    from.push_back(i);
  }
  std::vector<Subset> image(m.table().size(), 0);
  std::vector<std::uint8_t> table(m.table().size(), 0);
  for (Subset x = 1; x < table.size(); ++x) {
    image[x] = image[x & (x - 1)] | bit(from[static_cast<std::size_t>(lowest(x))]);
    table[x] = static_cast<std::uint8_t>(m.rank(image[x]));
  }
  return assemble(order, std::move(table));
}

}  // namespace pm
