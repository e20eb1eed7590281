#include "pm/conn.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pm/kernels.hpp"
#include "pm/ops.hpp"

namespace pm {

int lambda(const Polymatroid& m, Subset x) {
  return m.rank(x) + m.rank(m.ground() & ~x) - m.rank();
}

std::vector<std::uint8_t> lambda_table(const Polymatroid& m) {
  std::vector<std::uint8_t> out(m.table().size());
  kernels::active().connectivity(m.table(), m.size(), out);
  return out;
}

int local_conn(const Polymatroid& m, Subset x, Subset y) {
  return m.rank(x) + m.rank(y) - m.rank(x | y);
}

int local_conn_dual(const Polymatroid& m, Subset x, Subset y) {
  if (x & y) throw PreconditionViolated("dual local connectivity needs disjoint sets");
  const Subset rest = m.ground() & ~(x | y);
  const int r = m.rank(rest);
  auto rc = [&](Subset s) { return m.rank(s | rest) - r; };
  return rc(x) + rc(y) - rc(x | y);
}

namespace {

bool big(const Polymatroid& m, Subset s) { return card(s) > 1 || m.rank(s) > 1; }

}  // namespace

bool is_2_separation(const Polymatroid& m, Subset x) {
  const Subset y = m.ground() & ~x;
  return lambda(m, x) <= 1 && big(m, x) && big(m, y);
}

bool is_3_separation(const Polymatroid& m, Subset x) {
  const Subset y = m.ground() & ~x;
  return lambda(m, x) <= 2 && m.rank(x) > 2 && m.rank(y) > 2;
}

bool is_exactly_3_separating(const Polymatroid& m, Subset x) { return lambda(m, x) == 2; }

std::vector<Separation> separations(const Polymatroid& m, int k) {
  if (k < 1 || k > 3) throw PreconditionViolated("separations: k must be 1, 2 or 3");
  std::vector<Separation> out;
  if (m.size() < 2) return out;
  const auto lam = lambda_table(m);
  const Subset e = m.ground();
  for (Subset x = 1; x < e; x += 2) {
    const int l = lam[x];
    if (l > k - 1) continue;
    Separation s;
    s.side_x = x;
    s.side_y = e & ~x;
    s.lambda = l;
    s.exact = l == k - 1;
    auto single_line = [&](Subset side) { return card(side) == 1 && m.rank(side) == 2; };
    s.trivial = l == 1 && (single_line(s.side_x) || single_line(s.side_y));
    if (k == 1) {
      s.proper = true;
    } else if (k == 2) {
      s.proper = big(m, s.side_x) && big(m, s.side_y);
    } else {
      s.proper = m.rank(s.side_x) > 2 && m.rank(s.side_y) > 2;
    }
    out.push_back(s);
  }
  return out;
}

bool is_2_connected(const Polymatroid& m) {
  if (m.size() < 2) return true;
  const auto lam = lambda_table(m);
  for (Subset x = 1; x < m.ground(); x += 2) {
    if (lam[x] == 0) return false;
  }
  return true;
}

bool is_3_connected(const Polymatroid& m) {
  if (m.size() < 2) return true;
  const auto lam = lambda_table(m);
  const Subset e = m.ground();
  for (Subset x = 1; x < e; x += 2) {
    if (lam[x] == 0) return false;
    if (lam[x] == 1 && big(m, x) && big(m, e & ~x)) return false;
  }
  return true;
}

std::optional<PricklyCertificate> prickly_certificate(const Polymatroid& m, Subset z) {
  if (!is_subset(z, m.ground()) || card(z) < 2) return std::nullopt;
  PricklyCertificate cert;
  cert.z = z;
  bool ok = true;
  for_each_index(z, [&](int i) {
    cert.kinds.push_back(element_kind(m, i));
    if (cert.kinds.back() != ElementKind::Line) ok = false;
  });
  cert.lambda = lambda(m, z);
  if (!ok || cert.lambda != 2) return std::nullopt;
  const Subset rest = m.ground() & ~z;
  const int r_rest = m.rank(rest);
  const int size = card(z);
  bool good = true;
  for_each_subset(z, [&](Subset part) {
    if (!good) return;
    if (part != z) {
      const int v = m.rank(rest | part);
      cert.spanning.emplace_back(part, v);
      if (v != r_rest + card(part)) good = false;
    }
    if (part == 0) return;
    const int v = m.rank(part);
    cert.profile.emplace_back(part, v);
    const int want = card(part) == 1 ? 2 : (part == z ? size + 1 : card(part) + 2);
    if (v != want) good = false;
  });
  if (!good) return std::nullopt;
  return cert;
}

bool is_prickly(const Polymatroid& m, Subset z) { return prickly_certificate(m, z).has_value(); }

std::vector<PricklyCertificate> prickly_separators(const Polymatroid& m, int size_cap) {
  std::vector<PricklyCertificate> out;
  const Subset ls = lines(m);
  for_each_subset(ls, [&](Subset z) {
    if (card(z) < 2 || card(z) > size_cap) return;
    if (auto c = prickly_certificate(m, z)) out.push_back(std::move(*c));
  });
  return out;
}

std::vector<Subset> prickly_pairs(const Polymatroid& m) {
  std::vector<Subset> out;
  for (const auto& c : prickly_separators(m, 2)) out.push_back(c.z);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle(const Polymatroid& m, Subset t) {
  if (card(t) != 3 || !is_subset(t, points(m))) return false;
  bool ok = true;
  for_each_subset(t, [&](Subset s) {
    if (card(s) >= 2 && m.rank(s) != 2) ok = false;
  });
  return ok;
}

bool is_triad(const Polymatroid& m, Subset t) {
  if (card(t) != 3 || !is_subset(t, points(m))) return false;
  const Subset rest = m.ground() & ~t;
  if (m.rank(rest) != m.rank() - 1) return false;
  bool ok = true;
  for_each_index(t, [&](int i) {
    if (m.rank(rest | bit(i)) != m.rank()) ok = false;
  });
  return ok;
}

namespace {

std::vector<Subset> triples_where(const Polymatroid& m, bool (*pred)(const Polymatroid&, Subset)) {
  std::vector<Subset> out;
  for (Subset t = 0; t < bit(m.size()); ++t) {
    if (card(t) == 3 && pred(m, t)) out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<Subset> triangles(const Polymatroid& m) { return triples_where(m, is_triangle); }
std::vector<Subset> triads(const Polymatroid& m) { return triples_where(m, is_triad); }

const char* to_string(FanStart start) { return start == FanStart::Triangle ? "triangle" : "triad"; }

namespace {

struct FanSearch {
  const Polymatroid& m;
  std::set<Subset> tri, tad;
  // (triples used, element set) -> least sequence and its start
  std::map<std::pair<std::vector<std::pair<Subset, int>>, Subset>, std::pair<std::vector<int>, FanStart>> found;

  bool role(Subset t, int type) const { return type == 0 ? tri.count(t) > 0 : tad.count(t) > 0; }

  // Type required for the triple starting at position i of a fan with `start`.
  static int type_at(int start, std::size_t i) { return static_cast<int>((static_cast<std::size_t>(start) + i) % 2); }

  bool extendable(const std::vector<int>& seq, int start, Subset used) const {
    const std::size_t k = seq.size();
    const int right = type_at(start, k - 2);
    for (int x = 0; x < m.size(); ++x) {
      if (has(used, x)) continue;
      if (role(bit(seq[k - 2]) | bit(seq[k - 1]) | bit(x), right)) return true;
      if (role(bit(x) | bit(seq[0]) | bit(seq[1]), 1 - start)) return true;
    }
    return false;
  }

  void grow(std::vector<int>& seq, int start, Subset used) {
    if (seq.size() >= 3 && !extendable(seq, start, used)) record(seq, start, used);
    const std::size_t k = seq.size();
    const int want = type_at(start, k - 2);
    for (int x = 0; x < m.size(); ++x) {
      if (has(used, x) || !has(points(m), x)) continue;
      if (!role(bit(seq[k - 2]) | bit(seq[k - 1]) | bit(x), want)) continue;
      seq.push_back(x);
      grow(seq, start, used | bit(x));
      seq.pop_back();
    }
  }

  void record(const std::vector<int>& seq, int start, Subset used) {
    std::vector<std::pair<Subset, int>> key;
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
      key.emplace_back(bit(seq[i]) | bit(seq[i + 1]) | bit(seq[i + 2]), type_at(start, i));
    }
    std::sort(key.begin(), key.end());
    auto k = std::make_pair(key, used);
    auto rep = std::make_pair(seq, start == 0 ? FanStart::Triangle : FanStart::Triad);
    auto it = found.find(k);
    if (it == found.end() || rep.first < it->second.first) found[k] = rep;
  }
};

}  // namespace

std::vector<FanRecord> fans(const Polymatroid& m) {
  FanSearch search{m, {}, {}, {}};
  for (Subset t : triangles(m)) search.tri.insert(t);
  for (Subset t : triads(m)) search.tad.insert(t);
  const Subset pts = points(m);
  for (int start = 0; start < 2; ++start) {
    for (int a = 0; a < m.size(); ++a) {
      for (int b = 0; b < m.size(); ++b) {
        if (a == b || !has(pts, a) || !has(pts, b)) continue;
        std::vector<int> seq{a, b};
        search.grow(seq, start, bit(a) | bit(b));
      }
    }
  }
  // Keep one representative per key; the same key is reached from both
  // orientations, and reversal can flip the start type.
  std::vector<std::pair<std::vector<int>, FanStart>> reps;
  for (const auto& [key, rep] : search.found) reps.push_back(rep);
  std::sort(reps.begin(), reps.end());
  std::vector<FanRecord> out;
  for (const auto& [seq, start] : reps) {
    FanRecord r;
    for (int i : seq) r.labels.push_back(m.label(i));
    r.start = start;
    out.push_back(std::move(r));
  }
  return out;
}

ThreeElementClass classify_three_element(const Polymatroid& p, int marked) {
  if (p.size() != 3) throw PreconditionViolated("classification needs exactly three elements");
  if (marked < 0 || marked > 2 || p.rank(bit(marked)) != 1) {
    throw PreconditionViolated("marked element must be a point");
  }
  if (!is_2_connected(p)) throw PreconditionViolated("classification needs a 2-connected polymatroid");
  if (p.rank() < 2) throw PreconditionViolated("classification needs rank at least 2");
  ThreeElementClass c;
  c.rank = p.rank();
  const Subset others = p.ground() & ~bit(marked);
  c.other_pair_rank = p.rank(others);
  for_each_index(others, [&](int i) {
    const int r = p.rank(bit(i));
    if (r == 2) {
      ++c.lines;
      if (p.rank(bit(i) | bit(marked)) == 2) ++c.lines_through_p;
    } else if (r == 1 && p.rank(bit(i) | bit(marked)) == 1) {
      ++c.points_parallel_to_p;
    }
  });
  switch (c.rank) {
    case 2:
      if (c.lines == 0) c.number = 1;
      else if (c.lines == 1) c.number = c.points_parallel_to_p == 0 ? 2 : 3;
      else c.number = 4;
      break;
    case 3:
      if (c.lines == 1) c.number = 7;
      else if (c.lines == 2) c.number = c.lines_through_p == 2 ? 6 : (c.lines_through_p == 1 ? 5 : 8);
      break;
    case 4:
      if (c.lines == 2) c.number = 9;
      break;
    default:
      break;
  }
  if (c.number == 0) throw PreconditionViolated("three-element polymatroid outside the nine classes");
  c.descriptor = "rank=" + std::to_string(c.rank) + " lines=" + std::to_string(c.lines) +
                 " lines_through_p=" + std::to_string(c.lines_through_p) +
                 " points_parallel_to_p=" + std::to_string(c.points_parallel_to_p) +
                 " r(others)=" + std::to_string(c.other_pair_rank);
  return c;
}

int mu(const Polymatroid& m, std::span<const std::string> n_elements, int ell, MuSide side,
       bool reduct_has_n_minor) {
  if (ell < 0 || ell >= m.size()) throw UnknownElement("element index out of range");
  if (!reduct_has_n_minor) throw Undefined("the reduct has no N-minor");
  const Polymatroid reduct = side == MuSide::Delete ? compactified_delete(m, bit(ell)) : contract(m, bit(ell));
  Subset n_set = 0;
  for (const auto& l : n_elements) {
    if (auto i = reduct.find(l)) n_set |= bit(*i);
  }
  const int threshold = static_cast<int>(n_elements.size()) - 1;
  int best = -1;
  for (const auto& s : separations(reduct, 2)) {
    if (!s.proper) continue;
    const bool x_far = card(s.side_x & n_set) < threshold;
    const bool y_far = card(s.side_y & n_set) < threshold;
    if (x_far == y_far) throw AmbiguousSide("cannot tell the N-side of a 2-separation");
    best = std::max(best, card(x_far ? s.side_x : s.side_y));
  }
  if (best < 0) throw NoTwoSeparation("the reduct has no 2-separation");
  return best;
}

}  // namespace pm
