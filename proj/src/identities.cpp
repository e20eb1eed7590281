#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "pm/conn.hpp"
#include "pm/ops.hpp"
#include "pm/splitter.hpp"

namespace pm {

namespace {

using Parts = std::array<Subset, 4>;

class Suite {
 public:
  Suite(const Polymatroid& m, long samples) : m_(m), samples_(samples), rng_(0x5eed5eedULL) {}

  IdentityReport report;

  /// Runs check(describe) once; exceptions count as failures.
  void once(const std::string& name, const std::function<bool()>& check) {
    auto& r = slot(name);
    run(r, check, [] { return std::string("M"); });
  }

  void per_element(const std::string& name, const std::function<bool(int)>& check) {
    auto& r = slot(name);
    for (int e = 0; e < m_.size(); ++e) {
      run(r, [&] { return check(e); }, [&] { return "e=" + m_.label(e); });
    }
  }

  void per_ordered_pair(const std::string& name, const std::function<bool(int, int)>& check) {
    auto& r = slot(name);
    for (int a = 0; a < m_.size(); ++a) {
      for (int b = 0; b < m_.size(); ++b) {
        if (a == b) continue;
        run(r, [&] { return check(a, b); }, [&] { return "(" + m_.label(a) + "," + m_.label(b) + ")"; });
      }
    }
  }

  /// Every labelling of E into k parts (exhaustive for n <= 4), else a
  /// fixed-seed sample of `samples` labellings.
  void per_partition(const std::string& name, int k, const std::function<bool(const Parts&)>& check) {
    auto& r = slot(name);
    const int n = m_.size();
    auto visit = [&](const std::vector<int>& part) {
      Parts p{0, 0, 0, 0};
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(part[static_cast<std::size_t>(i)])] |= bit(i);
      run(r, [&] { return check(p); }, [&] { return describe(p, k); });
    };
    std::vector<int> part(static_cast<std::size_t>(n), 0);
    if (n <= 4) {
      long total = 1;
      for (int i = 0; i < n; ++i) total *= k;
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
          part[static_cast<std::size_t>(i)] = static_cast<int>(c % k);
          c /= k;
        }
        visit(part);
      }
      return;
    }
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (long s = 0; s < samples_; ++s) {
      for (auto& v : part) v = pick(rng_);
      visit(part);
    }
  }

 private:
  IdentityResult& slot(const std::string& name) {
    report.results.push_back({name, 0, 0, ""});
    return report.results.back();
  }

  void run(IdentityResult& r, const std::function<bool()>& check, const std::function<std::string()>& where) {
    ++r.checked;
    bool ok = false;
    std::string why;
    try {
      ok = check();
    } catch (const Error& e) {
      why = std::string(" threw: ") + e.what();
    }
    if (ok) return;
    if (r.failed++ == 0) r.first_counterexample = where() + why;
  }

  std::string describe(const Parts& p, int k) const {
    std::ostringstream out;
    for (int i = 0; i < k; ++i) {
      out << (i ? " | " : "") << "{";
      bool first = true;
      for (const auto& l : m_.labels(p[static_cast<std::size_t>(i)])) {
        out << (first ? "" : ",") << l;
        first = false;
      }
      out << "}";
    }
    return out.str();
  }

  const Polymatroid& m_;
  long samples_;
  std::mt19937_64 rng_;
};

// Subset s of E(M), re-expressed inside a minor on the elements `keep`.
Subset inside(Subset s, Subset keep) { return pack_bits(s & keep, keep); }

int lambda_in(const Polymatroid& p, Subset s_packed) { return lambda(p, s_packed); }

bool parallel_line_to(const Polymatroid& m, int e) {
  for (int f = 0; f < m.size(); ++f) {
    if (f != e && m.rank(bit(f)) == 2 && m.rank(bit(e) | bit(f)) == 2) return true;
  }
  return false;
}

bool series_pair_of_points(const Polymatroid& m, int x, int y) {
  const Subset e = m.ground();
  return m.rank(bit(x)) == 1 && m.rank(bit(y)) == 1 &&
         m.rank(e & ~(bit(x) | bit(y))) == m.rank() - 1 && m.rank() - 1 < m.rank(e & ~bit(x)) &&
         m.rank(e & ~bit(x)) == m.rank(e & ~bit(y));
}

bool axioms_hold(const Polymatroid& m) {
  std::vector<int> t(m.table().begin(), m.table().end());
  return !first_axiom_violation(t, m.size()).has_value();
}

// One of the two shapes of the Bixby-type dichotomy for a point z.
bool bixby_shape(const Polymatroid& m, int z) {
  const Subset keep = m.ground() & ~bit(z);
  auto every_separation = [&](const Polymatroid& q, const std::function<bool(Subset)>& good_side) {
    if (!is_2_connected(q)) return false;
    for (Subset x = 1; x + 1 < bit(q.size()); ++x) {
      if (!is_2_separation(q, x)) continue;
      if (!good_side(x) && !good_side(q.ground() & ~x)) return false;
    }
    return true;
  };
  auto original = [&](Subset side) { return unpack_bits(side, keep); };
  const Polymatroid mc = contract(m, bit(z));
  const bool first = every_separation(mc, [&](Subset side) {
    if (card(side) != 2) return false;
    const Subset o = original(side);
    bool points = true;
    for_each_index(o, [&](int i) { points = points && m.rank(bit(i)) == 1; });
    return points && mc.rank(side) == 1 && mc.rank(bit(lowest(side))) == 1 &&
           mc.rank(side & (side - 1)) == 1;
  });
  if (first) return true;
  const Polymatroid md = delete_set(m, bit(z));
  return every_separation(md, [&](Subset side) {
    const Subset o = original(side);
    if (card(side) == 1) return m.rank(o) == 2;
    if (card(side) != 2) return false;
    const int a = lowest(side);
    const int b = lowest(side & (side - 1));
    return m.rank(bit(lowest(o))) == 1 && m.rank(o & (o - 1)) == 1 && series_pair_of_points(md, a, b);
  });
}

void whole(Suite& s, const Polymatroid& m) {
  s.once("axioms_hold", [&] { return axioms_hold(m); });
  s.once("double_dual_is_compactification", [&] { return dual(dual(m)) == compactify(m); });
  s.once("dual_is_compact", [&] { return is_compact(dual(m)); });
  s.once("compactification_idempotent", [&] {
    Polymatroid c = compactify(m);
    return is_compact(c) && compactify(c) == c;
  });
  s.once("dual_ignores_compactification", [&] {
    Polymatroid d = dual(m);
    return dual(compactify(m)) == d && compactify(d) == d;
  });
  s.once("compactify_element_chain", [&] {
    if (m.size() < 2 || !is_2_connected(m) || is_compact(m)) return true;
    Polymatroid p = m;
    for (int z = 0; z < m.size(); ++z) {
      if (m.rank(bit(z)) == 2 && lambda(m, bit(z)) == 1) p = compactify_element(p, z);
    }
    return p == compactify(m);
  });
  s.once("natural_matroid_connectivity", [&] {
    if (m.size() < 2 || m.size() + card(lines(m)) > kMaxElements) return true;
    Polymatroid nat = natural_matroid(m).matroid;
    return is_matroid(nat) && is_2_connected(nat) == is_2_connected(m) && is_3_connected(nat) == is_3_connected(m);
  });
  s.once("contraction_rank_of_compact_line", [&] {
    if (!is_compact(m)) return true;
    for (int x = 0; x < m.size(); ++x) {
      if (m.rank(bit(x)) != 2) continue;
      if (compress(m, x).rank() != m.rank() - 1 || contract(m, bit(x)).rank() != m.rank() - 2) return false;
    }
    return true;
  });
  s.once("triangle_triad_meet", [&] {
    for (Subset t : triangles(m)) {
      for (Subset d : triads(m)) {
        if (card(t & d) == 1) return false;
      }
    }
    return true;
  });
  s.once("triad_is_dual_triangle", [&] {
    if (!is_3_connected(m)) return true;
    Polymatroid d = dual(m);
    for (Subset t = 0; t <= m.ground(); ++t) {
      if (card(t) == 3 && is_triad(m, t) != is_triangle(d, t)) return false;
    }
    return true;
  });
}

void subsets(Suite& s, const Polymatroid& m) {
  const Subset e = m.ground();
  const Polymatroid d = dual(m);
  const Polymatroid c = compactify(m);
  s.per_partition("lambda_complement", 2, [&](const Parts& p) { return lambda(m, p[0]) == lambda(m, p[1]); });
  s.per_partition("lambda_dual_and_compactification", 2, [&](const Parts& p) {
    return lambda(m, p[0]) == lambda(d, p[0]) && lambda(m, p[0]) == lambda(c, p[0]);
  });
  s.per_partition("lambda_rank_plus_dual_rank", 2, [&](const Parts& p) {
    return lambda(m, p[0]) == m.rank(p[0]) + d.rank(p[0]) - norm(m, p[0]);
  });
  s.per_partition("norm_bounds_rank", 2, [&](const Parts& p) { return norm(m, p[0]) >= m.rank(p[0]); });
  s.per_partition("closure_extensive_idempotent", 2, [&](const Parts& p) {
    const Subset cl = closure(m, p[0]);
    return is_subset(p[0], cl) && closure(m, cl) == cl;
  });
  s.per_partition("contraction_dual", 2, [&](const Parts& p) {
    return dual(contract(m, p[0])) == compactified_delete(d, p[0]);
  });
  s.per_partition("compactified_deletion_absorbs", 2, [&](const Parts& p) {
    return compactified_delete(c, p[0]) == compactified_delete(m, p[0]);
  });
  s.per_partition("compactified_contraction_absorbs", 2, [&](const Parts& p) {
    return compactify(contract(c, p[0])) == compactify(contract(m, p[0]));
  });
  s.per_partition("contraction_keeps_compactness", 2, [&](const Parts& p) {
    return !is_compact(m) || is_compact(contract(m, p[0]));
  });
  s.per_partition("direct_sum_dual", 2, [&](const Parts& p) {
    if (p[0] == 0 || p[1] == 0 || lambda(m, p[0]) != 0) return true;
    Polymatroid a = delete_set(m, p[1]);
    Polymatroid b = delete_set(m, p[0]);
    return direct_sum(a, b) == m && dual(m) == direct_sum(dual(a), dual(b));
  });
  (void)e;
}

void pairs_of_sets(Suite& s, const Polymatroid& m) {
  const Subset e = m.ground();
  const Polymatroid d = dual(m);
  // Parts 0..2 of a 4-labelling give X = 0+1 and Y = 1+2 with X & Y = part 1.
  s.per_partition("lambda_uncrossing", 4, [&](const Parts& p) {
    const Subset x = p[0] | p[1], y = p[1] | p[2];
    return lambda(m, x) + lambda(m, y) >= lambda(m, x | y) + lambda(m, x & y);
  });
  s.per_partition("local_conn_monotone", 4, [&](const Parts& p) {
    const Subset x = p[0] | p[1], y = p[1] | p[2];
    bool ok = true;
    for_each_index(x, [&](int i) { ok = ok && local_conn(m, x & ~bit(i), y) <= local_conn(m, x, y); });
    return ok;
  });
  s.per_partition("closure_monotone", 4, [&](const Parts& p) {
    const Subset x = p[0], y = p[0] | p[1];
    return is_subset(closure(m, x), closure(m, y));
  });
  s.per_partition("local_conn_union", 3, [&](const Parts& p) {
    const Subset x = p[0], y = p[1];
    return lambda(m, x | y) == lambda(m, x) + lambda(m, y) - local_conn(m, x, y) - local_conn_dual(m, x, y);
  });
  s.per_partition("dual_local_conn_by_contraction", 3, [&](const Parts& p) {
    const Subset x = p[0], y = p[1], rest = p[2];
    const Polymatroid q = contract(m, rest);
    const Subset keep = e & ~rest;
    return local_conn_dual(m, x, y) == local_conn(d, x, y) &&
           local_conn(d, x, y) == local_conn(q, inside(x, keep), inside(y, keep));
  });
  s.per_partition("dual_local_conn_is_lambda", 3, [&](const Parts& p) {
    const Subset a = p[0], b = p[1], cc = p[2];
    const Subset keep = e & ~cc;
    return local_conn_dual(m, a, b) == lambda_in(contract(m, cc), inside(a, keep));
  });
  s.per_partition("local_conn_exchange", 4, [&](const Parts& p) {
    const Subset a = p[0], b = p[1], cc = p[2], dd = p[3];
    const bool two = local_conn(m, a | b, cc) + local_conn(m, a, b) == local_conn(m, a | cc, b) + local_conn(m, a, cc);
    const bool four = local_conn(m, a | b, cc | dd) + local_conn(m, a, b) + local_conn(m, cc, dd) ==
                      local_conn(m, a | cc, b | dd) + local_conn(m, a, cc) + local_conn(m, b, dd);
    return two && four;
  });
  s.per_partition("lambda_contract_vs_delete", 3, [&](const Parts& p) {
    const Subset a = p[0], b = p[1], z = p[2];
    const Subset keep = e & ~z;
    const int lc = lambda_in(contract(m, z), inside(a, keep));
    const int ld = lambda_in(delete_set(m, z), inside(a, keep));
    const bool general = lc == ld - local_conn(m, a, z) - local_conn(m, b, z) + lambda(m, z);
    const bool spanning = m.rank(keep) != m.rank() || lc == ld - local_conn(m, a, z) - local_conn(m, b, z) + m.rank(z);
    return general && spanning;
  });
  s.per_partition("three_part_local_conn", 3, [&](const Parts& p) {
    const Subset a = p[0], b = p[1], cc = p[2];
    if (lambda(m, a) != 1 || lambda(m, cc) != 1 || lambda(m, b) != 2) return true;
    return local_conn(m, a, b) == 1;
  });
  s.per_partition("lambda_drops_in_minors", 4, [&](const Parts& p) {
    const Subset x = p[0], cc = p[1], dd = p[2];
    const Subset keep = e & ~(cc | dd);
    const int small = lambda_in(minor(m, cc, dd), inside(x, keep));
    const bool equal = m.rank(x | cc) == m.rank(x) + m.rank(cc) &&
                       m.rank(e & ~x) + m.rank(e & ~dd) == m.rank() + m.rank(e & ~(x | dd));
    return small <= lambda(m, x) && (small == lambda(m, x)) == equal;
  });
  s.per_partition("deletion_lambda_closure", 3, [&](const Parts& p) {
    const Subset x = p[0], dd = p[1];
    const Subset keep = e & ~dd;
    if (m.rank(keep) != m.rank()) return true;
    const int ld = lambda_in(delete_set(m, dd), inside(x, keep));
    const bool first = (ld == lambda(m, x)) == is_subset(dd, closure(m, e & ~(x | dd)));
    const bool second = (ld == lambda(m, x | dd)) == is_subset(dd, closure(m, x));
    return first && second;
  });
  s.per_partition("minor_order", 3, [&](const Parts& p) {
    const Subset a = p[0], b = p[1];
    const Subset after_a = e & ~a;
    const Subset b_in = inside(b, after_a);
    return contract(contract(m, a), b_in) == contract(m, a | b) &&
           compactified_delete(compactified_delete(m, a), b_in) == compactified_delete(m, a | b) &&
           compactified_delete(contract(m, a), b_in) ==
               contract(compactified_delete(m, b), inside(a, e & ~b));
  });
}

void elements(Suite& s, const Polymatroid& m) {
  const Subset e = m.ground();
  const Polymatroid d = dual(m);
  s.per_element("compression_recipe", [&](int x) {
    const std::string fresh = fresh_label(m, "_x");
    if (m.size() >= kMaxElements) return true;
    Polymatroid ext = free_add_point(m, x, fresh);
    Polymatroid staged = delete_set(contract(ext, bit(m.size())), bit(x));
    return staged == compress(m, x);
  });
  s.per_element("compactify_element_then_delete", [&](int x) {
    return delete_set(compactify_element(m, x), bit(x)) == compress(m, x);
  });
  s.per_element("compression_of_point_is_contraction", [&](int x) {
    return m.rank(bit(x)) == 2 || compress(m, x) == contract(m, bit(x));
  });
  s.per_element("compression_dual", [&](int x) {
    if (m.rank(bit(x)) != 2 || parallel_line_to(m, x)) return true;
    return compress(d, x) == dual(compress(m, x));
  });
  s.per_element("bixby_dichotomy", [&](int z) {
    if (!is_3_connected(m) || m.rank(bit(z)) != 1) return true;
    return bixby_shape(m, z);
  });
  s.per_element("point_removal_keeps_2_connectivity", [&](int x) {
    if (m.size() < 2 || !is_2_connected(m) || m.rank(bit(x)) != 1) return true;
    return is_2_connected(delete_set(m, bit(x))) || is_2_connected(contract(m, bit(x)));
  });
  s.per_ordered_pair("free_additions_commute", [&](int a, int b) {
    if (m.size() + 2 > kMaxElements) return true;
    const std::string u = fresh_label(m, "_u"), v = fresh_label(m, "_v");
    Polymatroid one = free_add_point(free_add_point(m, a, u), b, v);
    Polymatroid two = free_add_point(free_add_point(m, b, v), a, u);
    return one == two;
  });
  s.per_ordered_pair("compression_commutes_with_minors", [&](int k, int y) {
    const int y_after = y - (y > k ? 1 : 0);
    const int k_after = k - (k > y ? 1 : 0);
    const Polymatroid ck = compress(m, k);
    return delete_set(ck, bit(y_after)) == compress(delete_set(m, bit(y)), k_after) &&
           contract(ck, bit(y_after)) == compress(contract(m, bit(y)), k_after);
  });
  s.per_ordered_pair("points_parallel_or_series", [&](int x, int f) {
    if (!is_2_connected(m) || m.rank(bit(x)) != 1 || m.rank(bit(f)) != 1) return true;
    const int xi = x - (x > f ? 1 : 0);
    const bool parallel = m.rank(bit(x) | bit(f)) == 1;
    const bool first = (lambda(contract(m, bit(f)), bit(xi)) == 0) == parallel;
    const bool second = (lambda(delete_set(m, bit(f)), bit(xi)) == 0) == series_pair_of_points(m, x, f);
    return first && second;
  });
  s.per_ordered_pair("compactify_line_commutes_with_compression", [&](int l, int k) {
    if (m.rank(bit(l)) != 2 || lambda(m, bit(l)) > 1) return true;
    const int l_after = l - (l > k ? 1 : 0);
    return compress(compactify_element(m, l), k) == compactify_element(compress(m, k), l_after);
  });
  s.per_ordered_pair("contraction_never_isolates_a_line", [&](int a, int l) {
    if (!is_3_connected(m)) return true;
    const int li = l - (l > a ? 1 : 0);
    const Polymatroid q = contract(m, bit(a));
    return !is_2_separation(q, bit(li));
  });
  s.per_ordered_pair("compressed_rank_through_partner", [&](int j, int k) {
    if (m.rank(bit(j)) != 2 || m.rank(bit(k)) != 2 || m.rank(bit(j) | bit(k)) != 3) return true;
    const Polymatroid ck = compress(m, k);
    const Subset keep = e & ~bit(k);
    bool ok = true;
    for_each_subset(keep, [&](Subset x) {
      if (has(x, j)) ok = ok && ck.rank(inside(x, keep)) == m.rank(x | bit(k)) - 1;
    });
    // A line other than j, k and not parallel to k is 2-separating before and after.
    for (int l = 0; l < m.size(); ++l) {
      if (l == j || l == k || m.rank(bit(l)) != 2 || m.rank(bit(l) | bit(k)) == 2) continue;
      ok = ok && (lambda(m, bit(l)) <= 1) == (lambda(ck, inside(bit(l), keep)) <= 1);
    }
    return ok;
  });
  s.per_partition("skew_contraction_separation", 3, [&](const Parts& p) {
    // p[2] must be a single element z; A = p[0], B = p[1].
    if (card(p[2]) != 1 || p[0] == 0 || p[1] == 0) return true;
    const Subset keep = e & ~p[2];
    const Polymatroid q = contract(m, p[2]);
    if (!is_2_separation(q, inside(p[0], keep)) || local_conn(m, p[0], p[2]) != 0) return true;
    bool ok = is_2_separation(m, p[0]);
    if (is_3_connected(m)) ok = ok && !(card(p[0]) == 1 && q.rank(inside(p[0], keep)) == 2);
    return ok;
  });
}

void prickly(Suite& s, const Polymatroid& m) {
  const Subset e = m.ground();
  const Polymatroid d = dual(m);
  auto each_pair = [&](const std::string& name, const std::function<bool(int, int)>& check) {
    s.per_ordered_pair(name, [&](int j, int k) {
      if (!is_prickly(m, bit(j) | bit(k))) return true;
      return check(j, k);
    });
  };
  each_pair("prickly_compressions_agree_up_to_relabel", [&](int j, int k) {
    return compress(m, j) == relabel(compress(m, k), {{m.label(j), m.label(k)}});
  });
  each_pair("prickly_compression_collapse", [&](int j, int k) {
    const Polymatroid ck = compress(m, k);
    const int ji = j - (j > k ? 1 : 0);
    const Subset jk = bit(j) | bit(k);
    return delete_set(ck, bit(ji)) == delete_set(m, jk) && contract(ck, bit(ji)) == contract(m, jk);
  });
  each_pair("prickly_compression_keeps_compactness", [&](int, int k) {
    return !is_compact(m) || is_compact(compress(m, k));
  });
  each_pair("prickly_compression_connectivity", [&](int j, int k) {
    return !is_3_connected(m) || (is_3_connected(compress(m, j)) && is_3_connected(compress(m, k)));
  });
  each_pair("prickly_contraction_cases", [&](int j, int k) {
    if (!is_compact(m)) return true;
    const Polymatroid ck = compress(m, k);
    for (int y = 0; y < m.size(); ++y) {
      if (y == j || y == k) continue;
      const Polymatroid my = contract(m, bit(y));
      const Subset keep = e & ~bit(y);
      const int jy = lowest(inside(bit(j), keep)), ky = lowest(inside(bit(k), keep));
      if (is_prickly(my, bit(jy) | bit(ky))) continue;
      const Polymatroid lhs = contract(ck, inside(bit(y), e & ~bit(k)));
      const bool one = m.rank(bit(j) | bit(k) | bit(y)) == 3 && lambda(my, bit(jy) | bit(ky)) == 0;
      const bool two = lhs == compactified_delete(my, bit(ky));
      const bool three = lhs == contract(my, bit(ky));
      const bool four = lhs == relabel(compactified_delete(my, bit(jy)), {{m.label(k), m.label(j)}});
      if (!(one || two || three || four)) return false;
    }
    return true;
  });
  s.per_partition("prickly_self_dual", 2, [&](const Parts& p) {
    if (card(p[0]) != 2) return true;
    return is_prickly(m, p[0]) == is_prickly(d, p[0]);
  });
}

struct Split {
  Subset x, y;
  TwoSumParts parts;
};

void two_sums(Suite& s, const Polymatroid& m) {
  auto each_split = [&](const std::string& name, const std::function<bool(const Split&)>& check) {
    s.per_partition(name, 2, [&](const Parts& p) {
      if (p[0] == 0 || p[1] == 0 || lambda(m, p[0]) != 1) return true;
      return check(Split{p[0], p[1], two_sum_decompose(m, p[0])});
    });
  };
  // As each_split, once per element y on the second side.
  auto each_y = [&](const std::string& name, const std::function<bool(const Split&, int)>& check) {
    each_split(name, [&](const Split& sp) {
      bool ok = true;
      for_each_index(sp.y, [&](int y) { ok = ok && check(sp, y); });
      return ok;
    });
  };
  each_split("two_sum_round_trip", [&](const Split& sp) {
    return two_sum(sp.parts.x_part, sp.parts.y_part, sp.parts.basepoint) == m;
  });
  each_split("parallel_connection_restricts", [&](const Split& sp) {
    const Polymatroid joined = parallel_connection(sp.parts.x_part, sp.parts.y_part, sp.parts.basepoint);
    const auto ys = m.labels(sp.y);
    return delete_set(joined, joined.subset(std::span<const std::string>(ys))) == sp.parts.x_part;
  });
  each_split("two_sum_connectivity", [&](const Split& sp) {
    const Polymatroid joined = parallel_connection(sp.parts.x_part, sp.parts.y_part, sp.parts.basepoint);
    const bool parts = is_2_connected(sp.parts.x_part) && is_2_connected(sp.parts.y_part);
    return parts == is_2_connected(m) && parts == is_2_connected(joined);
  });
  each_y("two_sum_deletion", [&](const Split& sp, int y) {
    const Polymatroid& my = sp.parts.y_part;
    const Polymatroid dely = delete_set(my, bit(my.index(m.label(y))));
    const int skew = local_conn(m, sp.x, sp.y & ~bit(y));
    if (lambda(dely, bit(dely.index(sp.parts.basepoint))) != skew) return false;
    return skew != 1 || delete_set(m, bit(y)) == two_sum(sp.parts.x_part, dely, sp.parts.basepoint);
  });
  each_y("two_sum_contraction", [&](const Split& sp, int y) {
    const Polymatroid& my = sp.parts.y_part;
    const Polymatroid cony = contract(my, bit(my.index(m.label(y))));
    const int skew = local_conn(m, sp.x, bit(y));
    if (lambda(cony, bit(cony.index(sp.parts.basepoint))) + skew != 1) return false;
    return skew != 0 || contract(m, bit(y)) == two_sum(sp.parts.x_part, cony, sp.parts.basepoint);
  });
  each_y("two_sum_compression", [&](const Split& sp, int y) {
    const Polymatroid& mx = sp.parts.x_part;
    const Polymatroid& my = sp.parts.y_part;
    const std::string& bp = sp.parts.basepoint;
    const int yy = my.index(m.label(y));
    const int px = mx.index(bp);
    const Polymatroid down = compress(m, y);
    const Polymatroid my_down = compress(my, yy);
    if (m.rank(bit(y)) <= 1) {
      if (local_conn(m, sp.x, bit(y)) == 1) {
        const Polymatroid dely = delete_set(my, bit(yy));
        const Polymatroid rest = contract(dely, bit(dely.index(bp)));
        return down == direct_sum(contract(mx, bit(px)), rest);
      }
      return down == two_sum(mx, my_down, bp);
    }
    if (m.rank(sp.y) == m.rank(sp.y & ~bit(y)) + 2) {
      // A separating line compresses to a plain deletion.
      if (lambda(m, bit(y)) == 0) return down == delete_set(m, bit(y));
      const Polymatroid rest = delete_set(my_down, bit(my_down.index(bp)));
      return down == direct_sum(delete_set(mx, bit(px)), rest);
    }
    return down == two_sum(mx, my_down, bp);
  });
}

}  // namespace

IdentityReport identity_suite(const Polymatroid& m, long samples) {
  Suite s(m, samples);
  whole(s, m);
  subsets(s, m);
  pairs_of_sets(s, m);
  elements(s, m);
  prickly(s, m);
  two_sums(s, m);
  return std::move(s.report);
}

}  // namespace pm
