#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pm/conn.hpp"
#include "pm/construct.hpp"
#include "pm/error.hpp"
#include "pm/io.hpp"
#include "pm/minors.hpp"
#include "pm/ops.hpp"
#include "pm/splitter.hpp"

using namespace pm;
namespace fs = std::filesystem;

namespace {

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = describe();
  }
};

std::string table_text(const Polymatroid& m) {
  std::string s;
  for (auto v : m.table()) s += std::to_string(v) + " ";
  return s;
}

std::vector<Polymatroid> upto(int n, Filter f = Filter::All) {
  std::vector<Polymatroid> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& m : enumerate_small(k, f)) out.push_back(std::move(m));
  }
  return out;
}

// Visits every assignment of the elements to `parts` labelled classes.
void each_assignment(int n, int parts, const std::function<void(const std::vector<Subset>&)>& fn) {
  long total = 1;
  for (int i = 0; i < n; ++i) total *= parts;
  std::vector<Subset> cls(static_cast<std::size_t>(parts));
  for (long code = 0; code < total; ++code) {
    std::fill(cls.begin(), cls.end(), 0);
    long c = code;
    for (int i = 0; i < n; ++i) {
      cls[static_cast<std::size_t>(c % parts)] |= bit(i);
      c /= parts;
    }
    fn(cls);
  }
}

// ---------------------------------------------------------------- 1

Tally axiom_validator() {
  Tally t;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int ab = 0; ab <= 4; ++ab) {
        const std::vector<int> table{0, a, b, ab};
        bool lib = true;
        try {
          Polymatroid::validate({"a", "b"}, table);
        } catch (const AxiomViolation&) {
          lib = false;
        }
        bool def = a <= 2 && b <= 2;
        for (Subset x = 0; x < 4; ++x) {
          for (Subset y = 0; y < 4; ++y) {
            if (is_subset(x, y) && table[x] > table[y]) def = false;
            if (table[x] + table[y] < table[x | y] + table[x & y]) def = false;
          }
        }
        t.check(lib == def, [&] {
          return "table 0 " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(ab);
        });
      }
    }
  }
  t.check(t.checked == 125, [] { return "wrong number of tables"; });
  return t;
}

// ---------------------------------------------------------------- 2

struct RawGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

bool connected(const RawGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertices));
  for (int v = 0; v < g.vertices; ++v) comp[static_cast<std::size_t>(v)] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : g.edges) {
      const int lo = std::min(comp[static_cast<std::size_t>(u)], comp[static_cast<std::size_t>(v)]);
      for (int w : {u, v}) {
        if (comp[static_cast<std::size_t>(w)] != lo) {
          comp[static_cast<std::size_t>(w)] = lo;
          changed = true;
        }
      }
    }
  }
  for (int c : comp) {
    if (c != 0) return false;
  }
  return true;
}

Tally graph_compression(long& graphs) {
  Tally t;
  for (int v = 1; v <= 5; ++v) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < v; ++a) {
      for (int b = a; b < v; ++b) slots.emplace_back(a, b);
    }
    const int s = static_cast<int>(slots.size());
    for (int m = 0; m <= 5; ++m) {
      // multisets of m slots as non-decreasing index sequences
      std::vector<int> idx(static_cast<std::size_t>(m), 0);
      while (true) {
        RawGraph g{v, {}};
        for (int i : idx) g.edges.push_back(slots[static_cast<std::size_t>(i)]);
        if (connected(g)) {
          ++graphs;
          Multigraph mg;
          mg.vertices = v;
          for (int i = 0; i < m; ++i) {
            mg.add_edge("e" + std::to_string(i), g.edges[static_cast<std::size_t>(i)].first,
                        g.edges[static_cast<std::size_t>(i)].second);
          }
          const Polymatroid p = boolean_from_graph(mg);
          for (int e = 0; e < m; ++e) {
            const auto [eu, ev] = g.edges[static_cast<std::size_t>(e)];
            if (eu == ev) continue;
            const Polymatroid down = compress(p, e);
            // vertex count of G/e: ev is merged into eu
            bool ok = true;
            const Subset keep = p.ground() & ~bit(e);
            for (Subset y = 0; y < bit(m - 1); ++y) {
              const Subset x = unpack_bits(y, keep);
              std::set<int> verts;
              for_each_index(x, [&](int i) {
                for (int w : {g.edges[static_cast<std::size_t>(i)].first, g.edges[static_cast<std::size_t>(i)].second}) {
                  verts.insert(w == ev ? eu : w);
                }
              });
              if (down.rank(y) != static_cast<int>(verts.size())) ok = false;
            }
            ok = ok && down == boolean_from_graph(mg.contracted("e" + std::to_string(e)));
            t.check(ok, [&] { return "graph with " + std::to_string(v) + " vertices, edge e" + std::to_string(e); });
          }
        }
        int k = m - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == s - 1) --k;
        if (k < 0) break;
        const int nv = idx[static_cast<std::size_t>(k)] + 1;
        for (int j = k; j < m; ++j) idx[static_cast<std::size_t>(j)] = nv;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 3

bool parallel_line(const Polymatroid& m, int e) {
  for (int f = 0; f < m.size(); ++f) {
    if (f != e && m.rank(bit(f)) == 2 && m.rank(bit(e) | bit(f)) == 2) return true;
  }
  return false;
}

Tally duality_calculus() {
  Tally t;
  for (const auto& m : upto(4)) {
    auto where = [&] { return "table " + table_text(m); };
    const Polymatroid d = oracle::dual(m);
    const Polymatroid f = oracle::compactify(m);
    t.check(dual(m) == d && compactify(m) == f, where);
    t.check(oracle::dual(d) == f, where);
    const Subset e = m.ground();
    for (Subset x = 0; x <= e; ++x) {
      t.check(oracle::lambda(m, x) == oracle::lambda(d, x) && oracle::lambda(m, x) == oracle::lambda(f, x),
              where);
      t.check(oracle::dual(oracle::con(m, x)) == oracle::compactify(oracle::del(d, x)), where);
      t.check(oracle::compactify(oracle::del(f, x)) == oracle::compactify(oracle::del(m, x)), where);
      t.check(oracle::compactify(oracle::con(f, x)) == oracle::compactify(oracle::con(m, x)), where);
    }
    for (int x = 0; x < m.size(); ++x) {
      if (m.rank(bit(x)) != 2 || parallel_line(m, x)) continue;
      t.check(oracle::compress(d, x) == oracle::dual(oracle::compress(m, x)), where);
    }
  }
  return t;
}

// ---------------------------------------------------------------- 4

Tally connectivity_catalog() {
  Tally t;
  using namespace oracle;
  for (const auto& m : upto(4)) {
    auto where = [&] { return "table " + table_text(m); };
    const int n = m.size();
    const Subset e = m.ground();
    const Polymatroid d = oracle::dual(m);
    for (Subset x = 0; x <= e; ++x) {
      // r + r* - ||X||
      t.check(oracle::lambda(m, x) == r(m, x) + r(d, x) - weight(m, x), where);
      t.check(oracle::lambda(m, x) == oracle::lambda(m, e & ~x), where);
      for (Subset y = 0; y <= e; ++y) {
        t.check(oracle::lambda(m, x) + oracle::lambda(m, y) >= oracle::lambda(m, x | y) + oracle::lambda(m, x & y),
                where);
        // monotone in both arguments
        for_each_subset(x, [&](Subset x1) {
          for_each_subset(y, [&](Subset y1) {
            if (sqcap(m, x1, y1) > sqcap(m, x, y)) t.check(false, where);
          });
        });
      }
    }
    each_assignment(n, 3, [&](const std::vector<Subset>& p) {
      const Subset a = p[0], b = p[1], c = p[2];
      // dual local connectivity, two forms
      const int star = sqcap(d, a, b);
      t.check(star == local_conn_dual(m, a, b), where);
      t.check(star == sqcap(con(m, c), pack_bits(a, a | b), pack_bits(b, a | b)), where);
      t.check(star == oracle::lambda(con(m, c), pack_bits(a, a | b)), where);
      // union formula for disjoint a, b
      t.check(oracle::lambda(m, a | b) == oracle::lambda(m, a) + oracle::lambda(m, b) - sqcap(m, a, b) - star, where);
      // (A, B, Z) with Z = c
      const Polymatroid mz = con(m, c);
      const Polymatroid dz = del(m, c);
      const Subset pa = pack_bits(a, e & ~c);
      const int rhs = oracle::lambda(dz, pa) - sqcap(m, a, c) - sqcap(m, b, c) + oracle::lambda(m, c);
      t.check(oracle::lambda(mz, pa) == rhs, where);
      if (r(m, e & ~c) == r(m, e)) {
        t.check(oracle::lambda(mz, pa) == oracle::lambda(dz, pa) - sqcap(m, a, c) - sqcap(m, b, c) + r(m, c), where);
      }
      if (oracle::lambda(m, a) == 1 && oracle::lambda(m, c) == 1 && oracle::lambda(m, b) == 2) {
        t.check(sqcap(m, a, b) == 1, where);
      }
      // contracting one element of the far side
      for_each_index(b, [&](int z) {
        const Polymatroid cz = con(m, bit(z));
        const Subset px = pack_bits(a, e & ~bit(z));
        const Subset py = pack_bits(b & ~bit(z), e & ~bit(z));
        if (c != 0) return;
        t.check(sqcap(m, a, bit(z)) + sqcap(cz, px, py) == oracle::lambda(m, a), where);
        t.check(sqcap(m, a, bit(z)) + oracle::lambda(cz, px) == oracle::lambda(m, a), where);
      });
    });
    each_assignment(n, 4, [&](const std::vector<Subset>& p) {
      const Subset x = p[0], c = p[1], dd = p[2];
      const Subset keep = e & ~(c | dd);
      const Polymatroid q = oracle::minor(m, c, dd);
      const int lq = oracle::lambda(q, pack_bits(x, keep));
      const int lm = oracle::lambda(m, x);
      t.check(lq <= lm, where);
      const bool cond = r(m, x | c) == r(m, x) + r(m, c) &&
                        r(m, e & ~x) + r(m, e & ~dd) == r(m, e) + r(m, e & ~(x | dd));
      t.check((lq == lm) == cond, where);
      if (c == 0 && r(m, e & ~dd) == r(m, e)) {
        const Polymatroid md = del(m, dd);
        const int ld = oracle::lambda(md, pack_bits(x, e & ~dd));
        const Subset cl_rest = closure(m, e & ~(x | dd));
        t.check((ld == lm) == is_subset(dd, cl_rest), where);
        t.check((ld == oracle::lambda(m, x | dd)) == is_subset(dd, closure(m, x)), where);
      }
      // four-way exchange rules
      const Subset a = p[0], b = p[1], cc = p[2], d4 = p[3];
      t.check(sqcap(m, a | b, cc | d4) + sqcap(m, a, b) + sqcap(m, cc, d4) ==
                  sqcap(m, a | cc, b | d4) + sqcap(m, a, cc) + sqcap(m, b, d4),
              where);
      t.check(sqcap(m, a | b, cc) + sqcap(m, a, b) == sqcap(m, a | cc, b) + sqcap(m, a, cc), where);
    });
    if (n >= 2 && oracle::two_connected(m)) {
      for (int x = 0; x < n; ++x) {
        if (m.rank(bit(x)) != 1) continue;
        t.check(oracle::two_connected(del(m, bit(x))) || oracle::two_connected(con(m, bit(x))), where);
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 5

Tally natural_matroid_transfer() {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& m : enumerate_small(n)) {
      auto where = [&] { return "table " + table_text(m); };
      const auto nat = natural_matroid(m);
      // rebuild by free additions and deletion of the lines
      Polymatroid q = m;
      Subset ls = 0;
      for (const auto& nl : nat.scheme) {
        const int l = m.index(nl.line);
        ls |= bit(l);
        q = oracle::free_add(q, l, nl.s);
        q = oracle::free_add(q, l, nl.t);
      }
      q = oracle::del(q, ls);
      t.check(q == nat.matroid, where);
      t.check(is_2_connected(m) == oracle::two_connected(m), where);
      t.check(is_3_connected(m) == oracle::three_connected(m), where);
      t.check(oracle::two_connected(m) == oracle::two_connected(q), where);
      t.check(oracle::three_connected(m) == oracle::three_connected(q), where);
      t.check(is_3_connected(m) == is_3_connected(nat.matroid), where);
    }
  }
  return t;
}

// ---------------------------------------------------------------- 6

Tally three_element_classes(std::size_t& classes) {
  Tally t;
  std::map<std::vector<std::uint8_t>, int> number;
  for (const auto& p : enumerate_small(3, Filter::TwoConnected)) {
    if (p.rank() < 2) continue;
    for (int q = 0; q < 3; ++q) {
      if (p.rank(bit(q)) != 1) continue;
      // class key: least table with the marked point first
      std::vector<std::uint8_t> key;
      std::vector<int> rest;
      for (int i = 0; i < 3; ++i) {
        if (i != q) rest.push_back(i);
      }
      for (int flip = 0; flip < 2; ++flip) {
        const Polymatroid r = reorder(p, {p.label(q), p.label(rest[static_cast<std::size_t>(flip)]),
                                          p.label(rest[static_cast<std::size_t>(1 - flip)])});
        std::vector<std::uint8_t> tab(r.table().begin(), r.table().end());
        if (key.empty() || tab < key) key = tab;
      }
      int got = 0;
      try {
        got = classify_three_element(p, q).number;
      } catch (const Error&) {
        got = 0;
      }
      t.check(got >= 1 && got <= 9, [&] { return "classifier rejected " + table_text(p); });
      auto [it, fresh] = number.emplace(key, got);
      t.check(it->second == got, [&] { return "inconsistent class for " + table_text(p); });
    }
  }
  classes = number.size();
  std::set<int> used;
  for (const auto& [k, v] : number) used.insert(v);
  t.check(classes == 9, [&] { return std::to_string(classes) + " classes"; });
  t.check(used.size() == classes, [] { return "two classes share a number"; });
  return t;
}

// ---------------------------------------------------------------- 7

Tally two_sum_round_trip(long& separations) {
  Tally t;
  for (const auto& m : upto(5)) {
    const Subset e = m.ground();
    const bool conn = is_2_connected(m);
    for (Subset x = 1; x < e; ++x) {
      if (!has(x, 0) || m.rank(x) + m.rank(e & ~x) != m.rank() + 1) continue;
      const auto parts = two_sum_decompose(m, x);
      bool built = true;
      Polymatroid back;
      try {
        back = two_sum(parts.x_part, parts.y_part, parts.basepoint);
      } catch (const Error&) {
        built = false;
      }
      if (conn) {
        ++separations;
        t.check(built && back == m, [&] { return "round trip failed on " + table_text(m); });
      }
      if (built) {
        const bool both = oracle::two_connected(parts.x_part) && oracle::two_connected(parts.y_part);
        t.check(both == oracle::two_connected(back), [&] { return "2-connectivity on " + table_text(m); });
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 8

Tally prickly_suite(long& pairs) {
  Tally t;
  for (const auto& m : upto(5, Filter::ThreeConnected)) {
    auto where = [&] { return "table " + table_text(m); };
    for (int j = 0; j < m.size(); ++j) {
      for (int k = j + 1; k < m.size(); ++k) {
        const Subset z = bit(j) | bit(k);
        const bool pr = oracle::prickly(m, z);
        t.check(pr == is_prickly(m, z), where);
        if (!pr) continue;
        ++pairs;
        const Polymatroid dj = oracle::compress(m, j);
        const Polymatroid dk = oracle::compress(m, k);
        t.check(dj == relabel(dk, std::map<std::string, std::string>{{m.label(j), m.label(k)}}), where);
        t.check(oracle::three_connected(dj) && oracle::three_connected(dk), where);
        if (oracle::compact(m)) t.check(oracle::compact(dj) && oracle::compact(dk), where);
        for (int y = 0; y < m.size(); ++y) {
          if (y == k) continue;
          const int yk = y - (y > k ? 1 : 0);
          const int ky = k - (k > y ? 1 : 0);
          t.check(oracle::del(dk, bit(yk)) == oracle::compress(oracle::del(m, bit(y)), ky), where);
          t.check(oracle::con(dk, bit(yk)) == oracle::compress(oracle::con(m, bit(y)), ky), where);
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 9

Tally splitter_sweep(long& pairs, std::map<std::string, long>& outcomes) {
  Tally t;
  std::vector<Polymatroid> targets = enumerate_small(4, Filter::ThreeConnected);
  for (const auto& m : upto(5, Filter::ThreeConnected)) {
    if (m.size() <= 4) continue;
    for (const auto& n : targets) {
      if (!is_compact(n) || !is_c_minor(m, n, MinorMode::UpToIso)) continue;
      ++pairs;
      for (bool series : {false, true}) {
        const SplitterResult r = series ? verify_splitter_s(m, n) : verify_splitter_c(m, n);
        const auto* c = std::get_if<SplitterCertificate>(&r);
        t.check(c != nullptr && check_certificate(m, n, *c), [&] {
          return std::string(series ? "S" : "C") + " failed on M " + table_text(m) + "/ N " + table_text(n);
        });
        if (c) ++outcomes[std::string(series ? "s:" : "c:") + to_string(c->outcome)];
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 10

bool single_move_exists(const Polymatroid& m, const Polymatroid& n) {
  auto good = [&](const Polymatroid& q) { return oracle::three_connected(q) && is_s_minor(q, n); };
  for (int e = 0; e < m.size(); ++e) {
    if (good(oracle::con(m, bit(e))) || good(oracle::compactify(oracle::del(m, bit(e))))) return true;
  }
  for (int j = 0; j < m.size(); ++j) {
    for (int k = 0; k < m.size(); ++k) {
      if (j != k && oracle::prickly(m, bit(j) | bit(k)) && good(oracle::compress(m, k))) return true;
    }
  }
  return false;
}

// Some two moves reach a 3-connected 2-polymatroid with an N s-minor.
bool two_moves_reach(const Polymatroid& m, const Polymatroid& n) {
  auto moves = [](const Polymatroid& p) {
    std::vector<Polymatroid> out;
    for (int e = 0; e < p.size(); ++e) {
      out.push_back(oracle::con(p, bit(e)));
      out.push_back(oracle::compactify(oracle::del(p, bit(e))));
      for (int j = 0; j < p.size(); ++j) {
        if (j != e && oracle::prickly(p, bit(j) | bit(e))) out.push_back(oracle::compress(p, e));
      }
    }
    return out;
  };
  for (const auto& q : moves(m)) {
    for (const auto& q2 : moves(q)) {
      if (q2.size() == m.size() - 2 && oracle::three_connected(q2) && is_s_minor(q2, n)) return true;
    }
  }
  return false;
}

Tally wheel_whirl_exception() {
  Tally t;
  const std::pair<Polymatroid, Polymatroid> cases[] = {{wheel(4), wheel(3)}, {whirl(3), whirl(2)}};
  for (const auto& [m, n] : cases) {
    auto where = [&] { return std::to_string(m.size()) + "-element case"; };
    const SplitterResult r = verify_splitter_s(m, n);
    const auto* c = std::get_if<SplitterCertificate>(&r);
    t.check(c != nullptr, where);
    if (!c) continue;
    t.check(c->outcome == Outcome::WheelOrWhirl, where);
    t.check(!single_move_exists(m, n), where);
    t.check(!c->single_move_failures.empty(), where);
    t.check(c->reduced && c->reduced->elements == m.size() - 2, where);
    t.check(check_certificate(m, n, *c), where);
    t.check(two_moves_reach(m, n), where);
  }
  return t;
}

// ---------------------------------------------------------------- 11

Tally wwt_sweep(std::map<std::string, long>& outcomes) {
  Tally t;
  for (const auto& m : upto(5, Filter::ThreeConnected)) {
    if (m.size() == 0) continue;
    auto where = [&] { return "table " + table_text(m); };
    const WwtResult r = verify_wwt(m);
    const auto* c = std::get_if<WwtCertificate>(&r);
    t.check(c != nullptr, where);
    if (!c) continue;
    ++outcomes[to_string(c->outcome)];
    switch (c->outcome) {
      case WwtOutcome::RemovableElement: {
        const int e = m.index(c->step->element);
        const Polymatroid q = c->step->move == Move::Delete ? oracle::del(m, bit(e)) : oracle::con(m, bit(e));
        t.check(oracle::three_connected(q), where);
        break;
      }
      case WwtOutcome::WheelOrWhirl:
        t.check(m.rank() >= 3 && (is_isomorphic(m, wheel(m.rank())) || is_isomorphic(m, whirl(m.rank()))), where);
        break;
      case WwtOutcome::PurePrickly: {
        t.check(lines(m) == m.ground(), where);
        const auto sets = oracle::minimal_3_separating(m);
        t.check(!sets.empty(), where);
        for (Subset z : sets) {
          t.check(oracle::prickly(m, z), where);
          for_each_index(z, [&](int k) {
            const Polymatroid q = oracle::compress(m, k);
            t.check(oracle::three_connected(q) && lines(q) == q.ground(), where);
          });
        }
        for (int e = 0; e < m.size(); ++e) {
          t.check(!oracle::three_connected(oracle::del(m, bit(e))) && !oracle::three_connected(oracle::con(m, bit(e))),
                  where);
        }
        break;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- 12

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

int run_status(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  std::string text;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Polymatroid load(const fs::path& p) {
  const auto doc = io::parse_file(p.string());
  if (const auto* g = std::get_if<Multigraph>(&doc)) return boolean_from_graph(*g);
  return std::get<Polymatroid>(doc);
}

int library_verdict(const Polymatroid& m, const Polymatroid& n, const std::string& theorem) {
  try {
    const SplitterResult r = theorem == "s" ? verify_splitter_s(m, n) : verify_splitter_c(m, n);
    return std::holds_alternative<SplitterCertificate>(r) ? 0 : 1;
  } catch (const Error&) {
    return 2;
  }
}

Tally cli_round_trip(const std::string& pm_path, const fs::path& fixtures, long& pair_count) {
  Tally t;
  for (const auto& m : upto(4)) {
    const std::string text = io::serialize(m);
    t.check(io::serialize(std::get<Polymatroid>(io::parse(text))) == text,
            [&] { return "round trip of " + table_text(m); });
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(fixtures)) {
    const auto ext = entry.path().extension();
    if (ext == ".pm" || ext == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const std::string text = slurp(f);
    const auto doc = io::parse(text);
    const std::string again =
        std::holds_alternative<Polymatroid>(doc) ? io::serialize(std::get<Polymatroid>(doc)) : io::serialize(std::get<Multigraph>(doc));
    t.check(again == text, [&] { return f.filename().string() + " is not canonical"; });
    if (f.extension() == ".pm") {
      std::string out;
      const int rc = run_status(quote(pm_path) + " apply " + quote(f.string()), &out);
      t.check(rc == 0 && out == text, [&] { return "pm apply changed " + f.filename().string(); });
    }
  }
  std::ifstream list(fixtures / "pairs.txt");
  for (std::string line; std::getline(list, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string a, b, theorem;
    in >> a >> b >> theorem;
    ++pair_count;
    const int want = library_verdict(load(fixtures / a), load(fixtures / b), theorem);
    const int got = run_status(quote(pm_path) + " verify-splitter --theorem " + theorem + " " +
                               quote((fixtures / a).string()) + " " + quote((fixtures / b).string()) + " >/dev/null");
    t.check(got == want, [&] {
      return line + ": pm exited " + std::to_string(got) + ", library says " + std::to_string(want);
    });
  }
  t.check(pair_count == 20, [&] { return std::to_string(pair_count) + " fixture pairs"; });
  return t;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Tally(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <pm binary> <fixtures dir>\n";
    return 2;
  }
  const std::string pm_path = argv[1];
  const fs::path fixtures = argv[2];

  const std::vector<Criterion> criteria = {
      {1, "axiom validator vs oracle on 125 two-element tables", 1.0,
       [](std::string&) { return axiom_validator(); }},
      {2, "graph compression matches contraction", 60.0,
       [](std::string& note) {
         long graphs = 0;
         Tally t = graph_compression(graphs);
         note = std::to_string(graphs) + " graphs";
         return t;
       }},
      {3, "duality and compactification calculus, n <= 4", 300.0,
       [](std::string&) { return duality_calculus(); }},
      {4, "connectivity identity catalog, n <= 4", 300.0,
       [](std::string&) { return connectivity_catalog(); }},
      {5, "natural matroid transfer, 2 <= n <= 4", 300.0,
       [](std::string&) { return natural_matroid_transfer(); }},
      {6, "three-element classification", 60.0,
       [](std::string& note) {
         std::size_t classes = 0;
         Tally t = three_element_classes(classes);
         note = std::to_string(classes) + " classes";
         return t;
       }},
      {7, "2-sum round trip, n <= 5", 300.0,
       [](std::string& note) {
         long seps = 0;
         Tally t = two_sum_round_trip(seps);
         note = std::to_string(seps) + " exact 2-separations";
         return t;
       }},
      {8, "prickly compression suite, n <= 5", 300.0,
       [](std::string& note) {
         long pairs = 0;
         Tally t = prickly_suite(pairs);
         note = std::to_string(pairs) + " prickly pairs";
         return t;
       }},
      {9, "splitter sweep, n <= 5, |E(N)| = 4", 1800.0,
       [](std::string& note) {
         long pairs = 0;
         std::map<std::string, long> outcomes;
         Tally t = splitter_sweep(pairs, outcomes);
         note = std::to_string(pairs) + " pairs;";
         for (const auto& [k, v] : outcomes) note += " " + k + "=" + std::to_string(v);
         return t;
       }},
      {10, "wheel and whirl exception", 300.0,
       [](std::string&) { return wheel_whirl_exception(); }},
      {11, "wheels-and-whirls verifier, n <= 5", 300.0,
       [](std::string& note) {
         std::map<std::string, long> outcomes;
         Tally t = wwt_sweep(outcomes);
         for (const auto& [k, v] : outcomes) note += (note.empty() ? "" : " ") + k + "=" + std::to_string(v);
         return t;
       }},
      {12, "CLI round trip and fixture verdicts", 120.0,
       [&](std::string& note) {
         long pairs = 0;
         Tally t = cli_round_trip(pm_path, fixtures, pairs);
         note = std::to_string(pairs) + " pairs";
         return t;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run(note);
    } catch (const std::exception& ex) {
      t.failed = 1;
      t.first = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = t.failed == 0 && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_s);
    std::cout << "criterion " << c.id << (c.id < 10 ? "  " : " ") << (pass ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << t.checked << " checks, " << timing << (note.empty() ? "" : ", " + note) << "]";
    if (t.failed > 0) std::cout << "  " << t.failed << " failed; first: " << t.first;
    if (!in_time) std::cout << "  over time";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
