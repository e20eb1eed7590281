#include <doctest.h>

#include "pm/conn.hpp"
#include "pm/construct.hpp"
#include "pm/error.hpp"
#include "pm/ops.hpp"
#include "support.hpp"

using namespace pm;

namespace {

bool valid(const Polymatroid& m) {
  std::vector<int> t(m.table().begin(), m.table().end());
  return !first_axiom_violation(t, m.size()).has_value();
}

// Free addition of x' on x, contract x', delete x.
Polymatroid compress_by_recipe(const Polymatroid& m, int x) {
  const Polymatroid added = free_add_point(m, x, fresh_label(m, "x'"));
  const Polymatroid c = contract(added, bit(added.size() - 1));
  return delete_set(c, bit(c.index(m.label(x))));
}

Polymatroid c4_cycle() {
  Multigraph g;
  g.vertices = 4;
  g.add_edge("a", 0, 1);
  g.add_edge("b", 1, 2);
  g.add_edge("c", 2, 3);
  g.add_edge("d", 3, 0);
  return cycle_matroid(g);
}

}  // namespace

TEST_SUITE("ops") {

TEST_CASE("delete") {
  const Polymatroid u = uniform(2, 4);
  CHECK(delete_set(u, 0) == u);
  CHECK(delete_set(u, bit(0)) == relabel(uniform(2, 3), pmtest::Relabel{{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  CHECK_THROWS_AS(delete_set(u, bit(7)), UnknownElement);
}

TEST_CASE("contract") {
  const Polymatroid u = uniform(2, 4);
  CHECK(contract(u, bit(0)) == relabel(uniform(1, 3), pmtest::Relabel{{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  const Polymatroid withloop = pmtest::from_table({"a", "z"}, {0, 1, 0, 1});
  CHECK(contract(withloop, bit(1)) == delete_set(withloop, bit(1)));
  CHECK_THROWS_AS(minor(u, bit(0), bit(0)), PreconditionViolated);

  Multigraph path;
  path.vertices = 3;
  path.add_edge("e", 0, 1);
  path.add_edge("f", 1, 2);
  const Polymatroid p = boolean_from_graph(path);
  const Polymatroid pe = contract(p, p.subset({"e"}));
  CHECK(pe.rank({"f"}) == 1);
}

TEST_CASE("compactify") {
  const Polymatroid m = pmtest::m2_c3();
  CHECK(compactify(m) == m);

  const Polymatroid sum = direct_sum(pmtest::from_table({"l"}, {0, 2}), pmtest::from_table({"p"}, {0, 1}));
  CHECK(compactify(sum).rank({"l"}) == 0);

  // a, b points spanning a plane with the line l; lambda(l) = 1
  std::vector<int> t(8);
  const std::vector<std::string> labels{"l", "a", "b"};
  for (Subset x = 0; x < 8; ++x) {
    if (x == 0) t[x] = 0;
    else if (x == 0b001) t[x] = 2;
    else if (x == 0b010 || x == 0b100) t[x] = 1;
    else if (x == 0b110) t[x] = 2;
    else t[x] = 3;
  }
  const Polymatroid q = pmtest::from_table(labels, t);
  CHECK(lambda(q, bit(0)) == 1);
  const Polymatroid qf = compactify(q);
  CHECK(qf.rank({"l"}) == 1);
  CHECK(is_compact(qf));
  for (Subset x = 0; x < 8; ++x) CHECK(lambda(qf, x) == lambda(q, x));

  const Polymatroid con = compactify(contract(q, q.subset({"a"})));
  CHECK(element_kind(con, "l") == ElementKind::Point);
}

TEST_CASE("compactified deletion calculus") {
  CHECK(compactified_delete(uniform(2, 4), bit(0)) == delete_set(uniform(2, 4), bit(0)));
  for (const auto& m : enumerate_small(4)) {
    const Subset e = m.ground();
    for (Subset a = 0; a <= e; ++a) {
      for_each_subset(e & ~a, [&](Subset b) {
        const Polymatroid ma = compactified_delete(m, a);
        const Polymatroid ab = compactified_delete(ma, pack_bits(b, e & ~a));
        if (!(ab == compactified_delete(m, a | b))) FAIL("order dependence");
        const Polymatroid c_then_d = compactified_delete(contract(m, a), pack_bits(b, e & ~a));
        const Polymatroid d_then_c = contract(compactified_delete(m, b), pack_bits(a, e & ~b));
        if (!(c_then_d == d_then_c)) FAIL("contraction does not commute");
        const Polymatroid ca = contract(contract(m, a), pack_bits(b, e & ~a));
        if (!(ca == contract(m, a | b))) FAIL("contractions do not compose");
      });
    }
  }
}

TEST_CASE("dual") {
  const Polymatroid withloop = pmtest::from_table({"a", "z"}, {0, 1, 0, 1});
  CHECK(dual(withloop).rank({"z"}) == 0);
  const Polymatroid d = dual(pmtest::m2_c3());
  for (int i = 0; i < 3; ++i) CHECK(d.rank(bit(i)) == 2);
  for (const auto& m : enumerate_small(4)) {
    CHECK(dual(dual(m)) == compactify(m));
    CHECK(dual(compactify(m)) == dual(m));
    CHECK(compactify(dual(m)) == dual(m));
    for (Subset x = 0; x <= m.ground(); ++x) {
      if (lambda(dual(m), x) != lambda(m, x)) FAIL("lambda changed under duality");
    }
  }
}

TEST_CASE("compression of a graph edge is the contracted graph") {
  const Multigraph g = wheel_graph(3);
  const Polymatroid m = boolean_from_graph(g);
  for (const auto& e : g.edges) {
    CHECK(compress(m, m.index(e.label)) == boolean_from_graph(g.contracted(e.label)));
  }
}

TEST_CASE("compression rank drop and points") {
  for (const auto& m : enumerate_small(4)) {
    for (int x = 0; x < m.size(); ++x) {
      const Polymatroid c = compress(m, x);
      CHECK(valid(c));
      CHECK(c == compress_by_recipe(m, x));
      if (m.rank(bit(x)) <= 1) CHECK(c == contract(m, bit(x)));
      if (m.rank(bit(x)) == 2 && m.rank(m.ground() & ~bit(x)) == m.rank()) CHECK(c.rank() == m.rank() - 1);
      const Polymatroid kept = compactify_element(m, x);
      CHECK(delete_set(kept, bit(x)) == c);
    }
  }
  CHECK_THROWS_AS(compress(uniform(2, 3), 5), UnknownElement);
}

TEST_CASE("compactifying a line outside trivial 2-separations drops the rank") {
  for (const auto& m : enumerate_small(4, Filter::Compact)) {
    for_each_index(lines(m), [&](int x) {
      if (lambda(m, bit(x)) == 1) return;
      CHECK(compactify_element(m, x).rank() == m.rank() - 1);
    });
  }
}

TEST_CASE("free addition") {
  const Polymatroid loop = pmtest::from_table({"z"}, {0, 0});
  CHECK(free_add_point(loop, 0, "x").rank({"x"}) == 0);
  const Polymatroid line = pmtest::from_table({"l"}, {0, 2});
  const Polymatroid added = free_add_point(line, 0, "x");
  CHECK(added.rank({"x"}) == 1);
  CHECK(added.rank({"l", "x"}) == 2);
  CHECK_THROWS_AS(free_add_point(line, 0, "l"), DuplicateLabel);
  for (const auto& m : enumerate_small(3)) {
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        const Polymatroid a = free_add_point(free_add_point(m, x, "u"), y, "v");
        const Polymatroid b = free_add_point(free_add_point(m, y, "v"), x, "u");
        CHECK(valid(a));
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("natural matroid") {
  const Polymatroid u = uniform(2, 4);
  CHECK(natural_matroid(u).matroid == u);
  const auto nl = natural_matroid(pmtest::from_table({"l"}, {0, 2}));
  CHECK(nl.matroid.size() == 2);
  CHECK(nl.matroid.rank() == 2);
  CHECK(is_matroid(nl.matroid));
  REQUIRE(nl.scheme.size() == 1);
  CHECK(nl.scheme[0].line == "l");
  for (const auto& m : enumerate_small(4)) {
    const auto n = natural_matroid(m);
    CHECK(is_3_connected(m) == is_3_connected(n.matroid));
    CHECK(is_2_connected(m) == is_2_connected(n.matroid));
  }
}

TEST_CASE("direct sum") {
  const Polymatroid s = direct_sum(uniform(2, 3), relabel(uniform(2, 3), pmtest::Relabel{{"a", "x"}, {"b", "y"}, {"c", "z"}}));
  CHECK(s.rank() == 4);
  CHECK_FALSE(is_2_connected(s));
  const Polymatroid lp = direct_sum(pmtest::from_table({"z"}, {0, 0}), pmtest::from_table({"p"}, {0, 1}));
  CHECK(lp.rank() == 1);
  CHECK_THROWS_AS(direct_sum(uniform(1, 1), uniform(1, 1)), DuplicateLabel);
  const auto three = enumerate_small(2);
  for (const auto& a : three) {
    for (const auto& b0 : three) {
      const Polymatroid b = relabel(b0, pmtest::Relabel{{"a", "x"}, {"b", "y"}});
      CHECK(dual(direct_sum(a, b)) == direct_sum(dual(a), dual(b)));
    }
  }
}

TEST_CASE("two-sum of two triangles is a 4-cycle") {
  const Polymatroid t1 = pmtest::from_table({"a", "b", "p"}, {0, 1, 1, 2, 1, 2, 2, 2});
  const Polymatroid t2 = pmtest::from_table({"c", "d", "p"}, {0, 1, 1, 2, 1, 2, 2, 2});
  const Polymatroid s = two_sum(t1, t2, "p");
  CHECK(s == c4_cycle());
  CHECK(is_isomorphic(s, uniform(3, 4)));
  const Polymatroid pc = parallel_connection(t1, t2, "p");
  CHECK(delete_set(pc, pc.subset({"c", "d"})) == t1);
}

TEST_CASE("two-sum preconditions") {
  const Polymatroid t = pmtest::from_table({"a", "b", "p"}, {0, 1, 1, 2, 1, 2, 2, 2});
  const Polymatroid line = pmtest::from_table({"c", "p"}, {0, 2, 1, 2});
  CHECK_THROWS_AS(two_sum(t, pmtest::from_table({"c", "p"}, {0, 1, 2, 2}), "p"), BasepointRankMismatch);
  CHECK_THROWS_AS(parallel_connection(t, pmtest::from_table({"c", "p"}, {0, 1, 2, 2}), "p"),
                  BasepointRankMismatch);
  // p skew to the rest
  const Polymatroid skew = pmtest::from_table({"c", "p"}, {0, 1, 1, 2});
  CHECK_THROWS_AS(two_sum(t, skew, "p"), DegenerateBasepoint);
  CHECK_THROWS_AS(two_sum(t, pmtest::from_table({"p"}, {0, 1}), "p"), TooSmall);
  CHECK_NOTHROW(two_sum(t, line, "p"));
}

TEST_CASE("two-sum decomposition") {
  const Polymatroid u = uniform(3, 4);
  const auto parts = two_sum_decompose(u, 0b0011);
  CHECK(is_isomorphic(parts.x_part, uniform(2, 3)));
  CHECK(is_isomorphic(parts.y_part, uniform(2, 3)));
  CHECK(parts.basepoint == "_p0");
  CHECK(two_sum(parts.x_part, parts.y_part, parts.basepoint) == u);
  CHECK_THROWS_AS(two_sum_decompose(uniform(2, 4), 0b0011), NotAnExact2Separation);

  for (const auto& m : enumerate_small(4, Filter::TwoConnected)) {
    const Subset e = m.ground();
    for (Subset x = 1; x < e; ++x) {
      if (has(x, 0) == false || m.rank(x) + m.rank(e & ~x) != m.rank() + 1) continue;
      const auto pr = two_sum_decompose(m, x);
      CHECK(two_sum(pr.x_part, pr.y_part, pr.basepoint) == m);
      for_each_index(e & ~x, [&](int y) {
        const Polymatroid my = delete_set(pr.y_part, bit(pr.y_part.index(m.label(y))));
        CHECK(lambda(my, bit(my.index(pr.basepoint))) == local_conn(m, x, e & ~x & ~bit(y)));
      });
    }
  }
}

TEST_CASE("relabel") {
  const Polymatroid m = pmtest::m2_c3();
  CHECK(relabel(m, pmtest::Relabel{}) == m);
  CHECK(relabel(relabel(m, {{"e", "f"}, {"f", "e"}}), pmtest::Relabel{{"e", "f"}, {"f", "e"}}) == m);
  CHECK_THROWS_AS(relabel(m, pmtest::Relabel{{"e", "f"}}), DuplicateLabel);
  CHECK_THROWS_AS(relabel(m, pmtest::Relabel{{"q", "r"}}), UnknownElement);
}

TEST_CASE("prickly pair relabelling") {
  const Polymatroid m = pmtest::m2_c3();
  REQUIRE(is_prickly(m, m.subset({"e", "f"})));
  CHECK(compress(m, m.index("e")) == relabel(compress(m, m.index("f")), pmtest::Relabel{{"e", "f"}}));
}

TEST_CASE("operation outputs stay valid") {
  for (const auto& m : enumerate_small(3)) {
    CHECK(valid(dual(m)));
    CHECK(valid(compactify(m)));
    for (int x = 0; x < m.size(); ++x) {
      CHECK(valid(compactify_element(m, x)));
      CHECK(valid(compactified_delete(m, bit(x))));
      CHECK(valid(contract(m, bit(x))));
    }
  }
}

}
