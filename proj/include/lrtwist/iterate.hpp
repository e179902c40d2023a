#pragma once

// Iteration of L-R-twisted tensor products: three pairs on (A,B), (B,C),
// (A,C) satisfying the eight compatibility conditions (YB), (YBQuri),
// (comb3)-(comb8) induce maps T1, V1, T2, V2 such that
// (A _Q1⊗_R1 B) _V1⊗_T1 C and A _V2⊗_T2 (B _Q2⊗_R2 C) are again L-R-twisted
// tensor products, and the two coincide. With all Q's = id this degenerates
// to the classical iteration of twisted tensor products via the hexagon
// equation.

#include "lrtwist/twisted.hpp"

namespace lrtwist {

// p1 on (A,B), p2 on (B,C), p3 on (A,C); carries R1,R2,R3 and Q1,Q2,Q3.
template <class K>
struct TripleData {
  LRPair<K> p1, p2, p3;

  TripleData(LRPair<K> p1_, LRPair<K> p2_, LRPair<K> p3_)
      : p1(std::move(p1_)), p2(std::move(p2_)), p3(std::move(p3_)) {
    if (!p1.r.a.same_table(p3.r.a))
      throw std::invalid_argument("triple: first algebras of p1 and p3 differ");
    if (!p1.r.b.same_table(p2.r.a))
      throw std::invalid_argument("triple: second algebra of p1 differs from first of p2");
    if (!p2.r.b.same_table(p3.r.b))
      throw std::invalid_argument("triple: second algebras of p2 and p3 differ");
  }

  const Algebra<K>& a() const { return p1.r.a; }
  const Algebra<K>& b() const { return p1.r.b; }
  const Algebra<K>& c() const { return p2.r.b; }
};

// The three pair suites, prefixed p1/p2/p3.
template <class K>
Report check_triple(const TripleData<K>& t, int jobs = 1) {
  Report rep;
  rep.subject = "triple (" + t.a().label + ", " + t.b().label + ", " + t.c().label + ")";
  rep.merge(check_lr_pair(t.p1, jobs), "p1 ");
  rep.merge(check_lr_pair(t.p2, jobs), "p2 ");
  rep.merge(check_lr_pair(t.p3, jobs), "p3 ");
  return rep;
}

// The eight iteration conditions on A⊗B⊗C. All eight always run; the
// conditions are independent and a full census of failures is wanted.
template <class K>
Report check_hexagons(const TripleData<K>& t, int jobs = 1) {
  const LinMap<K>& r1 = t.p1.r.map;
  const LinMap<K>& r2 = t.p2.r.map;
  const LinMap<K>& r3 = t.p3.r.map;
  const LinMap<K>& q1 = t.p1.q.map;
  const LinMap<K>& q2 = t.p2.q.map;
  const LinMap<K>& q3 = t.p3.q.map;
  std::vector<LegSpec> legs = {{"a", t.a().dim, "e"}, {"b", t.b().dim, "f"},
                               {"c", t.c().dim, "g"}};
  std::vector<std::string> out = {"e", "f", "g"};

  std::vector<Identity<K>> ids;
  ids.push_back({"(YB)", legs,
      [&](Expr<K>& e) {
        e.apply(r1, {"b", "a"}, {"a1", "b1"});
        e.apply(r3, {"c", "a1"}, {"a2", "c1"});
        e.apply(r2, {"c1", "b1"}, {"b2", "c2"});
        e.order({"a2", "b2", "c2"});
      },
      [&](Expr<K>& e) {
        e.apply(r2, {"c", "b"}, {"b1", "c1"});
        e.apply(r3, {"c1", "a"}, {"a1", "c2"});
        e.apply(r1, {"b1", "a1"}, {"a2", "b2"});
        e.order({"a2", "b2", "c2"});
      },
      out});
  ids.push_back({"(YBQuri)", legs,
      [&](Expr<K>& e) {
        e.apply(q1, {"a", "b"}, {"a1", "b1"});
        e.apply(q3, {"a1", "c"}, {"a2", "c1"});
        e.apply(q2, {"b1", "c1"}, {"b2", "c2"});
        e.order({"a2", "b2", "c2"});
      },
      [&](Expr<K>& e) {
        e.apply(q2, {"b", "c"}, {"b1", "c1"});
        e.apply(q3, {"a", "c1"}, {"a1", "c2"});
        e.apply(q1, {"a1", "b1"}, {"a2", "b2"});
        e.order({"a2", "b2", "c2"});
      },
      out});
  ids.push_back({"(comb3)", legs,
      [&](Expr<K>& e) {
        e.apply(r1, {"b", "a"}, {"a1", "b1"});
        e.apply(q2, {"b1", "c"}, {"b2", "c1"});
        e.order({"a1", "b2", "c1"});
      },
      [&](Expr<K>& e) {
        e.apply(q2, {"b", "c"}, {"b1", "c1"});
        e.apply(r1, {"b1", "a"}, {"a1", "b2"});
        e.order({"a1", "b2", "c1"});
      },
      out});
  ids.push_back({"(comb4)", legs,
      [&](Expr<K>& e) {
        e.apply(r2, {"c", "b"}, {"b1", "c1"});
        e.apply(q1, {"a", "b1"}, {"a1", "b2"});
        e.order({"a1", "b2", "c1"});
      },
      [&](Expr<K>& e) {
        e.apply(q1, {"a", "b"}, {"a1", "b1"});
        e.apply(r2, {"c", "b1"}, {"b2", "c1"});
        e.order({"a1", "b2", "c1"});
      },
      out});
  ids.push_back({"(comb5)", legs,
      [&](Expr<K>& e) {
        e.apply(q1, {"a", "b"}, {"a1", "b1"});
        e.apply(r3, {"c", "a1"}, {"a2", "c1"});
        e.order({"a2", "b1", "c1"});
      },
      [&](Expr<K>& e) {
        e.apply(r3, {"c", "a"}, {"a1", "c1"});
        e.apply(q1, {"a1", "b"}, {"a2", "b1"});
        e.order({"a2", "b1", "c1"});
      },
      out});
  ids.push_back({"(comb6)", legs,
      [&](Expr<K>& e) {
        e.apply(r1, {"b", "a"}, {"a1", "b1"});
        e.apply(q3, {"a1", "c"}, {"a2", "c1"});
        e.order({"a2", "b1", "c1"});
      },
      [&](Expr<K>& e) {
        e.apply(q3, {"a", "c"}, {"a1", "c1"});
        e.apply(r1, {"b", "a1"}, {"a2", "b1"});
        e.order({"a2", "b1", "c1"});
      },
      out});
  ids.push_back({"(comb7)", legs,
      [&](Expr<K>& e) {
        e.apply(q2, {"b", "c"}, {"b1", "c1"});
        e.apply(r3, {"c1", "a"}, {"a1", "c2"});
        e.order({"a1", "b1", "c2"});
      },
      [&](Expr<K>& e) {
        e.apply(r3, {"c", "a"}, {"a1", "c1"});
        e.apply(q2, {"b", "c1"}, {"b1", "c2"});
        e.order({"a1", "b1", "c2"});
      },
      out});
  ids.push_back({"(comb8)", legs,
      [&](Expr<K>& e) {
        e.apply(q3, {"a", "c"}, {"a1", "c1"});
        e.apply(r2, {"c1", "b"}, {"b1", "c2"});
        e.order({"a1", "b1", "c2"});
      },
      [&](Expr<K>& e) {
        e.apply(r2, {"c", "b"}, {"b1", "c1"});
        e.apply(q3, {"a", "c1"}, {"a1", "c2"});
        e.order({"a1", "b1", "c2"});
      },
      out});

  return run_identities(t.a().field, "iteration conditions (" + t.a().label + ", " +
                                         t.b().label + ", " + t.c().label + ")",
                        ids, jobs);
}

template <class K>
struct IteratedProduct {
  LRPair<K> outer;  // (V1, T1) on (A _Q1⊗_R1 B, C)
  LRPair<K> inner;  // (V2, T2) on (A, B _Q2⊗_R2 C)
  Algebra<K> left;   // (A _Q1⊗_R1 B) _V1⊗_T1 C
  Algebra<K> right;  // A _V2⊗_T2 (B _Q2⊗_R2 C)
  Report report;
};

// T1(c⊗(a⊗b)) = (a_{R3}⊗b_{R2})⊗(c_{R3})_{R2}
// V1((a⊗b)⊗c) = (a_{Q3}⊗b_{Q2})⊗(c_{Q3})_{Q2}
// T2((b⊗c)⊗a) = (a_{R3})_{R1}⊗(b_{R1}⊗c_{R3})
// V2(a⊗(b⊗c)) = (a_{Q3})_{Q1}⊗(b_{Q1}⊗c_{Q3})
template <class K>
IteratedProduct<K> build_iterated(const TripleData<K>& t, bool force = false, int jobs = 1) {
  if (!force) {
    Report pre = check_triple(t, jobs);
    pre.merge(check_hexagons(t, jobs));
    if (!pre.ok()) {
      pre.subject = "iterated product preconditions";
      throw build_error(std::move(pre));
    }
  }
  const K& f = t.a().field;
  int na = t.a().dim, nb = t.b().dim, nc = t.c().dim;
  const LinMap<K>& r1 = t.p1.r.map;
  const LinMap<K>& r2 = t.p2.r.map;
  const LinMap<K>& r3 = t.p3.r.map;
  const LinMap<K>& q1 = t.p1.q.map;
  const LinMap<K>& q2 = t.p2.q.map;
  const LinMap<K>& q3 = t.p3.q.map;

  LinMap<K> t1 = compile_program<K>(
      f, {{"c", nc, "g"}, {"a", na, "e"}, {"b", nb, "f"}},
      [&](Expr<K>& e) {
        e.apply(r3, {"c", "a"}, {"a1", "c1"});
        e.apply(r2, {"c1", "b"}, {"b1", "c2"});
        e.order({"a1", "b1", "c2"});
      });
  LinMap<K> v1 = compile_program<K>(
      f, {{"a", na, "e"}, {"b", nb, "f"}, {"c", nc, "g"}},
      [&](Expr<K>& e) {
        e.apply(q3, {"a", "c"}, {"a1", "c1"});
        e.apply(q2, {"b", "c1"}, {"b1", "c2"});
        e.order({"a1", "b1", "c2"});
      });
  LinMap<K> t2 = compile_program<K>(
      f, {{"b", nb, "f"}, {"c", nc, "g"}, {"a", na, "e"}},
      [&](Expr<K>& e) {
        e.apply(r3, {"c", "a"}, {"a1", "c1"});
        e.apply(r1, {"b", "a1"}, {"a2", "b1"});
        e.order({"a2", "b1", "c1"});
      });
  LinMap<K> v2 = compile_program<K>(
      f, {{"a", na, "e"}, {"b", nb, "f"}, {"c", nc, "g"}},
      [&](Expr<K>& e) {
        e.apply(q3, {"a", "c"}, {"a1", "c1"});
        e.apply(q1, {"a1", "b"}, {"a2", "b1"});
        e.order({"a2", "b1", "c1"});
      });

  Algebra<K> ab = build_lr_product(t.p1, true, jobs);
  Algebra<K> bc = build_lr_product(t.p2, true, jobs);
  LRPair<K> outer(TwistingMap<K>(ab, t.c(), t1.with_shapes({nc, na * nb}, {na * nb, nc})),
                  QMap<K>(ab, t.c(), v1.with_shapes({na * nb, nc}, {na * nb, nc})));
  LRPair<K> inner(TwistingMap<K>(t.a(), bc, t2.with_shapes({nb * nc, na}, {na, nb * nc})),
                  QMap<K>(t.a(), bc, v2.with_shapes({na, nb * nc}, {na, nb * nc})));

  Report rep;
  rep.subject = "iterated product (" + t.a().label + ", " + t.b().label + ", " +
                t.c().label + ")";
  rep.merge(check_lr_pair(outer, jobs), "(V1,T1) ");
  rep.merge(check_lr_pair(inner, jobs), "(V2,T2) ");

  Algebra<K> left = build_lr_product(outer, true, jobs);
  Algebra<K> right = build_lr_product(inner, true, jobs);
  rep.add(compare_tables("tables", left, right));

  return {std::move(outer), std::move(inner), std::move(left), std::move(right),
          std::move(rep)};
}

// The all-trivial triple on (A, B, C): every R a flip, every Q the identity.
template <class K>
TripleData<K> trivial_triple(const Algebra<K>& a, const Algebra<K>& b, const Algebra<K>& c) {
  return TripleData<K>(
      LRPair<K>(flip_twisting_map(a, b), identity_qmap(a, b)),
      LRPair<K>(flip_twisting_map(b, c), identity_qmap(b, c)),
      LRPair<K>(flip_twisting_map(a, c), identity_qmap(a, c)));
}

}  // namespace lrtwist
