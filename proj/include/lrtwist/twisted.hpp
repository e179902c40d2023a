#pragma once

// Twisting maps R: B⊗A → A⊗B with R(b⊗a) = a_R⊗b_R, Q-maps on A⊗B with
// Q(a⊗b) = a_Q⊗b_Q, L-R pairs (R, Q), the three products they afford, the
// Q^op correspondence, twistors, and detwisting of a bijective Q.
//
// Check labels (tw0), (tw4), (tw5), (tw0'), (tw4'), (tw5'), (comb1), (comb2),
// (dec1)-(dec3) name the individual axioms in reports and witnesses.

#include "lrtwist/algebra.hpp"

namespace lrtwist {

template <class K>
struct TwistingMap {
  Algebra<K> a, b;
  LinMap<K> map;  // {dim B, dim A} -> {dim A, dim B}

  TwistingMap(Algebra<K> a_, Algebra<K> b_, LinMap<K> m)
      : a(std::move(a_)), b(std::move(b_)), map(std::move(m)) {
    if (a.field != b.field || map.mat.field() != a.field)
      throw field_error("twisting map: mixed fields");
    if (map.in != Shape{b.dim, a.dim} || map.out != Shape{a.dim, b.dim})
      throw std::invalid_argument("twisting map must have shape B⊗A -> A⊗B");
  }
};

template <class K>
struct QMap {
  Algebra<K> a, b;
  LinMap<K> map;  // {dim A, dim B} -> {dim A, dim B}

  QMap(Algebra<K> a_, Algebra<K> b_, LinMap<K> m)
      : a(std::move(a_)), b(std::move(b_)), map(std::move(m)) {
    if (a.field != b.field || map.mat.field() != a.field)
      throw field_error("Q-map: mixed fields");
    if (map.in != Shape{a.dim, b.dim} || map.out != map.in)
      throw std::invalid_argument("Q-map must be an endomorphism of A⊗B");
  }
};

template <class K>
struct LRPair {
  TwistingMap<K> r;
  QMap<K> q;

  LRPair(TwistingMap<K> r_, QMap<K> q_) : r(std::move(r_)), q(std::move(q_)) {
    if (!r.a.same_table(q.a) || !r.b.same_table(q.b))
      throw std::invalid_argument("L-R pair components live on different algebras");
  }
};

template <class K>
struct Twistor {
  Algebra<K> d;
  LinMap<K> map;  // endomorphism of D⊗D

  Twistor(Algebra<K> d_, LinMap<K> m) : d(std::move(d_)), map(std::move(m)) {
    if (map.mat.field() != d.field) throw field_error("twistor: mixed fields");
    if (map.in != Shape{d.dim, d.dim} || map.out != map.in)
      throw std::invalid_argument("twistor must be an endomorphism of D⊗D");
  }
};

template <class K>
TwistingMap<K> flip_twisting_map(const Algebra<K>& a, const Algebra<K>& b) {
  return TwistingMap<K>(a, b, flip_map(a.field, b.dim, a.dim));
}

template <class K>
QMap<K> identity_qmap(const Algebra<K>& a, const Algebra<K>& b) {
  return QMap<K>(a, b, LinMap<K>::identity(a.field, {a.dim, b.dim}));
}

template <class K>
Twistor<K> identity_twistor(const Algebra<K>& d) {
  return Twistor<K>(d, LinMap<K>::identity(d.field, {d.dim, d.dim}));
}

namespace detail {

template <class K>
std::vector<typename K::Elem> tensor_unit(const Algebra<K>& a, const Algebra<K>& b) {
  std::vector<typename K::Elem> u(static_cast<std::size_t>(a.dim) * b.dim, a.field.zero());
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) u[static_cast<std::size_t>(i) * b.dim + j] = a.unit[i] * b.unit[j];
  return u;
}

}  // namespace detail

// (tw0): R(1⊗a) = a⊗1 and R(b⊗1) = 1⊗b.
// (tw4): (aa')_R⊗b_R = a_R a'_r⊗b_{R_r}.
// (tw5): a_R⊗(bb')_R = a_{R_r}⊗b_r b'_R.
template <class K>
Report check_twisting_map(const TwistingMap<K>& t, int jobs = 1) {
  const Algebra<K>&A = t.a, &B = t.b;
  LinMap<K> mua = A.mu(), mub = B.mu(), etaa = A.eta(), etab = B.eta();
  const LinMap<K>& rm = t.map;

  std::vector<CheckItem> units;
  units.push_back(run_identity(A.field, Identity<K>{
      "(tw0) on 1⊗a",
      {{"a", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etab, {}, {"u"});
        e.apply(rm, {"u", "a"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(etab, {}, {"u"});
        e.order({"a", "u"});
      },
      {"e", "f"}}, jobs));
  units.push_back(run_identity(A.field, Identity<K>{
      "(tw0) on b⊗1",
      {{"b", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(rm, {"b", "u"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.order({"u", "b"});
      },
      {"e", "f"}}, jobs));

  Report rep;
  rep.subject = "R on (" + A.label + ", " + B.label + ")";
  rep.add(merge_items("(tw0)", units));

  rep.add(run_identity(A.field, Identity<K>{
      "(tw4)",
      {{"a", A.dim, "e"}, {"a'", A.dim, "e"}, {"b", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"a", "a'"}, {"p"});
        e.apply(rm, {"b", "p"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a"}, {"aR", "bR"});
        e.apply(rm, {"bR", "a'"}, {"ar", "br"});
        e.apply(mua, {"aR", "ar"}, {"x"});
        e.order({"x", "br"});
      },
      {"e", "f"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(tw5)",
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(mub, {"b", "b'"}, {"p"});
        e.apply(rm, {"p", "a"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(rm, {"b'", "a"}, {"aR", "bR"});
        e.apply(rm, {"b", "aR"}, {"ar", "br"});
        e.apply(mub, {"br", "bR"}, {"y"});
        e.order({"ar", "y"});
      },
      {"e", "f"}}, jobs));

  return rep;
}

// (tw0'): Q(a⊗1) = a⊗1 and Q(1⊗b) = 1⊗b.
// (tw4'): (aa')_Q⊗b_Q = a_q a'_Q⊗b_{Q_q}.
// (tw5'): a_Q⊗(bb')_Q = a_{Q_q}⊗b_Q b'_q.
template <class K>
Report check_qmap(const QMap<K>& q, int jobs = 1) {
  const Algebra<K>&A = q.a, &B = q.b;
  LinMap<K> mua = A.mu(), mub = B.mu(), etaa = A.eta(), etab = B.eta();
  const LinMap<K>& qm = q.map;

  std::vector<CheckItem> units;
  units.push_back(run_identity(A.field, Identity<K>{
      "(tw0') on a⊗1",
      {{"a", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etab, {}, {"u"});
        e.apply(qm, {"a", "u"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(etab, {}, {"u"});
        e.order({"a", "u"});
      },
      {"e", "f"}}, jobs));
  units.push_back(run_identity(A.field, Identity<K>{
      "(tw0') on 1⊗b",
      {{"b", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(qm, {"u", "b"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.order({"u", "b"});
      },
      {"e", "f"}}, jobs));

  Report rep;
  rep.subject = "Q on (" + A.label + ", " + B.label + ")";
  rep.add(merge_items("(tw0')", units));

  rep.add(run_identity(A.field, Identity<K>{
      "(tw4')",
      {{"a", A.dim, "e"}, {"a'", A.dim, "e"}, {"b", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"a", "a'"}, {"p"});
        e.apply(qm, {"p", "b"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(qm, {"a'", "b"}, {"aQ", "bQ"});
        e.apply(qm, {"a", "bQ"}, {"aq", "bq"});
        e.apply(mua, {"aq", "aQ"}, {"x"});
        e.order({"x", "bq"});
      },
      {"e", "f"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(tw5')",
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(mub, {"b", "b'"}, {"p"});
        e.apply(qm, {"a", "p"}, {"x", "y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(qm, {"a", "b"}, {"aQ", "bQ"});
        e.apply(qm, {"aQ", "b'"}, {"aq", "bq"});
        e.apply(mub, {"bQ", "bq"}, {"y"});
        e.order({"aq", "y"});
      },
      {"e", "f"}}, jobs));

  return rep;
}

// The full eight-axiom suite for an L-R pair:
// (comb1): b_R⊗a_{R_Q}⊗b'_Q = b_R⊗a_{Q_R}⊗b'_Q.
// (comb2): a_R⊗b_{R_Q}⊗a'_Q = a_R⊗b_{Q_R}⊗a'_Q.
template <class K>
Report check_lr_pair(const LRPair<K>& p, int jobs = 1) {
  const Algebra<K>&A = p.r.a, &B = p.r.b;
  const LinMap<K>& rm = p.r.map;
  const LinMap<K>& qm = p.q.map;

  Report rep = check_twisting_map(p.r, jobs);
  rep.subject = "L-R pair on (" + A.label + ", " + B.label + ")";
  rep.merge(check_qmap(p.q, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(comb1)",
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a"}, {"aR", "bR"});
        e.apply(qm, {"aR", "b'"}, {"x", "bq"});
        e.order({"bR", "x", "bq"});
      },
      [&](Expr<K>& e) {
        e.apply(qm, {"a", "b'"}, {"aQ", "bq"});
        e.apply(rm, {"b", "aQ"}, {"x", "bR"});
        e.order({"bR", "x", "bq"});
      },
      {"f", "e", "f"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(comb2)",
      {{"a", A.dim, "e"}, {"a'", A.dim, "e"}, {"b", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a"}, {"aR", "bR"});
        e.apply(qm, {"a'", "bR"}, {"aq", "y"});
        e.order({"aR", "y", "aq"});
      },
      [&](Expr<K>& e) {
        e.apply(qm, {"a'", "b"}, {"aq", "bQ"});
        e.apply(rm, {"bQ", "a"}, {"aR", "y"});
        e.order({"aR", "y", "aq"});
      },
      {"e", "f", "e"}}, jobs));

  return rep;
}

// A⊗_R B with (a⊗b)(a'⊗b') = aa'_R⊗b_R b'.
template <class K>
Algebra<K> build_twisted_product(const TwistingMap<K>& t, bool force = false, int jobs = 1) {
  if (!force) {
    Report rep = check_twisting_map(t, jobs);
    if (!rep.ok()) throw build_error(std::move(rep));
  }
  const Algebra<K>&A = t.a, &B = t.b;
  LinMap<K> mua = A.mu(), mub = B.mu();
  const LinMap<K>& rm = t.map;
  LinMap<K> mu = compile_program<K>(
      A.field,
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"a'", A.dim, "e"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a'"}, {"x", "y"});
        e.apply(mua, {"a", "x"}, {"p"});
        e.apply(mub, {"y", "b'"}, {"s"});
        e.order({"p", "s"});
      });
  int d = A.dim * B.dim;
  return algebra_from_mult_map(A.field, A.label + " ⊗_R " + B.label,
                               mu.with_shapes({d, d}, {d}), detail::tensor_unit(A, B));
}

// A _Q⊗ B with (a⊗b)(a'⊗b') = a_Q a'⊗bb'_Q.
template <class K>
Algebra<K> build_q_product(const QMap<K>& q, bool force = false, int jobs = 1) {
  if (!force) {
    Report rep = check_qmap(q, jobs);
    if (!rep.ok()) throw build_error(std::move(rep));
  }
  const Algebra<K>&A = q.a, &B = q.b;
  LinMap<K> mua = A.mu(), mub = B.mu();
  const LinMap<K>& qm = q.map;
  LinMap<K> mu = compile_program<K>(
      A.field,
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"a'", A.dim, "e"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(qm, {"a", "b'"}, {"x", "y"});
        e.apply(mua, {"x", "a'"}, {"p"});
        e.apply(mub, {"b", "y"}, {"s"});
        e.order({"p", "s"});
      });
  int d = A.dim * B.dim;
  return algebra_from_mult_map(A.field, A.label + " _Q⊗ " + B.label,
                               mu.with_shapes({d, d}, {d}), detail::tensor_unit(A, B));
}

// A _Q⊗_R B with (a⊗b)(a'⊗b') = a_Q a'_R⊗b_R b'_Q.
template <class K>
Algebra<K> build_lr_product(const LRPair<K>& p, bool force = false, int jobs = 1) {
  if (!force) {
    Report rep = check_lr_pair(p, jobs);
    if (!rep.ok()) throw build_error(std::move(rep));
  }
  const Algebra<K>&A = p.r.a, &B = p.r.b;
  LinMap<K> mua = A.mu(), mub = B.mu();
  const LinMap<K>& rm = p.r.map;
  const LinMap<K>& qm = p.q.map;
  LinMap<K> mu = compile_program<K>(
      A.field,
      {{"a", A.dim, "e"}, {"b", B.dim, "f"}, {"a'", A.dim, "e"}, {"b'", B.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a'"}, {"aR", "bR"});
        e.apply(qm, {"a", "b'"}, {"aQ", "bQ"});
        e.apply(mua, {"aQ", "aR"}, {"p"});
        e.apply(mub, {"bR", "bQ"}, {"s"});
        e.order({"p", "s"});
      });
  int d = A.dim * B.dim;
  return algebra_from_mult_map(A.field, A.label + " _Q⊗_R " + B.label,
                               mu.with_shapes({d, d}, {d}), detail::tensor_unit(A, B));
}

// Q^op(b⊗a) = a_Q⊗b_Q as a twisting map between the opposite algebras; the
// report asserts Q is a valid Q-map iff Q^op is a valid twisting map, and
// that A _Q⊗ B = (A^op ⊗_{Q^op} B^op)^op under the trivial identification.
template <class K>
struct QopResult {
  TwistingMap<K> qop;
  Report report;
};

template <class K>
QopResult<K> qop_correspondence(const QMap<K>& q, int jobs = 1) {
  const Algebra<K>&A = q.a, &B = q.b;
  LinMap<K> fl = flip_map(A.field, B.dim, A.dim);
  TwistingMap<K> qop(opposite(A), opposite(B), q.map.after(fl));

  Report rep;
  rep.subject = "Q^op correspondence on (" + A.label + ", " + B.label + ")";
  Report qc = check_qmap(q, jobs);
  Report tc = check_twisting_map(qop, jobs);
  bool equiv = qc.ok() == tc.ok();
  rep.merge(qc, "Q ");
  rep.merge(tc, "Q^op ");
  rep.add(CheckItem{"pass_equivalence", equiv, equiv ? 0 : 1,
                    equiv ? ""
                          : std::string("Q ") + (qc.ok() ? "passes" : "fails") +
                                " but Q^op " + (tc.ok() ? "passes" : "fails")});
  rep.add(compare_tables("opposite_table", build_q_product(q, true, jobs),
                         opposite(build_twisted_product(qop, true, jobs))));
  return {std::move(qop), std::move(rep)};
}

// Unit conditions plus:
// (dec1): μ₂₃∘T₁₃∘T₁₂ = T∘μ₂₃.
// (dec2): μ₁₂∘T₁₃∘T₂₃ = T∘μ₁₂.
// (dec3): T₁₂∘T₂₃ = T₂₃∘T₁₂.
template <class K>
Report check_twistor(const Twistor<K>& t, int jobs = 1) {
  const Algebra<K>& D = t.d;
  LinMap<K> mud = D.mu(), etad = D.eta();
  const LinMap<K>& tm = t.map;

  std::vector<CheckItem> units;
  units.push_back(run_identity(D.field, Identity<K>{
      "(unit) on 1⊗d",
      {{"x", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etad, {}, {"u"});
        e.apply(tm, {"u", "x"}, {"p", "s"});
        e.order({"p", "s"});
      },
      [&](Expr<K>& e) {
        e.apply(etad, {}, {"u"});
        e.order({"u", "x"});
      },
      {"e", "e"}}, jobs));
  units.push_back(run_identity(D.field, Identity<K>{
      "(unit) on d⊗1",
      {{"x", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etad, {}, {"u"});
        e.apply(tm, {"x", "u"}, {"p", "s"});
        e.order({"p", "s"});
      },
      [&](Expr<K>& e) {
        e.apply(etad, {}, {"u"});
        e.order({"x", "u"});
      },
      {"e", "e"}}, jobs));

  Report rep;
  rep.subject = "twistor on " + D.label;
  rep.add(merge_items("(unit)", units));

  rep.add(run_identity(D.field, Identity<K>{
      "(dec1)",
      {{"x", D.dim, "e"}, {"y", D.dim, "e"}, {"z", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(tm, {"x", "y"}, {"x1", "y1"});
        e.apply(tm, {"x1", "z"}, {"x2", "z1"});
        e.apply(mud, {"y1", "z1"}, {"w"});
        e.order({"x2", "w"});
      },
      [&](Expr<K>& e) {
        e.apply(mud, {"y", "z"}, {"w"});
        e.apply(tm, {"x", "w"}, {"x2", "w2"});
        e.order({"x2", "w2"});
      },
      {"e", "e"}}, jobs));

  rep.add(run_identity(D.field, Identity<K>{
      "(dec2)",
      {{"x", D.dim, "e"}, {"y", D.dim, "e"}, {"z", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(tm, {"y", "z"}, {"y1", "z1"});
        e.apply(tm, {"x", "z1"}, {"x1", "z2"});
        e.apply(mud, {"x1", "y1"}, {"w"});
        e.order({"w", "z2"});
      },
      [&](Expr<K>& e) {
        e.apply(mud, {"x", "y"}, {"w"});
        e.apply(tm, {"w", "z"}, {"w2", "z1"});
        e.order({"w2", "z1"});
      },
      {"e", "e"}}, jobs));

  rep.add(run_identity(D.field, Identity<K>{
      "(dec3)",
      {{"x", D.dim, "e"}, {"y", D.dim, "e"}, {"z", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(tm, {"y", "z"}, {"y1", "z1"});
        e.apply(tm, {"x", "y1"}, {"x1", "y2"});
        e.order({"x1", "y2", "z1"});
      },
      [&](Expr<K>& e) {
        e.apply(tm, {"x", "y"}, {"x1", "y1"});
        e.apply(tm, {"y1", "z"}, {"y2", "z1"});
        e.order({"x1", "y2", "z1"});
      },
      {"e", "e", "e"}}, jobs));

  return rep;
}

// D^T: same space and unit, multiplication μ∘T.
template <class K>
Algebra<K> build_twisted_by_twistor(const Twistor<K>& t, bool force = false, int jobs = 1) {
  if (!force) {
    Report rep = check_twistor(t, jobs);
    if (!rep.ok()) throw build_error(std::move(rep));
  }
  const Algebra<K>& D = t.d;
  LinMap<K> mud = D.mu();
  const LinMap<K>& tm = t.map;
  LinMap<K> mu = compile_program<K>(
      D.field, {{"x", D.dim, "e"}, {"y", D.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(tm, {"x", "y"}, {"p", "s"});
        e.apply(mud, {"p", "s"}, {"w"});
        e.order({"w"});
      });
  return algebra_from_mult_map(D.field, D.label + "^T", mu, D.unit);
}

// The canonical twistors of an L-R pair:
//   T1((a⊗b)⊗(a'⊗b')) = (a_Q⊗b_R)⊗(a'_R⊗b'_Q)   for A⊗B,
//   T2((a⊗b)⊗(a'⊗b')) = (a_Q⊗b)⊗(a'⊗b'_Q)       for A⊗_R B,
//   T3((a⊗b)⊗(a'⊗b')) = (a⊗b_R)⊗(a'_R⊗b')       for A _Q⊗ B,
// and A _Q⊗_R B = (A⊗B)^T1 = (A⊗_R B)^T2 = (A _Q⊗ B)^T3.
template <class K>
struct CanonicalTwistors {
  Twistor<K> t1, t2, t3;
  Report report;
};

template <class K>
CanonicalTwistors<K> canonical_twistors(const LRPair<K>& p, bool force = false, int jobs = 1) {
  if (!force) {
    Report rep = check_lr_pair(p, jobs);
    if (!rep.ok()) throw build_error(std::move(rep));
  }
  const Algebra<K>&A = p.r.a, &B = p.r.b;
  const LinMap<K>& rm = p.r.map;
  const LinMap<K>& qm = p.q.map;
  int d = A.dim * B.dim;
  std::vector<LegSpec> legs = {
      {"a", A.dim, "e"}, {"b", B.dim, "f"}, {"a'", A.dim, "e"}, {"b'", B.dim, "f"}};

  LinMap<K> m1 = compile_program<K>(A.field, legs, [&](Expr<K>& e) {
    e.apply(rm, {"b", "a'"}, {"aR", "bR"});
    e.apply(qm, {"a", "b'"}, {"aQ", "bQ"});
    e.order({"aQ", "bR", "aR", "bQ"});
  });
  LinMap<K> m2 = compile_program<K>(A.field, legs, [&](Expr<K>& e) {
    e.apply(qm, {"a", "b'"}, {"aQ", "bQ"});
    e.order({"aQ", "b", "a'", "bQ"});
  });
  LinMap<K> m3 = compile_program<K>(A.field, legs, [&](Expr<K>& e) {
    e.apply(rm, {"b", "a'"}, {"aR", "bR"});
    e.order({"a", "bR", "aR", "b'"});
  });

  Twistor<K> t1(tensor_algebra(A, B), m1.with_shapes({d, d}, {d, d}));
  Twistor<K> t2(build_twisted_product(p.r, true, jobs), m2.with_shapes({d, d}, {d, d}));
  Twistor<K> t3(build_q_product(p.q, true, jobs), m3.with_shapes({d, d}, {d, d}));

  Report rep;
  rep.subject = "canonical twistors on (" + A.label + ", " + B.label + ")";
  rep.merge(check_twistor(t1, jobs), "T1 ");
  rep.merge(check_twistor(t2, jobs), "T2 ");
  rep.merge(check_twistor(t3, jobs), "T3 ");

  Algebra<K> lr = build_lr_product(p, true, jobs);
  rep.add(compare_tables("T1 table", build_twisted_by_twistor(t1, true, jobs), lr));
  rep.add(compare_tables("T2 table", build_twisted_by_twistor(t2, true, jobs), lr));
  rep.add(compare_tables("T3 table", build_twisted_by_twistor(t3, true, jobs), lr));

  return {std::move(t1), std::move(t2), std::move(t3), std::move(rep)};
}

// For bijective Q: P = Q⁻¹∘R is a twisting map and Q's matrix is an algebra
// isomorphism A⊗_P B -> A _Q⊗_R B.
template <class K>
struct DetwistResult {
  TwistingMap<K> p;
  AlgebraMorphism<K> iso;
  Report report;
};

template <class K>
DetwistResult<K> detwist(const LRPair<K>& pair, int jobs = 1) {
  LinMap<K> qinv = [&]() -> LinMap<K> {
    try {
      return LinMap<K>(pair.q.map.out, pair.q.map.in, pair.q.map.mat.inverse());
    } catch (const singular_error& e) {
      throw std::invalid_argument(std::string("detwist requires bijective Q: ") + e.what());
    }
  }();
  TwistingMap<K> p(pair.r.a, pair.r.b, qinv.after(pair.r.map));

  Report rep;
  rep.subject = "detwist on (" + pair.r.a.label + ", " + pair.r.b.label + ")";
  rep.merge(check_twisting_map(p, jobs), "P ");

  AlgebraMorphism<K> iso(build_twisted_product(p, true, jobs),
                         build_lr_product(pair, true, jobs), pair.q.map.mat);
  rep.merge(is_isomorphism(iso, jobs), "iso ");
  return {std::move(p), std::move(iso), std::move(rep)};
}

// For algebra maps f: A -> A', g: B -> B' with (f⊗g)∘R = R'∘(g⊗f) and
// (f⊗g)∘Q = Q'∘(f⊗g), the map f⊗g is an algebra map between the L-R products.
template <class K>
Report check_lr_morphism(const AlgebraMorphism<K>& f, const AlgebraMorphism<K>& g,
                         const LRPair<K>& p, const LRPair<K>& pp, int jobs = 1) {
  if (!f.src.same_table(p.r.a) || !g.src.same_table(p.r.b) ||
      !f.tgt.same_table(pp.r.a) || !g.tgt.same_table(pp.r.b))
    throw std::invalid_argument("check_lr_morphism: maps do not match the pairs");

  LinMap<K> fm = f.map(), gm = g.map();
  const LinMap<K>& rm = p.r.map;
  const LinMap<K>& qm = p.q.map;
  const LinMap<K>& rmp = pp.r.map;
  const LinMap<K>& qmp = pp.q.map;

  Report rep;
  rep.subject = "L-R morphism (" + p.r.a.label + ", " + p.r.b.label + ") -> (" +
                pp.r.a.label + ", " + pp.r.b.label + ")";
  rep.merge(check_morphism(f, jobs), "f ");
  rep.merge(check_morphism(g, jobs), "g ");

  rep.add(run_identity(f.src.field, Identity<K>{
      "intertwines_R",
      {{"a", p.r.a.dim, "e"}, {"b", p.r.b.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(rm, {"b", "a"}, {"aR", "bR"});
        e.apply(fm, {"aR"}, {"x"});
        e.apply(gm, {"bR"}, {"y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(fm, {"a"}, {"fa"});
        e.apply(gm, {"b"}, {"gb"});
        e.apply(rmp, {"gb", "fa"}, {"x", "y"});
        e.order({"x", "y"});
      },
      {"e", "f"}}, jobs));

  rep.add(run_identity(f.src.field, Identity<K>{
      "intertwines_Q",
      {{"a", p.r.a.dim, "e"}, {"b", p.r.b.dim, "f"}},
      [&](Expr<K>& e) {
        e.apply(qm, {"a", "b"}, {"aQ", "bQ"});
        e.apply(fm, {"aQ"}, {"x"});
        e.apply(gm, {"bQ"}, {"y"});
        e.order({"x", "y"});
      },
      [&](Expr<K>& e) {
        e.apply(fm, {"a"}, {"fa"});
        e.apply(gm, {"b"}, {"gb"});
        e.apply(qmp, {"fa", "gb"}, {"x", "y"});
        e.order({"x", "y"});
      },
      {"e", "f"}}, jobs));

  AlgebraMorphism<K> fg(build_lr_product(p, true, jobs), build_lr_product(pp, true, jobs),
                        kron_map(fm, gm).mat);
  rep.merge(check_morphism(fg, jobs), "f⊗g ");
  return rep;
}

}  // namespace lrtwist
