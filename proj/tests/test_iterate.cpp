#include <catch2/catch_amalgamated.hpp>

#include "lrtwist/iterate.hpp"
#include "util.hpp"

using namespace lrtwist;
using testutil::cyclic_group_algebra;
using testutil::truncated_poly;

namespace {

const CheckItem& find_item(const Report& r, const std::string& label) {
  for (const auto& it : r.items)
    if (it.label == label) return it;
  throw std::runtime_error("no check item labelled '" + label + "'");
}

template <class K>
typename K::Elem pow_s(const K& f, typename K::Elem s, int e) {
  auto r = f.one();
  for (int t = 0; t < e; ++t) r = r * s;
  return r;
}

// R(b_j⊗a_i) = s^{ij} a_i⊗b_j on basis degrees.
template <class K>
TwistingMap<K> diagonal_r(const Algebra<K>& a, const Algebra<K>& b, typename K::Elem s) {
  const K& f = a.field;
  Matrix<K> m(f, a.dim * b.dim, b.dim * a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      m.at(i * b.dim + j, j * a.dim + i) = pow_s(f, s, i * j);
  return TwistingMap<K>(a, b, LinMap<K>({b.dim, a.dim}, {a.dim, b.dim}, std::move(m)));
}

// Q(a_i⊗b_j) = s^{ij} a_i⊗b_j.
template <class K>
QMap<K> diagonal_q(const Algebra<K>& a, const Algebra<K>& b, typename K::Elem s) {
  const K& f = a.field;
  Matrix<K> m(f, a.dim * b.dim, a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      m.at(i * b.dim + j, i * b.dim + j) = pow_s(f, s, i * j);
  return QMap<K>(a, b, LinMap<K>({a.dim, b.dim}, {a.dim, b.dim}, std::move(m)));
}

Algebra<QQ> poly(const QQ& f, const std::string& var) {
  Algebra<QQ> a = truncated_poly(f, 2);
  a.label = "k[" + var + "]/(" + var + "^2)";
  return a;
}

// R(y⊗x) = -x⊗y + 1⊗1 on two nilpotent generators; the unit perturbation is
// only consistent with the multiplicative axioms at sign -1.
TwistingMap<QQ> sign_unit_r(const Algebra<QQ>& a, const Algebra<QQ>& b) {
  const QQ& f = a.field;
  Matrix<QQ> m(f, 4, 4);
  m.at(0, 0) = f.one();
  m.at(2, 1) = f.one();
  m.at(1, 2) = f.one();
  m.at(3, 3) = -f.one();
  m.at(0, 3) = f.one();
  return TwistingMap<QQ>(a, b, LinMap<QQ>({2, 2}, {2, 2}, std::move(m)));
}

// Q(y⊗z) = -y⊗z + 1⊗1, same shape on the Q side.
QMap<QQ> sign_unit_q(const Algebra<QQ>& a, const Algebra<QQ>& b) {
  const QQ& f = a.field;
  Matrix<QQ> m = Matrix<QQ>::identity(f, 4);
  m.at(3, 3) = -f.one();
  m.at(0, 3) = f.one();
  return QMap<QQ>(a, b, LinMap<QQ>({2, 2}, {2, 2}, std::move(m)));
}

}  // namespace

TEST_CASE("the trivial triple iterates to the componentwise product", "[iterate]") {
  QQ f;
  Algebra<QQ> a = truncated_poly(f, 2);
  Algebra<QQ> b = cyclic_group_algebra(f, 2);
  Algebra<QQ> c = truncated_poly(f, 3);
  TripleData<QQ> t = trivial_triple(a, b, c);

  CHECK(check_triple(t).ok());
  Report hex = check_hexagons(t);
  CHECK(hex.ok());
  REQUIRE(hex.items.size() == 8);
  CHECK(hex.items[0].label == "(YB)");
  CHECK(hex.items[1].label == "(YBQuri)");
  CHECK(hex.items[2].label == "(comb3)");
  CHECK(hex.items[7].label == "(comb8)");

  IteratedProduct<QQ> it = build_iterated(t);
  CHECK(it.report.ok());
  Algebra<QQ> plain = tensor_algebra(tensor_algebra(a, b), c);
  CHECK(it.left.same_table(plain));
  CHECK(it.right.same_table(plain));
}

TEST_CASE("diagonal triples iterate with multiplicative scaling", "[iterate]") {
  QQ f;
  Algebra<QQ> a = poly(f, "x"), b = poly(f, "y"), c = poly(f, "z");
  TripleData<QQ> t(
      LRPair<QQ>(diagonal_r(a, b, Rational(2)), diagonal_q(a, b, Rational(7))),
      LRPair<QQ>(diagonal_r(b, c, Rational(3)), diagonal_q(b, c, Rational(11))),
      LRPair<QQ>(diagonal_r(a, c, Rational(5)), diagonal_q(a, c, Rational(13))));
  CHECK(check_triple(t).ok());
  CHECK(check_hexagons(t).ok());

  IteratedProduct<QQ> it = build_iterated(t);
  CHECK(it.report.ok());
  CHECK(find_item(it.report, "(V1,T1) (tw4)").pass);
  CHECK(find_item(it.report, "(V2,T2) (comb2)").pass);
  CHECK(find_item(it.report, "tables").pass);
  CHECK(it.left.same_table(it.right));
  CHECK(it.left.dim == 8);

  // (1⊗1⊗z)(x⊗y⊗1) picks up R3 then R2 on the z leg: 5·3 = 15
  CHECK(it.left.c(1, 6, 7) == Rational(15));
  // (x⊗1⊗1)(1⊗y⊗z) pays Q3 for x over z and Q1 for x over y: 13·7 = 91
  CHECK(it.left.c(4, 3, 7) == Rational(91));
}

TEST_CASE("identity Q maps reduce the iteration to twisted products", "[iterate]") {
  QQ f;
  Algebra<QQ> a = poly(f, "x"), b = poly(f, "y"), c = poly(f, "z");
  TripleData<QQ> t(
      LRPair<QQ>(diagonal_r(a, b, Rational(2)), identity_qmap(a, b)),
      LRPair<QQ>(diagonal_r(b, c, Rational(3)), identity_qmap(b, c)),
      LRPair<QQ>(diagonal_r(a, c, Rational(5)), identity_qmap(a, c)));
  IteratedProduct<QQ> it = build_iterated(t);
  CHECK(it.report.ok());
  CHECK(it.outer.q.map.mat.is_identity());
  CHECK(it.inner.q.map.mat.is_identity());
  CHECK(it.left.same_table(build_twisted_product(it.outer.r, true)));
  CHECK(it.right.same_table(build_twisted_product(it.inner.r, true)));
}

TEST_CASE("a unit perturbation on R1 and Q2 breaks exactly (comb3)", "[iterate]") {
  QQ f;
  Algebra<QQ> a = poly(f, "x"), b = poly(f, "y"), c = poly(f, "z");
  TwistingMap<QQ> r1 = sign_unit_r(a, b);
  QMap<QQ> q2 = sign_unit_q(b, c);
  CHECK(check_twisting_map(r1).ok());
  CHECK(check_qmap(q2).ok());

  TripleData<QQ> t(LRPair<QQ>(r1, identity_qmap(a, b)),
                   LRPair<QQ>(flip_twisting_map(b, c), q2),
                   LRPair<QQ>(flip_twisting_map(a, c), identity_qmap(a, c)));
  CHECK(check_triple(t).ok());

  Report hex = check_hexagons(t);
  CHECK_FALSE(hex.ok());
  const CheckItem& it = find_item(hex, "(comb3)");
  CHECK_FALSE(it.pass);
  CHECK(it.violations == 1);
  CHECK(it.witness ==
        "a=e1, b=f1, c=g1: lhs = e0⊗f0⊗g1 + -e1⊗f0⊗g0 + e1⊗f1⊗g1, "
        "rhs = -e0⊗f0⊗g1 + e1⊗f0⊗g0 + e1⊗f1⊗g1");
  for (const char* ok : {"(YB)", "(YBQuri)", "(comb4)", "(comb5)", "(comb6)",
                         "(comb7)", "(comb8)"})
    CHECK(find_item(hex, ok).pass);

  // witnesses are stable under parallel scanning
  Report par = check_hexagons(t, 3);
  REQUIRE(par.items.size() == hex.items.size());
  for (std::size_t i = 0; i < hex.items.size(); ++i) {
    CHECK(par.items[i].violations == hex.items[i].violations);
    CHECK(par.items[i].witness == hex.items[i].witness);
  }

  CHECK_THROWS_AS(build_iterated(t), build_error);
  IteratedProduct<QQ> forced = build_iterated(t, true);
  CHECK(forced.report.items.size() == 17);
}

TEST_CASE("mixed dimensions over a prime field", "[iterate]") {
  GFp f(7);
  Algebra<GFp> a = truncated_poly(f, 2);
  Algebra<GFp> b = cyclic_group_algebra(f, 3);
  Algebra<GFp> c = cyclic_group_algebra(f, 2);
  // parameter orders must divide the group orders: 2^3 = 6^2 = 4^3 = 1 in GF(7)
  TripleData<GFp> t(
      LRPair<GFp>(diagonal_r(a, b, f.from_int(2)), diagonal_q(a, b, f.from_int(4))),
      LRPair<GFp>(flip_twisting_map(b, c), identity_qmap(b, c)),
      LRPair<GFp>(diagonal_r(a, c, f.from_int(6)), diagonal_q(a, c, f.from_int(6))));
  CHECK(check_triple(t, 2).ok());
  CHECK(check_hexagons(t, 2).ok());

  IteratedProduct<GFp> it = build_iterated(t, false, 2);
  CHECK(it.report.ok());
  CHECK(it.left.dim == 12);
  CHECK(it.left.same_table(it.right));
  // (x⊗g⊗1)(1⊗g⊗h) = 6·4·(x⊗g²⊗h) = 3·(x⊗g²⊗h) in GF(7)
  CHECK(it.left.c(8, 3, 11) == f.from_int(3));
}

TEST_CASE("triple construction validates shared algebras", "[iterate]") {
  QQ f;
  Algebra<QQ> a = truncated_poly(f, 2);
  Algebra<QQ> b = cyclic_group_algebra(f, 3);
  LRPair<QQ> ab(flip_twisting_map(a, b), identity_qmap(a, b));
  CHECK_THROWS_AS(TripleData<QQ>(ab, ab, ab), std::invalid_argument);
}
