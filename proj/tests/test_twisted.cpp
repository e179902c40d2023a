#include <catch2/catch_amalgamated.hpp>

#include "lrtwist/twisted.hpp"
#include "util.hpp"

using namespace lrtwist;

namespace {

Rational pow_r(const Rational& s, int n) {
  Rational r(1);
  for (int t = 0; t < n; ++t) r = r * s;
  return r;
}

// R(y^j⊗x^i) = s^{ij}·x^i⊗y^j.
TwistingMap<QQ> diagonal_r(const Algebra<QQ>& a, const Algebra<QQ>& b, const Rational& s) {
  QQ q;
  Matrix<QQ> m(q, a.dim * b.dim, b.dim * a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      m.at(i * b.dim + j, j * a.dim + i) = pow_r(s, i * j);
  return TwistingMap<QQ>(a, b, LinMap<QQ>({b.dim, a.dim}, {a.dim, b.dim}, m));
}

// Q(x^i⊗y^j) = s^{ij}·x^i⊗y^j.
QMap<QQ> diagonal_q(const Algebra<QQ>& a, const Algebra<QQ>& b, const Rational& s) {
  QQ q;
  Matrix<QQ> m(q, a.dim * b.dim, a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      m.at(i * b.dim + j, i * b.dim + j) = pow_r(s, i * j);
  return QMap<QQ>(a, b, LinMap<QQ>({a.dim, b.dim}, {a.dim, b.dim}, m));
}

Algebra<QQ> poly_a(const QQ& q) { return testutil::truncated_poly(q, 2); }

Algebra<QQ> poly_b(const QQ& q) {
  auto b = testutil::truncated_poly(q, 2);
  b.label = "k[y]/(y^2)";
  return b;
}

const CheckItem& find_item(const Report& r, const std::string& label) {
  for (const auto& it : r.items)
    if (it.label == label) return it;
  throw std::runtime_error("no report item labeled " + label);
}

}  // namespace

TEST_CASE("the flip map is a twisting map giving the plain tensor product", "[twisted]") {
  QQ q;
  auto a = poly_a(q);
  auto b = testutil::cyclic_group_algebra(q, 3);
  auto r = flip_twisting_map(a, b);

  Report rep = check_twisting_map(r);
  CHECK(rep.ok());
  REQUIRE(rep.items.size() == 3);
  CHECK(rep.items[0].label == "(tw0)");
  CHECK(rep.items[1].label == "(tw4)");
  CHECK(rep.items[2].label == "(tw5)");

  auto prod = build_twisted_product(r);
  CHECK(prod.same_table(tensor_algebra(a, b)));
  CHECK(prod.label == "k[x]/(x^2) ⊗_R kC3");
}

TEST_CASE("diagonal scaling R gives a quantum plane", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  auto r = diagonal_r(a, b, Rational(2));
  CHECK(check_twisting_map(r, 2).ok());

  auto prod = build_twisted_product(r);
  CHECK(check_algebra(prod).ok());
  // (1⊗y)(x⊗1) = 2·x⊗y while (x⊗1)(1⊗y) = x⊗y
  CHECK(prod.c(1, 2, 3) == Rational(2));
  CHECK(prod.c(2, 1, 3) == Rational(1));
  for (int k = 0; k < 3; ++k) CHECK(prod.c(1, 2, k) == q.zero());
}

TEST_CASE("a perturbed flip fails the multiplication axioms with witnesses", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  // R = flip except R(y⊗x) = x⊗y + 1⊗1
  Matrix<QQ> m = flip_map(q, 2, 2).mat;
  m.at(0, 3) = 1;
  TwistingMap<QQ> r(a, b, LinMap<QQ>({2, 2}, {2, 2}, m));

  Report rep = check_twisting_map(r);
  CHECK_FALSE(rep.ok());
  // the perturbation misses the unit rows, so (tw0) still holds
  CHECK(rep.items[0].pass);
  CHECK_FALSE(rep.items[1].pass);
  CHECK(rep.items[1].violations == 1);
  CHECK(rep.items[1].witness == "a=e1, a'=e1, b=f1: lhs = 0, rhs = 2·e1⊗f0");
  CHECK_FALSE(rep.items[2].pass);
  CHECK(rep.items[2].violations == 1);
  CHECK(rep.items[2].witness == "a=e1, b=f1, b'=f1: lhs = 0, rhs = 2·e0⊗f1");

  CHECK_THROWS_AS(build_twisted_product(r), build_error);
  auto forced = build_twisted_product(r, true);
  CHECK_FALSE(check_algebra(forced).ok());
}

TEST_CASE("q-map checks accept identity and diagonal maps", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  CHECK(check_qmap(identity_qmap(a, b)).ok());
  CHECK(check_qmap(diagonal_q(a, b, Rational(2))).ok());
  CHECK(build_q_product(identity_qmap(a, b)).same_table(tensor_algebra(a, b)));
}

TEST_CASE("a q-map killing 1⊗y fails the unit axiom", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  Matrix<QQ> m = Matrix<QQ>::identity(q, 4);
  m.at(1, 1) = 0;  // basis vector 1⊗y is flat index 1
  QMap<QQ> qm(a, b, LinMap<QQ>({2, 2}, {2, 2}, m));

  Report rep = check_qmap(qm);
  CHECK_FALSE(rep.ok());
  CHECK(rep.items[0].label == "(tw0')");
  CHECK_FALSE(rep.items[0].pass);
  CHECK(rep.items[0].witness == "b=f1: lhs = 0, rhs = e0⊗f1");
  CHECK_THROWS_AS(build_q_product(qm), build_error);
}

TEST_CASE("a diagonal pair satisfies the eight axioms and multiplies", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  LRPair<QQ> p(diagonal_r(a, b, Rational(2)), diagonal_q(a, b, Rational(2)));

  Report rep = check_lr_pair(p, 2);
  CHECK(rep.ok());
  REQUIRE(rep.items.size() == 8);
  CHECK(rep.items[0].label == "(tw0)");
  CHECK(rep.items[3].label == "(tw0')");
  CHECK(rep.items[6].label == "(comb1)");
  CHECK(rep.items[7].label == "(comb2)");

  auto prod = build_lr_product(p);
  CHECK(check_algebra(prod).ok());
  CHECK(prod.label == "k[x]/(x^2) _Q⊗_R k[y]/(y^2)");
  // both mixed products acquire the scalar: Q acts on (x⊗1)(1⊗y), R on the other
  CHECK(prod.c(2, 1, 3) == Rational(2));
  CHECK(prod.c(1, 2, 3) == Rational(2));
  CHECK(prod.c(2, 0, 2) == Rational(1));  // (x⊗1)(1⊗1) = x⊗1
}

TEST_CASE("with Q = id the L-R product is the ordinary twisted product", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  auto r = diagonal_r(a, b, Rational(2));
  LRPair<QQ> p(r, identity_qmap(a, b));
  CHECK(build_lr_product(p).same_table(build_twisted_product(r)));
}

TEST_CASE("canonical twistors reproduce the L-R product four ways", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  LRPair<QQ> p(diagonal_r(a, b, Rational(2)), diagonal_q(a, b, Rational(3)));
  REQUIRE(check_lr_pair(p).ok());

  auto ct = canonical_twistors(p);
  CHECK(ct.report.ok());
  CHECK(ct.report.items.size() == 15);  // 3 twistor checks of 4 items + 3 tables
  CHECK(find_item(ct.report, "T1 (dec3)").pass);
  CHECK(find_item(ct.report, "T3 table").pass);
  CHECK(ct.t2.d.same_table(build_twisted_product(p.r)));

  // trivial pair: all three twistors degenerate to the identity
  LRPair<QQ> triv(flip_twisting_map(a, b), identity_qmap(a, b));
  auto ct0 = canonical_twistors(triv);
  CHECK(ct0.t1.map.mat.is_identity());
  CHECK(ct0.t2.map.mat.is_identity());
  CHECK(ct0.t3.map.mat.is_identity());
}

TEST_CASE("detwisting a diagonal pair recovers the flip", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  LRPair<QQ> p(diagonal_r(a, b, Rational(2)), diagonal_q(a, b, Rational(2)));

  auto res = detwist(p);
  CHECK(res.report.ok());
  // Q cancels R exactly, so P = Q⁻¹∘R is the flip
  CHECK(res.p.map.mat == flip_map(q, 2, 2).mat);
  CHECK(find_item(res.report, "iso bijective").pass);

  Matrix<QQ> sm = Matrix<QQ>::identity(q, 4);
  sm.at(1, 1) = 0;
  LRPair<QQ> singular(flip_twisting_map(a, b),
                      QMap<QQ>(a, b, LinMap<QQ>({2, 2}, {2, 2}, sm)));
  CHECK_THROWS_AS(detwist(singular), std::invalid_argument);
}

TEST_CASE("the opposite correspondence rewrites Q as a twisting map", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);

  auto res = qop_correspondence(identity_qmap(a, b));
  CHECK(res.report.ok());
  CHECK(res.qop.map.mat == flip_map(q, 2, 2).mat);
  CHECK(res.qop.a.label == "k[x]/(x^2)^op");

  CHECK(qop_correspondence(diagonal_q(a, b, Rational(2))).report.ok());

  // broken Q: both sides fail, and the equivalence item still holds
  Matrix<QQ> m = Matrix<QQ>::identity(q, 4);
  m.at(1, 1) = 0;
  auto broken = qop_correspondence(QMap<QQ>(a, b, LinMap<QQ>({2, 2}, {2, 2}, m)));
  CHECK_FALSE(broken.report.ok());
  CHECK_FALSE(find_item(broken.report, "Q (tw0')").pass);
  CHECK_FALSE(find_item(broken.report, "Q^op (tw0)").pass);
  CHECK(find_item(broken.report, "pass_equivalence").pass);
  CHECK(find_item(broken.report, "opposite_table").pass);
}

TEST_CASE("intertwining maps give morphisms of L-R products", "[twisted]") {
  QQ q;
  auto a = poly_a(q), b = poly_b(q);
  LRPair<QQ> p(diagonal_r(a, b, Rational(2)), diagonal_q(a, b, Rational(2)));

  Matrix<QQ> fm = Matrix<QQ>::identity(q, 2);
  fm.at(1, 1) = -Rational(1);  // x ↦ -x
  AlgebraMorphism<QQ> f(a, a, fm);
  AlgebraMorphism<QQ> g(b, b, Matrix<QQ>::identity(q, 2));
  CHECK(check_lr_morphism(f, g, p, p).ok());

  // identity maps between differently scaled pairs fail to intertwine
  LRPair<QQ> p3(diagonal_r(a, b, Rational(3)), diagonal_q(a, b, Rational(3)));
  AlgebraMorphism<QQ> ida(a, a, Matrix<QQ>::identity(q, 2));
  AlgebraMorphism<QQ> idb(b, b, Matrix<QQ>::identity(q, 2));
  Report rep = check_lr_morphism(ida, idb, p, p3);
  CHECK_FALSE(rep.ok());
  const CheckItem& ir = find_item(rep, "intertwines_R");
  CHECK_FALSE(ir.pass);
  CHECK(ir.violations == 1);
  CHECK(ir.witness == "a=e1, b=f1: lhs = 2·e1⊗f1, rhs = 3·e1⊗f1");
  CHECK_FALSE(find_item(rep, "intertwines_Q").pass);
}

TEST_CASE("twistor checks accept the identity and reject a broken unit", "[twisted]") {
  QQ q;
  auto d = testutil::truncated_poly(q, 2);
  auto t = identity_twistor(d);
  CHECK(check_twistor(t).ok());
  CHECK(build_twisted_by_twistor(t).same_table(d));

  Matrix<QQ> m = Matrix<QQ>::identity(q, 4);
  m.at(0, 2) = 1;  // T(x⊗1) = x⊗1 + 1⊗1
  Twistor<QQ> bad(d, LinMap<QQ>({2, 2}, {2, 2}, m));
  Report rep = check_twistor(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.items[0].label == "(unit)");
  CHECK_FALSE(rep.items[0].pass);
  CHECK(rep.items[0].witness == "x=e1: lhs = e0⊗e0 + e1⊗e0, rhs = e1⊗e0");
  CHECK_THROWS_AS(build_twisted_by_twistor(bad), build_error);
}
