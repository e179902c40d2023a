#include <catch2/catch_amalgamated.hpp>

#include "lrtwist/hopf.hpp"
#include "util.hpp"

using namespace lrtwist;
using testutil::cyclic_group_algebra;
using testutil::function_algebra;
using testutil::group_bialgebra;
using testutil::group_hopf;
using testutil::hit_bimodule;

namespace {

const CheckItem& find_item(const Report& r, const std::string& label) {
  for (const auto& it : r.items)
    if (it.label == label) return it;
  throw std::runtime_error("no check item labelled '" + label + "'");
}

// kC2 as an algebra, relabelled as k[x]/(x^2-1) with x = the generator.
Algebra<QQ> involution_algebra(const QQ& f) {
  Algebra<QQ> a = cyclic_group_algebra(f, 2);
  a.label = "k[x]/(x^2-1)";
  return a;
}

// g·1 = 1, g·x = -x, right action trivial.
BimoduleAlgebra<QQ> sign_bimodule(const QQ& f) {
  Bialgebra<QQ> h = group_bialgebra(f, 2);
  Algebra<QQ> a = involution_algebra(f);
  Matrix<QQ> l(f, 2, 4), r(f, 2, 4);
  l.at(0, 0) = f.one();
  l.at(1, 1) = f.one();
  l.at(0, 2) = f.one();
  l.at(1, 3) = -f.one();
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) r.at(j, j * 2 + i) = f.one();
  return BimoduleAlgebra<QQ>(std::move(h), std::move(a), LinMap<QQ>({2, 2}, {2}, std::move(l)),
                             LinMap<QQ>({2, 2}, {2}, std::move(r)));
}

// λ(1) = 1⊗1, λ(x) = g⊗x, right coaction trivial.
BicomoduleAlgebra<QQ> sign_bicomodule(const QQ& f, bool perturb = false) {
  Bialgebra<QQ> h = group_bialgebra(f, 2);
  Algebra<QQ> a = involution_algebra(f);
  Matrix<QQ> l(f, 4, 2), r(f, 4, 2);
  l.at(0, 0) = f.one();
  l.at(3, 1) = f.one();
  if (perturb) l.at(0, 1) = f.one();  // λ(x) = g⊗x + 1⊗1
  r.at(0, 0) = f.one();
  r.at(2, 1) = f.one();
  return BicomoduleAlgebra<QQ>(std::move(h), std::move(a), LinMap<QQ>({2}, {2, 2}, std::move(l)),
                               LinMap<QQ>({2}, {2, 2}, std::move(r)));
}

YDLAlgebra<QQ> sign_ydl(const QQ& f, bool perturb = false) {
  return YDLAlgebra<QQ>(sign_bimodule(f), sign_bicomodule(f, perturb));
}

}  // namespace

TEST_CASE("group bialgebras satisfy the bialgebra axioms", "[hopf]") {
  QQ f;
  Report rep = check_bialgebra(group_bialgebra(f, 3));
  CHECK(rep.ok());
  REQUIRE(rep.items.size() == 6);
  CHECK(rep.items[0].label == "coassoc");
  CHECK(rep.items[1].label == "counit");
  CHECK(rep.items[2].label == "comult_mult");
  CHECK(rep.items[3].label == "comult_unit");
  CHECK(rep.items[4].label == "counit_mult");
  CHECK(rep.items[5].label == "counit_unit");
  CHECK(rep.subject == "bialgebra kC3");

  GFp f5(5);
  CHECK(check_bialgebra(group_bialgebra(f5, 4), 2).ok());
}

TEST_CASE("a zero counit breaks exactly the counit checks", "[hopf]") {
  QQ f;
  Bialgebra<QQ> b = group_bialgebra(f, 2);
  Bialgebra<QQ> broken(b.alg, b.comult, LinMap<QQ>({2}, {}, Matrix<QQ>(f, 1, 2)));
  Report rep = check_bialgebra(broken);
  CHECK_FALSE(rep.ok());
  CHECK(find_item(rep, "coassoc").pass);
  CHECK(find_item(rep, "comult_mult").pass);
  CHECK(find_item(rep, "comult_unit").pass);
  CHECK(find_item(rep, "counit_mult").pass);  // both sides vanish

  const CheckItem& cu = find_item(rep, "counit");
  CHECK_FALSE(cu.pass);
  CHECK(cu.violations == 4);
  CHECK(cu.witness == "h=h0: lhs = 0, rhs = h0");

  const CheckItem& cuu = find_item(rep, "counit_unit");
  CHECK_FALSE(cuu.pass);
  CHECK(cuu.witness == ": lhs = 0, rhs = 1");
}

TEST_CASE("bialgebra construction validates shapes", "[hopf]") {
  QQ f;
  Algebra<QQ> a = cyclic_group_algebra(f, 2);
  CHECK_THROWS_AS(Bialgebra<QQ>(a, LinMap<QQ>::identity(f, {2}),
                                LinMap<QQ>({2}, {}, Matrix<QQ>(f, 1, 2))),
                  std::invalid_argument);
}

TEST_CASE("group Hopf algebras pass the antipode checks", "[hopf]") {
  QQ f;
  Report rep = check_hopf(group_hopf(f, 4));
  CHECK(rep.ok());
  REQUIRE(rep.items.size() == 9);
  CHECK(rep.items[6].label == "antipode_left");
  CHECK(rep.items[7].label == "antipode_right");
  CHECK(rep.items[8].label == "antipode_inverse");
  CHECK(rep.subject == "Hopf algebra kC4");

  // without a stated inverse the inverse check is absent
  CHECK(check_hopf(group_hopf(f, 4, false)).items.size() == 8);
}

TEST_CASE("the identity is not an antipode for kC3", "[hopf]") {
  QQ f;
  HopfAlgebra<QQ> h(group_bialgebra(f, 3), Matrix<QQ>::identity(f, 3),
                    Matrix<QQ>::identity(f, 3));
  Report rep = check_hopf(h);
  CHECK_FALSE(rep.ok());
  const CheckItem& it = find_item(rep, "antipode_left");
  CHECK_FALSE(it.pass);
  CHECK(it.violations == 2);
  CHECK(it.witness == "x=h1: lhs = h2, rhs = h0");
  CHECK_FALSE(find_item(rep, "antipode_right").pass);
  CHECK(find_item(rep, "antipode_inverse").pass);  // id does invert itself
}

TEST_CASE("trivial actions and coactions always pass", "[hopf]") {
  QQ f;
  Bialgebra<QQ> h = group_bialgebra(f, 2);
  Algebra<QQ> a = testutil::truncated_poly(f, 3);
  Report m = check_bimodule_algebra(trivial_bimodule_algebra(h, a));
  CHECK(m.ok());
  CHECK(m.items.size() == 9);
  CHECK(m.subject == "H-bimodule algebra k[x]/(x^3)");
  Report c = check_bicomodule_algebra(trivial_bicomodule_algebra(h, a));
  CHECK(c.ok());
  CHECK(c.items.size() == 9);
}

TEST_CASE("the sign action is a bimodule algebra structure", "[hopf]") {
  QQ f;
  Report rep = check_bimodule_algebra(sign_bimodule(f));
  CHECK(rep.ok());
  CHECK(rep.items.size() == 9);
}

TEST_CASE("an action that kills the unit row fails the module checks", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> m = sign_bimodule(f);
  Matrix<QQ> l = m.left_action.mat;
  l.at(1, 1) = f.zero();  // 1·x := 0
  BimoduleAlgebra<QQ> broken(m.h, m.alg, LinMap<QQ>({2, 2}, {2}, std::move(l)),
                             m.right_action);
  Report rep = check_bimodule_algebra(broken);
  CHECK_FALSE(rep.ok());

  const CheckItem& unit = find_item(rep, "left_module_unit");
  CHECK_FALSE(unit.pass);
  CHECK(unit.violations == 1);
  CHECK(unit.witness == "m=e1: lhs = 0, rhs = e1");

  const CheckItem& mod = find_item(rep, "left_module");
  CHECK_FALSE(mod.pass);
  CHECK(mod.violations == 3);
  CHECK(mod.witness == "x=h0, y=h1, m=e1: lhs = -e1, rhs = 0");

  CHECK(find_item(rep, "right_module").pass);
  CHECK(find_item(rep, "right_measuring").pass);
}

TEST_CASE("regular coactions form a bicomodule algebra", "[hopf]") {
  QQ f;
  Report rep = check_bicomodule_algebra(canonical_bicomodule(group_bialgebra(f, 3)));
  CHECK(rep.ok());
  CHECK(rep.items.size() == 9);
  CHECK(rep.subject == "H-bicomodule algebra kC3");
}

TEST_CASE("a shifted left coaction fails to be an algebra map", "[hopf]") {
  QQ f;
  Bialgebra<QQ> h = group_bialgebra(f, 3);
  Matrix<QQ> l(f, 9, 3);
  for (int i = 0; i < 3; ++i) l.at(((i + 1) % 3) * 3 + i, i) = f.one();  // λ(g^i) = g^{i+1}⊗g^i
  BicomoduleAlgebra<QQ> c(h, h.alg, LinMap<QQ>({3}, {3, 3}, std::move(l)), h.comult);
  Report rep = check_bicomodule_algebra(c);
  CHECK_FALSE(rep.ok());

  // coassociative, counital and commuting, yet not multiplicative
  CHECK(find_item(rep, "left_coassoc").pass);
  CHECK(find_item(rep, "left_counit").pass);
  CHECK(find_item(rep, "coactions_commute").pass);
  CHECK(find_item(rep, "right_coaction_mult").pass);

  const CheckItem& mult = find_item(rep, "left_coaction_mult");
  CHECK_FALSE(mult.pass);
  CHECK(mult.violations == 9);
  CHECK(mult.witness == "u=u0, v=u0: lhs = h1⊗u0, rhs = h2⊗u0");

  const CheckItem& unit = find_item(rep, "left_coaction_unit");
  CHECK_FALSE(unit.pass);
  CHECK(unit.witness == ": lhs = h1⊗u0, rhs = h0⊗u0");
}

TEST_CASE("the sign/coaction pair satisfies the four compatibilities", "[hopf]") {
  QQ f;
  YDLAlgebra<QQ> y = sign_ydl(f);
  CHECK(check_bimodule_algebra(y.bimod).ok());
  CHECK(check_bicomodule_algebra(y.bicomod).ok());
  Report rep = check_ydl(y);
  CHECK(rep.ok());
  REQUIRE(rep.items.size() == 4);
  CHECK(rep.items[0].label == "(ydl1)");
  CHECK(rep.items[1].label == "(ydl2)");
  CHECK(rep.items[2].label == "(ydl3)");
  CHECK(rep.items[3].label == "(ydl4)");
  CHECK(rep.subject == "YDL structure on k[x]/(x^2-1)");
}

TEST_CASE("a perturbed left coaction violates only the first compatibility", "[hopf]") {
  QQ f;
  Report rep = check_ydl(sign_ydl(f, true));
  CHECK_FALSE(rep.ok());

  const CheckItem& it = find_item(rep, "(ydl1)");
  CHECK_FALSE(it.pass);
  CHECK(it.violations == 1);
  CHECK(it.witness == "h=h1, m=m1: lhs = -h0⊗m1 + -h1⊗m0, rhs = -h0⊗m1 + h1⊗m0");
  CHECK(find_item(rep, "(ydl2)").pass);
  CHECK(find_item(rep, "(ydl3)").pass);
  CHECK(find_item(rep, "(ydl4)").pass);

  // the first witness does not depend on the number of jobs
  Report par = check_ydl(sign_ydl(f, true), 3);
  REQUIRE(par.items.size() == rep.items.size());
  for (std::size_t i = 0; i < rep.items.size(); ++i) {
    CHECK(par.items[i].pass == rep.items[i].pass);
    CHECK(par.items[i].violations == rep.items[i].violations);
    CHECK(par.items[i].witness == rep.items[i].witness);
  }
}

TEST_CASE("a trivial right action gives smash maps with Q = id", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> m = sign_bimodule(f);
  BicomoduleAlgebra<QQ> c = canonical_bicomodule(m.h);
  LRPair<QQ> pair = smash_maps(m, c);
  CHECK(pair.q.map.mat.is_identity());
  CHECK(check_lr_pair(pair).ok());

  Algebra<QQ> smash = build_lr_smash(m, c);
  CHECK(smash.label == "k[x]/(x^2-1) ⋉ kC2");
  CHECK(smash.same_table(build_lr_product(pair, true)));
  // (1⋉g)(x⋉1) = (g·x)⋉g = -x⋉g
  CHECK(smash.c(1, 2, 3) == -f.one());
}

TEST_CASE("translation actions give a smash with nontrivial Q", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> m = hit_bimodule(f, 2);
  CHECK(check_bimodule_algebra(m).ok());

  BicomoduleAlgebra<QQ> c = canonical_bicomodule(m.h);
  LRPair<QQ> pair = smash_maps(m, c);
  CHECK_FALSE(pair.q.map.mat.is_identity());
  // Q(f_j⊗g^i) = f_{j-i}⊗g^i
  CHECK(pair.q.map.mat.at(3, 1) == f.one());
  CHECK(pair.q.map.mat.at(2, 2) == f.one());
  CHECK(check_lr_pair(pair).ok());

  Algebra<QQ> smash = build_lr_smash(m, c);
  CHECK(smash.same_table(build_lr_product(pair, true)));
  // (f_0⋉g)(f_1⋉1) = f_0 (g⇀f_1) ⋉ g = f_0⋉g, while (f_0⋉g)(f_0⋉1) = 0
  CHECK(smash.c(1, 2, 1) == f.one());
  for (int k = 0; k < 4; ++k) CHECK(smash.c(1, 0, k) == f.zero());
}

TEST_CASE("smash construction rejects invalid structures", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> m = sign_bimodule(f);
  Matrix<QQ> l = m.left_action.mat;
  l.at(1, 1) = f.zero();
  BimoduleAlgebra<QQ> broken(m.h, m.alg, LinMap<QQ>({2, 2}, {2}, std::move(l)),
                             m.right_action);
  BicomoduleAlgebra<QQ> c = canonical_bicomodule(m.h);
  CHECK_THROWS_AS(smash_maps(broken, c), build_error);
  CHECK_THROWS_AS(build_lr_smash(broken, c), build_error);
}

TEST_CASE("the two iterated smash products coincide", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> acal = hit_bimodule(f, 2);
  YDLAlgebra<QQ> y = sign_ydl(f);
  IteratedSmash<QQ> it = iterated_smash(acal, y);
  CHECK(it.report.ok());
  CHECK(it.left.dim == 8);
  CHECK(it.left.label == "k^C2 ⋉ k[x]/(x^2-1) ⋉ kC2");
  CHECK(it.right.label == "k^C2 ⋉ k[x]/(x^2-1) ⋉ kC2");
  CHECK(it.left.same_table(it.right));
  CHECK(find_item(it.report, "(i) left_measuring").pass);
  CHECK(find_item(it.report, "(ii) right_coaction_mult").pass);
  CHECK(find_item(it.report, "(iii) tables").pass);
  CHECK(check_algebra(it.left).ok());

  // invalid compatibility data is rejected up front
  CHECK_THROWS_AS(iterated_smash(acal, sign_ydl(f, true)), build_error);
}

TEST_CASE("the diagonal crossed product detwists the smash", "[hopf]") {
  QQ f;
  BimoduleAlgebra<QQ> m = hit_bimodule(f, 2);
  HopfAlgebra<QQ> hopf = group_hopf(f, 2);
  DiagonalCrossed<QQ> res = diagonal_crossed(m, hopf);
  CHECK(res.report.ok());
  CHECK(res.alg.label == "k^C2 ⋈ kC2");
  // P(g^i⊗f_j) = g^i⇀f_j↼g^{-i} ⊗ g^i = f_j⊗g^i: the flip, since C2 is abelian
  // and the two translations cancel
  CHECK(res.p.map.mat == flip_map(f, 2, 2).mat);
  CHECK(find_item(res.report, "iso bijective").pass);

  // agreement with generic detwisting of the canonical pair
  DetwistResult<QQ> det = detwist(smash_maps(m, canonical_bicomodule(hopf.bialg)));
  CHECK(det.report.ok());
  CHECK(det.p.map.mat == res.p.map.mat);
  CHECK(res.alg.same_table(build_twisted_product(det.p, true)));

  CHECK_THROWS_AS(diagonal_crossed(m, group_hopf(f, 2, false)), std::invalid_argument);
}
