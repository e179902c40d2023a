#pragma once

// Bialgebras and Hopf algebras with explicit comultiplication matrices,
// two-sided module and comodule algebras over them, Yetter-Drinfeld-Long
// structures ((ydl1)-(ydl4)), the L-R smash product ⋉ with its canonical
// (R, Q) pair, the iterated smash construction, and the diagonal crossed
// product ⋈ of a bimodule algebra with a Hopf algebra whose antipode is
// invertible.

#include <optional>

#include "lrtwist/twisted.hpp"

namespace lrtwist {

template <class K>
struct Bialgebra {
  Algebra<K> alg;
  LinMap<K> comult;  // {n} -> {n, n},  h ↦ h₁⊗h₂
  LinMap<K> counit;  // {n} -> {}

  Bialgebra(Algebra<K> a, LinMap<K> d, LinMap<K> e)
      : alg(std::move(a)), comult(std::move(d)), counit(std::move(e)) {
    if (comult.mat.field() != alg.field || counit.mat.field() != alg.field)
      throw field_error("bialgebra: mixed fields");
    if (comult.in != Shape{alg.dim} || comult.out != Shape{alg.dim, alg.dim})
      throw std::invalid_argument("comultiplication must have shape H -> H⊗H");
    if (counit.in != Shape{alg.dim} || !counit.out.empty())
      throw std::invalid_argument("counit must have shape H -> k");
  }

  bool same_structure(const Bialgebra& o) const {
    return alg.same_table(o.alg) && comult.mat == o.comult.mat && counit.mat == o.counit.mat;
  }
};

template <class K>
struct HopfAlgebra {
  Bialgebra<K> bialg;
  Matrix<K> antipode;
  std::optional<Matrix<K>> antipode_inv;

  HopfAlgebra(Bialgebra<K> b, Matrix<K> s, std::optional<Matrix<K>> sinv = std::nullopt)
      : bialg(std::move(b)), antipode(std::move(s)), antipode_inv(std::move(sinv)) {
    int n = bialg.alg.dim;
    if (antipode.rows() != n || antipode.cols() != n)
      throw std::invalid_argument("antipode matrix shape mismatch");
    if (antipode_inv && (antipode_inv->rows() != n || antipode_inv->cols() != n))
      throw std::invalid_argument("inverse antipode matrix shape mismatch");
  }

  LinMap<K> s_map() const { return LinMap<K>({bialg.alg.dim}, {bialg.alg.dim}, antipode); }
  LinMap<K> s_inv_map() const {
    if (!antipode_inv) throw std::invalid_argument("inverse antipode not provided");
    return LinMap<K>({bialg.alg.dim}, {bialg.alg.dim}, *antipode_inv);
  }
};

// 𝒜 with commuting left and right H-actions, both measuring.
template <class K>
struct BimoduleAlgebra {
  Bialgebra<K> h;
  Algebra<K> alg;
  LinMap<K> left_action;   // {dim H, dim 𝒜} -> {dim 𝒜},  h⊗φ ↦ h·φ
  LinMap<K> right_action;  // {dim 𝒜, dim H} -> {dim 𝒜},  φ⊗h ↦ φ·h

  BimoduleAlgebra(Bialgebra<K> h_, Algebra<K> a, LinMap<K> l, LinMap<K> r)
      : h(std::move(h_)), alg(std::move(a)), left_action(std::move(l)),
        right_action(std::move(r)) {
    if (alg.field != h.alg.field) throw field_error("bimodule algebra: mixed fields");
    if (left_action.in != Shape{h.alg.dim, alg.dim} || left_action.out != Shape{alg.dim})
      throw std::invalid_argument("left action must have shape H⊗𝒜 -> 𝒜");
    if (right_action.in != Shape{alg.dim, h.alg.dim} || right_action.out != Shape{alg.dim})
      throw std::invalid_argument("right action must have shape 𝒜⊗H -> 𝒜");
  }
};

// 𝔸 with commuting left and right H-coactions, both algebra maps.
template <class K>
struct BicomoduleAlgebra {
  Bialgebra<K> h;
  Algebra<K> alg;
  LinMap<K> left_coaction;   // {dim 𝔸} -> {dim H, dim 𝔸},  u ↦ u_[-1]⊗u_[0]
  LinMap<K> right_coaction;  // {dim 𝔸} -> {dim 𝔸, dim H},  u ↦ u_<0>⊗u_<1>

  BicomoduleAlgebra(Bialgebra<K> h_, Algebra<K> a, LinMap<K> l, LinMap<K> r)
      : h(std::move(h_)), alg(std::move(a)), left_coaction(std::move(l)),
        right_coaction(std::move(r)) {
    if (alg.field != h.alg.field) throw field_error("bicomodule algebra: mixed fields");
    if (left_coaction.in != Shape{alg.dim} || left_coaction.out != Shape{h.alg.dim, alg.dim})
      throw std::invalid_argument("left coaction must have shape 𝔸 -> H⊗𝔸");
    if (right_coaction.in != Shape{alg.dim} || right_coaction.out != Shape{alg.dim, h.alg.dim})
      throw std::invalid_argument("right coaction must have shape 𝔸 -> 𝔸⊗H");
  }
};

// One space carrying both structures over the same bialgebra.
template <class K>
struct YDLAlgebra {
  BimoduleAlgebra<K> bimod;
  BicomoduleAlgebra<K> bicomod;

  YDLAlgebra(BimoduleAlgebra<K> m, BicomoduleAlgebra<K> c)
      : bimod(std::move(m)), bicomod(std::move(c)) {
    if (!bimod.h.same_structure(bicomod.h))
      throw std::invalid_argument("YDL structure: different bialgebras");
    if (!bimod.alg.same_table(bicomod.alg))
      throw std::invalid_argument("YDL structure: different underlying algebras");
  }
};

template <class K>
BimoduleAlgebra<K> trivial_bimodule_algebra(const Bialgebra<K>& h, const Algebra<K>& a) {
  // h·φ = ε(h)φ = φ·h
  int nh = h.alg.dim, na = a.dim;
  Matrix<K> l(a.field, na, nh * na), r(a.field, na, na * nh);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < na; ++j) {
      l.at(j, i * na + j) = h.counit.mat.at(0, i);
      r.at(j, j * nh + i) = h.counit.mat.at(0, i);
    }
  return BimoduleAlgebra<K>(h, a, LinMap<K>({nh, na}, {na}, std::move(l)),
                            LinMap<K>({na, nh}, {na}, std::move(r)));
}

template <class K>
BicomoduleAlgebra<K> trivial_bicomodule_algebra(const Bialgebra<K>& h, const Algebra<K>& a) {
  // λ(u) = 1⊗u, ρ(u) = u⊗1
  int nh = h.alg.dim, na = a.dim;
  Matrix<K> l(a.field, nh * na, na), r(a.field, na * nh, na);
  for (int j = 0; j < na; ++j)
    for (int i = 0; i < nh; ++i) {
      l.at(i * na + j, j) = h.alg.unit[i];
      r.at(j * nh + i, j) = h.alg.unit[i];
    }
  return BicomoduleAlgebra<K>(h, a, LinMap<K>({na}, {nh, na}, std::move(l)),
                              LinMap<K>({na}, {na, nh}, std::move(r)));
}

// H over itself with both coactions given by Δ.
template <class K>
BicomoduleAlgebra<K> canonical_bicomodule(const Bialgebra<K>& h) {
  return BicomoduleAlgebra<K>(h, h.alg, h.comult, h.comult);
}

template <class K>
Report check_bialgebra(const Bialgebra<K>& b, int jobs = 1) {
  const Algebra<K>& H = b.alg;
  LinMap<K> mu = H.mu(), eta = H.eta();
  const LinMap<K>& dl = b.comult;
  const LinMap<K>& ep = b.counit;

  Report rep;
  rep.subject = "bialgebra " + H.label;

  rep.add(run_identity(H.field, Identity<K>{
      "coassoc",
      {{"h", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(dl, {"h1"}, {"h11", "h12"});
        e.order({"h11", "h12", "h2"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(dl, {"h2"}, {"h21", "h22"});
        e.order({"h1", "h21", "h22"});
      },
      {"h", "h", "h"}}, jobs));

  std::vector<CheckItem> counits;
  counits.push_back(run_identity(H.field, Identity<K>{
      "counit left",
      {{"h", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(ep, {"h1"}, {});
        e.order({"h2"});
      },
      [](Expr<K>&) {},
      {"h"}}, jobs));
  counits.push_back(run_identity(H.field, Identity<K>{
      "counit right",
      {{"h", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(ep, {"h2"}, {});
        e.order({"h1"});
      },
      [](Expr<K>&) {},
      {"h"}}, jobs));
  rep.add(merge_items("counit", counits));

  rep.add(run_identity(H.field, Identity<K>{
      "comult_mult",
      {{"x", H.dim, "h"}, {"y", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(mu, {"x", "y"}, {"w"});
        e.apply(dl, {"w"}, {"w1", "w2"});
        e.order({"w1", "w2"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(dl, {"y"}, {"y1", "y2"});
        e.apply(mu, {"x1", "y1"}, {"p"});
        e.apply(mu, {"x2", "y2"}, {"s"});
        e.order({"p", "s"});
      },
      {"h", "h"}}, jobs));

  rep.add(run_identity(H.field, Identity<K>{
      "comult_unit",
      {},
      [&](Expr<K>& e) {
        e.apply(eta, {}, {"u"});
        e.apply(dl, {"u"}, {"u1", "u2"});
        e.order({"u1", "u2"});
      },
      [&](Expr<K>& e) {
        e.apply(eta, {}, {"u1"});
        e.apply(eta, {}, {"u2"});
        e.order({"u1", "u2"});
      },
      {"h", "h"}}, jobs));

  rep.add(run_identity(H.field, Identity<K>{
      "counit_mult",
      {{"x", H.dim, "h"}, {"y", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(mu, {"x", "y"}, {"w"});
        e.apply(ep, {"w"}, {});
        e.order({});
      },
      [&](Expr<K>& e) {
        e.apply(ep, {"x"}, {});
        e.apply(ep, {"y"}, {});
        e.order({});
      },
      {}}, jobs));

  rep.add(run_identity(H.field, Identity<K>{
      "counit_unit",
      {},
      [&](Expr<K>& e) {
        e.apply(eta, {}, {"u"});
        e.apply(ep, {"u"}, {});
        e.order({});
      },
      [](Expr<K>&) {},
      {}}, jobs));

  return rep;
}

template <class K>
Report check_hopf(const HopfAlgebra<K>& h, int jobs = 1) {
  const Algebra<K>& H = h.bialg.alg;
  LinMap<K> mu = H.mu(), eta = H.eta(), s = h.s_map();
  const LinMap<K>& dl = h.bialg.comult;
  const LinMap<K>& ep = h.bialg.counit;

  Report rep = check_bialgebra(h.bialg, jobs);
  rep.subject = "Hopf algebra " + H.label;

  rep.add(run_identity(H.field, Identity<K>{
      "antipode_left",
      {{"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(s, {"x1"}, {"sx"});
        e.apply(mu, {"sx", "x2"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(ep, {"x"}, {});
        e.apply(eta, {}, {"w"});
        e.order({"w"});
      },
      {"h"}}, jobs));

  rep.add(run_identity(H.field, Identity<K>{
      "antipode_right",
      {{"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(s, {"x2"}, {"sx"});
        e.apply(mu, {"x1", "sx"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(ep, {"x"}, {});
        e.apply(eta, {}, {"w"});
        e.order({"w"});
      },
      {"h"}}, jobs));

  if (h.antipode_inv) {
    bool ok = (h.antipode * *h.antipode_inv).is_identity() &&
              (*h.antipode_inv * h.antipode).is_identity();
    rep.add(CheckItem{"antipode_inverse", ok, ok ? 0 : 1,
                      ok ? "" : "stated inverse does not invert the antipode"});
  }
  return rep;
}

template <class K>
Report check_bimodule_algebra(const BimoduleAlgebra<K>& m, int jobs = 1) {
  const Algebra<K>& H = m.h.alg;
  const Algebra<K>& A = m.alg;
  LinMap<K> muh = H.mu(), etah = H.eta(), mua = A.mu(), etaa = A.eta();
  const LinMap<K>& dl = m.h.comult;
  const LinMap<K>& ep = m.h.counit;
  const LinMap<K>& act = m.left_action;
  const LinMap<K>& rct = m.right_action;

  Report rep;
  rep.subject = "H-bimodule algebra " + A.label;

  rep.add(run_identity(A.field, Identity<K>{
      "left_module",
      {{"x", H.dim, "h"}, {"y", H.dim, "h"}, {"m", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(muh, {"x", "y"}, {"p"});
        e.apply(act, {"p", "m"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(act, {"y", "m"}, {"w1"});
        e.apply(act, {"x", "w1"}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_module_unit",
      {{"m", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etah, {}, {"u"});
        e.apply(act, {"u", "m"}, {"w"});
        e.order({"w"});
      },
      [](Expr<K>&) {},
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_module",
      {{"m", A.dim, "e"}, {"x", H.dim, "h"}, {"y", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(muh, {"x", "y"}, {"p"});
        e.apply(rct, {"m", "p"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(rct, {"m", "x"}, {"w1"});
        e.apply(rct, {"w1", "y"}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_module_unit",
      {{"m", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(etah, {}, {"u"});
        e.apply(rct, {"m", "u"}, {"w"});
        e.order({"w"});
      },
      [](Expr<K>&) {},
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "actions_commute",
      {{"x", H.dim, "h"}, {"m", A.dim, "e"}, {"y", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(act, {"x", "m"}, {"w1"});
        e.apply(rct, {"w1", "y"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(rct, {"m", "y"}, {"w1"});
        e.apply(act, {"x", "w1"}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_measuring",
      {{"x", H.dim, "h"}, {"m", A.dim, "e"}, {"m'", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"m", "m'"}, {"p"});
        e.apply(act, {"x", "p"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(act, {"x1", "m"}, {"w1"});
        e.apply(act, {"x2", "m'"}, {"w2"});
        e.apply(mua, {"w1", "w2"}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_measures_unit",
      {{"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(act, {"x", "u"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(ep, {"x"}, {});
        e.apply(etaa, {}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_measuring",
      {{"m", A.dim, "e"}, {"m'", A.dim, "e"}, {"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"m", "m'"}, {"p"});
        e.apply(rct, {"p", "x"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(rct, {"m", "x1"}, {"w1"});
        e.apply(rct, {"m'", "x2"}, {"w2"});
        e.apply(mua, {"w1", "w2"}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_measures_unit",
      {{"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(rct, {"u", "x"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(ep, {"x"}, {});
        e.apply(etaa, {}, {"w"});
        e.order({"w"});
      },
      {"e"}}, jobs));

  return rep;
}

template <class K>
Report check_bicomodule_algebra(const BicomoduleAlgebra<K>& c, int jobs = 1) {
  const Algebra<K>& H = c.h.alg;
  const Algebra<K>& A = c.alg;
  LinMap<K> muh = H.mu(), mua = A.mu(), etaa = A.eta(), etah = H.eta();
  const LinMap<K>& dl = c.h.comult;
  const LinMap<K>& ep = c.h.counit;
  const LinMap<K>& lc = c.left_coaction;
  const LinMap<K>& rc = c.right_coaction;

  Report rep;
  rep.subject = "H-bicomodule algebra " + A.label;

  rep.add(run_identity(A.field, Identity<K>{
      "left_coassoc",
      {{"u", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"m", "u0"});
        e.apply(dl, {"m"}, {"m1", "m2"});
        e.order({"m1", "m2", "u0"});
      },
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"m", "u0"});
        e.apply(lc, {"u0"}, {"m2", "u00"});
        e.order({"m", "m2", "u00"});
      },
      {"h", "h", "u"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_counit",
      {{"u", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"m", "u0"});
        e.apply(ep, {"m"}, {});
        e.order({"u0"});
      },
      [](Expr<K>&) {},
      {"u"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_coassoc",
      {{"u", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "m"});
        e.apply(dl, {"m"}, {"m1", "m2"});
        e.order({"u0", "m1", "m2"});
      },
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "m"});
        e.apply(rc, {"u0"}, {"u00", "m0"});
        e.order({"u00", "m0", "m"});
      },
      {"u", "h", "h"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_counit",
      {{"u", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "m"});
        e.apply(ep, {"m"}, {});
        e.order({"u0"});
      },
      [](Expr<K>&) {},
      {"u"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "coactions_commute",
      {{"u", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"m", "u0"});
        e.apply(rc, {"u0"}, {"u00", "m2"});
        e.order({"m", "u00", "m2"});
      },
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "m2"});
        e.apply(lc, {"u0"}, {"m", "u00"});
        e.order({"m", "u00", "m2"});
      },
      {"h", "u", "h"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_coaction_mult",
      {{"u", A.dim, "u"}, {"v", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"u", "v"}, {"w"});
        e.apply(lc, {"w"}, {"m", "w0"});
        e.order({"m", "w0"});
      },
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"m1", "u0"});
        e.apply(lc, {"v"}, {"m2", "v0"});
        e.apply(muh, {"m1", "m2"}, {"m"});
        e.apply(mua, {"u0", "v0"}, {"w0"});
        e.order({"m", "w0"});
      },
      {"h", "u"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "left_coaction_unit",
      {},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(lc, {"u"}, {"m", "u0"});
        e.order({"m", "u0"});
      },
      [&](Expr<K>& e) {
        e.apply(etah, {}, {"m"});
        e.apply(etaa, {}, {"u0"});
        e.order({"m", "u0"});
      },
      {"h", "u"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_coaction_mult",
      {{"u", A.dim, "u"}, {"v", A.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(mua, {"u", "v"}, {"w"});
        e.apply(rc, {"w"}, {"w0", "m"});
        e.order({"w0", "m"});
      },
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "m1"});
        e.apply(rc, {"v"}, {"v0", "m2"});
        e.apply(mua, {"u0", "v0"}, {"w0"});
        e.apply(muh, {"m1", "m2"}, {"m"});
        e.order({"w0", "m"});
      },
      {"u", "h"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "right_coaction_unit",
      {},
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u"});
        e.apply(rc, {"u"}, {"u0", "m"});
        e.order({"u0", "m"});
      },
      [&](Expr<K>& e) {
        e.apply(etaa, {}, {"u0"});
        e.apply(etah, {}, {"m"});
        e.order({"u0", "m"});
      },
      {"u", "h"}}, jobs));

  return rep;
}

// (ydl1): (h₁·m)^(-1) h₂ ⊗ (h₁·m)^(0)   = h₁ m^(-1) ⊗ h₂·m^(0)
// (ydl2): (h·m)^<0> ⊗ (h·m)^<1>         = h·m^<0> ⊗ m^<1>
// (ydl3): (m·h₂)^<0> ⊗ h₁ (m·h₂)^<1>    = m^<0>·h₁ ⊗ m^<1> h₂
// (ydl4): (m·h)^(-1) ⊗ (m·h)^(0)        = m^(-1) ⊗ m^(0)·h
template <class K>
Report check_ydl(const YDLAlgebra<K>& y, int jobs = 1) {
  const Algebra<K>& H = y.bimod.h.alg;
  const Algebra<K>& A = y.bimod.alg;
  LinMap<K> muh = H.mu();
  const LinMap<K>& dl = y.bimod.h.comult;
  const LinMap<K>& act = y.bimod.left_action;
  const LinMap<K>& rct = y.bimod.right_action;
  const LinMap<K>& lc = y.bicomod.left_coaction;
  const LinMap<K>& rc = y.bicomod.right_coaction;

  Report rep;
  rep.subject = "YDL structure on " + A.label;

  rep.add(run_identity(A.field, Identity<K>{
      "(ydl1)",
      {{"h", H.dim, "h"}, {"m", A.dim, "m"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(act, {"h1", "m"}, {"w"});
        e.apply(lc, {"w"}, {"wm", "w0"});
        e.apply(muh, {"wm", "h2"}, {"p"});
        e.order({"p", "w0"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(lc, {"m"}, {"mm", "m0"});
        e.apply(muh, {"h1", "mm"}, {"p"});
        e.apply(act, {"h2", "m0"}, {"w0"});
        e.order({"p", "w0"});
      },
      {"h", "m"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(ydl2)",
      {{"h", H.dim, "h"}, {"m", A.dim, "m"}},
      [&](Expr<K>& e) {
        e.apply(act, {"h", "m"}, {"w"});
        e.apply(rc, {"w"}, {"w0", "w1"});
        e.order({"w0", "w1"});
      },
      [&](Expr<K>& e) {
        e.apply(rc, {"m"}, {"m0", "m1"});
        e.apply(act, {"h", "m0"}, {"w0"});
        e.order({"w0", "m1"});
      },
      {"m", "h"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(ydl3)",
      {{"h", H.dim, "h"}, {"m", A.dim, "m"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(rct, {"m", "h2"}, {"w"});
        e.apply(rc, {"w"}, {"w0", "w1"});
        e.apply(muh, {"h1", "w1"}, {"p"});
        e.order({"w0", "p"});
      },
      [&](Expr<K>& e) {
        e.apply(dl, {"h"}, {"h1", "h2"});
        e.apply(rc, {"m"}, {"m0", "m1"});
        e.apply(rct, {"m0", "h1"}, {"w0"});
        e.apply(muh, {"m1", "h2"}, {"p"});
        e.order({"w0", "p"});
      },
      {"m", "h"}}, jobs));

  rep.add(run_identity(A.field, Identity<K>{
      "(ydl4)",
      {{"h", H.dim, "h"}, {"m", A.dim, "m"}},
      [&](Expr<K>& e) {
        e.apply(rct, {"m", "h"}, {"w"});
        e.apply(lc, {"w"}, {"p", "w0"});
        e.order({"p", "w0"});
      },
      [&](Expr<K>& e) {
        e.apply(lc, {"m"}, {"mm", "m0"});
        e.apply(rct, {"m0", "h"}, {"w0"});
        e.order({"mm", "w0"});
      },
      {"h", "m"}}, jobs));

  return rep;
}

// The canonical pair of the smash construction:
//   R(u⊗φ) = u_[-1]·φ ⊗ u_[0],   Q(φ⊗u) = φ·u_<1> ⊗ u_<0>.
template <class K>
LRPair<K> smash_maps(const BimoduleAlgebra<K>& m, const BicomoduleAlgebra<K>& c,
                     bool force = false, int jobs = 1) {
  if (!m.h.same_structure(c.h))
    throw std::invalid_argument("smash_maps: different bialgebras");
  if (!force) {
    Report rep = check_bimodule_algebra(m, jobs);
    rep.merge(check_bicomodule_algebra(c, jobs));
    if (!rep.ok()) {
      rep.subject = "smash_maps(" + m.alg.label + ", " + c.alg.label + ")";
      throw build_error(std::move(rep));
    }
  }
  const LinMap<K>& act = m.left_action;
  const LinMap<K>& rct = m.right_action;
  const LinMap<K>& lc = c.left_coaction;
  const LinMap<K>& rc = c.right_coaction;

  LinMap<K> rmap = compile_program<K>(
      m.alg.field, {{"u", c.alg.dim, "u"}, {"p", m.alg.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(lc, {"u"}, {"um", "u0"});
        e.apply(act, {"um", "p"}, {"w"});
        e.order({"w", "u0"});
      });
  LinMap<K> qmap = compile_program<K>(
      m.alg.field, {{"p", m.alg.dim, "e"}, {"u", c.alg.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(rc, {"u"}, {"u0", "u1"});
        e.apply(rct, {"p", "u1"}, {"w"});
        e.order({"w", "u0"});
      });
  return LRPair<K>(TwistingMap<K>(m.alg, c.alg, std::move(rmap)),
                   QMap<K>(m.alg, c.alg, std::move(qmap)));
}

// (φ⋉u)(φ'⋉u') = (φ·u'_<1>)(u_[-1]·φ') ⋉ u_[0] u'_<0>, directly from the
// defining formula; equality with build_lr_product(smash_maps(...)) is a
// theorem asserted in the tests.
template <class K>
Algebra<K> build_lr_smash(const BimoduleAlgebra<K>& m, const BicomoduleAlgebra<K>& c,
                          bool force = false, int jobs = 1) {
  if (!m.h.same_structure(c.h))
    throw std::invalid_argument("build_lr_smash: different bialgebras");
  if (!force) {
    Report rep = check_bimodule_algebra(m, jobs);
    rep.merge(check_bicomodule_algebra(c, jobs));
    if (!rep.ok()) {
      rep.subject = m.alg.label + " ⋉ " + c.alg.label;
      throw build_error(std::move(rep));
    }
  }
  const Algebra<K>& A = m.alg;
  const Algebra<K>& U = c.alg;
  LinMap<K> mua = A.mu(), muu = U.mu();
  const LinMap<K>& act = m.left_action;
  const LinMap<K>& rct = m.right_action;
  const LinMap<K>& lc = c.left_coaction;
  const LinMap<K>& rc = c.right_coaction;

  LinMap<K> mu = compile_program<K>(
      A.field,
      {{"p", A.dim, "e"}, {"u", U.dim, "u"}, {"p'", A.dim, "e"}, {"u'", U.dim, "u"}},
      [&](Expr<K>& e) {
        e.apply(rc, {"u'"}, {"u'0", "u'1"});
        e.apply(rct, {"p", "u'1"}, {"w1"});
        e.apply(lc, {"u"}, {"um", "u0"});
        e.apply(act, {"um", "p'"}, {"w2"});
        e.apply(mua, {"w1", "w2"}, {"x"});
        e.apply(muu, {"u0", "u'0"}, {"y"});
        e.order({"x", "y"});
      });
  int d = A.dim * U.dim;
  return algebra_from_mult_map(A.field, A.label + " ⋉ " + U.label,
                               mu.with_shapes({d, d}, {d}), detail::tensor_unit(A, U));
}

// The iterated smash data: (i) 𝒜⋉A as an H-bimodule algebra, (ii) A⋉H as an
// H-bicomodule algebra, (iii) the two iterated products coincide.
template <class K>
struct IteratedSmash {
  BimoduleAlgebra<K> smash_bimodule;    // 𝒜⋉A with the (i) actions
  BicomoduleAlgebra<K> smash_bicomodule;  // A⋉H with the (ii) coactions
  Algebra<K> left;   // (𝒜⋉A)⋉H
  Algebra<K> right;  // 𝒜⋉(A⋉H)
  Report report;
};

template <class K>
IteratedSmash<K> iterated_smash(const BimoduleAlgebra<K>& acal, const YDLAlgebra<K>& y,
                                bool force = false, int jobs = 1) {
  const Bialgebra<K>& h = acal.h;
  if (!h.same_structure(y.bimod.h))
    throw std::invalid_argument("iterated_smash: different bialgebras");
  if (!force) {
    Report pre = check_bimodule_algebra(acal, jobs);
    pre.merge(check_bimodule_algebra(y.bimod, jobs));
    pre.merge(check_bicomodule_algebra(y.bicomod, jobs));
    pre.merge(check_ydl(y, jobs));
    if (!pre.ok()) {
      pre.subject = "iterated smash preconditions";
      throw build_error(std::move(pre));
    }
  }
  const Algebra<K>& H = h.alg;
  LinMap<K> muh = H.mu();
  const LinMap<K>& dl = h.comult;

  // (i): h·(φ⋉a) = h₁·φ ⋉ h₂·a and (φ⋉a)·h = φ·h₂ ⋉ a·h₁
  Algebra<K> sa = build_lr_smash(acal, y.bicomod, true, jobs);
  LinMap<K> left_act = compile_program<K>(
      H.field, {{"x", H.dim, "h"}, {"p", acal.alg.dim, "e"}, {"a", y.bimod.alg.dim, "m"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(acal.left_action, {"x1", "p"}, {"w1"});
        e.apply(y.bimod.left_action, {"x2", "a"}, {"w2"});
        e.order({"w1", "w2"});
      });
  LinMap<K> right_act = compile_program<K>(
      H.field, {{"p", acal.alg.dim, "e"}, {"a", y.bimod.alg.dim, "m"}, {"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(acal.right_action, {"p", "x2"}, {"w1"});
        e.apply(y.bimod.right_action, {"a", "x1"}, {"w2"});
        e.order({"w1", "w2"});
      });
  BimoduleAlgebra<K> smash_bimod(
      h, sa, left_act.with_shapes({H.dim, sa.dim}, {sa.dim}),
      right_act.with_shapes({sa.dim, H.dim}, {sa.dim}));

  // (ii): λ(a⋉h) = a^(-1)h₁ ⊗ (a^(0)⋉h₂) and ρ(a⋉h) = (a^<0>⋉h₁) ⊗ h₂a^<1>
  Algebra<K> ah = build_lr_smash(y.bimod, canonical_bicomodule(h), true, jobs);
  LinMap<K> lc = compile_program<K>(
      H.field, {{"a", y.bimod.alg.dim, "m"}, {"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(y.bicomod.left_coaction, {"a"}, {"am", "a0"});
        e.apply(muh, {"am", "x1"}, {"p"});
        e.order({"p", "a0", "x2"});
      });
  LinMap<K> rc = compile_program<K>(
      H.field, {{"a", y.bimod.alg.dim, "m"}, {"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(y.bicomod.right_coaction, {"a"}, {"a0", "a1"});
        e.apply(muh, {"x2", "a1"}, {"p"});
        e.order({"a0", "x1", "p"});
      });
  BicomoduleAlgebra<K> smash_bicomod(
      h, ah, lc.with_shapes({ah.dim}, {H.dim, ah.dim}),
      rc.with_shapes({ah.dim}, {ah.dim, H.dim}));

  Report rep;
  rep.subject = "iterated smash " + acal.alg.label + " ⋉ " + y.bimod.alg.label +
                " ⋉ " + H.label;
  rep.merge(check_bimodule_algebra(smash_bimod, jobs), "(i) ");
  rep.merge(check_bicomodule_algebra(smash_bicomod, jobs), "(ii) ");

  // (iii): (𝒜⋉A)⋉H = 𝒜⋉(A⋉H)
  Algebra<K> left = build_lr_smash(smash_bimod, canonical_bicomodule(h), true, jobs);
  Algebra<K> right = build_lr_smash(acal, smash_bicomod, true, jobs);
  rep.add(compare_tables("(iii) tables", left, right));

  return {std::move(smash_bimod), std::move(smash_bicomod), std::move(left),
          std::move(right), std::move(rep)};
}

// 𝒜⋈H = 𝒜⊗_P H with P(h⊗φ) = h₁·φ·S⁻¹(h₃) ⊗ h₂, and the isomorphism
// 𝒜⋈H -> 𝒜⋉H given by φ⋈h ↦ φ·h₂ ⋉ h₁.
template <class K>
struct DiagonalCrossed {
  TwistingMap<K> p;
  Algebra<K> alg;
  AlgebraMorphism<K> iso;
  Report report;
};

template <class K>
DiagonalCrossed<K> diagonal_crossed(const BimoduleAlgebra<K>& m, const HopfAlgebra<K>& hopf,
                                    bool force = false, int jobs = 1) {
  if (!hopf.antipode_inv)
    throw std::invalid_argument("diagonal crossed product needs an inverse antipode");
  if (!m.h.same_structure(hopf.bialg))
    throw std::invalid_argument("diagonal_crossed: different bialgebras");
  if (!force) {
    Report pre = check_bimodule_algebra(m, jobs);
    pre.merge(check_hopf(hopf, jobs));
    if (!pre.ok()) {
      pre.subject = m.alg.label + " ⋈ " + hopf.bialg.alg.label;
      throw build_error(std::move(pre));
    }
  }
  const Algebra<K>& H = hopf.bialg.alg;
  const Algebra<K>& A = m.alg;
  LinMap<K> sinv = hopf.s_inv_map();
  const LinMap<K>& dl = hopf.bialg.comult;

  LinMap<K> pmap = compile_program<K>(
      A.field, {{"x", H.dim, "h"}, {"p", A.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x'"});
        e.apply(dl, {"x'"}, {"x2", "x3"});
        e.apply(sinv, {"x3"}, {"s"});
        e.apply(m.left_action, {"x1", "p"}, {"w"});
        e.apply(m.right_action, {"w", "s"}, {"w2"});
        e.order({"w2", "x2"});
      });
  TwistingMap<K> p(A, H, std::move(pmap));

  Report rep;
  rep.subject = A.label + " ⋈ " + H.label;
  rep.merge(check_twisting_map(p, jobs), "P ");

  Algebra<K> alg = build_twisted_product(p, true, jobs);
  alg.label = A.label + " ⋈ " + H.label;

  LinMap<K> iso_map = compile_program<K>(
      A.field, {{"p", A.dim, "e"}, {"x", H.dim, "h"}},
      [&](Expr<K>& e) {
        e.apply(dl, {"x"}, {"x1", "x2"});
        e.apply(m.right_action, {"p", "x2"}, {"w"});
        e.order({"w", "x1"});
      });
  AlgebraMorphism<K> iso(alg, build_lr_smash(m, canonical_bicomodule(hopf.bialg), true, jobs),
                         iso_map.with_shapes({alg.dim}, {alg.dim}).mat);
  rep.merge(is_isomorphism(iso, jobs), "iso ");

  return {std::move(p), std::move(alg), std::move(iso), std::move(rep)};
}

}  // namespace lrtwist
