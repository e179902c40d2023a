#pragma once

// Stock instances, generated by code and validated on load: group Hopf
// algebras, truncated polynomial lines, the four-dimensional Hopf algebra
// with non-involutive antipode, sign and skew-derivation module algebras,
// diagonal twisting pairs, a module-comodule instance for the iterated
// smash, a bicharacter cocycle, and two triples for the iteration suite.
//
// load_catalog runs every entry's full check suite; the first failing entry
// aborts the load with its witness. Entry ids are stable and are the names
// the command line interface exposes.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lrtwist/invariance.hpp"
#include "lrtwist/iterate.hpp"

namespace lrtwist {

// Smallest integer >= k that is nonzero in the field, so entry parameters
// stay invertible over small prime fields.
template <class K>
typename K::Elem nonzero_scalar(const K& field, long k) {
  for (;; ++k) {
    typename K::Elem v = field.from_int(k);
    if (!(v == field.zero())) return v;
  }
}

namespace detail {

template <class K>
typename K::Elem scalar_power(const K& field, const typename K::Elem& q, int e) {
  typename K::Elem r = field.one();
  for (int t = 0; t < e; ++t) r = r * q;
  return r;
}

}  // namespace detail

// k[x]/(x^m) on the monomial basis 1, x, ..., x^{m-1}.
template <class K>
Algebra<K> truncated_polynomial_algebra(const K& field, int m, const std::string& var = "x") {
  if (m < 1) throw std::invalid_argument("truncated polynomial algebra needs m >= 1");
  std::vector<typename K::Elem> unit(m, field.zero());
  unit[0] = field.one();
  Algebra<K> a(field, "k[" + var + "]/(" + var + "^" + std::to_string(m) + ")", m, unit,
               std::vector<typename K::Elem>(static_cast<std::size_t>(m) * m * m, field.zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) a.c(i, j, i + j) = field.one();
  return a;
}

// Group algebra kC_n on the basis g^0, ..., g^{n-1} with Δg = g⊗g, ε = 1
// and S(g) = g⁻¹; the antipode is an involution.
template <class K>
HopfAlgebra<K> group_hopf_algebra(const K& field, int n) {
  if (n < 1) throw std::invalid_argument("group algebra needs n >= 1");
  std::vector<typename K::Elem> unit(n, field.zero());
  unit[0] = field.one();
  Algebra<K> alg(field, "kC" + std::to_string(n), n, unit,
                 std::vector<typename K::Elem>(static_cast<std::size_t>(n) * n * n, field.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alg.c(i, j, (i + j) % n) = field.one();
  Matrix<K> d(field, n * n, n), ep(field, 1, n), s(field, n, n);
  for (int i = 0; i < n; ++i) {
    d.at(i * n + i, i) = field.one();
    ep.at(0, i) = field.one();
    s.at((n - i) % n, i) = field.one();
  }
  Bialgebra<K> b(std::move(alg), LinMap<K>({n}, {n, n}, std::move(d)),
                 LinMap<K>({n}, {}, std::move(ep)));
  return HopfAlgebra<K>(std::move(b), s, s);
}

// The four-dimensional Hopf algebra on the basis 1, g, x, gx with g² = 1,
// x² = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x. S(x) = -gx, so S² is not the
// identity away from characteristic 2; the inverse antipode is S³.
template <class K>
HopfAlgebra<K> sweedler_hopf(const K& field) {
  typename K::Elem one = field.one(), neg = field.from_int(-1);
  std::vector<typename K::Elem> unit(4, field.zero());
  unit[0] = one;
  Algebra<K> alg(field, "H4", 4, unit, std::vector<typename K::Elem>(64, field.zero()));
  for (int i = 0; i < 4; ++i) {
    alg.c(0, i, i) = one;
    if (i > 0) alg.c(i, 0, i) = one;
  }
  alg.c(1, 1, 0) = one;  // g·g = 1
  alg.c(1, 2, 3) = one;  // g·x = gx
  alg.c(1, 3, 2) = one;  // g·gx = x
  alg.c(2, 1, 3) = neg;  // x·g = -gx
  alg.c(3, 1, 2) = neg;  // gx·g = -x
  // x·x, x·gx, gx·x and gx·gx vanish
  Matrix<K> d(field, 16, 4), ep(field, 1, 4), s(field, 4, 4);
  d.at(0, 0) = one;           // Δ1 = 1⊗1
  d.at(1 * 4 + 1, 1) = one;   // Δg = g⊗g
  d.at(2 * 4 + 0, 2) = one;   // Δx = x⊗1 + g⊗x
  d.at(1 * 4 + 2, 2) = one;
  d.at(3 * 4 + 1, 3) = one;   // Δ(gx) = gx⊗g + 1⊗gx
  d.at(0 * 4 + 3, 3) = one;
  ep.at(0, 0) = one;
  ep.at(0, 1) = one;
  s.at(0, 0) = one;
  s.at(1, 1) = one;
  s.at(3, 2) = neg;           // S(x) = -gx
  s.at(2, 3) = one;           // S(gx) = x
  Matrix<K> sinv = s * s * s;
  Bialgebra<K> b(std::move(alg), LinMap<K>({4}, {4, 4}, std::move(d)),
                 LinMap<K>({4}, {}, std::move(ep)));
  return HopfAlgebra<K>(std::move(b), std::move(s), std::move(sinv));
}

// kC₂ acting on itself through the sign of the grading, on both sides:
// g·x = -x = x·g.
template <class K>
BimoduleAlgebra<K> sign_bimodule_algebra(const K& field) {
  HopfAlgebra<K> h = group_hopf_algebra(field, 2);
  typename K::Elem one = field.one(), neg = field.from_int(-1);
  Matrix<K> l(field, 2, 4), r(field, 2, 4);
  l.at(0, 0) = one;  // 1·1 = 1
  l.at(1, 1) = one;  // 1·x = x
  l.at(0, 2) = one;  // g·1 = 1
  l.at(1, 3) = neg;  // g·x = -x
  r.at(0, 0) = one;  // 1·1 = 1
  r.at(0, 1) = one;  // 1·g = 1
  r.at(1, 2) = one;  // x·1 = x
  r.at(1, 3) = neg;  // x·g = -x
  Algebra<K> a = h.bialg.alg;
  return BimoduleAlgebra<K>(std::move(h.bialg), std::move(a),
                            LinMap<K>({2, 2}, {2}, std::move(l)),
                            LinMap<K>({2, 2}, {2}, std::move(r)));
}

// k[y]/(y²) over the four-dimensional Hopf algebra: g acts by the sign
// automorphism, x as the skew derivation y ↦ 1 (so x·(ab) = (x·a)b +
// (g·a)(x·b)), and the right action factors through the counit.
template <class K>
BimoduleAlgebra<K> skew_derivation_bimodule(const K& field) {
  HopfAlgebra<K> h = sweedler_hopf(field);
  Algebra<K> a = truncated_polynomial_algebra(field, 2, "y");
  typename K::Elem one = field.one(), neg = field.from_int(-1);
  Matrix<K> l(field, 2, 8), r(field, 2, 8);
  l.at(0, 0 * 2 + 0) = one;  // 1·1 = 1
  l.at(1, 0 * 2 + 1) = one;  // 1·y = y
  l.at(0, 1 * 2 + 0) = one;  // g·1 = 1
  l.at(1, 1 * 2 + 1) = neg;  // g·y = -y
  l.at(0, 2 * 2 + 1) = one;  // x·y = 1, x·1 = 0
  l.at(0, 3 * 2 + 1) = one;  // gx·y = 1, gx·1 = 0
  for (int i = 0; i < 2; ++i) {
    r.at(i, i * 4 + 0) = one;  // a·1 = a
    r.at(i, i * 4 + 1) = one;  // a·g = a, a·x = a·gx = 0
  }
  return BimoduleAlgebra<K>(std::move(h.bialg), std::move(a),
                            LinMap<K>({4, 2}, {2}, std::move(l)),
                            LinMap<K>({2, 4}, {2}, std::move(r)));
}

// Dual of the Klein four-group on the idempotent basis e_s, s running over
// two bits: e_s e_t = δ_{s,t} e_s, Δe_s = Σ_{u XOR v = s} e_u⊗e_v, ε = e_0
// coordinate.
template <class K>
Bialgebra<K> klein_dual_bialgebra(const K& field) {
  typename K::Elem one = field.one();
  Algebra<K> a(field, "k^(C2xC2)", 4, std::vector<typename K::Elem>(4, one),
               std::vector<typename K::Elem>(64, field.zero()));
  for (int s = 0; s < 4; ++s) a.c(s, s, s) = one;
  Matrix<K> d(field, 16, 4), ep(field, 1, 4);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) d.at(u * 4 + v, u ^ v) = one;
  ep.at(0, 0) = one;
  return Bialgebra<K>(std::move(a), LinMap<K>({4}, {4, 4}, std::move(d)),
                      LinMap<K>({4}, {}, std::move(ep)));
}

// Group algebra k[C₂×C₂] graded over its dual: e_s·u_t = δ_{s,t} u_t from
// the left, and from the right the grading is read through the bit swap of
// the group, u_t·e_s = δ_{s, swap t} u_t.
template <class K>
BimoduleAlgebra<K> graded_bimodule_algebra(const K& field) {
  Bialgebra<K> h = klein_dual_bialgebra(field);
  typename K::Elem one = field.one();
  std::vector<typename K::Elem> unit(4, field.zero());
  unit[0] = one;
  Algebra<K> a(field, "k[C2xC2]", 4, unit,
               std::vector<typename K::Elem>(64, field.zero()));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) a.c(s, t, s ^ t) = one;
  Matrix<K> l(field, 4, 16), r(field, 4, 16);
  for (int t = 0; t < 4; ++t) {
    l.at(t, t * 4 + t) = one;
    int sw = ((t & 1) << 1) | (t >> 1);
    r.at(t, t * 4 + sw) = one;
  }
  return BimoduleAlgebra<K>(std::move(h), std::move(a),
                            LinMap<K>({4, 4}, {4}, std::move(l)),
                            LinMap<K>({4, 4}, {4}, std::move(r)));
}

// Diagonal pair between two algebras of the same dimension: both maps scale
// e_i⊗e_j by q^{ij}. On truncated polynomial lines this is the quantum
// plane relation yx = q·xy together with its Q-deformation.
template <class K>
LRPair<K> diagonal_maps(const Algebra<K>& a, const Algebra<K>& b, const typename K::Elem& q) {
  if (q == a.field.zero()) throw std::invalid_argument("diagonal pair needs q != 0");
  Matrix<K> rm(a.field, a.dim * b.dim, b.dim * a.dim);
  Matrix<K> qm(a.field, a.dim * b.dim, a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      typename K::Elem pq = detail::scalar_power(a.field, q, i * j);
      rm.at(i * b.dim + j, j * a.dim + i) = pq;
      qm.at(i * b.dim + j, i * b.dim + j) = pq;
    }
  return LRPair<K>(
      TwistingMap<K>(a, b, LinMap<K>({b.dim, a.dim}, {a.dim, b.dim}, std::move(rm))),
      QMap<K>(a, b, LinMap<K>({a.dim, b.dim}, {a.dim, b.dim}, std::move(qm))));
}

template <class K>
LRPair<K> diagonal_pair(const K& field, int m, const typename K::Elem& q) {
  if (m < 2) throw std::invalid_argument("diagonal pair needs m >= 2");
  return diagonal_maps(truncated_polynomial_algebra(field, m, "x"),
                       truncated_polynomial_algebra(field, m, "y"), q);
}

// Cocycle F = Σ χ(s,t) e_s⊗e_t on the dual Klein four-group for the
// bicharacter χ((i,j),(k,l)) = (-1)^{il}. All values are ±1, so F is its
// own inverse.
template <class K>
Cocycle<K> bicharacter_cocycle(const K& field) {
  Bialgebra<K> h = klein_dual_bialgebra(field);
  std::vector<typename K::Elem> v(16, field.one());
  typename K::Elem neg = field.from_int(-1);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if ((s >> 1) & t & 1) v[s * 4 + t] = neg;
  return Cocycle<K>(std::move(h), v, v);
}

template <class K>
struct YdlInstance {
  YDLAlgebra<K> ydl;
  BimoduleAlgebra<K> coeff;
};

// kC₂ as module and comodule over itself: sign action, grading coaction
// 1 ↦ 1⊗1, x ↦ g⊗x, both right structures trivial. The companion
// coefficient algebra is the two-sided sign bimodule.
template <class K>
YdlInstance<K> ydl_instance(const K& field) {
  BimoduleAlgebra<K> coeff = sign_bimodule_algebra(field);
  const Bialgebra<K>& h = coeff.h;
  Algebra<K> a = h.alg;
  typename K::Elem one = field.one(), neg = field.from_int(-1);
  Matrix<K> l(field, 2, 4), r(field, 2, 4), lc(field, 4, 2), rc(field, 4, 2);
  l.at(0, 0) = one;
  l.at(1, 1) = one;
  l.at(0, 2) = one;  // g·1 = 1
  l.at(1, 3) = neg;  // g·x = -x
  r.at(0, 0) = one;  // right action through ε
  r.at(0, 1) = one;
  r.at(1, 2) = one;
  r.at(1, 3) = one;
  lc.at(0 * 2 + 0, 0) = one;  // 1 ↦ 1⊗1
  lc.at(1 * 2 + 1, 1) = one;  // x ↦ g⊗x
  rc.at(0 * 2 + 0, 0) = one;  // 1 ↦ 1⊗1
  rc.at(1 * 2 + 0, 1) = one;  // x ↦ x⊗1
  BimoduleAlgebra<K> bm(h, a, LinMap<K>({2, 2}, {2}, std::move(l)),
                        LinMap<K>({2, 2}, {2}, std::move(r)));
  BicomoduleAlgebra<K> bc(h, std::move(a), LinMap<K>({2}, {2, 2}, std::move(lc)),
                          LinMap<K>({2}, {2, 2}, std::move(rc)));
  return {YDLAlgebra<K>(std::move(bm), std::move(bc)), std::move(coeff)};
}

template <class K>
using CatalogPayload =
    std::variant<Algebra<K>, Bialgebra<K>, HopfAlgebra<K>, BimoduleAlgebra<K>, LRPair<K>,
                 TripleData<K>, Cocycle<K>, YdlInstance<K>>;

template <class K>
struct CatalogEntry {
  std::string id;
  std::string kind;  // algebra, bialgebra, hopf, bimodule, lrpair, triple, cocycle, ydl
  std::string description;
  CatalogPayload<K> payload;
};

// Full check suite for one entry, merged with the suites of the structures
// it is built on.
template <class K>
Report check_entry(const CatalogEntry<K>& e, int jobs = 1) {
  Report rep;
  rep.subject = "catalog entry " + e.id;
  if (const Algebra<K>* a = std::get_if<Algebra<K>>(&e.payload)) {
    rep.merge(check_algebra(*a, jobs));
  } else if (const Bialgebra<K>* b = std::get_if<Bialgebra<K>>(&e.payload)) {
    rep.merge(check_bialgebra(*b, jobs));
  } else if (const HopfAlgebra<K>* h = std::get_if<HopfAlgebra<K>>(&e.payload)) {
    rep.merge(check_hopf(*h, jobs));
  } else if (const BimoduleAlgebra<K>* m = std::get_if<BimoduleAlgebra<K>>(&e.payload)) {
    rep.merge(check_bialgebra(m->h, jobs), "H ");
    rep.merge(check_bimodule_algebra(*m, jobs));
  } else if (const LRPair<K>* p = std::get_if<LRPair<K>>(&e.payload)) {
    rep.merge(check_algebra(p->r.a, jobs), "A ");
    rep.merge(check_algebra(p->r.b, jobs), "B ");
    rep.merge(check_lr_pair(*p, jobs));
  } else if (const TripleData<K>* t = std::get_if<TripleData<K>>(&e.payload)) {
    rep.merge(check_triple(*t, jobs));
    rep.merge(check_hexagons(*t, jobs));
  } else if (const Cocycle<K>* c = std::get_if<Cocycle<K>>(&e.payload)) {
    rep.merge(check_bialgebra(c->h, jobs), "H ");
    rep.merge(check_cocycle(*c, jobs));
  } else {
    const YdlInstance<K>& y = std::get<YdlInstance<K>>(e.payload);
    rep.merge(check_bimodule_algebra(y.ydl.bimod, jobs), "module ");
    rep.merge(check_bicomodule_algebra(y.ydl.bicomod, jobs), "comodule ");
    rep.merge(check_ydl(y.ydl, jobs));
    rep.merge(check_bimodule_algebra(y.coeff, jobs), "coeff ");
  }
  return rep;
}

// All stock instances over the given field. With validate set, every entry
// runs its full check suite and the first failure aborts the load.
template <class K>
std::vector<CatalogEntry<K>> load_catalog(const K& field, bool validate = true, int jobs = 1) {
  HopfAlgebra<K> kc2 = group_hopf_algebra(field, 2);
  HopfAlgebra<K> sw = sweedler_hopf(field);
  BimoduleAlgebra<K> sign = sign_bimodule_algebra(field);
  BimoduleAlgebra<K> skew = skew_derivation_bimodule(field);
  Algebra<K> tx = truncated_polynomial_algebra(field, 2, "x");
  Algebra<K> ty = truncated_polynomial_algebra(field, 2, "y");
  Algebra<K> tz = truncated_polynomial_algebra(field, 2, "z");
  const Algebra<K>& c2 = kc2.bialg.alg;

  std::vector<CatalogEntry<K>> cat;
  cat.push_back({"trunc2", "algebra", "truncated polynomial line k[x]/(x^2)", tx});
  cat.push_back({"kc2", "hopf", "group algebra of C2 with its Hopf structure", kc2});
  cat.push_back(
      {"kc4", "hopf", "group algebra of C4 with its Hopf structure", group_hopf_algebra(field, 4)});
  cat.push_back({"sweedler", "hopf",
                 "four-dimensional Hopf algebra with non-involutive antipode", sw});
  cat.push_back({"sign_c2", "bimodule",
                 "kC2 acting on itself by the sign of the grading, both sides", sign});
  cat.push_back({"skew_h4", "bimodule",
                 "k[y]/(y^2) with g acting by sign and x as a skew derivation", skew});
  cat.push_back({"grading_c2c2", "bimodule",
                 "k[C2xC2] graded over its dual, right side through the bit swap",
                 graded_bimodule_algebra(field)});
  cat.push_back({"trivial_kc2", "lrpair", "flip and identity on kC2 and kC2",
                 LRPair<K>(flip_twisting_map(c2, c2), identity_qmap(c2, c2))});
  cat.push_back({"diag", "lrpair",
                 "diagonal maps scaling x^i y^j by q^ij, q the smallest invertible integer from 2",
                 diagonal_pair(field, 2, nonzero_scalar(field, 2))});
  cat.push_back({"smash_kc2", "lrpair", "smash pair of the sign bimodule with kC2 over itself",
                 smash_maps(sign, canonical_bicomodule(kc2.bialg), true, jobs)});
  cat.push_back({"smash_h4", "lrpair",
                 "smash pair of the skew derivation bimodule with H4 over itself",
                 smash_maps(skew, canonical_bicomodule(sw.bialg), true, jobs)});
  cat.push_back({"ydl_c2", "ydl",
                 "kC2 with sign action and grading coaction plus its coefficient bimodule",
                 ydl_instance(field)});
  cat.push_back({"bichar", "cocycle",
                 "bicharacter cocycle on the dual Klein four-group, values plus minus one",
                 bicharacter_cocycle(field)});
  cat.push_back({"triple_trivial", "triple", "all flips and identities on three copies of kC2",
                 trivial_triple(c2, c2, c2)});
  cat.push_back({"triple_diag", "triple",
                 "pairwise diagonal maps on three truncated polynomial lines",
                 TripleData<K>(diagonal_maps(tx, ty, nonzero_scalar(field, 2)),
                               diagonal_maps(ty, tz, nonzero_scalar(field, 3)),
                               diagonal_maps(tx, tz, nonzero_scalar(field, 5)))});

  if (validate)
    for (const CatalogEntry<K>& e : cat) {
      Report rep = check_entry(e, jobs);
      if (!rep.ok()) throw build_error(std::move(rep));
    }
  return cat;
}

template <class K>
const CatalogEntry<K>& find_entry(const std::vector<CatalogEntry<K>>& cat,
                                  const std::string& id) {
  for (const CatalogEntry<K>& e : cat)
    if (e.id == id) return e;
  throw std::invalid_argument("no catalog entry named " + id);
}

// The L-R pairs of the catalog, id first, in catalog order.
template <class K>
std::vector<std::pair<std::string, LRPair<K>>> catalog_lr_pairs(
    const std::vector<CatalogEntry<K>>& cat) {
  std::vector<std::pair<std::string, LRPair<K>>> out;
  for (const CatalogEntry<K>& e : cat)
    if (const LRPair<K>* p = std::get_if<LRPair<K>>(&e.payload)) out.push_back({e.id, *p});
  return out;
}

}  // namespace lrtwist
