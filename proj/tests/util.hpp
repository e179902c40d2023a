#pragma once

// Small algebra constructors used across the test suite. These are written
// independently of the library's catalog so that catalog entries can be
// compared against them as a second route to the same tables.

#include <string>
#include <vector>

#include "lrtwist/algebra.hpp"
#include "lrtwist/hopf.hpp"

namespace testutil {

// k[x]/(x^m), basis 1, x, ..., x^{m-1}.
template <class K>
lrtwist::Algebra<K> truncated_poly(const K& f, int m) {
  using Elem = typename K::Elem;
  std::vector<Elem> unit(m, f.zero());
  unit[0] = f.one();
  std::vector<Elem> mult(static_cast<std::size_t>(m) * m * m, f.zero());
  lrtwist::Algebra<K> a(f, "k[x]/(x^" + std::to_string(m) + ")", m, unit, mult);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) a.c(i, j, i + j) = f.one();
  return a;
}

// Group algebra of the cyclic group C_n, basis g^0, ..., g^{n-1}.
template <class K>
lrtwist::Algebra<K> cyclic_group_algebra(const K& f, int n) {
  using Elem = typename K::Elem;
  std::vector<Elem> unit(n, f.zero());
  unit[0] = f.one();
  std::vector<Elem> mult(static_cast<std::size_t>(n) * n * n, f.zero());
  lrtwist::Algebra<K> a(f, "kC" + std::to_string(n), n, unit, mult);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.c(i, j, (i + j) % n) = f.one();
  return a;
}

// Functions on C_n with pointwise product, basis f_0, ..., f_{n-1} dual to
// the group elements. The unit is f_0 + ... + f_{n-1}.
template <class K>
lrtwist::Algebra<K> function_algebra(const K& f, int n) {
  using Elem = typename K::Elem;
  std::vector<Elem> unit(n, f.one());
  std::vector<Elem> mult(static_cast<std::size_t>(n) * n * n, f.zero());
  lrtwist::Algebra<K> a(f, "k^C" + std::to_string(n), n, unit, mult);
  for (int i = 0; i < n; ++i) a.c(i, i, i) = f.one();
  return a;
}

// kC_n with Δ(g^i) = g^i⊗g^i and ε = 1 on every group element.
template <class K>
lrtwist::Bialgebra<K> group_bialgebra(const K& f, int n) {
  lrtwist::Algebra<K> a = cyclic_group_algebra(f, n);
  lrtwist::Matrix<K> d(f, n * n, n), e(f, 1, n);
  for (int i = 0; i < n; ++i) {
    d.at(i * n + i, i) = f.one();
    e.at(0, i) = f.one();
  }
  return lrtwist::Bialgebra<K>(std::move(a), lrtwist::LinMap<K>({n}, {n, n}, std::move(d)),
                               lrtwist::LinMap<K>({n}, {}, std::move(e)));
}

// kC_n with the inversion antipode S(g^i) = g^{-i}, its own inverse.
template <class K>
lrtwist::HopfAlgebra<K> group_hopf(const K& f, int n, bool with_inverse = true) {
  lrtwist::Matrix<K> s(f, n, n);
  for (int i = 0; i < n; ++i) s.at((n - i) % n, i) = f.one();
  std::optional<lrtwist::Matrix<K>> sinv;
  if (with_inverse) sinv = s;
  return lrtwist::HopfAlgebra<K>(group_bialgebra(f, n), std::move(s), std::move(sinv));
}

// k^C_n as a kC_n-bimodule algebra under the translation (hit) actions
// g^a ⇀ f_j = f_{j-a} and f_j ↼ g^a = f_{j-a}.
template <class K>
lrtwist::BimoduleAlgebra<K> hit_bimodule(const K& f, int n) {
  lrtwist::Bialgebra<K> h = group_bialgebra(f, n);
  lrtwist::Algebra<K> a = function_algebra(f, n);
  lrtwist::Matrix<K> l(f, n, n * n), r(f, n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int t = ((j - i) % n + n) % n;
      l.at(t, i * n + j) = f.one();
      r.at(t, j * n + i) = f.one();
    }
  return lrtwist::BimoduleAlgebra<K>(std::move(h), std::move(a),
                                     lrtwist::LinMap<K>({n, n}, {n}, std::move(l)),
                                     lrtwist::LinMap<K>({n, n}, {n}, std::move(r)));
}

}  // namespace testutil
