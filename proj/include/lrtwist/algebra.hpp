#pragma once

// Finite-dimensional unital associative algebras presented by structure
// constants: e_i·e_j = Σ_k c(i,j,k) e_k, plus a distinguished unit vector.
// Nothing here assumes associativity; check_algebra verifies it.

#include <string>
#include <utility>
#include <vector>

#include "lrtwist/engine.hpp"

namespace lrtwist {

template <class K>
struct Algebra {
  using Elem = typename K::Elem;

  K field;
  std::string label;
  int dim;
  std::vector<Elem> unit;  // coordinates of 1 in the basis
  std::vector<Elem> mult;  // dim³ entries, c(i,j,k) at ((i·dim)+j)·dim+k

  Algebra(const K& f, std::string label_, int n, std::vector<Elem> unit_,
          std::vector<Elem> mult_)
      : field(f), label(std::move(label_)), dim(n), unit(std::move(unit_)),
        mult(std::move(mult_)) {
    if (n <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (static_cast<std::int64_t>(unit.size()) != n)
      throw std::invalid_argument("unit vector has wrong length");
    if (static_cast<std::int64_t>(mult.size()) != std::int64_t{n} * n * n)
      throw std::invalid_argument("structure constant tensor has wrong size");
  }

  const Elem& c(int i, int j, int k) const {
    return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Elem& c(int i, int j, int k) {
    return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  std::vector<Elem> multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
      throw std::invalid_argument("multiply: vector length mismatch");
    std::vector<Elem> r(dim, field.zero());
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        Elem xy = x[i] * y[j];
        for (int k = 0; k < dim; ++k) {
          const Elem& co = c(i, j, k);
          if (!co.is_zero()) r[k] += xy * co;
        }
      }
    }
    return r;
  }

  // Multiplication as a linear map A⊗A → A.
  LinMap<K> mu() const {
    Matrix<K> m(field, dim, dim * dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, i * dim + j) = c(i, j, k);
    return LinMap<K>({dim, dim}, {dim}, std::move(m));
  }

  // Unit as a linear map k → A.
  LinMap<K> eta() const {
    Matrix<K> m(field, dim, 1);
    for (int k = 0; k < dim; ++k) m.at(k, 0) = unit[k];
    return LinMap<K>({}, {dim}, std::move(m));
  }

  bool same_table(const Algebra& o) const {
    return field == o.field && dim == o.dim && unit == o.unit && mult == o.mult;
  }
};

// Associativity and both unit laws, by exhaustive basis enumeration.
template <class K>
Report check_algebra(const Algebra<K>& a, int jobs = 1) {
  LinMap<K> mu = a.mu(), eta = a.eta();
  std::vector<Identity<K>> ids;

  ids.push_back(Identity<K>{
      "assoc",
      {{"i", a.dim, "e"}, {"j", a.dim, "e"}, {"k", a.dim, "e"}},
      [&mu](Expr<K>& e) {
        e.apply(mu, {"i", "j"}, {"ij"});
        e.apply(mu, {"ij", "k"}, {"w"});
        e.order({"w"});
      },
      [&mu](Expr<K>& e) {
        e.apply(mu, {"j", "k"}, {"jk"});
        e.apply(mu, {"i", "jk"}, {"w"});
        e.order({"w"});
      },
      {"e"}});

  ids.push_back(Identity<K>{
      "unit_left",
      {{"j", a.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(eta, {}, {"u"});
        e.apply(mu, {"u", "j"}, {"w"});
        e.order({"w"});
      },
      [](Expr<K>&) {},
      {"e"}});

  ids.push_back(Identity<K>{
      "unit_right",
      {{"j", a.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(eta, {}, {"u"});
        e.apply(mu, {"j", "u"}, {"w"});
        e.order({"w"});
      },
      [](Expr<K>&) {},
      {"e"}});

  return run_identities(a.field, a.label.empty() ? "algebra" : a.label, ids, jobs);
}

template <class K>
Algebra<K> opposite(const Algebra<K>& a) {
  Algebra<K> r = a;
  r.label = a.label + "^op";
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) r.c(i, j, k) = a.c(j, i, k);
  return r;
}

// Componentwise product on A⊗B; basis e_i⊗f_j at flat index i·dim(B)+j.
template <class K>
Algebra<K> tensor_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.field != b.field) throw field_error("tensor_algebra across fields");
  int n = a.dim, m = b.dim, d = n * m;
  std::vector<typename K::Elem> unit(d, a.field.zero());
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < m; ++u) unit[i * m + u] = a.unit[i] * b.unit[u];
  std::vector<typename K::Elem> mult(static_cast<std::size_t>(d) * d * d, a.field.zero());
  Algebra<K> r(a.field, a.label + "⊗" + b.label, d, std::move(unit), std::move(mult));
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < m; ++u)
      for (int j = 0; j < n; ++j)
        for (int v = 0; v < m; ++v)
          for (int k = 0; k < n; ++k) {
            if (a.c(i, j, k).is_zero()) continue;
            for (int w = 0; w < m; ++w) {
              const auto& cb = b.c(u, v, w);
              if (!cb.is_zero()) r.c(i * m + u, j * m + v, k * m + w) = a.c(i, j, k) * cb;
            }
          }
  return r;
}

// Builds an algebra from a compiled multiplication map A⊗A → A.
template <class K>
Algebra<K> algebra_from_mult_map(const K& field, std::string label, const LinMap<K>& mu,
                                 std::vector<typename K::Elem> unit) {
  if (mu.in.size() != 2 || mu.out.size() != 1 || mu.in[0] != mu.in[1] ||
      mu.in[0] != mu.out[0])
    throw std::invalid_argument("multiplication map must have shape [n,n] -> [n]");
  int n = mu.out[0];
  std::vector<typename K::Elem> mult(static_cast<std::size_t>(n) * n * n, field.zero());
  Algebra<K> r(field, std::move(label), n, std::move(unit), std::move(mult));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r.c(i, j, k) = mu.mat.at(k, i * n + j);
  return r;
}

// "e0 + 2·e2"; same coefficient formatting as Expr::render.
template <class K>
std::string render_vector(const std::vector<typename K::Elem>& v, const std::string& symbol) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = v[k].str();
    if (c == "1") s += symbol + std::to_string(k);
    else if (c == "-1") s += "-" + symbol + std::to_string(k);
    else s += c + "·" + symbol + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

// Exact equality of two multiplication tables on the same space, as a check
// item; violations count differing basis products.
template <class K>
CheckItem compare_tables(const std::string& label, const Algebra<K>& x, const Algebra<K>& y) {
  if (x.field != y.field || x.dim != y.dim)
    throw std::invalid_argument("compare_tables: incompatible algebras");
  CheckItem item{label, true, 0, ""};
  auto slice = [](const Algebra<K>& a, int i, int j) {
    std::vector<typename K::Elem> v;
    v.reserve(a.dim);
    for (int k = 0; k < a.dim; ++k) v.push_back(a.c(i, j, k));
    return v;
  };
  if (x.unit != y.unit) {
    item.pass = false;
    ++item.violations;
    item.witness = "unit: lhs = " + render_vector<K>(x.unit, "e") +
                   ", rhs = " + render_vector<K>(y.unit, "e");
  }
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      auto xs = slice(x, i, j), ys = slice(y, i, j);
      if (xs == ys) continue;
      ++item.violations;
      if (item.pass) {
        item.pass = false;
        item.witness = "e" + std::to_string(i) + "·e" + std::to_string(j) +
                       ": lhs = " + render_vector<K>(xs, "e") +
                       ", rhs = " + render_vector<K>(ys, "e");
      }
    }
  return item;
}

template <class K>
struct AlgebraMorphism {
  Algebra<K> src, tgt;
  Matrix<K> mat;  // tgt.dim × src.dim

  AlgebraMorphism(Algebra<K> s, Algebra<K> t, Matrix<K> m)
      : src(std::move(s)), tgt(std::move(t)), mat(std::move(m)) {
    if (mat.rows() != tgt.dim || mat.cols() != src.dim)
      throw std::invalid_argument("morphism matrix shape mismatch");
  }

  LinMap<K> map() const { return LinMap<K>({src.dim}, {tgt.dim}, mat); }
};

// f(1) = 1 and f(xy) = f(x)f(y) on all basis pairs.
template <class K>
Report check_morphism(const AlgebraMorphism<K>& f, int jobs = 1) {
  LinMap<K> fm = f.map();
  LinMap<K> mu_s = f.src.mu(), mu_t = f.tgt.mu();
  LinMap<K> eta_s = f.src.eta(), eta_t = f.tgt.eta();

  std::vector<Identity<K>> ids;
  ids.push_back(Identity<K>{
      "maps_unit",
      {},
      [&](Expr<K>& e) {
        e.apply(eta_s, {}, {"u"});
        e.apply(fm, {"u"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(eta_t, {}, {"w"});
        e.order({"w"});
      },
      {"e"}});
  ids.push_back(Identity<K>{
      "multiplicative",
      {{"x", f.src.dim, "e"}, {"y", f.src.dim, "e"}},
      [&](Expr<K>& e) {
        e.apply(mu_s, {"x", "y"}, {"xy"});
        e.apply(fm, {"xy"}, {"w"});
        e.order({"w"});
      },
      [&](Expr<K>& e) {
        e.apply(fm, {"x"}, {"fx"});
        e.apply(fm, {"y"}, {"fy"});
        e.apply(mu_t, {"fx", "fy"}, {"w"});
        e.order({"w"});
      },
      {"e"}});

  return run_identities(f.src.field, f.src.label + " -> " + f.tgt.label, ids, jobs);
}

template <class K>
Report is_isomorphism(const AlgebraMorphism<K>& f, int jobs = 1) {
  Report rep = check_morphism(f, jobs);
  CheckItem bij{"bijective", true, 0, ""};
  int rk = f.mat.rank();
  if (f.src.dim != f.tgt.dim || rk != f.src.dim) {
    bij.pass = false;
    bij.violations = 1;
    bij.witness = "rank " + std::to_string(rk) + ", dimensions " +
                  std::to_string(f.src.dim) + " -> " + std::to_string(f.tgt.dim);
  }
  rep.add(bij);
  return rep;
}

}  // namespace lrtwist
