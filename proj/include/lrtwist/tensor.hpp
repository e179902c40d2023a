#pragma once

// Tensor-space bookkeeping. A Shape lists the dimensions of the legs of a
// tensor product; flat indices enumerate the product basis with the LAST
// factor varying fastest, so e_i⊗f_j in A⊗B sits at i·dim(B) + j.
//
// A LinMap is a linear map between tensor products, stored as a dense matrix
// whose columns are indexed by the flattened input shape and rows by the
// flattened output shape.

#include <cstdint>
#include <numeric>
#include <vector>

#include "lrtwist/matrix.hpp"

namespace lrtwist {

using Shape = std::vector<int>;

inline std::int64_t shape_total(const Shape& s) {
  std::int64_t t = 1;
  for (int d : s) t *= d;
  return t;
}

inline std::int64_t flat_index(const Shape& s, const std::vector<int>& ix) {
  assert(ix.size() == s.size());
  std::int64_t f = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    assert(ix[k] >= 0 && ix[k] < s[k]);
    f = f * s[k] + ix[k];
  }
  return f;
}

inline std::vector<int> unflatten(const Shape& s, std::int64_t f) {
  std::vector<int> ix(s.size(), 0);
  for (std::size_t k = s.size(); k-- > 0;) {
    ix[k] = static_cast<int>(f % s[k]);
    f /= s[k];
  }
  return ix;
}

template <class K>
struct LinMap {
  Shape in, out;
  Matrix<K> mat;  // shape_total(out) × shape_total(in)

  LinMap(Shape in_, Shape out_, Matrix<K> m)
      : in(std::move(in_)), out(std::move(out_)), mat(std::move(m)) {
    if (mat.rows() != shape_total(out) || mat.cols() != shape_total(in))
      throw std::invalid_argument("linear map matrix does not match its shapes");
  }

  static LinMap identity(const K& field, Shape s) {
    int n = static_cast<int>(shape_total(s));
    return LinMap(s, s, Matrix<K>::identity(field, n));
  }

  // this ∘ inner
  LinMap after(const LinMap& inner) const {
    if (in != inner.out)
      throw std::invalid_argument("composition shape mismatch");
    return LinMap(inner.in, out, mat * inner.mat);
  }

  // Same underlying matrix, reinterpreted leg structure (totals must agree).
  LinMap with_shapes(Shape in_, Shape out_) const {
    if (shape_total(in_) != shape_total(in) || shape_total(out_) != shape_total(out))
      throw std::invalid_argument("regrouped shapes change the total dimension");
    return LinMap(std::move(in_), std::move(out_), mat);
  }

  bool operator==(const LinMap& o) const {
    return in == o.in && out == o.out && mat == o.mat;
  }
};

// The flip V⊗W → W⊗V on basis vectors.
template <class K>
LinMap<K> flip_map(const K& field, int dv, int dw) {
  Matrix<K> m(field, dv * dw, dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) m.at(j * dv + i, i * dw + j) = field.one();
  return LinMap<K>({dv, dw}, {dw, dv}, std::move(m));
}

// f⊗g acting leg-wise; shapes concatenate, matrix is the Kronecker product.
template <class K>
LinMap<K> kron_map(const LinMap<K>& f, const LinMap<K>& g) {
  Shape in = f.in, out = f.out;
  in.insert(in.end(), g.in.begin(), g.in.end());
  out.insert(out.end(), g.out.begin(), g.out.end());
  return LinMap<K>(std::move(in), std::move(out), f.mat.kron(g.mat));
}

}  // namespace lrtwist
