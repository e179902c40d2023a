#pragma once

// Dense row-major matrices over an exact field, with the exact linear
// algebra the rest of the library needs: product, Kronecker product,
// rank and inverse by fraction-free-safe Gauss-Jordan elimination.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "lrtwist/fields.hpp"

namespace lrtwist {

// Raised by inverse() on a singular input; carries the actual rank.
struct singular_error : std::runtime_error {
  int rank;
  singular_error(const std::string& msg, int r) : std::runtime_error(msg), rank(r) {}
};

template <class K>
class Matrix {
 public:
  using Elem = typename K::Elem;

  Matrix(const K& field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(const K& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const K& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Elem& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (field_ != o.field_) throw field_error("matrix product across fields");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Elem& y = o.at(k, j);
          if (!y.is_zero()) r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // (M⊗N)[(i·r + k), (j·s + l)] = M[i,j]·N[k,l] for N of shape r×s.
  Matrix kron(const Matrix& n) const {
    if (field_ != n.field_) throw field_error("kron across fields");
    Matrix r(field_, rows_ * n.rows_, cols_ * n.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Elem& c = at(i, j);
        if (c.is_zero()) continue;
        for (int k = 0; k < n.rows_; ++k)
          for (int l = 0; l < n.cols_; ++l) {
            const Elem& d = n.at(k, l);
            if (!d.is_zero()) r.at(i * n.rows_ + k, j * n.cols_ + l) = c * d;
          }
      }
    return r;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Elem> r(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Elem& x = at(i, j);
        if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
      }
    return r;
  }

  int rank() const {
    Matrix m(*this);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!m.at(i, c).is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      m.swap_rows(r, piv);
      for (int i = r + 1; i < rows_; ++i) {
        if (m.at(i, c).is_zero()) continue;
        Elem f = m.at(i, c) / m.at(r, c);
        for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
      }
      ++r;
    }
    return r;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw singular_error("inverse of non-square matrix", -1);
    Matrix m(*this);
    Matrix inv = identity(field_, rows_);
    for (int c = 0; c < cols_; ++c) {
      int piv = -1;
      for (int i = c; i < rows_; ++i)
        if (!m.at(i, c).is_zero()) { piv = i; break; }
      if (piv < 0)
        throw singular_error("singular matrix (rank " + std::to_string(rank()) +
                                 " of " + std::to_string(rows_) + ")",
                             rank());
      m.swap_rows(c, piv);
      inv.swap_rows(c, piv);
      Elem d = m.at(c, c).inverse();
      for (int j = 0; j < cols_; ++j) { m.at(c, j) *= d; inv.at(c, j) *= d; }
      for (int i = 0; i < rows_; ++i) {
        if (i == c || m.at(i, c).is_zero()) continue;
        Elem f = m.at(i, c);
        for (int j = 0; j < cols_; ++j) {
          m.at(i, j) -= f * m.at(c, j);
          inv.at(i, j) -= f * inv.at(c, j);
        }
      }
    }
    return inv;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += at(i, j).str();
      }
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (field_ != o.field_) throw field_error("matrix arithmetic across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  K field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

}  // namespace lrtwist
