// Dense quaternionic matrices with owned storage.  Kept independent of any
// linear-algebra backend so that exact coefficient rings work; the float-only
// spectral machinery (complex adjoint, eigendecompositions) lives in
// moore.hpp.
#pragma once

#include <stdexcept>
#include <vector>

#include "qma/quaternion.hpp"

namespace qma {

template <class C>
class QuatMatrix {
 public:
  QuatMatrix() : rows_(0), cols_(0) {}
  QuatMatrix(int rows, int cols, const Quaternion<C>& fill = Quaternion<C>())
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static QuatMatrix zero(int rows, int cols) { return QuatMatrix(rows, cols); }
  static QuatMatrix identity(int n) {
    QuatMatrix m(n, n);
    for (int d = 0; d < n; ++d) m(d, d) = Quaternion<C>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Quaternion<C>& operator()(int r, int c) { return e_[index(r, c)]; }
  const Quaternion<C>& operator()(int r, int c) const { return e_[index(r, c)]; }

  QuatMatrix operator-() const {
    QuatMatrix m(rows_, cols_);
    for (std::size_t s = 0; s < e_.size(); ++s) m.e_[s] = -e_[s];
    return m;
  }
  QuatMatrix& operator+=(const QuatMatrix& o) {
    check_same_shape(o);
    for (std::size_t s = 0; s < e_.size(); ++s) e_[s] += o.e_[s];
    return *this;
  }
  QuatMatrix& operator-=(const QuatMatrix& o) {
    check_same_shape(o);
    for (std::size_t s = 0; s < e_.size(); ++s) e_[s] -= o.e_[s];
    return *this;
  }
  friend QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b) { return a += b; }
  friend QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b) { return a -= b; }

  friend QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QuatMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Quaternion<C>& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  // Quaternion scalars do not commute with the entries, so scaling is sided.
  QuatMatrix left_scaled(const Quaternion<C>& q) const {
    QuatMatrix m(rows_, cols_);
    for (std::size_t s = 0; s < e_.size(); ++s) m.e_[s] = q * e_[s];
    return m;
  }
  QuatMatrix right_scaled(const Quaternion<C>& q) const {
    QuatMatrix m(rows_, cols_);
    for (std::size_t s = 0; s < e_.size(); ++s) m.e_[s] = e_[s] * q;
    return m;
  }
  QuatMatrix scaled(const C& s) const {
    QuatMatrix m(rows_, cols_);
    for (std::size_t t = 0; t < e_.size(); ++t) m.e_[t] = s * e_[t];
    return m;
  }

  QuatMatrix adjoint() const {
    QuatMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = e_[index(r, c)].conj();
    return m;
  }

  friend bool operator==(const QuatMatrix& a, const QuatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QuatMatrix& a, const QuatMatrix& b) { return !(a == b); }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  void check_same_shape(const QuatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<Quaternion<C>> e_;
};

// Exact self-adjointness (entrywise M(r,c) == conj(M(c,r))).
template <class C>
bool is_hyperhermitian_exact(const QuatMatrix<C>& m) {
  if (m.rows() != m.cols()) return false;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c)
      if (m(r, c) != m(c, r).conj()) return false;
  return true;
}

inline double max_abs(const QuatMatrix<double>& m) {
  double v = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v = std::max(v, abs_double(m(r, c)));
  return v;
}

// Float self-adjointness with the relative gate used everywhere a
// hyperhermitian input is *required*: deviation above tol*(1 + max|entry|)
// is an error in the caller's data, not something to symmetrize away.
inline double hyperhermitian_defect(const QuatMatrix<double>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
  double d = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c)
      d = std::max(d, abs_double(m(r, c) - m(c, r).conj()));
  return d;
}

inline void require_hyperhermitian(const QuatMatrix<double>& m, double tol = 1e-10) {
  if (hyperhermitian_defect(m) > tol * (1.0 + max_abs(m)))
    throw std::invalid_argument("matrix is not self-adjoint within tolerance");
}

using QuatMatD = QuatMatrix<double>;
using QuatMatQ = QuatMatrix<Rational>;

}  // namespace qma
