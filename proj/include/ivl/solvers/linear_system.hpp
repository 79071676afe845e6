#ifndef IVL_SOLVERS_LINEAR_SYSTEM_HPP
#define IVL_SOLVERS_LINEAR_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/kinterval.hpp"

namespace ivl {

using KVector = std::vector<KInterval>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using KMatrix = Matrix<KInterval>;
using RealMatrix = Matrix<double>;

/// Point matrix with [1,1] on the diagonal and [0,0] elsewhere.
inline KMatrix identity_kmatrix(std::size_t n) {
  KMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = KInterval::point(1.0);
  return id;
}

inline bool is_proper(const KVector& v) {
  return std::all_of(v.begin(), v.end(), [](const KInterval& k) { return k.is_proper(); });
}

inline bool is_proper(const KMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_proper()) return false;
  return true;
}

/// Entrywise max endpoint modulus.
inline RealMatrix mag(const KMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = mag(m(i, j));
  return out;
}

inline KMatrix dual(const KMatrix& m) {
  KMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = dual(m(i, j));
  return out;
}

/// Entrywise Kaucher subtraction a - b.
inline KMatrix operator-(const KMatrix& a, const KMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw error(errc::dimension_mismatch, "matrix difference");
  }
  KMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

/// An interval system A x = b.
struct ILinearSystem {
  KMatrix A;
  KVector b;

  std::size_t size() const noexcept { return b.size(); }

  void validate() const {
    if (A.rows() == 0 || A.cols() == 0) throw error(errc::dimension_mismatch, "empty matrix");
    if (A.rows() != b.size()) {
      throw error(errc::dimension_mismatch,
                  "A has " + std::to_string(A.rows()) + " rows, b has " + std::to_string(b.size()));
    }
  }

  void require_square() const {
    validate();
    if (!A.is_square()) throw error(errc::dimension_mismatch, "A must be square");
  }

  bool is_proper() const { return ivl::is_proper(A) && ivl::is_proper(b); }
};

/// (A x)_i = sum_j A_ij * x_j in Kaucher arithmetic.
inline KVector kmatvec(const KMatrix& A, const KVector& x) {
  if (A.cols() != x.size()) {
    throw error(errc::dimension_mismatch,
                "A has " + std::to_string(A.cols()) + " columns, x has " + std::to_string(x.size()));
  }
  KVector out(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    KInterval acc;
    for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

/// alg_sub(A x, b): zero exactly when x is a formal solution.
inline KVector residual(const KMatrix& A, const KVector& x, const KVector& b) {
  const KVector ax = kmatvec(A, x);
  if (ax.size() != b.size()) throw error(errc::dimension_mismatch, "residual");
  KVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = alg_sub(ax[i], b[i]);
  return out;
}

inline KVector operator+(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) throw error(errc::dimension_mismatch, "vector sum");
  KVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// max_i kdist(a_i, b_i)
inline double kdist(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) throw error(errc::dimension_mismatch, "kdist");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, kdist(a[i], b[i]));
  return d;
}

inline bool kleq(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) throw error(errc::dimension_mismatch, "kleq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!kleq(a[i], b[i])) return false;
  return true;
}

}  // namespace ivl

#endif  // IVL_SOLVERS_LINEAR_SYSTEM_HPP
