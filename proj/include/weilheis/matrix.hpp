#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilheis {

/// Dense row-major matrix over an exact field T.
///
/// T provides +, -, *, /, is_zero(), zero(), one(). Every matrix carries a
/// zero prototype so that field context (p for F_p and Q(zeta_p)) survives
/// empty or freshly allocated matrices.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero()), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = like.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

/// Incremental Gauss-Jordan eliminator. Rows are reduced against the current
/// pivot set on insertion, so memory stays bounded by the number of unknowns
/// no matter how many equations are fed in. Pivot choice is the first nonzero
/// column of the reduced row, which makes the result independent of anything
/// but the order of insertion.
template <class T>
class RowReducer {
 public:
  RowReducer(std::size_t cols, const T& zero) : cols_(cols), zero_(zero.zero()) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool add_row(std::vector<T> row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::size_t pc = pivots_[r];
      if (row[pc].is_zero()) continue;
      const T f = row[pc];
      const auto& pr = rows_[r];
      for (std::size_t j = pc; j < cols_; ++j)
        if (!pr[j].is_zero()) row[j] -= f * pr[j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    const T inv = row[lead].one() / row[lead];
    for (std::size_t j = lead; j < cols_; ++j)
      if (!row[j].is_zero()) row[j] = row[j] * inv;
    // Back-substitute into existing rows to keep full RREF.
    for (auto& pr : rows_) {
      if (pr[lead].is_zero()) continue;
      const T f = pr[lead];
      for (std::size_t j = lead; j < cols_; ++j)
        if (!row[j].is_zero()) pr[j] -= f * row[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return pivots_.size() == cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<T>>& rows() const { return rows_; }

  /// Basis of the solution space of the homogeneous system, one vector per
  /// free column in increasing order, with a 1 in that free column.
  std::vector<std::vector<T>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, zero_);
      v[f] = zero_.one();
      for (std::size_t r = 0; r < pivots_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  T zero_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<T>> rows_;
};

template <class T>
std::size_t rank(const Matrix<T>& a) {
  RowReducer<T> red(a.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<T> row(a.data().begin() + static_cast<std::ptrdiff_t>(i * a.cols()),
                       a.data().begin() + static_cast<std::ptrdiff_t>((i + 1) * a.cols()));
    red.add_row(std::move(row));
    if (red.full()) break;
  }
  return red.rank();
}

template <class T>
std::size_t kernel_dimension(const Matrix<T>& a) {
  return a.cols() - rank(a);
}

/// Kernel basis of A as column vectors.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a) {
  RowReducer<T> red(a.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    red.add_row(std::vector<T>(a.data().begin() + static_cast<std::ptrdiff_t>(i * a.cols()),
                               a.data().begin() + static_cast<std::ptrdiff_t>((i + 1) * a.cols())));
  return red.kernel();
}

/// Solution set of A X = B: one particular solution plus a basis of the
/// kernel of X -> A X (each basis element has the shape of X).
template <class T>
struct SolveResult {
  bool consistent = false;
  Matrix<T> particular;
  std::vector<Matrix<T>> kernel;
};

template <class T>
SolveResult<T> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
  if (!(a.zero() == b.zero())) throw std::invalid_argument("solve_linear: domain mismatch between A and B");
  const std::size_t n = a.cols();
  const std::size_t m = b.cols();
  RowReducer<T> red(n + m, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<T> row(n + m, a.zero());
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    for (std::size_t j = 0; j < m; ++j) row[n + j] = b(i, j);
    red.add_row(std::move(row));
  }
  SolveResult<T> res;
  for (auto pc : red.pivots())
    if (pc >= n) return res;  // a pivot in the B block means 0 = nonzero
  res.consistent = true;
  res.particular = Matrix<T>(n, m, a.zero());
  for (std::size_t r = 0; r < red.pivots().size(); ++r)
    for (std::size_t j = 0; j < m; ++j) res.particular(red.pivots()[r], j) = red.rows()[r][n + j];
  // Kernel of A restricted to the first n columns.
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots()) is_pivot[c] = true;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      Matrix<T> k(n, m, a.zero());
      k(f, j) = a.zero().one();
      for (std::size_t r = 0; r < red.pivots().size(); ++r) k(red.pivots()[r], j) = -red.rows()[r][f];
      res.kernel.push_back(std::move(k));
    }
  return res;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto sol = solve_linear(a, Matrix<T>::identity(a.rows(), a.zero()));
  if (!sol.consistent || !sol.kernel.empty()) throw std::domain_error("matrix is singular");
  return sol.particular;
}

template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  T det = a.zero().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return a.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det = det * a(c, c);
    const T inv = a.zero().one() / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const T f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

template <class T>
T trace(const Matrix<T>& a) {
  T t = a.zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

}  // namespace weilheis
