#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tropolocate/vector.hpp"

namespace tropo {

/// Dense row-major matrix over the max-plus semifield, dimensions fixed
/// at construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::zero())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  }

  Matrix(std::initializer_list<std::initializer_list<double>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (double v : r) entries_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) throw DimensionMismatch("need at least one column");
    const std::size_t n = cols.front().size();
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n || cols[j].orient() != Orient::column)
        throw DimensionMismatch("columns must be column vectors of equal length");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return Vector(std::move(out), Orient::column);
  }

  Vector row(std::size_t i) const {
    std::vector<Scalar> out(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return Vector(std::move(out), Orient::row);
  }

  /// No all-bottom rows.
  bool is_regular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      bool finite = false;
      for (std::size_t j = 0; j < cols_ && !finite; ++j) finite = (*this)(i, j).is_finite();
      if (!finite) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

/// Componentwise max.
inline Matrix oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum dimension mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

/// Max-plus matrix product.
inline Matrix otimes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = oplus(out(i, j), otimes(aik, b(k, j)));
    }
  return out;
}

/// Matrix times column vector.
inline Vector otimes(const Matrix& a, const Vector& x) {
  if (x.orient() != Orient::column) throw DimensionMismatch("matrix * vector needs a column");
  if (a.cols() != x.size()) throw DimensionMismatch("matrix * vector dimension mismatch");
  std::vector<Scalar> out(a.rows(), Scalar::zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = oplus(out[i], otimes(a(i, k), x[k]));
  return Vector(std::move(out), Orient::column);
}

/// Row co-vector times matrix.
inline Vector otimes(const Vector& x, const Matrix& a) {
  if (x.orient() != Orient::row) throw DimensionMismatch("vector * matrix needs a row");
  if (x.size() != a.rows()) throw DimensionMismatch("vector * matrix dimension mismatch");
  std::vector<Scalar> out(a.cols(), Scalar::zero());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const Scalar xk = x[k];
    if (xk.is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[j] = oplus(out[j], otimes(xk, a(k, j)));
  }
  return Vector(std::move(out), Orient::row);
}

/// Outer product column * row.
inline Matrix outer(const Vector& x, const Vector& y) {
  if (x.orient() != Orient::column || y.orient() != Orient::row)
    throw DimensionMismatch("outer product needs column * row");
  Matrix out(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = otimes(x[i], y[j]);
  return out;
}

inline void require_square(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("operation requires a square matrix");
}

/// Max over the diagonal.
inline Scalar trace(const Matrix& a) {
  require_square(a);
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) acc = oplus(acc, a(i, i));
  return acc;
}

/// Max of trace(A^m) over m = 1..n; the determinant-like solvability
/// indicator for second-kind equations.  Equals the maximum cycle
/// weight over cycles of length at most n.
inline Scalar tr_closure(const Matrix& a) {
  require_square(a);
  Scalar acc = trace(a);
  Matrix p = a;
  for (std::size_t m = 2; m <= a.rows(); ++m) {
    p = otimes(p, a);
    acc = oplus(acc, trace(p));
  }
  return acc;
}

/// Partial Kleene star I (+) A (+) ... (+) A^(n-1).
inline Matrix star(const Matrix& a) {
  require_square(a);
  Matrix acc = Matrix::identity(a.rows());
  Matrix p = Matrix::identity(a.rows());
  for (std::size_t m = 1; m < a.rows(); ++m) {
    p = otimes(p, a);
    acc = oplus(acc, p);
  }
  return acc;
}

/// A times its partial star, A (+) A^2 (+) ... (+) A^n.
inline Matrix times_closure(const Matrix& a) {
  require_square(a);
  return otimes(a, star(a));
}

/// True iff the digraph with an arc i -> j for every finite a_ij is
/// strongly connected; equivalent to the matrix not being permutable
/// to block-triangular form.
inline bool is_irreducible(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        const Scalar e = forward ? a(u, v) : a(v, u);
        if (e.is_finite() && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (char s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(true) && reaches_all(false);
}

struct SpanResult {
  bool member;
  Vector coefficients;
};

/// Residuated span-membership test: each coefficient is the largest c
/// with c * x_i <= y, and y is a member iff the combination with those
/// coefficients reproduces y.
inline SpanResult span_member(const Vector& y, const Matrix& x, double tol = kDefaultTol) {
  if (y.is_zero()) throw ZeroVector("span membership of the zero vector");
  if (y.orient() != Orient::column || y.size() != x.rows())
    throw DimensionMismatch("span membership needs a column of matching length");
  const Vector y_inv = pseudo_inverse(y);
  std::vector<Scalar> coeffs;
  coeffs.reserve(x.cols());
  Vector combo = Vector::zeros(y.size());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const Vector xj = x.column(j);
    const Scalar c = inv(otimes(y_inv, xj));
    coeffs.push_back(c);
    combo = oplus(combo, otimes(c, xj));
  }
  return SpanResult{near(combo, y, tol), Vector(std::move(coeffs))};
}

/// Columns of the product closure with a unit diagonal entry, reduced to
/// a tropically independent set.  Columns are scanned in ascending index
/// order and dropped when the remaining candidates already span them, so
/// the output is deterministic; only its span is contract.
inline Matrix plus_matrix(const Matrix& a, double tol = kDefaultTol) {
  require_square(a);
  const Matrix prod = times_closure(a);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < prod.cols(); ++j)
    if (near(prod(j, j), Scalar::one(), tol)) keep.push_back(j);
  if (keep.empty())
    throw EmptyPlus("no column of the product closure has a unit diagonal entry");
  for (std::size_t pos = 0; pos < keep.size() && keep.size() > 1;) {
    std::vector<Vector> others;
    others.reserve(keep.size() - 1);
    for (std::size_t t = 0; t < keep.size(); ++t)
      if (t != pos) others.push_back(prod.column(keep[t]));
    if (span_member(prod.column(keep[pos]), Matrix::from_columns(others), tol).member)
      keep.erase(keep.begin() + pos);
    else
      ++pos;
  }
  std::vector<Vector> cols;
  cols.reserve(keep.size());
  for (std::size_t j : keep) cols.push_back(prod.column(j));
  return Matrix::from_columns(cols);
}

inline bool near(const Matrix& a, const Matrix& b, double tol = kDefaultTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!near(a(i, j), b(i, j), tol)) return false;
  return true;
}

}  // namespace tropo
