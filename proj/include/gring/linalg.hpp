#pragma once

// Exact dense linear algebra over a `Field`: reduced row echelon form with
// first-nonzero pivoting, rank, kernels and linear solves.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/scalar.hpp"

namespace gring {

using Vec = std::vector<Elem>;

inline Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

inline Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

inline bool is_zero_vec(const Field& f, const Vec& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) return false;
  }
  return true;
}

inline Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vec vec_scale(const Field& f, const Elem& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

/// acc += c * v
inline void vec_axpy(const Field& f, Vec& acc, const Elem& c, const Vec& v) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!f.is_zero(v[i])) acc[i] = f.add(acc[i], f.mul(c, v[i]));
  }
}

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw StructuralError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const Field& f, const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(f, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw StructuralError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw StructuralError("matrix-vector dimension mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elem& a = (*this)(i, j);
        if (!field_.is_zero(a) && !field_.is_zero(x[j])) r[i] = field_.add(r[i], field_.mul(a, x[j]));
      }
    }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product dimension mismatch");
    const Field& f = a.field_;
    Matrix r(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!f.is_zero(b(k, j))) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot in each column is the first row (from
/// the current position) with a nonzero entry.
inline Echelon row_reduce(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column, in column order.
inline std::vector<Vec> kernel(const Matrix& m) {
  const Field& f = m.field();
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

struct AffineSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// All solutions of m x = b, or nothing when the system is inconsistent.
/// The particular solution sets every free variable to zero.
inline std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw StructuralError("right-hand side length mismatch");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(f, m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> ker;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    ker.push_back(std::move(v));
  }
  return AffineSolution{std::move(x), std::move(ker)};
}

inline std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  auto s = solve_affine(m, b);
  if (!s) return std::nullopt;
  return std::move(s->particular);
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
inline std::vector<Vec> echelon_basis(const Field& f, const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const Echelon e = row_reduce(Matrix::from_rows(f, vectors, dim));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

/// Span grown one vector at a time; rows are kept monic at their pivot and
/// each new vector is reduced against them.
class IncrementalSpan {
 public:
  IncrementalSpan(Field f, std::size_t dim) : f_(std::move(f)), dim_(dim), row_of_(dim, kNone) {}

  std::size_t size() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Adds v; returns whether the span grew.
  bool insert(Vec v) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (f_.is_zero(v[k])) continue;
      if (row_of_[k] == kNone) {
        vec_scale_in_place(v, f_.inv(v[k]));
        row_of_[k] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
      }
      vec_axpy(f_, v, f_.neg(v[k]), rows_[row_of_[k]]);
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  void vec_scale_in_place(Vec& v, const Elem& c) const {
    for (auto& x : v) x = f_.mul(c, x);
  }
  Field f_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> row_of_;
};

/// Coordinates of v in the span of `basis` (columns), if it lies there.
inline std::optional<Vec> coordinates(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  return solve_linear(Matrix::from_columns(f, basis, v.size()), v);
}

inline std::string format_vec(const Field& f, const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += f.format(v[i]);
  }
  return s + "]";
}

}  // namespace gring
