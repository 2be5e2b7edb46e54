#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/rational.hpp"

namespace gorth {

using Vec = std::vector<Rat>;

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("dot: size mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  return s;
}

inline Vec scaled(const Vec& v, const Rat& s) {
  Vec out = v;
  for (auto& x : out) x *= s;
  return out;
}

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("from_columns: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Mat m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InputError("from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Vec operator*(std::span<const Rat> v) const {
    if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      auto r = row(i);
      for (std::size_t j = 0; j < cols_; ++j)
        if (!r[j].is_zero() && !v[j].is_zero()) out[i].add_mul(r[j], v[j]);
    }
    return out;
  }
  Vec operator*(const Vec& v) const { return (*this) * std::span<const Rat>(v); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw InputError("matrix product size mismatch " + a.shape() + " * " + b.shape());
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j).add_mul(aik, b(k, j));
      }
    return c;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Mat& operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= Rat(-1); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError("matrix shape mismatch " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

inline Rat trace(const Mat& m) {
  if (!m.is_square()) throw InputError("trace of non-square matrix");
  Rat t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Reduced row echelon form with deterministic pivoting: columns are scanned
/// left to right and the first row with a nonzero entry becomes the pivot.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Echelon rref(Mat m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline Echelon rref(const Mat& m) { return rref(m, m.cols()); }

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

/// Canonical null-space basis read off the reduced echelon form: one vector
/// per free column, with a 1 in that column.
inline std::vector<Vec> kernel_basis(const Mat& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, free variables set to zero; nullopt if b is not in
/// the column space.
inline std::optional<Vec> solve(const Mat& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug), m.cols());
  for (std::size_t i = e.pivots.size(); i < m.rows(); ++i)
    if (!e.reduced(i, m.cols()).is_zero()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}
inline std::optional<Vec> solve(const Mat& m, const Vec& b) { return solve(m, std::span<const Rat>(b)); }

inline std::optional<Mat> try_inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug), n);
  if (e.pivots.size() != n) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Mat inverse(const Mat& m) {
  auto inv = try_inverse(m);
  if (!inv) throw PreconditionError("matrix is singular");
  return *inv;
}

inline Mat mat_power(const Mat& m, std::size_t k) {
  if (!m.is_square()) throw InputError("mat_power of non-square matrix " + m.shape());
  Mat result = Mat::identity(m.rows());
  Mat base = m;
  bool first = true;
  while (k) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// Columns of m forming a basis of its column space (pivot columns).
inline std::vector<Vec> column_space_basis(const Mat& m) {
  std::vector<Vec> out;
  for (auto p : rref(m).pivots) out.push_back(m.column(p));
  return out;
}

/// Block-diagonal direct sum.
inline Mat direct_sum(const std::vector<Mat>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Mat out(r, c);
  std::size_t i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i0 + i, j0 + j) = b(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return out;
}

/// Incrementally maintained echelon basis of a subspace. Used to test
/// membership and to extend bases greedily in a fixed order.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return dim_; }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  // Adds v; returns false (and changes nothing) if v was already in the span.
  bool add(const Vec& v) {
    if (v.size() != dim_) throw InputError("EchelonSpan: vector has wrong length");
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    Rat inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][p].is_zero()) continue;
      Rat f = rows_[i][p];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!r[j].is_zero()) rows_[i][j].sub_mul(f, r[j]);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& f = v[pivots_[i]];
      if (f.is_zero()) continue;
      Rat c = f;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!rows_[i][j].is_zero()) v[j].sub_mul(c, rows_[i][j]);
    }
    return v;
  }

  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Greedily picks, in order, the candidates that are independent of `base`
/// and of each other.
inline std::vector<Vec> extend_basis(const std::vector<Vec>& base, const std::vector<Vec>& candidates,
                                     std::size_t dim) {
  EchelonSpan span(dim);
  for (const auto& b : base) span.add(b);
  std::vector<Vec> added;
  for (const auto& c : candidates)
    if (span.add(c)) added.push_back(c);
  return added;
}

inline bool linearly_independent(const std::vector<Vec>& vs, std::size_t dim) {
  EchelonSpan span(dim);
  for (const auto& v : vs)
    if (!span.add(v)) return false;
  return true;
}

}  // namespace gorth
