#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "slices/rational.hpp"

namespace slices {

// Dense matrix of exact rationals. Small sizes only (n <= ~20); everything
// is straightforward Gaussian elimination over Q.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  QMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& row : init) {
      assert(int(row.size()) == cols_);
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator+(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  QMat operator-(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  QMat operator-() const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }
  QMat operator*(const QMat& o) const {
    assert(cols_ == o.rows_);
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o(k, j) == 0) continue;
          r(i, j) += x * o(k, j);
        }
      }
    return r;
  }
  QMat operator*(const Rat& s) const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }
  QMat& operator+=(const QMat& o) { return *this = *this + o; }
  QMat& operator-=(const QMat& o) { return *this = *this - o; }

  QMat transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
  }

  Rat trace() const {
    Rat t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  QMat mul_commutator(const QMat& o) const { return *this * o - o * *this; }

  Rat det() const {
    assert(rows_ == cols_);
    QMat m = *this;
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
      int piv = -1;
      for (int r = c; r < rows_; ++r)
        if (m(r, c) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rat(0);
      if (piv != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      Rat inv = 1 / m(c, c);
      for (int r = c + 1; r < rows_; ++r) {
        if (m(r, c) == 0) continue;
        Rat f = m(r, c) * inv;
        for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return d;
  }

  // Gauss-Jordan inverse; throws on singular input.
  QMat inverse() const {
    assert(rows_ == cols_);
    int n = rows_;
    QMat m = *this;
    QMat inv = identity(n);
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (m(r, c) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::domain_error("singular matrix");
      if (piv != c)
        for (int j = 0; j < n; ++j) {
          std::swap(m(piv, j), m(c, j));
          std::swap(inv(piv, j), inv(c, j));
        }
      Rat f = 1 / m(c, c);
      for (int j = 0; j < n; ++j) {
        m(c, j) *= f;
        inv(c, j) *= f;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || m(r, c) == 0) continue;
        Rat g = m(r, c);
        for (int j = 0; j < n; ++j) {
          m(r, j) -= g * m(c, j);
          inv(r, j) -= g * inv(c, j);
        }
      }
    }
    return inv;
  }

  std::vector<Rat> flatten() const { return a_; }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Rank of a list of row vectors over Q (destructive Gaussian elimination).
inline int rank_of_rows(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  size_t lead = 0;
  for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat f = 1 / rows[r][lead];
    for (size_t j = lead; j < cols; ++j) rows[r][j] *= f;
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][lead] == 0) continue;
      Rat g = rows[k][lead];
      for (size_t j = lead; j < cols; ++j) rows[k][j] -= g * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// True iff v lies in the row span of basis (both over Q).
inline bool in_row_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v) {
  auto rows = basis;
  int r0 = rank_of_rows(rows);
  rows = basis;
  rows.push_back(v);
  return rank_of_rows(rows) == r0;
}

}  // namespace slices
