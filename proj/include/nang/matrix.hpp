#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nang/scalar.hpp"

namespace nang {

// Dense row-major matrix over a field F. F needs +, -, *, /, == and construction from int.
template <class F>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static BasicMatrix from_rows(const std::vector<std::vector<F>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    BasicMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> column(std::size_t j) const {
    std::vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const std::vector<F>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == F(0))) return false;
    return true;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend BasicMatrix operator*(const BasicMatrix& x, const BasicMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    BasicMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const F& xik = x(i, k);
        if (xik == F(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend BasicMatrix operator+(BasicMatrix x, const BasicMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend BasicMatrix operator-(BasicMatrix x, const BasicMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend bool operator==(const BasicMatrix& x, const BasicMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

using Matrix = BasicMatrix<Scalar>;

template <class F>
struct Echelon {
  BasicMatrix<F> r;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class F>
Echelon<F> mat_rref(BasicMatrix<F> m) {
  Echelon<F> e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == F(0)) continue;
      F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.r = std::move(m);
  return e;
}

template <class F>
std::size_t mat_rank(const BasicMatrix<F>& m) {
  return mat_rref(m).pivots.size();
}

template <class F>
BasicMatrix<F> mat_nullspace(const BasicMatrix<F>& m) {
  auto e = mat_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::size_t nfree = m.cols() - e.pivots.size();
  BasicMatrix<F> basis(m.cols(), nfree);
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = F(0) - e.r(r, c);
    ++k;
  }
  return basis;
}

template <class F>
struct AffineSolutionSpace {
  BasicMatrix<F> particular;  // a.cols x b.cols
  BasicMatrix<F> nullspace;   // a.cols x dim, basis as columns
};

template <class F>
std::optional<AffineSolutionSpace<F>> mat_solve(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("mat_solve: row mismatch");
  BasicMatrix<F> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto e = mat_rref(std::move(aug));
  AffineSolutionSpace<F> s;
  s.particular = BasicMatrix<F>(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;  // pivot in the right-hand side
    for (std::size_t j = 0; j < b.cols(); ++j) s.particular(e.pivots[r], j) = e.r(r, a.cols() + j);
  }
  s.nullspace = mat_nullspace(a);
  return s;
}

template <class F>
std::optional<BasicMatrix<F>> mat_inverse(const BasicMatrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: non-square input");
  auto s = mat_solve(m, BasicMatrix<F>::identity(m.rows()));
  if (!s || s->nullspace.cols() != 0) return std::nullopt;
  return s->particular;
}

}  // namespace nang
