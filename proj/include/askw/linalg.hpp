#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "askw/exactalg/ring_traits.hpp"

namespace askw {

/// Dense row-major matrix over an exact field.
template <class R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const R& zero() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Appends the rows of `o` (same column count).
  Matrix stacked(const Matrix& o) const {
    if (o.cols_ != cols_) throw std::invalid_argument("stacked: column mismatch");
    Matrix out(rows_ + o.rows_, cols_, zero_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

 private:
  std::size_t rows_, cols_;
  R zero_;
  std::vector<R> data_;
};

template <class R>
struct Echelon {
  Matrix<R> m;
  /// Pivot column of each nonzero row, in row order.
  std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) forward elimination. Pivot rule: in each column,
/// the first row at or below the current one with a nonzero entry. Divisions
/// by the previous pivot are exact; over a field they are carried out as
/// multiplication by its inverse.
template <class R>
Echelon<R> bareiss_echelon(Matrix<R> m, const R& one) {
  Echelon<R> out{std::move(m), {}};
  Matrix<R>& a = out.m;
  const std::size_t rows = a.rows(), cols = a.cols();
  R prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && is_zero(a(k, c))) ++k;
    if (k == rows) continue;
    a.swap_rows(r, k);
    const R piv = a(r, c);
    const R inv_prev = RingTraits<R>::inverse(prev);
    const R scale = piv * inv_prev;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const R lead = a(i, c);
      const bool has_lead = !is_zero(lead);
      const R lead_scaled = has_lead ? R(lead * inv_prev) : lead;
      for (std::size_t j = c + 1; j < cols; ++j) {
        R& x = a(i, j);
        const R& y = a(r, j);
        const bool x_zero = is_zero(x);
        if (!has_lead || is_zero(y)) {
          if (!x_zero) x = x * scale;
        } else if (x_zero) {
          x = -(lead_scaled * y);
        } else {
          x = x * scale - lead_scaled * y;
        }
      }
      a(i, c) = a.zero();
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <class R>
std::size_t rank(const Matrix<R>& m, const R& one) {
  return bareiss_echelon(m, one).pivots.size();
}

/// Basis of {v : m v = 0}, one vector per non-pivot column (that column set
/// to one, the other free columns to zero).
template <class R>
std::vector<std::vector<R>> nullspace(const Matrix<R>& m, const R& one) {
  const Echelon<R> e = bareiss_echelon(m, one);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<R> pivot_inv;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_inv.push_back(RingTraits<R>::inverse(e.m(r, e.pivots[r])));

  std::vector<std::vector<R>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> v(cols, m.zero());
    v[f] = one;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      R acc = m.zero();
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (is_zero(v[j]) || is_zero(e.m(r, j))) continue;
        acc += e.m(r, j) * v[j];
      }
      v[pc] = -(acc * pivot_inv[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace askw
