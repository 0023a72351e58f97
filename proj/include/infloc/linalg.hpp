#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "infloc/mpoly.hpp"
#include "infloc/upoly.hpp"

namespace infloc {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<mpq_class>;
using ZMatrix = Matrix<mpz_class>;

inline mpz_class exact_divide(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_zero_entry(const mpz_class& x) { return x == 0; }
inline bool is_zero_entry(const MPoly& x) { return x.is_zero(); }
inline bool is_zero_entry(const UPoly& x) { return x.is_zero(); }

inline mpz_class zero_like(const mpz_class&) { return 0; }
inline mpz_class one_like(const mpz_class&) { return 1; }
inline MPoly zero_like(const MPoly& x) { return MPoly(x.nvars()); }
inline MPoly one_like(const MPoly& x) { return MPoly(x.nvars(), 1); }
inline UPoly zero_like(const UPoly&) { return {}; }
inline UPoly one_like(const UPoly&) { return UPoly{1}; }

/**
 * Bareiss fraction-free elimination in place, to row echelon form.
 *
 * Works over any integral domain whose elements support exact division;
 * pivoting takes the first nonzero entry at or below the current row.
 * Returns the rank and the parity of the row swaps performed.
 */
template <class T>
std::pair<std::size_t, bool> bareiss_eliminate(Matrix<T>& m) {
  std::size_t rank = 0;
  bool odd_swaps = false;
  if (m.rows() == 0 || m.cols() == 0) return {0, false};
  T prev = one_like(m(0, 0));
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero_entry(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      odd_swaps = !odd_swaps;
    }
    const T p = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const T factor = m(r, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        m(r, c) = exact_divide(p * m(r, c) - factor * m(rank, c), prev);
      }
      m(r, col) = zero_like(p);
    }
    prev = p;
    ++rank;
  }
  return {rank, odd_swaps};
}

/// Determinant of a square matrix by Bareiss elimination.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) throw std::invalid_argument("determinant: empty matrix");
  auto [rank, odd_swaps] = bareiss_eliminate(m);
  if (rank < m.rows()) return zero_like(m(0, 0));
  T det = m(m.rows() - 1, m.cols() - 1);
  return odd_swaps ? zero_like(det) - det : det;
}

/// Clears denominators row by row; the row space is unchanged.
ZMatrix integer_row_scaled(const QMatrix& m);

/// Exact rank via fraction-free elimination on the row-scaled integer matrix.
std::size_t rank(const QMatrix& m);

/// Determinant of a square rational matrix.
mpq_class determinant(const QMatrix& m);

/**
 * Re-checkable evidence for rank(M) = r: a nonsingular r x r minor
 * (pivot_rows x pivot_cols) and a basis of the right kernel, each vector
 * with a 1 at its own free column and 0 at the other free columns.
 */
struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<mpq_class>> kernel;
};

/// Built by Gauss-Jordan reduction over Q, independent of rank().
RankCertificate rank_certificate(const QMatrix& m);

/// Checks the minor is nonsingular, every kernel vector is annihilated, and the
/// kernel has dimension cols - rank with the stated free-column structure.
bool verify_certificate(const QMatrix& m, const RankCertificate& cert);

}  // namespace infloc
