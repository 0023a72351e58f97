#include "infloc/linalg.hpp"

namespace infloc {

ZMatrix integer_row_scaled(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm_den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      z(r, c) = m(r, c).get_num() * exact_divide(lcm_den, m(r, c).get_den());
    }
  }
  return z;
}

std::size_t rank(const QMatrix& m) {
  ZMatrix z = integer_row_scaled(m);
  return bareiss_eliminate(z).first;
}

mpq_class determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  mpz_class scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm_den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    scale *= lcm_den;
  }
  mpq_class det(determinant(integer_row_scaled(m)), scale);
  det.canonicalize();
  return det;
}

RankCertificate rank_certificate(const QMatrix& m) {
  QMatrix a = m;
  std::vector<std::size_t> row_of(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) row_of[r] = r;

  RankCertificate cert;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, row);
    std::swap(row_of[pivot], row_of[row]);
    const mpq_class inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const mpq_class f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    cert.pivot_rows.push_back(row_of[row]);
    cert.pivot_cols.push_back(col);
    ++row;
  }
  cert.rank = row;

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : cert.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(a.cols(), mpq_class(0));
    v[free] = 1;
    for (std::size_t i = 0; i < cert.rank; ++i) v[cert.pivot_cols[i]] = -a(i, free);
    cert.kernel.push_back(std::move(v));
  }
  return cert;
}

bool verify_certificate(const QMatrix& m, const RankCertificate& cert) {
  if (cert.pivot_rows.size() != cert.rank || cert.pivot_cols.size() != cert.rank) return false;
  if (cert.rank > m.rows() || cert.rank > m.cols()) return false;
  if (cert.kernel.size() != m.cols() - cert.rank) return false;

  if (cert.rank > 0) {
    QMatrix minor(cert.rank, cert.rank);
    for (std::size_t i = 0; i < cert.rank; ++i) {
      for (std::size_t j = 0; j < cert.rank; ++j) {
        if (cert.pivot_rows[i] >= m.rows() || cert.pivot_cols[j] >= m.cols()) return false;
        minor(i, j) = m(cert.pivot_rows[i], cert.pivot_cols[j]);
      }
    }
    if (determinant(minor) == 0) return false;
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : cert.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  for (std::size_t k = 0; k < cert.kernel.size(); ++k) {
    const auto& v = cert.kernel[k];
    if (v.size() != m.cols()) return false;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      if (v[free_cols[i]] != (i == k ? 1 : 0)) return false;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace infloc
