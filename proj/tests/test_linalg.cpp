#include <doctest.h>

#include "infloc/linalg.hpp"
#include "oracles.hpp"

using namespace infloc;

namespace {

QMatrix random_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = oracle::uniform(rng, 0, 2) ? oracle::random_rational(rng, 4, 3) : 0;
  return m;
}

QMatrix product(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows(), b.cols(), mpq_class(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t i = 0; i < a.cols(); ++i) m(r, c) += a(r, i) * b(i, c);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("determinants agree with the Leibniz expansion") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    const QMatrix m = random_matrix(rng, n, n);
    CHECK(determinant(m) == oracle::leibniz(m));
  }
  CHECK_THROWS_AS(determinant(QMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(determinant(ZMatrix(0, 0)), std::invalid_argument);
}

TEST_CASE("symbolic determinants agree with the Leibniz expansion") {
  const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1), one(2, 1), zero(2);
  Matrix<MPoly> m(3, 3, zero);
  m(0, 0) = one;  m(0, 1) = x;    m(0, 2) = y;
  m(1, 0) = x;    m(1, 1) = zero; m(1, 2) = one;
  m(2, 0) = y * y; m(2, 1) = one; m(2, 2) = x * y;
  const MPoly expected = oracle::leibniz<MPoly>(3, [&](std::size_t r, std::size_t c) { return m(r, c); }, zero);
  CHECK(determinant(m) == expected);
}

TEST_CASE("rank and certificates on random low-rank matrices") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto cols = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto inner = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const QMatrix m = product(random_matrix(rng, rows, inner), random_matrix(rng, inner, cols));
    const std::size_t r = rank(m);
    const RankCertificate cert = rank_certificate(m);
    CHECK(cert.rank == r);
    CHECK(r <= std::min({rows, cols, inner}));
    CHECK(verify_certificate(m, cert));
    if (rows <= 5 && cols <= 5) CHECK(oracle::minor_rank(m) == r);
  }
}

TEST_CASE("tampered certificates are rejected") {
  QMatrix m(3, 3, mpq_class(0));
  m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 4; m(2, 2) = 5;
  RankCertificate cert = rank_certificate(m);
  REQUIRE(cert.rank == 2);
  REQUIRE(verify_certificate(m, cert));

  RankCertificate wrong_kernel = cert;
  wrong_kernel.kernel[0][0] += 1;
  CHECK_FALSE(verify_certificate(m, wrong_kernel));

  RankCertificate wrong_rank = cert;
  wrong_rank.rank = 3;
  CHECK_FALSE(verify_certificate(m, wrong_rank));

  RankCertificate singular_minor = cert;
  singular_minor.pivot_rows = {0, 1};
  singular_minor.pivot_cols = {0, 1};
  CHECK_FALSE(verify_certificate(m, singular_minor));
}

TEST_CASE("row scaling clears denominators") {
  QMatrix m(1, 3);
  m(0, 0) = mpq_class(1, 2);
  m(0, 1) = mpq_class(2, 3);
  m(0, 2) = 0;
  const ZMatrix z = integer_row_scaled(m);
  CHECK(z(0, 0) == 3);
  CHECK(z(0, 1) == 4);
  CHECK(z(0, 2) == 0);
}

}  // TEST_SUITE
