#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infloc/coeff_poly.hpp"

namespace infloc {

/**
 * Graded class on an n-dimensional scroll over a curve, written in the basis
 * {L^j, L^(j-1) F} in each codimension j = 0..n, with F^2 = 0.
 *
 * Products are truncated eagerly above codimension n. Numerically
 * L^n = d and L^(n-1) F = 1.
 */
class ChowClass {
 public:
  /// Coefficients of L^j and L^(j-1) F in one codimension.
  struct Piece {
    CoeffPoly l_coeff;
    CoeffPoly f_coeff;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  struct Term {
    int codim;
    CoeffPoly l_coeff;
    CoeffPoly f_coeff;
  };

  /// The zero class on a scroll of dimension n.
  explicit ChowClass(int n);

  /// Sums the given terms; repeated codimensions accumulate.
  static ChowClass make(int n, std::span<const Term> terms);
  static ChowClass make(int n, std::initializer_list<Term> terms) {
    return make(n, std::span<const Term>(terms.begin(), terms.size()));
  }
  static ChowClass one(int n);
  static ChowClass hyperplane(int n);  // L
  static ChowClass fiber(int n);       // F

  [[nodiscard]] int dim() const { return static_cast<int>(pieces_.size()) - 1; }
  [[nodiscard]] const Piece& term(int codim) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::optional<int> homogeneous_codim() const;

  /// The codimension-j part alone.
  [[nodiscard]] ChowClass graded_piece(int codim) const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const CoeffPoly& c, const ChowClass& x);
  ChowClass operator-() const;
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  /// Truncated power-series inverse. Requires the constant term to be a unit (+1 or -1).
  [[nodiscard]] ChowClass inverse() const;

  /// Degree of a homogeneous class as a polynomial in d, g: the coefficient of
  /// x * L^(n-j) under L^n = d, L^(n-1) F = 1. The zero class has degree 0.
  [[nodiscard]] CoeffPoly degree() const;
  [[nodiscard]] mpq_class degree(const mpq_class& d0, const mpq_class& g0) const;

  [[nodiscard]] ChowClass substitute(const std::optional<mpz_class>& d0,
                                     const std::optional<mpz_class>& g0) const;

  /// e.g. "1 - L - (d + 2*g - 2)*F".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace infloc
