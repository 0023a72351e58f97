#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace infloc {

/// Dense univariate polynomial over Q, constant term first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<mpq_class> coeffs);
  explicit UPoly(std::vector<mpq_class> coeffs);
  static UPoly monomial(const mpq_class& c, int exponent);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] mpq_class operator[](int i) const;
  [[nodiscard]] const mpq_class& leading() const { return coeffs_.back(); }
  [[nodiscard]] const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const mpq_class& c, const UPoly& p);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] mpq_class evaluate(const mpq_class& x) const;

  /// x^d p(1/x); requires d >= degree().
  [[nodiscard]] UPoly reversed(int d) const;

  /// Multiplicity of 0 as a root; -1 for the zero polynomial.
  [[nodiscard]] int order_at_zero() const;

  [[nodiscard]] UPoly monic() const;

  /// e.g. "48*u^3 - 2*u + 1/2".
  [[nodiscard]] std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Throws std::domain_error when the division leaves a remainder.
UPoly exact_divide(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm: nonconstant monic squarefree factors with their multiplicities.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

}  // namespace infloc
