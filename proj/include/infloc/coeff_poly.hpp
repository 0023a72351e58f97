#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace infloc {

/// Exponent pair of a monomial d^d_exp * g^g_exp.
struct Monomial {
  unsigned d_exp = 0;
  unsigned g_exp = 0;

  [[nodiscard]] unsigned total() const { return d_exp + g_exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lexicographic, higher total degree first, d before g.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.d_exp > b.d_exp;
  }
};

/**
 * Integer polynomial in the two formal parameters d (degree of the scroll)
 * and g (genus of the base curve).
 *
 * Zero coefficients are never stored, so structural equality is polynomial
 * equality. Iteration order is the canonical print order.
 */
class CoeffPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, DegLexGreater>;

  CoeffPoly() = default;
  CoeffPoly(long c);  // NOLINT(google-explicit-constructor)
  CoeffPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static CoeffPoly monomial(const mpz_class& c, unsigned d_exp, unsigned g_exp);
  static CoeffPoly d() { return monomial(1, 1, 0); }
  static CoeffPoly g() { return monomial(1, 0, 1); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] mpz_class coefficient(unsigned d_exp, unsigned g_exp) const;
  [[nodiscard]] mpz_class constant_term() const { return coefficient(0, 0); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] unsigned total_degree() const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly operator-() const;
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

  /// Ring homomorphism Z[d,g] -> Q.
  [[nodiscard]] mpq_class evaluate(const mpq_class& d0, const mpq_class& g0) const;

  /// Partial substitution; an empty optional keeps the variable formal.
  [[nodiscard]] CoeffPoly substitute(const std::optional<mpz_class>& d0,
                                     const std::optional<mpz_class>& g0) const;

  /// Canonical text, e.g. "2*d*g - 3*d + g - 1".
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);

  TermMap terms_;
};

mpz_class pow(const mpz_class& base, unsigned e);
mpq_class pow(const mpq_class& base, unsigned e);

}  // namespace infloc
