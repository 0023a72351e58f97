#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace infloc {

/**
 * Sparse multivariate polynomial over Q in a fixed number of variables.
 *
 * Terms are kept in lexicographic order, leading term first. Variables are
 * anonymous; names are supplied only when printing.
 */
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, mpq_class, std::greater<>>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const mpq_class& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(std::size_t nvars, const mpq_class& c, Exponents exps);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

  /// Highest exponent of variable `var`; -1 for the zero polynomial.
  [[nodiscard]] int degree(std::size_t var) const;
  [[nodiscard]] int total_degree() const;
  /// Largest power of x_var dividing this polynomial; -1 for zero.
  [[nodiscard]] int order(std::size_t var) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const mpq_class& c, const MPoly& p);
  MPoly operator-() const { return mpq_class(-1) * *this; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  [[nodiscard]] MPoly derivative(std::size_t var) const;
  [[nodiscard]] mpq_class evaluate(std::span<const mpq_class> point) const;

  /// Coefficients with respect to x_var, indexed by power; each is free of x_var.
  [[nodiscard]] std::vector<MPoly> coefficients_in(std::size_t var) const;

  /// Divides out x_var^e; requires order(var) >= e.
  [[nodiscard]] MPoly shift_down(std::size_t var, unsigned e) const;

  /// Scaled so the leading coefficient is 1.
  [[nodiscard]] MPoly monic() const;

  [[nodiscard]] std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  std::size_t nvars_;
  TermMap terms_;
};

/// Throws std::domain_error if b does not divide a.
MPoly exact_divide(const MPoly& a, const MPoly& b);

/// Monic gcd over Q[x_1..x_m] by recursive primitive remainder sequences.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Monic gcd of the coefficients of p viewed as a polynomial in x_var.
MPoly content(const MPoly& p, std::size_t var);

/// Nonconstant monic squarefree factors with multiplicities (Yun, variable by variable).
/// Throws std::domain_error on the zero polynomial.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p);

}  // namespace infloc
