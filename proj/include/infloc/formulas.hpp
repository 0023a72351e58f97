#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "infloc/chow.hpp"

namespace infloc {

/**
 * An n-dimensional scroll in P^N over a curve. The jet order k is always
 * floor(N / n) and the expected codimension of the inflectional locus is
 * ell = N + 1 - kn, so 1 <= ell <= n holds by construction.
 *
 * Degree and genus are optional: an empty value stays formal.
 */
class ScrollParams {
 public:
  ScrollParams(int n, int ambient, std::optional<mpz_class> degree = std::nullopt,
               std::optional<mpz_class> genus = std::nullopt);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int ambient() const { return ambient_; }
  [[nodiscard]] int k() const { return ambient_ / n_; }
  [[nodiscard]] int ell() const { return ambient_ + 1 - k() * n_; }
  [[nodiscard]] const std::optional<mpz_class>& degree() const { return degree_; }
  [[nodiscard]] const std::optional<mpz_class>& genus() const { return genus_; }

 private:
  int n_;
  int ambient_;
  std::optional<mpz_class> degree_;
  std::optional<mpz_class> genus_;
};

/// [Phi_k] = L^ell + k(d + (n(k-1) + 2 ell)(g-1)) L^(ell-1) F.
ChowClass inflectional_class(const ScrollParams& p);

/// (k+1)d + k(2(N+1) - (k+1)n)(g-1), with known parameters substituted.
CoeffPoly inflectional_degree(const ScrollParams& p);

/// Same, evaluated at rational degree and genus.
mpq_class inflectional_degree(const ScrollParams& p, const mpq_class& d0, const mpq_class& g0);

/// (k+1)(d + k(g-1)): weighted number of k-th order inflection points of a curve in P^k.
CoeffPoly curve_inflection_degree(int k);
mpq_class curve_inflection_degree(const mpq_class& d0, const mpq_class& g0, int k);

/// (d-n)(d-n-1) == n(n+1)g, the double point identity for scrolls in P^2n.
bool double_point_check(const mpz_class& n, const mpz_class& d, const mpz_class& g);

/// The balanced rational normal scroll P(O(k) + ... + O(k)).
struct UninflectedDescriptor {
  int genus = 0;
  int degree = 0;
  std::vector<int> splitting;
  int ambient = 0;
  friend bool operator==(const UninflectedDescriptor&, const UninflectedDescriptor&) = default;
};

struct NecessarilyInflected {
  friend bool operator==(const NecessarilyInflected&, const NecessarilyInflected&) = default;
};

using Classification = std::variant<UninflectedDescriptor, NecessarilyInflected>;

/// The only candidate uninflected scroll of dimension n in P^(kn + ell - 1).
Classification classify_uninflected(int n, int k, int ell);

}  // namespace infloc
