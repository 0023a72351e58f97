#include "infloc/formulas.hpp"

#include <stdexcept>
#include <string>

#include "infloc/chern.hpp"

namespace infloc {

ScrollParams::ScrollParams(int n, int ambient, std::optional<mpz_class> degree,
                           std::optional<mpz_class> genus)
    : n_(n), ambient_(ambient), degree_(std::move(degree)), genus_(std::move(genus)) {
  if (n_ < 1) throw std::invalid_argument("dimension n must be positive");
  if (ambient_ < n_ + 1) {
    throw std::invalid_argument("ambient dimension " + std::to_string(ambient_) +
                                " leaves no room for a nondegenerate scroll of dimension " +
                                std::to_string(n_));
  }
  if (degree_ && *degree_ < 1) throw std::invalid_argument("degree must be positive");
  if (genus_ && *genus_ < 0) throw std::invalid_argument("genus must be nonnegative");
}

ChowClass inflectional_class(const ScrollParams& p) {
  return segre_closed_form(p.n(), p.k(), p.ell()).substitute(p.degree(), p.genus());
}

CoeffPoly inflectional_degree(const ScrollParams& p) {
  const long k = p.k();
  const long n = p.n();
  const long ambient = p.ambient();
  CoeffPoly deg = CoeffPoly(k + 1) * CoeffPoly::d() +
                  CoeffPoly(k * (2 * (ambient + 1) - (k + 1) * n)) * (CoeffPoly::g() - 1);
  return deg.substitute(p.degree(), p.genus());
}

mpq_class inflectional_degree(const ScrollParams& p, const mpq_class& d0, const mpq_class& g0) {
  return inflectional_degree(p).evaluate(d0, g0);
}

CoeffPoly curve_inflection_degree(int k) {
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
  return CoeffPoly(k + 1) * (CoeffPoly::d() + CoeffPoly(k) * (CoeffPoly::g() - 1));
}

mpq_class curve_inflection_degree(const mpq_class& d0, const mpq_class& g0, int k) {
  return curve_inflection_degree(k).evaluate(d0, g0);
}

bool double_point_check(const mpz_class& n, const mpz_class& d, const mpz_class& g) {
  return (d - n) * (d - n - 1) == n * (n + 1) * g;
}

Classification classify_uninflected(int n, int k, int ell) {
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
  if (ell < 1 || ell > n) {
    throw std::out_of_range("ell " + std::to_string(ell) + " outside 1.." + std::to_string(n));
  }
  // For ell < n, intersecting the class with L^(n-ell-1) F leaves L^(n-1) F = 1 != 0.
  if (ell < n) return NecessarilyInflected{};
  UninflectedDescriptor u;
  u.genus = 0;
  u.degree = k * n;
  u.splitting.assign(static_cast<std::size_t>(n), k);
  u.ambient = (k + 1) * n - 1;
  return u;
}

}  // namespace infloc
