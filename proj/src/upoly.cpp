#include "infloc/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace infloc {

UPoly::UPoly(std::initializer_list<mpq_class> coeffs) : coeffs_(coeffs) { trim(); }

UPoly::UPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpq_class& c, int exponent) {
  std::vector<mpq_class> v(static_cast<std::size_t>(exponent) + 1, mpq_class(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class UPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const mpq_class& c, const UPoly& p) {
  std::vector<mpq_class> r = p.coeffs_;
  for (auto& x : r) x *= c;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

mpq_class UPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("UPoly::reversed: degree bound too small");
  if (is_zero()) return {};
  std::vector<mpq_class> r(static_cast<std::size_t>(d) + 1, mpq_class(0));
  for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(d - i)] = coeffs_[static_cast<std::size_t>(i)];
  return UPoly(std::move(r));
}

int UPoly::order_at_zero() const {
  if (is_zero()) return -1;
  int i = 0;
  while (coeffs_[static_cast<std::size_t>(i)] == 0) ++i;
  return i;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return mpq_class(1 / leading()) * *this;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool leading_term = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (leading_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    leading_term = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<mpq_class> rem = a.coefficients();
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
  const auto& bc = b.coefficients();
  const mpq_class inv_lead = 1 / b.leading();
  for (int shift = a.degree() - b.degree(); shift >= 0; --shift) {
    const auto top = static_cast<std::size_t>(shift + b.degree());
    mpq_class q = rem[top] * inv_lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(shift)] = q;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[static_cast<std::size_t>(shift) + i] -= q * bc[i];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_divide(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  const UPoly dp = p.derivative();
  const UPoly a0 = gcd(p, dp);
  UPoly b = exact_divide(p, a0);
  UPoly c = exact_divide(dp, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    UPoly a = gcd(b, d);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(a.monic(), i);
  }
  return out;
}

}  // namespace infloc
