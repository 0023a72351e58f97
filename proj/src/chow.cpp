#include "infloc/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace infloc {

namespace {

void require_same_dim(const ChowClass& a, const ChowClass& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ChowClass: mismatched dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
  }
}

}  // namespace

ChowClass::ChowClass(int n) {
  if (n < 1) throw std::invalid_argument("ChowClass: dimension must be positive");
  pieces_.resize(static_cast<std::size_t>(n) + 1);
}

ChowClass ChowClass::make(int n, std::span<const Term> terms) {
  ChowClass x(n);
  for (const auto& t : terms) {
    if (t.codim < 0 || t.codim > n) {
      throw std::invalid_argument("ChowClass: codimension " + std::to_string(t.codim) +
                                  " outside 0.." + std::to_string(n));
    }
    if (t.codim == 0 && !t.f_coeff.is_zero()) {
      throw std::invalid_argument("ChowClass: codimension 0 has no fiber term");
    }
    auto& p = x.pieces_[static_cast<std::size_t>(t.codim)];
    p.l_coeff += t.l_coeff;
    p.f_coeff += t.f_coeff;
  }
  return x;
}

ChowClass ChowClass::one(int n) { return make(n, {{0, 1, 0}}); }
ChowClass ChowClass::hyperplane(int n) { return make(n, {{1, 1, 0}}); }
ChowClass ChowClass::fiber(int n) { return make(n, {{1, 0, 1}}); }

const ChowClass::Piece& ChowClass::term(int codim) const {
  if (codim < 0 || codim > dim()) {
    throw std::out_of_range("ChowClass: codimension " + std::to_string(codim) + " outside 0.." +
                            std::to_string(dim()));
  }
  return pieces_[static_cast<std::size_t>(codim)];
}

bool ChowClass::is_zero() const {
  for (const auto& p : pieces_) {
    if (!p.l_coeff.is_zero() || !p.f_coeff.is_zero()) return false;
  }
  return true;
}

std::optional<int> ChowClass::homogeneous_codim() const {
  std::optional<int> found;
  for (int j = 0; j <= dim(); ++j) {
    const auto& p = pieces_[static_cast<std::size_t>(j)];
    if (p.l_coeff.is_zero() && p.f_coeff.is_zero()) continue;
    if (found) return std::nullopt;
    found = j;
  }
  return found;
}

ChowClass ChowClass::graded_piece(int codim) const {
  ChowClass r(dim());
  r.pieces_[static_cast<std::size_t>(codim)] = term(codim);
  return r;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  require_same_dim(*this, o);
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    pieces_[j].l_coeff += o.pieces_[j].l_coeff;
    pieces_[j].f_coeff += o.pieces_[j].f_coeff;
  }
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  require_same_dim(*this, o);
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    pieces_[j].l_coeff -= o.pieces_[j].l_coeff;
    pieces_[j].f_coeff -= o.pieces_[j].f_coeff;
  }
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  require_same_dim(a, b);
  const std::size_t n = a.pieces_.size() - 1;
  ChowClass r(a.dim());
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& x = a.pieces_[i];
    if (x.l_coeff.is_zero() && x.f_coeff.is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const auto& y = b.pieces_[j];
      auto& out = r.pieces_[i + j];
      // (aL^i + bL^(i-1)F)(cL^j + eL^(j-1)F) = acL^(i+j) + (ae + bc)L^(i+j-1)F; F^2 = 0.
      out.l_coeff += x.l_coeff * y.l_coeff;
      out.f_coeff += x.l_coeff * y.f_coeff + x.f_coeff * y.l_coeff;
    }
  }
  return r;
}

ChowClass operator*(const CoeffPoly& c, const ChowClass& x) {
  ChowClass r = x;
  for (auto& p : r.pieces_) {
    p.l_coeff = c * p.l_coeff;
    p.f_coeff = c * p.f_coeff;
  }
  return r;
}

ChowClass ChowClass::operator-() const { return CoeffPoly(-1) * *this; }

ChowClass ChowClass::inverse() const {
  const CoeffPoly& c0 = pieces_[0].l_coeff;
  if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1)) {
    throw std::domain_error("ChowClass: constant term " + c0.to_string() + " is not a unit");
  }
  // x = c0 (1 + y) with y nilpotent; x^-1 = c0 * sum_m (-y)^m since c0^-1 = c0.
  ChowClass normalized = c0 * *this;
  ChowClass minus_y = one(dim()) - normalized;
  ChowClass sum = one(dim());
  ChowClass power = one(dim());
  for (int m = 1; m <= dim(); ++m) {
    power = power * minus_y;
    sum += power;
  }
  return c0 * sum;
}

CoeffPoly ChowClass::degree() const {
  auto codim = homogeneous_codim();
  if (!codim) {
    if (is_zero()) return CoeffPoly();
    throw std::domain_error("ChowClass: degree of a non-homogeneous class");
  }
  const auto& p = pieces_[static_cast<std::size_t>(*codim)];
  return p.l_coeff * CoeffPoly::d() + p.f_coeff;
}

mpq_class ChowClass::degree(const mpq_class& d0, const mpq_class& g0) const {
  return degree().evaluate(d0, g0);
}

ChowClass ChowClass::substitute(const std::optional<mpz_class>& d0,
                                const std::optional<mpz_class>& g0) const {
  ChowClass r = *this;
  for (auto& p : r.pieces_) {
    p.l_coeff = p.l_coeff.substitute(d0, g0);
    p.f_coeff = p.f_coeff.substitute(d0, g0);
  }
  return r;
}

namespace {

std::string basis_name(int l_power, bool with_fiber) {
  std::string s;
  if (l_power > 0) s = l_power == 1 ? "L" : "L^" + std::to_string(l_power);
  if (with_fiber) s += s.empty() ? "F" : "*F";
  return s;
}

void append_term(std::ostringstream& os, bool& leading, const CoeffPoly& c,
                 const std::string& basis) {
  if (c.is_zero()) return;
  // The sign of the leading monomial is pulled out in front of the term.
  const bool negative = c.terms().begin()->second < 0;
  const CoeffPoly mag = negative ? -c : c;
  std::string coeff;
  if (mag.is_constant()) {
    if (mag.constant_term() != 1 || basis.empty()) coeff = mag.constant_term().get_str();
  } else if (mag.terms().size() == 1) {
    coeff = mag.to_string();
  } else {
    coeff = "(" + mag.to_string() + ")";
  }
  if (leading) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  leading = false;
  os << coeff;
  if (!coeff.empty() && !basis.empty()) os << '*';
  os << basis;
}

}  // namespace

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool leading = true;
  for (int j = 0; j <= dim(); ++j) {
    const auto& p = pieces_[static_cast<std::size_t>(j)];
    append_term(os, leading, p.l_coeff, basis_name(j, false));
    if (j > 0) append_term(os, leading, p.f_coeff, basis_name(j - 1, true));
  }
  return leading ? "0" : os.str();
}

}  // namespace infloc
