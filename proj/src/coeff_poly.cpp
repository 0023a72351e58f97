#include "infloc/coeff_poly.hpp"

#include <sstream>

namespace infloc {

mpz_class pow(const mpz_class& base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpq_class pow(const mpq_class& base, unsigned e) {
  mpq_class r(pow(mpz_class(base.get_num()), e), pow(mpz_class(base.get_den()), e));
  r.canonicalize();
  return r;
}

CoeffPoly::CoeffPoly(long c) : CoeffPoly(mpz_class(c)) {}

CoeffPoly::CoeffPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

CoeffPoly CoeffPoly::monomial(const mpz_class& c, unsigned d_exp, unsigned g_exp) {
  CoeffPoly p;
  p.add_term(Monomial{d_exp, g_exp}, c);
  return p;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

mpz_class CoeffPoly::coefficient(unsigned d_exp, unsigned g_exp) const {
  auto it = terms_.find(Monomial{d_exp, g_exp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

unsigned CoeffPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total();
}

void CoeffPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.d_exp + mb.d_exp, ma.g_exp + mb.g_exp}, ca * cb);
    }
  }
  return r;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

mpq_class CoeffPoly::evaluate(const mpq_class& d0, const mpq_class& g0) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) sum += mpq_class(c) * pow(d0, m.d_exp) * pow(g0, m.g_exp);
  return sum;
}

CoeffPoly CoeffPoly::substitute(const std::optional<mpz_class>& d0,
                                const std::optional<mpz_class>& g0) const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mpz_class cc = c;
    if (d0) {
      cc *= pow(*d0, m.d_exp);
      mm.d_exp = 0;
    }
    if (g0) {
      cc *= pow(*g0, m.g_exp);
      mm.g_exp = 0;
    }
    r.add_term(mm, cc);
  }
  return r;
}

namespace {

void append_power(std::ostringstream& os, const char* var, unsigned e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e > 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (leading) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    leading = false;
    bool first_factor = true;
    if (m.total() == 0 || mag != 1) {
      os << mag.get_str();
      first_factor = false;
    }
    append_power(os, "d", m.d_exp, first_factor);
    append_power(os, "g", m.g_exp, first_factor);
  }
  return os.str();
}

}  // namespace infloc
