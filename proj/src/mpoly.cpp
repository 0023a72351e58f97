#include "infloc/mpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "infloc/coeff_poly.hpp"

namespace infloc {

MPoly::MPoly(std::size_t nvars, const mpq_class& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(nvars, 1, std::move(e));
}

MPoly MPoly::monomial(std::size_t nvars, const mpq_class& c, Exponents exps) {
  if (exps.size() != nvars) throw std::invalid_argument("MPoly: exponent vector size mismatch");
  MPoly p(nvars);
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (unsigned e : terms_.begin()->first) {
    if (e != 0) return false;
  }
  return true;
}

int MPoly::degree(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    d = std::max(d, t);
  }
  return d;
}

int MPoly::order(std::size_t var) const {
  if (terms_.empty()) return -1;
  int o = -1;
  for (const auto& [e, c] : terms_) {
    if (o < 0 || static_cast<int>(e[var]) < o) o = static_cast<int>(e[var]);
  }
  return o;
}

void MPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

namespace {

void require_same_ring(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MPoly: variable count mismatch");
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_ring(a, b);
  MPoly r(a.nvars_);
  MPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly operator*(const mpq_class& c, const MPoly& p) {
  MPoly r(p.nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : p.terms_) r.terms_.emplace(e, c * x);
  return r;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.add_term(f, c * static_cast<unsigned long>(e[var]));
  }
  return r;
}

mpq_class MPoly::evaluate(std::span<const mpq_class> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MPoly: evaluation point size mismatch");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree(var), 0)) + 1, MPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

MPoly MPoly::shift_down(std::size_t var, unsigned e) const {
  MPoly r(nvars_);
  for (const auto& [x, c] : terms_) {
    if (x[var] < e) throw std::domain_error("MPoly::shift_down: variable order too small");
    Exponents f = x;
    f[var] -= e;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return mpq_class(1 / leading_coefficient()) * *this;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw std::invalid_argument("MPoly: variable name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (leading) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    leading = false;
    bool first = true;
    bool has_var = false;
    for (unsigned x : e) has_var = has_var || x != 0;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      first = false;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!first) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      first = false;
    }
  }
  return os.str();
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
  const std::size_t n = a.nvars();
  const auto& [lead_b, coeff_b] = *b.terms().begin();
  MPoly q(n);
  MPoly r = a;
  MPoly::Exponents shift(n);
  while (!r.is_zero()) {
    const auto& [lead_r, coeff_r] = *r.terms().begin();
    for (std::size_t i = 0; i < n; ++i) {
      if (lead_r[i] < lead_b[i]) throw std::domain_error("MPoly: inexact division");
      shift[i] = lead_r[i] - lead_b[i];
    }
    MPoly t = MPoly::monomial(n, coeff_r / coeff_b, shift);
    r -= t * b;
    q += t;
  }
  return q;
}

namespace {

std::size_t first_active_variable(const MPoly& a, const MPoly& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  }
  return a.nvars();
}

MPoly leading_coefficient_in(const MPoly& p, std::size_t var) {
  return p.coefficients_in(var).back();
}

MPoly power_of_variable(std::size_t nvars, std::size_t var, unsigned e) {
  MPoly::Exponents x(nvars, 0);
  x[var] = e;
  return MPoly::monomial(nvars, 1, std::move(x));
}

/// lc(b)^s * a reduced modulo b in x_var.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  const int db = b.degree(var);
  const MPoly lcb = leading_coefficient_in(b, var);
  MPoly r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    const MPoly lcr = leading_coefficient_in(r, var);
    r = lcb * r - lcr * power_of_variable(a.nvars(), var, static_cast<unsigned>(dr - db)) * b;
  }
  return r;
}

}  // namespace

MPoly content(const MPoly& p, std::size_t var) {
  MPoly g(p.nvars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const MPoly one(a.nvars(), 1);
  if (a.is_constant() || b.is_constant()) return one;

  const std::size_t var = first_active_variable(a, b);
  const MPoly ca = content(a, var);
  const MPoly cb = content(b, var);
  const MPoly c = gcd(ca, cb);
  MPoly pa = exact_divide(a, ca);
  MPoly pb = exact_divide(b, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  if (pb.degree(var) <= 0) return c;

  while (true) {
    MPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) return c;
    pa = std::move(pb);
    pb = exact_divide(r, content(r, var));
  }
  return (c * pb).monic();
}

namespace {

void squarefree_into(const MPoly& p, std::vector<std::pair<MPoly, int>>& out) {
  if (p.is_constant()) return;
  std::size_t var = 0;
  while (p.degree(var) <= 0) ++var;
  const MPoly c = content(p, var);
  const MPoly q = exact_divide(p, c);

  const MPoly dq = q.derivative(var);
  const MPoly a0 = gcd(q, dq);
  MPoly b = exact_divide(q, a0);
  MPoly d = exact_divide(dq, a0) - b.derivative(var);
  for (int i = 1; b.degree(var) >= 1; ++i) {
    MPoly a = gcd(b, d);
    b = exact_divide(b, a);
    d = exact_divide(d, a) - b.derivative(var);
    if (!a.is_constant()) out.emplace_back(a.monic(), i);
  }
  squarefree_into(c, out);
}

}  // namespace

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<MPoly, int>> out;
  squarefree_into(p, out);
  return out;
}

}  // namespace infloc
