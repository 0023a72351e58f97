#include "infloc/scroll.hpp"

#include "infloc/coeff_poly.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace infloc {

DecomposableScroll::DecomposableScroll(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("scroll needs at least one summand");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 1) {
      throw std::invalid_argument("summand degree " + std::to_string(degrees_[i]) +
                                  " is not positive");
    }
    degree_ += degrees_[i];
    for (int m = 0; m <= degrees_[i]; ++m) sections_.push_back({static_cast<int>(i), m});
  }
}

DecomposableScroll DecomposableScroll::parse(std::string_view text) {
  std::vector<int> degrees;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw std::invalid_argument("malformed scroll spec \"" + std::string(text) +
                                  "\": expected comma-separated positive integers");
    }
    degrees.push_back(value);
    pos = comma + 1;
  }
  return DecomposableScroll(std::move(degrees));
}

bool DecomposableScroll::is_balanced() const {
  for (int a : degrees_) {
    if (a != degrees_.front()) return false;
  }
  return true;
}

std::string DecomposableScroll::spec() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
  return os.str();
}

void DecomposableScroll::validate(const ScrollPoint& p) const {
  if (p.fiber_chart < 0 || p.fiber_chart >= n()) {
    throw std::invalid_argument("fiber chart " + std::to_string(p.fiber_chart) + " outside 0.." +
                                std::to_string(n() - 1));
  }
  if (static_cast<int>(p.v.size()) != n() - 1) {
    throw std::invalid_argument("point needs " + std::to_string(n() - 1) + " fiber coordinates");
  }
}

namespace {

/// Fiber coordinates in the frame of the point's base chart, with y[fiber_chart] = 1.
std::vector<mpq_class> frame_coordinates(const ScrollPoint& p, int n) {
  std::vector<mpq_class> y(static_cast<std::size_t>(n));
  std::size_t next = 0;
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = i == p.fiber_chart ? mpq_class(1) : p.v[next++];
  return y;
}

}  // namespace

std::optional<ScrollPoint> DecomposableScroll::change_chart(const ScrollPoint& p, BaseChart base,
                                                            int fiber_chart) const {
  validate(p);
  if (fiber_chart < 0 || fiber_chart >= n()) throw std::invalid_argument("fiber chart out of range");
  std::vector<mpq_class> y = frame_coordinates(p, n());
  mpq_class u = p.u;
  if (base != p.base) {
    // y'_i = y_i * u^a_i between the frames at zero and infinity, and u' = 1/u.
    if (u == 0) return std::nullopt;
    for (int i = 0; i < n(); ++i) y[static_cast<std::size_t>(i)] *= pow(u, static_cast<unsigned>(degrees_[static_cast<std::size_t>(i)]));
    u = 1 / u;
  }
  const mpq_class& pivot = y[static_cast<std::size_t>(fiber_chart)];
  if (pivot == 0) return std::nullopt;
  ScrollPoint q{base, u, fiber_chart, {}};
  for (int i = 0; i < n(); ++i) {
    if (i != fiber_chart) q.v.push_back(y[static_cast<std::size_t>(i)] / pivot);
  }
  return q;
}

ScrollPoint DecomposableScroll::canonical(const ScrollPoint& p) const {
  for (BaseChart base : {BaseChart::zero, BaseChart::infinity}) {
    for (int i = 0; i < n(); ++i) {
      if (auto q = change_chart(p, base, i)) return *q;
    }
  }
  throw std::logic_error("point lies in no chart");
}

std::vector<int> DecomposableScroll::vanishing_coordinates(const ScrollPoint& p) const {
  validate(p);
  std::vector<int> out;
  std::vector<mpq_class> y = frame_coordinates(p, n());
  for (int i = 0; i < n(); ++i) {
    if (y[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  }
  return out;
}

std::vector<JetColumn> jet_columns(int n, int k, int fiber_chart) {
  std::vector<JetColumn> cols{{0, std::nullopt}};
  for (int order = 1; order <= k; ++order) {
    cols.push_back({order, std::nullopt});
    for (int j = 0; j < n; ++j) {
      if (j != fiber_chart) cols.push_back({order - 1, j});
    }
  }
  return cols;
}

namespace {

void require_jet_order(int k) {
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
}

mpz_class falling_factorial(int m, int h) {
  mpz_class r = 1;
  for (int i = 0; i < h; ++i) r *= m - i;
  return r;
}

/// Local monomial of a section: coeff * u^u_exp * (v of `v_summand`, if any).
struct JetEntry {
  mpz_class coeff;
  int u_exp = 0;
  std::optional<int> v_summand;
};

/// The local function of section s is u^e (times v_s when s is not the fiber
/// chart) with e = m at zero and a_i - m at infinity.
std::optional<JetEntry> jet_entry(const DecomposableScroll& x, const Section& s, BaseChart base,
                                  int fiber_chart, const JetColumn& col) {
  const int e = base == BaseChart::zero ? s.power : x.degrees()[static_cast<std::size_t>(s.summand)] - s.power;
  const bool has_v = s.summand != fiber_chart;
  if (col.v_summand && (!has_v || *col.v_summand != s.summand)) return std::nullopt;
  if (col.u_order > e) return std::nullopt;
  JetEntry entry;
  entry.coeff = falling_factorial(e, col.u_order);
  entry.u_exp = e - col.u_order;
  if (has_v && !col.v_summand) entry.v_summand = s.summand;
  return entry;
}

/// Position of summand j among the v coordinates of a chart.
std::size_t v_slot(int j, int fiber_chart) {
  return static_cast<std::size_t>(j < fiber_chart ? j : j - 1);
}

}  // namespace

JetMatrix jet_matrix(const DecomposableScroll& x, int k, const ScrollPoint& p) {
  require_jet_order(k);
  x.validate(p);
  JetMatrix jm;
  jm.k = k;
  jm.point = p;
  jm.columns = jet_columns(x.n(), k, p.fiber_chart);
  jm.entries = QMatrix(x.sections().size(), jm.columns.size(), mpq_class(0));
  for (std::size_t r = 0; r < x.sections().size(); ++r) {
    for (std::size_t c = 0; c < jm.columns.size(); ++c) {
      auto e = jet_entry(x, x.sections()[r], p.base, p.fiber_chart, jm.columns[c]);
      if (!e) continue;
      mpq_class value = mpq_class(e->coeff) * pow(p.u, static_cast<unsigned>(e->u_exp));
      if (e->v_summand) value *= p.v[v_slot(*e->v_summand, p.fiber_chart)];
      jm.entries(r, c) = value;
    }
  }
  return jm;
}

Matrix<MPoly> symbolic_jet_matrix(const DecomposableScroll& x, int k, BaseChart base,
                                  int fiber_chart) {
  require_jet_order(k);
  if (fiber_chart < 0 || fiber_chart >= x.n()) throw std::invalid_argument("fiber chart out of range");
  const auto nvars = static_cast<std::size_t>(x.n());
  const auto cols = jet_columns(x.n(), k, fiber_chart);
  Matrix<MPoly> m(x.sections().size(), cols.size(), MPoly(nvars));
  for (std::size_t r = 0; r < x.sections().size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto e = jet_entry(x, x.sections()[r], base, fiber_chart, cols[c]);
      if (!e) continue;
      MPoly::Exponents exps(nvars, 0);
      exps[0] = static_cast<unsigned>(e->u_exp);
      if (e->v_summand) exps[1 + v_slot(*e->v_summand, fiber_chart)] = 1;
      m(r, c) = MPoly::monomial(nvars, e->coeff, std::move(exps));
    }
  }
  return m;
}

std::vector<std::string> chart_variable_names(int n, BaseChart base, int fiber_chart) {
  std::vector<std::string> names{base == BaseChart::zero ? "u" : "w"};
  for (int j = 0; j < n; ++j) {
    if (j != fiber_chart) names.push_back("v" + std::to_string(j + 1));
  }
  return names;
}

int jet_rank(const JetMatrix& m) { return static_cast<int>(rank(m.entries)); }

int osculating_dim(const DecomposableScroll& x, int k, const ScrollPoint& p) {
  return jet_rank(jet_matrix(x, k, p)) - 1;
}

bool is_inflected(const DecomposableScroll& x, int k, const ScrollPoint& p) {
  require_jet_order(k);
  if (k * x.n() > x.ambient()) {
    throw std::invalid_argument("jet order " + std::to_string(k) + " exceeds the range kn <= N = " +
                                std::to_string(x.ambient()));
  }
  return jet_rank(jet_matrix(x, k, p)) < k * x.n() + 1;
}

}  // namespace infloc
