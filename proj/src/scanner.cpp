#include "infloc/scanner.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "infloc/chern.hpp"
#include "infloc/formulas.hpp"

namespace infloc {

// ---------------------------------------------------------------------------
// Wronskian

int WronskianReport::weight_at(const mpq_class& u) const {
  for (const auto& f : finite_factors) {
    if (f.root && *f.root == u) return f.multiplicity;
  }
  return 0;
}

namespace {

UPoly wronskian(std::span<const UPoly> basis, int k) {
  const auto size = static_cast<std::size_t>(k) + 1;
  Matrix<UPoly> m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    UPoly p = basis[i];
    for (std::size_t r = 0; r < size; ++r) {
      m(i, r) = p;
      p = p.derivative();
    }
  }
  return determinant(std::move(m));
}

}  // namespace

WronskianReport wronskian_weights(std::span<const UPoly> basis, int k) {
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
  if (basis.size() != static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("a curve in P^" + std::to_string(k) + " needs " +
                                std::to_string(k + 1) + " basis polynomials, got " +
                                std::to_string(basis.size()));
  }
  WronskianReport rep;
  rep.k = k;
  rep.basis.assign(basis.begin(), basis.end());
  for (const auto& p : basis) rep.degree = std::max(rep.degree, p.degree());

  rep.wronskian_zero = wronskian(basis, k);
  std::vector<UPoly> at_infinity;
  for (const auto& p : basis) at_infinity.push_back(p.reversed(rep.degree));
  rep.wronskian_infinity = wronskian(at_infinity, k);

  if (rep.wronskian_zero.is_zero()) {
    rep.degenerate = true;
    return rep;
  }

  const UPoly& w = rep.wronskian_zero;
  const int z = w.order_at_zero();
  if (z > 0) rep.finite_factors.push_back({UPoly{0, 1}, z, mpq_class(0)});
  const UPoly rest = exact_divide(w, UPoly::monomial(1, z));
  for (auto& [f, mult] : squarefree_decomposition(rest)) {
    WronskianFactor wf{f, mult, std::nullopt};
    if (f.degree() == 1) wf.root = -f[0];
    rep.finite_factors.push_back(std::move(wf));
  }
  rep.weight_at_infinity = rep.wronskian_infinity.order_at_zero();
  rep.total_weight = w.degree() + rep.weight_at_infinity;
  return rep;
}

std::vector<UPoly> monomial_projection_basis(int d, int k) {
  if (k < 1 || k > d) {
    throw std::invalid_argument("monomial projection needs 1 <= k <= d, got k=" +
                                std::to_string(k) + ", d=" + std::to_string(d));
  }
  std::vector<UPoly> basis;
  for (int m = 0; m < k; ++m) basis.push_back(UPoly::monomial(1, m));
  basis.push_back(UPoly::monomial(1, d));
  return basis;
}

WronskianReport wronskian_weights(const DecomposableScroll& curve, int k) {
  if (curve.n() != 1) throw std::invalid_argument("Wronskian weights need a curve (n = 1)");
  auto basis = monomial_projection_basis(curve.degree(), k);
  return wronskian_weights(basis, k);
}

// ---------------------------------------------------------------------------
// Determinant divisor

ChowClass DivisorClass::to_chow(int n) const {
  return ChowClass::make(n, {{1, CoeffPoly(l_coeff), CoeffPoly(f_coeff)}});
}

namespace {

/// Reads (alpha, beta) with Delta a section of alpha*L + beta*F, given the
/// determinant in chart (zero, i), the multiplicity of {x_i = 0} and of the fiber at infinity.
DivisorClass chart_class(const DecomposableScroll& x, int chart, const MPoly& det,
                         int coordinate_mult, int fiber_at_infinity) {
  const auto& a = x.degrees();
  int fiber_degree = 0;
  for (const auto& [e, c] : det.terms()) {
    int s = 0;
    for (std::size_t i = 1; i < e.size(); ++i) s += static_cast<int>(e[i]);
    fiber_degree = std::max(fiber_degree, s);
  }
  // Homogenize in x to degree fiber_degree, then multiply by x_chart^coordinate_mult.
  std::optional<long> beta;
  for (const auto& [e, c] : det.terms()) {
    long twist = 0;
    int used = 0;
    std::size_t slot = 1;
    for (int j = 0; j < x.n(); ++j) {
      if (j == chart) continue;
      twist += static_cast<long>(e[slot]) * a[static_cast<std::size_t>(j)];
      used += static_cast<int>(e[slot]);
      ++slot;
    }
    twist += static_cast<long>(fiber_degree - used + coordinate_mult) * a[static_cast<std::size_t>(chart)];
    const long need = static_cast<long>(e[0]) - twist;
    beta = beta ? std::max(*beta, need) : need;
  }
  return {mpz_class(fiber_degree + coordinate_mult), mpz_class(*beta + fiber_at_infinity)};
}

}  // namespace

DeterminantDivisorReport determinant_divisor(const DecomposableScroll& x, int k) {
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
  if (x.ambient() != k * x.n()) {
    throw std::invalid_argument("determinant divisor needs N = kn; scroll " + x.spec() + " has N = " +
                                std::to_string(x.ambient()) + ", kn = " + std::to_string(k * x.n()));
  }
  const int n = x.n();
  DeterminantDivisorReport rep;
  rep.variables = chart_variable_names(n, BaseChart::zero, 0);

  std::vector<MPoly> at_zero;
  std::vector<MPoly> at_infinity;
  for (int i = 0; i < n; ++i) {
    at_zero.push_back(determinant(symbolic_jet_matrix(x, k, BaseChart::zero, i)));
    at_infinity.push_back(determinant(symbolic_jet_matrix(x, k, BaseChart::infinity, i)));
  }
  if (at_zero.front().is_zero()) {
    rep.degenerate = true;
    rep.charts.push_back({0, at_zero.front(), 0, 0, {}});
    return rep;
  }

  for (int i = 0; i < n; ++i) {
    const MPoly& det = at_zero[static_cast<std::size_t>(i)];
    ChartDivisor cd;
    cd.fiber_chart = i;
    cd.determinant = det;
    if (n > 1) {
      // {x_i = 0} is invisible in chart i; in chart i' it is {v_i = 0}.
      const int other = (i + 1) % n;
      const std::size_t var = 1 + static_cast<std::size_t>(i < other ? i : i - 1);
      cd.coordinate_multiplicity = at_zero[static_cast<std::size_t>(other)].order(var);
    }
    cd.fiber_at_infinity = at_infinity[static_cast<std::size_t>(i)].order(0);
    cd.divisor_class = chart_class(x, i, det, cd.coordinate_multiplicity, cd.fiber_at_infinity);
    for (std::size_t var = 1; var < det.nvars(); ++var) {
      if (det.degree(var) > 1) rep.affine_linear = false;
    }
    rep.charts.push_back(std::move(cd));
  }

  rep.divisor_class = rep.charts.front().divisor_class;
  for (const auto& cd : rep.charts) {
    if (!(cd.divisor_class == rep.divisor_class)) {
      std::ostringstream os;
      os << "determinant divisor of " << x.spec() << ": fiber charts disagree on the class ("
         << rep.divisor_class.to_chow(n).to_string() << " vs "
         << cd.divisor_class.to_chow(n).to_string() << " in chart " << cd.fiber_chart << ")";
      throw std::logic_error(os.str());
    }
  }
  rep.factors = squarefree_decomposition(rep.determinant());
  return rep;
}

// ---------------------------------------------------------------------------
// Rank scan

std::vector<const ScanEntry*> ScanReport::inflected() const {
  std::vector<const ScanEntry*> out;
  for (const auto& e : entries) {
    if (e.corank > 0) out.push_back(&e);
  }
  return out;
}

std::size_t ScanReport::inflected_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ScanEntry& e) { return e.corank > 0; }));
}

namespace {

/// Nonzero rationals p/q with |p| <= 12, 1 <= q <= 6, from a fixed-width engine
/// so the stream is identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  mpq_class nonzero() {
    long num = 0;
    while (num == 0) num = static_cast<long>(engine_() % 25) - 12;
    const long den = static_cast<long>(engine_() % 6) + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

ScrollPoint make_point(BaseChart base, mpq_class u, int chart, int n, unsigned zero_mask,
                       RationalSampler& rng) {
  ScrollPoint p{base, std::move(u), chart, {}};
  for (int slot = 0; slot < n - 1; ++slot) {
    mpq_class value = rng.nonzero();
    p.v.push_back((zero_mask >> slot) & 1U ? mpq_class(0) : value);
  }
  return p;
}

}  // namespace

std::vector<std::pair<ScrollPoint, bool>> scan_points(const DecomposableScroll& x,
                                                      const SampleSpec& spec) {
  if (spec.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const int n = x.n();
  const unsigned masks = 1U << static_cast<unsigned>(n - 1);
  RationalSampler rng(spec.seed);
  std::vector<std::pair<ScrollPoint, bool>> pts;

  if (spec.structured) {
    const std::vector<std::pair<BaseChart, long>> bases = {
        {BaseChart::zero, 0}, {BaseChart::zero, 1}, {BaseChart::zero, -1},
        {BaseChart::zero, 2}, {BaseChart::zero, -2}, {BaseChart::infinity, 0}};
    for (const auto& [base, u] : bases) {
      for (int chart = 0; chart < n; ++chart) {
        for (unsigned mask = 0; mask < masks; ++mask) {
          pts.emplace_back(make_point(base, mpq_class(u), chart, n, mask, rng), true);
        }
      }
    }
  }
  const int charts = 2 * n;
  for (int i = 0; i < spec.samples; ++i) {
    const int c = i % charts;
    const BaseChart base = c < n ? BaseChart::zero : BaseChart::infinity;
    const unsigned mask = static_cast<unsigned>(i / charts) % masks;
    mpq_class u = rng.nonzero();
    pts.emplace_back(make_point(base, std::move(u), c % n, n, mask, rng), false);
  }
  return pts;
}

ScanReport rank_scan(const DecomposableScroll& x, int k, const SampleSpec& spec) {
  if (k < 1) throw std::invalid_argument("jet order k must be positive");
  if (k * x.n() > x.ambient()) {
    throw std::invalid_argument("jet order " + std::to_string(k) + " exceeds the range kn <= N = " +
                                std::to_string(x.ambient()));
  }
  ScanReport rep;
  rep.scroll = x.spec();
  rep.k = k;
  rep.spec = spec;
  const auto pts = scan_points(x, spec);
  rep.entries.resize(pts.size());
  const int full = k * x.n() + 1;

  auto evaluate = [&](std::size_t i) {
    ScanEntry& e = rep.entries[i];
    e.point = pts[i].first;
    e.structured = pts[i].second;
    const JetMatrix jm = jet_matrix(x, k, e.point);
    e.rank = jet_rank(jm);
    e.corank = full - e.rank;
    e.vanishing_coordinates = x.vanishing_coordinates(e.point);
    if (e.corank > 0) e.certificate = rank_certificate(jm.entries);
  };

  unsigned threads = spec.threads ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(pts.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < pts.size(); i += threads) evaluate(i);
      });
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cross-validation

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "MATCH";
    case Verdict::mismatch: return "MISMATCH";
    case Verdict::hypothesis_violated: return "HYPOTHESIS-VIOLATED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

CrossValidation validate_curve(const DecomposableScroll& x, int k) {
  CrossValidation cv;
  cv.route = "wronskian";
  cv.k = k;
  cv.ambient = k;  // the curve is taken in P^k
  cv.ell = 1;
  cv.formula_class = segre_closed_form(1, k, 1).substitute(mpz_class(x.degree()), mpz_class(0));
  cv.formula_degree = curve_inflection_degree(x.degree(), 0, k);
  WronskianReport w = wronskian_weights(x, k);
  if (w.degenerate) {
    cv.verdict = Verdict::hypothesis_violated;
    cv.detail = "Wronskian vanishes identically";
  } else {
    cv.oracle_degree = w.total_weight;
    cv.verdict = *cv.oracle_degree == cv.formula_degree ? Verdict::match : Verdict::mismatch;
    std::ostringstream os;
    os << "oracle weight " << w.total_weight << ", formula (k+1)(d+k(g-1)) = "
       << cv.formula_degree.get_str();
    cv.detail = os.str();
  }
  cv.wronskian = std::move(w);
  return cv;
}

void validate_divisor(const DecomposableScroll& x, CrossValidation& cv) {
  cv.route = "determinant-divisor";
  DeterminantDivisorReport rep = determinant_divisor(x, cv.k);
  if (rep.degenerate) {
    cv.verdict = Verdict::hypothesis_violated;
    cv.detail = "jet determinant vanishes identically: generic rank below kn+1";
  } else {
    cv.oracle_class = rep.divisor_class.to_chow(x.n());
    cv.oracle_degree = cv.oracle_class->degree(x.degree(), 0);
    const bool same = *cv.oracle_class == cv.formula_class;
    cv.verdict = same ? Verdict::match : Verdict::mismatch;
    cv.detail = "oracle class " + cv.oracle_class->to_string() + ", formula class " +
                cv.formula_class.to_string();
  }
  cv.divisor = std::move(rep);
}

void validate_scan(const DecomposableScroll& x, CrossValidation& cv, const SampleSpec& spec) {
  cv.route = "rank-scan";
  ScanReport scan = rank_scan(x, cv.k, spec);
  const auto hits = scan.inflected();
  std::set<std::string> distinct;
  bool generic_hit = false;
  std::size_t generic_total = 0;
  std::size_t generic_hits = 0;
  for (const auto& e : scan.entries) {
    if (!e.structured && e.vanishing_coordinates.empty()) {
      ++generic_total;
      if (e.corank > 0) ++generic_hits;
    }
  }
  generic_hit = generic_total > 0 && generic_hits == generic_total;
  for (const auto* e : hits) {
    const ScrollPoint c = x.canonical(e->point);
    std::ostringstream key;
    key << static_cast<int>(c.base) << ':' << c.u.get_str() << ':' << c.fiber_chart;
    for (const auto& v : c.v) key << ':' << v.get_str();
    distinct.insert(key.str());
  }

  std::ostringstream os;
  os << hits.size() << " of " << scan.entries.size() << " sampled points inflected";
  if (generic_hit) {
    cv.verdict = Verdict::hypothesis_violated;
    os << "; every generic sample is inflected, so the generic rank is below kn+1";
  } else if (cv.ell == x.n()) {
    // Expected dimension 0: a locus of degree D has at most D points.
    if (!distinct.empty() && mpq_class(static_cast<long>(distinct.size())) > cv.formula_degree) {
      cv.verdict = Verdict::hypothesis_violated;
      os << "; " << distinct.size() << " distinct inflected points exceed the formula degree "
         << cv.formula_degree.get_str() << ", so the inflectional locus is not 0-dimensional";
    } else {
      cv.verdict = Verdict::match;
      os << "; consistent with formula degree " << cv.formula_degree.get_str()
         << " (sampled evidence)";
    }
  } else {
    cv.verdict = Verdict::inconclusive;
    os << "; a codimension-" << cv.ell << " locus is not certified by sampling";
  }
  cv.detail = os.str();
  cv.scan = std::move(scan);
}

}  // namespace

CrossValidation cross_validate(const DecomposableScroll& x, std::optional<int> k,
                               const SampleSpec& spec) {
  const int n = x.n();
  if (n == 1) {
    CrossValidation cv = validate_curve(x, k.value_or(x.degree()));
    cv.scroll = x.spec();
    cv.n = 1;
    return cv;
  }
  const int derived = x.ambient() / n;
  if (k && *k != derived) {
    throw std::invalid_argument("jet order must be floor(N/n) = " + std::to_string(derived) +
                                " for scroll " + x.spec());
  }
  const ScrollParams params(n, x.ambient(), mpz_class(x.degree()), mpz_class(0));
  CrossValidation cv;
  cv.scroll = x.spec();
  cv.n = n;
  cv.ambient = x.ambient();
  cv.k = params.k();
  cv.ell = params.ell();
  cv.formula_class = inflectional_class(params);
  cv.formula_degree = inflectional_degree(params).constant_term();
  if (cv.ell == 1) {
    validate_divisor(x, cv);
  } else {
    validate_scan(x, cv, spec);
  }
  return cv;
}

}  // namespace infloc
