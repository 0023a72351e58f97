// Acceptance checks: prints one PASS/FAIL line per criterion.
//
//   infloc_acceptance          all criteria
//   infloc_acceptance 3 7      selected criteria

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "infloc/chern.hpp"
#include "infloc/formulas.hpp"
#include "infloc/scanner.hpp"
#include "oracles.hpp"

using namespace infloc;

namespace {

const CoeffPoly d = CoeffPoly::d();
const CoeffPoly g = CoeffPoly::g();

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = "failed: " + what;
    }
  }
};

std::string str(const ScrollPoint& p) {
  std::ostringstream os;
  os << static_cast<int>(p.base) << '|' << p.u.get_str() << '|' << p.fiber_chart;
  for (const auto& v : p.v) os << '|' << v.get_str();
  return os.str();
}

Outcome segre_identity() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int j = 1; j <= n; ++j) {
        const ChowClass expected =
            ChowClass::make(n, {{j, 1, CoeffPoly(k) * (d + CoeffPoly(n * (k - 1) + 2 * j) * (g - 1))}});
        o.require(segre_term(n, k, j) == expected,
                  "n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
        ++count;
      }
  o.require(count == 126, "grid size");
  if (o.pass) o.detail = std::to_string(count) + " identities in Z[d,g]";
  return o;
}

Outcome degree_consistency() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int ell = 1; ell <= n; ++ell) {
        const int ambient = k * n + ell - 1;
        const CoeffPoly expected =
            CoeffPoly(k + 1) * d + CoeffPoly(k * (2 * (ambient + 1) - (k + 1) * n)) * (g - 1);
        const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
        o.require(segre_term(n, k, ell).degree() == expected, at);
        if (ambient >= n + 1) {
          const ScrollParams p(n, ambient);
          o.require(inflectional_class(p).degree() == expected, at);
          o.require(inflectional_degree(p) == expected, at);
        }
        if (ell == n) o.require(expected == CoeffPoly(k + 1) * (d + CoeffPoly(n * k) * (g - 1)), "top specialization " + at);
        if (n == 1) o.require(expected == CoeffPoly(k + 1) * (d + k * (g - 1)), "curve specialization " + at);
        ++count;
      }
  if (o.pass) o.detail = std::to_string(count) + " (n,k,ell) degree polynomials";
  return o;
}

Outcome classical_numbers() {
  Outcome o;
  o.require(curve_inflection_degree(4, 3, 2) == 24, "plane quartic flexes");
  int count = 1;
  for (int k = 3; k <= 8; ++k)
    for (int dd = k + 1; dd <= 8; ++dd) {
      o.require(curve_inflection_degree(dd, 0, k) == (k + 1) * (dd - k),
                "d=" + std::to_string(dd) + " k=" + std::to_string(k));
      ++count;
    }
  if (o.pass) o.detail = "quartic flexes 24, " + std::to_string(count - 1) + " rational curves";
  return o;
}

Outcome wronskian_oracle() {
  Outcome o;
  const WronskianReport m = wronskian_weights(monomial_projection_basis(4, 3), 3);
  o.require(m.weight_at(0) == 1, "weight 1 at u=0");
  o.require(m.weight_at_infinity == 3, "weight 3 at infinity");
  o.require(m.total_weight == 4, "total 4");
  o.require(m.finite_factors.size() == 1, "only u=0 is finite");
  oracle::Rng rng(kDefaultSeed);
  int trials = 0;
  for (const auto& [dd, k] : {std::pair{4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<UPoly> basis;
      for (int i = 0; i <= k; ++i) {
        std::vector<mpq_class> c;
        for (int e = 0; e <= dd; ++e) c.push_back(oracle::random_rational(rng, 7, 4));
        if (c.back() == 0) c.back() = 1;
        basis.emplace_back(std::move(c));
      }
      const WronskianReport w = wronskian_weights(basis, k);
      o.require(!w.degenerate && w.total_weight == (k + 1) * (dd - k),
                "random basis d=" + std::to_string(dd) + " k=" + std::to_string(k));
      ++trials;
    }
  }
  if (o.pass) o.detail = "monomial quartic {0:1, inf:3}, " + std::to_string(trials) + " random bases";
  return o;
}

Outcome balanced_uninflected() {
  Outcome o;
  std::size_t points = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const DecomposableScroll x(std::vector<int>(static_cast<std::size_t>(n), k));
      const ScanReport s = rank_scan(x, k, SampleSpec{200});
      o.require(s.entries.size() >= 200, "sample count");
      o.require(s.inflected_count() == 0, "scroll " + x.spec());
      points += s.entries.size();
    }
  if (o.pass) o.detail = "9 scrolls, " + std::to_string(points) + " points, none inflected";
  return o;
}

Outcome case_one_match() {
  Outcome o;
  const DecomposableScroll a({1, 2});
  const DeterminantDivisorReport ra = determinant_divisor(a, 2);
  const MPoly& delta = ra.determinant();
  o.require(!ra.degenerate, "(1,2) determinant nonzero");
  o.require(delta.terms().size() == 1 && delta.total_degree() == 1 && delta.degree(1) == 1,
            "(1,2) determinant is a unit times v");
  o.require(ra.factors.size() == 1 && ra.factors[0].second == 1, "(1,2) multiplicity 1");
  const ChowClass expected = ChowClass::hyperplane(2) - CoeffPoly(2) * ChowClass::fiber(2);
  o.require(ra.divisor_class.to_chow(2) == expected, "(1,2) class L-2F");
  o.require(inflectional_class(ScrollParams(2, 4, mpz_class(3), mpz_class(0))) == expected, "formula L-2F");

  const DecomposableScroll b({1, 1, 2});
  o.require(b.degree() == 4 && b.ambient() == 6 && b.ambient() == 2 * b.n(), "(1,1,2) has N = kn");
  const DeterminantDivisorReport rb = determinant_divisor(b, 2);
  o.require(!rb.degenerate && rb.factors.size() == 1 && rb.factors[0].first == MPoly::variable(3, 2) &&
                rb.factors[0].second == 1,
            "(1,1,2) determinant vanishes exactly on {x3 = 0}");
  o.require(rb.divisor_class.to_chow(3) == ChowClass::hyperplane(3) - CoeffPoly(2) * ChowClass::fiber(3),
            "(1,1,2) class L-2F");
  if (o.pass) {
    o.detail = "(1,2): " + delta.to_string(ra.variables) + ", (1,1,2): " +
               rb.determinant().to_string(rb.variables) + ", class L - 2*F";
  }
  return o;
}

Outcome hypothesis_violation() {
  Outcome o;
  const DecomposableScroll x({1, 3});
  o.require(inflectional_degree(ScrollParams(2, 5, mpz_class(4), mpz_class(0))) == CoeffPoly(0), "formula degree 0");
  const ScanReport s = rank_scan(x, 2, SampleSpec{400});
  std::set<std::string> directrix, generic;
  for (const auto& e : s.entries) {
    const ScrollPoint c = x.canonical(e.point);
    if (e.vanishing_coordinates == std::vector<int>{1}) {
      o.require(e.corank == 1, "corank 1 on the directrix");
      o.require(e.certificate && verify_certificate(jet_matrix(x, 2, e.point).entries, *e.certificate),
                "certificate on the directrix");
      directrix.insert(str(c));
    } else if (e.vanishing_coordinates.empty()) {
      o.require(e.corank == 0, "corank 0 off the directrix");
      generic.insert(str(c));
    }
  }
  o.require(directrix.size() >= 50, "at least 50 distinct directrix points");
  o.require(generic.size() >= 50, "at least 50 generic points");
  const CrossValidation cv = cross_validate(x, 2, SampleSpec{400});
  o.require(cv.verdict == Verdict::hypothesis_violated, "verdict HYPOTHESIS-VIOLATED");
  if (o.pass) {
    o.detail = std::to_string(directrix.size()) + " directrix points corank 1, " + std::to_string(generic.size()) +
               " generic points corank 0, HYPOTHESIS-VIOLATED";
  }
  return o;
}

Outcome semibalanced() {
  Outcome o;
  const DecomposableScroll x({2, 3});
  o.require(x.ambient() == 6 && 3 * x.n() == x.ambient(), "N = kn = 6");
  const ScanReport s = rank_scan(x, 3, SampleSpec{200});
  o.require(s.entries.size() >= 200, "sample count");
  std::size_t on_curve = 0;
  for (const auto* e : s.inflected()) on_curve += e->vanishing_coordinates == std::vector<int>{1} ? 1 : 0;
  std::ostringstream os;
  os << s.inflected_count() << " of " << s.entries.size() << " points inflected (" << on_curve
     << " on {x2 = 0}, jet determinant " << determinant_divisor(x, 3).determinant().to_string(std::vector<std::string>{"u", "v2"})
     << "); at order 2 the scan finds " << rank_scan(x, 2, SampleSpec{200}).inflected_count();
  o.require(s.inflected_count() == 0, "no inflected point expected; " + os.str());
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome double_point() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    o.require(double_point_check(n, n + 1, 0), "g=0, n=" + std::to_string(n));
    o.require(double_point_check(n, 2 * n + 1, 1), "g=1, n=" + std::to_string(n));
  }
  oracle::Rng rng(9);
  int negatives = 0;
  while (negatives < 200) {
    const long n = oracle::uniform(rng, 1, 10), dd = oracle::uniform(rng, 1, 60), gg = oracle::uniform(rng, 0, 20);
    if ((dd - n) * (dd - n - 1) == n * (n + 1) * gg) continue;
    o.require(!double_point_check(n, dd, gg), "random false case");
    ++negatives;
  }
  if (o.pass) o.detail = "20 true cases, 200 random false cases";
  return o;
}

Outcome rank_bookkeeping() {
  Outcome o;
  auto binom = [](int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  };
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= 10; ++k) {
      const RankProfile p = rank_profile(n, k);
      const mpz_class q_prev = binom(n + k - 1, n) - ((k - 1) * n + 1);
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(p.rank_qk_dual == q_prev + p.rank_mk, "jet sequence additivity " + at);
      o.require(p.rank_ek == (k - 1) * n + 1 + n, "E_k additivity " + at);
      o.require(p.rank_mk == binom(n + k - 1, n - 1) - n, "M_k rank " + at);
      o.require(p.rank_jet == binom(n + k, n) && p.rank_jet == p.rank_ek + p.rank_qk_dual, "jet rank " + at);
      o.require(p.rank_qk_dual >= 0 && p.rank_mk >= 0, "nonnegative " + at);
    }
  if (o.pass) o.detail = "100 profiles";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {"Segre term identity", segre_identity},
      {"degree formula consistency", degree_consistency},
      {"classical inflection counts", classical_numbers},
      {"Wronskian oracle", wronskian_oracle},
      {"balanced scrolls uninflected", balanced_uninflected},
      {"determinant divisor of (1,2) and (1,1,2)", case_one_match},
      {"hypothesis violation on (1,3)", hypothesis_violation},
      {"semibalanced (2,3) at order 3 uninflected", semibalanced},
      {"double point identity", double_point},
      {"rank bookkeeping", rank_bookkeeping},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c < 1 || c > 10) {
      std::cerr << "error: criterion must be 1..10, got " << argv[i] << '\n';
      return 1;
    }
    selected.push_back(c);
  }
  if (selected.empty())
    for (int c = 1; c <= 10; ++c) selected.push_back(c);

  bool all = true;
  for (int c : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c - 1].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c << "  " << criteria[c - 1].name << "  [" << timing
              << "]  " << o.detail << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
