#include <doctest.h>

#include <map>
#include <set>

#include "infloc/formulas.hpp"
#include "infloc/scanner.hpp"
#include "oracles.hpp"

using namespace infloc;

namespace {

const UPoly u{0, 1};

ChowClass L(int n) { return ChowClass::hyperplane(n); }
ChowClass F(int n) { return ChowClass::fiber(n); }

std::vector<UPoly> monomials(std::initializer_list<int> exps) {
  std::vector<UPoly> out;
  for (int e : exps) out.push_back(UPoly::monomial(1, e));
  return out;
}

std::vector<UPoly> reversed_basis(const std::vector<UPoly>& b, int d) {
  std::vector<UPoly> out;
  for (const auto& p : b) out.push_back(p.reversed(d));
  return out;
}

/// Random basis of k+1 polynomials of degree <= d, one of them of degree exactly d.
std::vector<UPoly> random_basis(oracle::Rng& rng, int d, int k) {
  std::vector<UPoly> out;
  for (int i = 0; i <= k; ++i) {
    std::vector<mpq_class> c;
    for (int e = 0; e <= d; ++e) c.push_back(oracle::random_rational(rng, 7, 4));
    if (i == 0 && c.back() == 0) c.back() = 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

/// All splittings a_1 <= ... <= a_n with sum <= max_d and N = kn.
std::vector<std::vector<int>> square_splittings(int max_n, int max_d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int n, int min_a, int sum) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if ((sum + n - 1) % n == 0) out.push_back(cur);
      return;
    }
    for (int a = min_a; sum + a <= max_d; ++a) {
      cur.push_back(a);
      self(self, n, a, sum + a);
      cur.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) rec(rec, n, 1, 0);
  return out;
}

ScrollPoint random_generic_point(oracle::Rng& rng, int n) {
  ScrollPoint p{BaseChart::zero, oracle::random_rational(rng), 0, {}};
  for (int i = 1; i < n; ++i) p.v.push_back(oracle::random_rational(rng, 9, 7) + mpq_class(1, 97));
  return p;
}

}  // namespace

TEST_SUITE("scanner") {

TEST_CASE("Wronskian of the twisted cubic is constant") {
  const WronskianReport w = wronskian_weights(monomials({0, 1, 2, 3}), 3);
  CHECK(w.wronskian_zero == UPoly{12});
  CHECK(w.finite_factors.empty());
  CHECK(w.weight_at_infinity == 0);
  CHECK(w.total_weight == 0);
  CHECK_FALSE(w.degenerate);
}

TEST_CASE("Wronskian weights of the monomial quartic in P^3") {
  const auto basis = monomials({0, 1, 2, 4});
  const WronskianReport w = wronskian_weights(basis, 3);
  CHECK(w.wronskian_zero == UPoly{0, 48});
  CHECK(w.wronskian_zero == oracle::wronskian(basis));
  CHECK(w.wronskian_infinity == UPoly{0, 0, 0, 48});
  CHECK(w.wronskian_infinity == oracle::wronskian(reversed_basis(basis, 4)));
  CHECK(w.weight_at(0) == 1);
  CHECK(w.weight_at(1) == 0);
  CHECK(w.weight_at_infinity == 3);
  CHECK(w.total_weight == 4);
  REQUIRE(w.finite_factors.size() == 1);
  CHECK(w.finite_factors[0].factor == u);
  CHECK(w.finite_factors[0].root.value() == 0);
  CHECK(monomial_projection_basis(4, 3) == basis);
  CHECK(wronskian_weights(DecomposableScroll({4}), 3).total_weight == 4);
}

TEST_CASE("random spanning bases carry (k+1)(d-k) inflection weight") {
  oracle::Rng rng(20070101);
  for (const auto& [d, k] : {std::pair{4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto basis = random_basis(rng, d, k);
      const WronskianReport w = wronskian_weights(basis, k);
      REQUIRE_FALSE(w.degenerate);
      CHECK(w.total_weight == (k + 1) * (d - k));
      CHECK(w.wronskian_zero == oracle::wronskian(basis));
      CHECK(w.wronskian_infinity == oracle::wronskian(reversed_basis(basis, d)));
      int finite = 0;
      for (const auto& f : w.finite_factors) finite += f.multiplicity * f.factor.degree();
      CHECK(finite == w.wronskian_zero.degree());
    }
  }
}

TEST_CASE("Wronskian edge cases") {
  CHECK(wronskian_weights(std::vector<UPoly>{UPoly{1}, u, UPoly{1, 1}, u * u}, 3).degenerate);
  CHECK_THROWS_AS(wronskian_weights(monomials({0, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(monomial_projection_basis(3, 4), std::invalid_argument);
  CHECK(monomial_projection_basis(3, 3) == monomials({0, 1, 2, 3}));
  CHECK_THROWS_AS(wronskian_weights(DecomposableScroll({1, 2}), 2), std::invalid_argument);
  // Weights of a curve with a cusp-like point: 1, u^2, u^3.
  const WronskianReport w = wronskian_weights(monomials({0, 2, 3}), 2);
  CHECK(w.weight_at(0) == 2);
  CHECK(w.total_weight == 3 * (3 - 2));
}

TEST_CASE("determinant divisor of (1,2)") {
  const DecomposableScroll x({1, 2});
  const DeterminantDivisorReport r = determinant_divisor(x, 2);
  REQUIRE_FALSE(r.degenerate);
  const MPoly v2 = MPoly::variable(2, 1);
  CHECK(r.determinant() == mpq_class(-2) * v2);
  const Matrix<MPoly> m = symbolic_jet_matrix(x, 2, BaseChart::zero, 0);
  CHECK(r.determinant() == oracle::leibniz<MPoly>(5, [&](std::size_t i, std::size_t j) { return m(i, j); }, MPoly(2)));
  CHECK(r.variables == std::vector<std::string>{"u", "v2"});
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == v2);
  CHECK(r.factors[0].second == 1);
  CHECK(r.divisor_class == DivisorClass{1, -2});
  CHECK(r.affine_linear);
  REQUIRE(r.charts.size() == 2);
  for (const auto& c : r.charts) CHECK(c.divisor_class == r.divisor_class);
  CHECK(r.divisor_class.to_chow(2) == L(2) - CoeffPoly(2) * F(2));
  CHECK(r.divisor_class.to_chow(2) == inflectional_class(ScrollParams(2, 4, mpz_class(3), mpz_class(0))));
}

TEST_CASE("determinant divisor of (1,1,2) is the plane where the third coordinate vanishes") {
  const DecomposableScroll x({1, 1, 2});
  const DeterminantDivisorReport r = determinant_divisor(x, 2);
  REQUIRE_FALSE(r.degenerate);
  const MPoly v3 = MPoly::variable(3, 2);
  REQUIRE(r.determinant().is_constant() == false);
  CHECK(r.determinant().monic() == v3);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == v3);
  CHECK(r.factors[0].second == 1);
  CHECK(r.divisor_class.to_chow(3) == L(3) - CoeffPoly(2) * F(3));
}

TEST_CASE("case (i) scrolls: determinant classes L - kF") {
  for (const auto& [degrees, k] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 2}, 2}, {{2, 3}, 3}, {{3, 4}, 4}, {{1, 1, 2}, 2}, {{2, 2, 3}, 3}}) {
    const DecomposableScroll x(degrees);
    const DeterminantDivisorReport r = determinant_divisor(x, k);
    REQUIRE_FALSE(r.degenerate);
    CHECK(r.divisor_class == DivisorClass{1, -k});
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == MPoly::variable(static_cast<std::size_t>(x.n()), static_cast<std::size_t>(x.n() - 1)));
  }
  CHECK_THROWS_AS(determinant_divisor(DecomposableScroll({2, 2}), 2), std::invalid_argument);
  CHECK_THROWS_AS(determinant_divisor(DecomposableScroll({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("oracle class equals the formula on every square scroll satisfying the generic-rank hypothesis") {
  oracle::Rng rng(77);
  std::set<std::vector<int>> degenerate;
  int matched = 0;
  for (const auto& degrees : square_splittings(3, 8)) {
    CAPTURE(degrees);
    const DecomposableScroll x(degrees);
    const int n = x.n(), k = x.ambient() / n;
    const DeterminantDivisorReport r = determinant_divisor(x, k);
    const std::size_t size = static_cast<std::size_t>(k * n + 1);

    // The symbolic determinant must agree with the numeric jet matrices.
    for (int trial = 0; trial < 3; ++trial) {
      const ScrollPoint p = random_generic_point(rng, n);
      const QMatrix jm = oracle::jet_matrix(x, k, p);
      const mpq_class det = size <= 8 ? oracle::leibniz(jm) : determinant(jm);
      std::vector<mpq_class> at{p.u};
      at.insert(at.end(), p.v.begin(), p.v.end());
      CHECK(r.determinant().evaluate(at) == det);
      if (r.degenerate) CHECK(rank(jm) < size);
    }

    if (r.degenerate) {
      degenerate.insert(degrees);
      CHECK(cross_validate(x).verdict == Verdict::hypothesis_violated);
      continue;
    }
    CHECK(r.affine_linear);
    if (n > 1) {
      const ScrollParams params(n, x.ambient(), mpz_class(x.degree()), mpz_class(0));
      CHECK(r.divisor_class.to_chow(n) == inflectional_class(params));
    }
    CHECK(cross_validate(x).verdict == Verdict::match);
    ++matched;
  }
  CHECK(matched > 0);
  const std::set<std::vector<int>> expected_degenerate{{1, 4}, {1, 6}, {2, 5}, {1, 1, 5}, {1, 2, 4}, {1, 3, 3}};
  CHECK(degenerate == expected_degenerate);
  // The survivors are exactly the splittings with degrees in {k-1, k}.
  for (const auto& degrees : square_splittings(3, 8)) {
    const DecomposableScroll x(degrees);
    const int k = x.ambient() / x.n();
    bool near_balanced = true;
    for (int a : degrees) near_balanced = near_balanced && (a == k || a == k - 1);
    CHECK((degenerate.count(degrees) == 0) == (near_balanced || x.n() == 1));
  }
}

TEST_CASE("(1,4) fails the generic-rank hypothesis everywhere") {
  // v * (s - u t)^4 has vanishing 3-jet at the point with base coordinate u.
  const DecomposableScroll x({1, 4});
  oracle::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const ScrollPoint p = random_generic_point(rng, 2);
    CHECK(oracle::minor_rank(oracle::jet_matrix(x, 3, p)) <= 6);
  }
}

TEST_CASE("balanced scrolls have no inflected sample") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const DecomposableScroll x(std::vector<int>(static_cast<std::size_t>(n), k));
      const ScanReport s = rank_scan(x, k);
      CHECK(s.entries.size() >= 200);
      CHECK(s.inflected_count() == 0);
    }
  }
}

TEST_CASE("rank scan of (1,3) flags exactly the directrix") {
  const DecomposableScroll x({1, 3});
  const ScanReport s = rank_scan(x, 2, SampleSpec{400});
  std::size_t directrix = 0, generic = 0;
  for (const auto& e : s.entries) {
    const bool on_directrix = e.vanishing_coordinates == std::vector<int>{1};
    CHECK(e.rank == oracle::minor_rank(oracle::jet_matrix(x, 2, e.point)));
    CHECK(e.corank == (on_directrix ? 1 : 0));
    CHECK(e.certificate.has_value() == on_directrix);
    if (e.certificate) CHECK(verify_certificate(jet_matrix(x, 2, e.point).entries, *e.certificate));
    (on_directrix ? directrix : generic) += 1;
  }
  CHECK(directrix >= 50);
  CHECK(generic >= 50);
  CHECK(s.inflected_count() == directrix);
}

TEST_CASE("semibalanced scrolls") {
  for (int k = 1; k <= 3; ++k) {
    const DecomposableScroll x({k, k + 1});
    // Uninflected at order k.
    CHECK(rank_scan(x, k).inflected_count() == 0);
    // At order k+1 the scroll is in case (i): inflected exactly where x_2 = 0.
    const ScanReport s = rank_scan(x, k + 1);
    for (const auto& e : s.entries) CHECK((e.corank > 0) == (e.vanishing_coordinates == std::vector<int>{1}));
    CHECK(s.inflected_count() > 0);
  }
}

TEST_CASE("sampling is deterministic and independent of the thread count") {
  const DecomposableScroll x({1, 3});
  SampleSpec one_thread{150, 9, true, 1}, many{150, 9, true, 4};
  const ScanReport a = rank_scan(x, 2, one_thread), b = rank_scan(x, 2, many);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].point == b.entries[i].point);
    CHECK(a.entries[i].rank == b.entries[i].rank);
  }
  SampleSpec other = one_thread;
  other.seed = 10;
  CHECK_FALSE(scan_points(x, other) == scan_points(x, one_thread));
  SampleSpec bare{0, 1, false, 1};
  CHECK(scan_points(x, bare).empty());
  CHECK_THROWS_AS(rank_scan(x, 3), std::invalid_argument);
  CHECK_THROWS_AS(rank_scan(x, 2, SampleSpec{-1}), std::invalid_argument);
}

TEST_CASE("structured points cover every chart and zero pattern") {
  const DecomposableScroll x({1, 2, 2});
  SampleSpec s{0, 1, true, 1};
  const auto pts = scan_points(x, s);
  std::map<std::pair<int, int>, std::set<std::vector<bool>>> seen;
  for (const auto& [p, structured] : pts) {
    CHECK(structured);
    std::vector<bool> zeros;
    for (const auto& v : p.v) zeros.push_back(v == 0);
    seen[{static_cast<int>(p.base), p.fiber_chart}].insert(zeros);
  }
  CHECK(seen.size() == 6);
  for (const auto& [chart, patterns] : seen) CHECK(patterns.size() == 4);
}

TEST_CASE("cross-validation verdicts") {
  const CrossValidation a = cross_validate(DecomposableScroll({1, 2}));
  CHECK(a.verdict == Verdict::match);
  CHECK(a.route == "determinant-divisor");
  CHECK(a.oracle_class.value() == L(2) - CoeffPoly(2) * F(2));
  CHECK(a.formula_class == L(2) - CoeffPoly(2) * F(2));

  const CrossValidation c = cross_validate(DecomposableScroll({4}), 3);
  CHECK(c.verdict == Verdict::match);
  CHECK(c.route == "wronskian");
  CHECK(c.oracle_degree.value() == 4);
  CHECK(c.formula_degree == 4);

  const CrossValidation h = cross_validate(DecomposableScroll({1, 3}), 2);
  CHECK(h.verdict == Verdict::hypothesis_violated);
  CHECK(h.route == "rank-scan");
  CHECK(h.formula_degree == 0);

  const CrossValidation b = cross_validate(DecomposableScroll({2, 2}));
  CHECK(b.verdict == Verdict::match);
  CHECK(b.formula_degree == 0);
  CHECK(b.scan->inflected_count() == 0);

  CHECK(cross_validate(DecomposableScroll({1, 2, 2})).verdict == Verdict::inconclusive);
  CHECK_THROWS_AS(cross_validate(DecomposableScroll({1, 2}), 1), std::invalid_argument);
  CHECK(to_string(Verdict::hypothesis_violated) == "HYPOTHESIS-VIOLATED");
}

}  // TEST_SUITE
