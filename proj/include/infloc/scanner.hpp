#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infloc/chow.hpp"
#include "infloc/linalg.hpp"
#include "infloc/scroll.hpp"
#include "infloc/upoly.hpp"

namespace infloc {

// ---------------------------------------------------------------------------
// Wronskian weights of a rational curve

/// A squarefree factor of the chart-zero Wronskian. Linear factors carry their root.
struct WronskianFactor {
  UPoly factor;
  int multiplicity = 0;
  std::optional<mpq_class> root;
};

struct WronskianReport {
  int k = 0;
  int degree = 0;  // d: the basis spans polynomials of degree <= d
  std::vector<UPoly> basis;
  bool degenerate = false;  // identically zero Wronskian: dependent basis
  UPoly wronskian_zero;
  UPoly wronskian_infinity;
  std::vector<WronskianFactor> finite_factors;
  int weight_at_infinity = 0;
  int total_weight = 0;

  /// Weight at a rational point of chart zero (0 if not a root).
  [[nodiscard]] int weight_at(const mpq_class& u) const;
};

/// Weights of the curve u -> [p_0(u) : ... : p_k(u)] at every point, including infinity.
WronskianReport wronskian_weights(std::span<const UPoly> basis, int k);

/// {1, u, ..., u^(k-1), u^d}: the full basis of O(d) when k = d, otherwise a
/// monomial projection of the degree-d rational normal curve to P^k.
std::vector<UPoly> monomial_projection_basis(int d, int k);

/// Curve case of a decomposable scroll (n = 1) with its monomial projection basis.
WronskianReport wronskian_weights(const DecomposableScroll& curve, int k);

// ---------------------------------------------------------------------------
// Determinant divisor in the square case N = kn

struct DivisorClass {
  mpz_class l_coeff;
  mpz_class f_coeff;
  [[nodiscard]] ChowClass to_chow(int n) const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Class read off from one fiber chart.
struct ChartDivisor {
  int fiber_chart = 0;
  MPoly determinant;             // in chart (zero, fiber_chart)
  int coordinate_multiplicity = 0;  // of {x_fiber_chart = 0}, seen from another chart
  int fiber_at_infinity = 0;
  DivisorClass divisor_class;
};

struct DeterminantDivisorReport {
  bool degenerate = false;  // determinant identically zero: generic rank below kn+1
  std::vector<std::string> variables;  // of charts[0].determinant
  std::vector<ChartDivisor> charts;
  bool affine_linear = true;  // degree <= 1 in every fiber variable, every chart
  std::vector<std::pair<MPoly, int>> factors;  // squarefree decomposition in chart (zero, 0)
  DivisorClass divisor_class;

  [[nodiscard]] const MPoly& determinant() const { return charts.front().determinant; }
};

/// Requires N = kn. Throws std::logic_error if the charts disagree on the class.
DeterminantDivisorReport determinant_divisor(const DecomposableScroll& x, int k);

// ---------------------------------------------------------------------------
// Sampled rank scan

inline constexpr std::uint64_t kDefaultSeed = 20070101;

struct SampleSpec {
  int samples = 200;
  std::uint64_t seed = kDefaultSeed;
  bool structured = true;  // add the zero-pattern points at u in {0, +-1, +-2, infinity}
  unsigned threads = 0;    // 0: hardware concurrency
};

struct ScanEntry {
  ScrollPoint point;
  bool structured = false;
  int rank = 0;
  int corank = 0;  // kn + 1 - rank
  std::vector<int> vanishing_coordinates;
  std::optional<RankCertificate> certificate;  // present for inflected points
};

struct ScanReport {
  std::string scroll;
  int k = 0;
  SampleSpec spec;
  std::vector<ScanEntry> entries;  // in deterministic sample order

  [[nodiscard]] std::vector<const ScanEntry*> inflected() const;
  [[nodiscard]] std::size_t inflected_count() const;
};

/// The points rank_scan evaluates, in order; the bool marks structured points.
std::vector<std::pair<ScrollPoint, bool>> scan_points(const DecomposableScroll& x,
                                                      const SampleSpec& spec);

ScanReport rank_scan(const DecomposableScroll& x, int k, const SampleSpec& spec = {});

// ---------------------------------------------------------------------------
// Formula versus oracle

enum class Verdict { match, mismatch, hypothesis_violated, inconclusive };

std::string to_string(Verdict v);

struct CrossValidation {
  std::string scroll;
  int n = 0;
  int ambient = 0;
  int k = 0;
  int ell = 0;
  std::string route;  // "wronskian", "determinant-divisor" or "rank-scan"
  ChowClass formula_class{1};
  mpq_class formula_degree;
  std::optional<ChowClass> oracle_class;
  std::optional<mpq_class> oracle_degree;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;

  std::optional<WronskianReport> wronskian;
  std::optional<DeterminantDivisorReport> divisor;
  std::optional<ScanReport> scan;
};

/**
 * Compares the inflectional class and degree at genus 0 against an oracle:
 * Wronskian weights for curves, the determinant divisor when N = kn, and a
 * rank scan otherwise.
 *
 * For surfaces and higher, k must be floor(N/n). For curves a smaller k
 * selects the monomial projection to P^k.
 */
CrossValidation cross_validate(const DecomposableScroll& x, std::optional<int> k = std::nullopt,
                               const SampleSpec& spec = {});

}  // namespace infloc
