#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infloc/linalg.hpp"
#include "infloc/mpoly.hpp"

namespace infloc {

enum class BaseChart { zero, infinity };

/**
 * A point of P(O(a_1) + ... + O(a_n)) in one of the 2n standard charts.
 *
 * In base chart zero, u = s/t; at infinity, u = t/s. The fiber chart is the
 * summand index i (0-based) whose fiber coordinate is normalized to 1; v
 * holds the other n-1 fiber coordinates in increasing summand order.
 */
struct ScrollPoint {
  BaseChart base = BaseChart::zero;
  mpq_class u;
  int fiber_chart = 0;
  std::vector<mpq_class> v;
  friend bool operator==(const ScrollPoint&, const ScrollPoint&) = default;
};

/// Section x_i * s^m * t^(a_i - m) of the tautological bundle.
struct Section {
  int summand;
  int power;
};

/**
 * The rational scroll P(O(a_1) + ... + O(a_n)) over P^1, embedded by its
 * complete tautological linear system in P^N with N = sum(a_i) + n - 1.
 */
class DecomposableScroll {
 public:
  explicit DecomposableScroll(std::vector<int> degrees);

  /// Parses comma-separated degrees such as "2,2" or "1, 3".
  static DecomposableScroll parse(std::string_view text);

  [[nodiscard]] int n() const { return static_cast<int>(degrees_.size()); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int ambient() const { return degree_ + n() - 1; }
  [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
  [[nodiscard]] const std::vector<Section>& sections() const { return sections_; }
  [[nodiscard]] bool is_balanced() const;

  /// "1,3"
  [[nodiscard]] std::string spec() const;

  void validate(const ScrollPoint& p) const;

  /// Re-expresses p in another chart, or nullopt when p lies outside it.
  [[nodiscard]] std::optional<ScrollPoint> change_chart(const ScrollPoint& p, BaseChart base,
                                                        int fiber_chart) const;

  /// Chart-independent identity of a point: chart zero when possible, then the
  /// first fiber chart containing it.
  [[nodiscard]] ScrollPoint canonical(const ScrollPoint& p) const;

  /// Summands i whose fiber coordinate x_i vanishes at p.
  [[nodiscard]] std::vector<int> vanishing_coordinates(const ScrollPoint& p) const;

 private:
  std::vector<int> degrees_;
  int degree_ = 0;
  std::vector<Section> sections_;
};

/// A reduced jet column: d^u_order / du, optionally followed by d/dv for one summand.
struct JetColumn {
  int u_order;
  std::optional<int> v_summand;
};

/// The kn+1 columns of the k-jet in a fiber chart, ordered by total derivative order.
std::vector<JetColumn> jet_columns(int n, int k, int fiber_chart);

struct JetMatrix {
  QMatrix entries;  // rows: sections; columns: jet_columns()
  int k = 0;
  ScrollPoint point;
  std::vector<JetColumn> columns;
};

JetMatrix jet_matrix(const DecomposableScroll& x, int k, const ScrollPoint& p);

/// Jet matrix over Q[u, v...]: variable 0 is u, then one variable per summand
/// other than the fiber chart, in increasing order.
Matrix<MPoly> symbolic_jet_matrix(const DecomposableScroll& x, int k, BaseChart base,
                                  int fiber_chart);

/// Names matching symbolic_jet_matrix's variables, e.g. {"u", "v2", "v3"} (1-based summands).
std::vector<std::string> chart_variable_names(int n, BaseChart base, int fiber_chart);

int jet_rank(const JetMatrix& m);

/// Dimension of the k-th osculating space: jet rank - 1.
int osculating_dim(const DecomposableScroll& x, int k, const ScrollPoint& p);

/// Whether the k-jet rank at p drops below kn+1. Requires kn <= N.
bool is_inflected(const DecomposableScroll& x, int k, const ScrollPoint& p);

}  // namespace infloc
