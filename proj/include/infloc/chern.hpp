#pragma once

#include "infloc/chow.hpp"

namespace infloc {

/// Ranks of the bundles attached to the k-jets of a scroll of dimension n.
struct RankProfile {
  int n = 0;
  int k = 0;
  mpz_class rank_jet;      // P^k_X(L): C(n+k, n)
  mpz_class rank_ek;       // E_k: kn + 1
  mpz_class rank_qk_dual;  // Q_k^v: C(n+k, n) - (kn + 1)
  mpz_class rank_mk;       // M_k: C(n+k-1, n-1) - n
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

RankProfile rank_profile(int n, int k);

enum class FactorForm { direct, inverse };

/// Pullback of c(F^v (x) T_C^i) with F = pi_* L: 1 - (d + 2in(g-1))F, or its
/// inverse 1 + (d + 2in(g-1))F.
ChowClass chern_curve_factor(int n, int i, FactorForm form = FactorForm::inverse);

/// c(pi^* T_C^k (x) L^-1) = 1 - 2k(g-1)F - L on a scroll of dimension n.
ChowClass chern_line_twist(int n, int k);

/// c(E_k) as the product of the k direct curve factors and the line twist.
ChowClass total_chern_ek(int n, int k);

/// Codimension-j part of c(E_k)^-1, computed through the product pipeline.
ChowClass segre_term(int n, int k, int j);

/// L^j + k(d + (n(k-1) + 2j)(g-1)) L^(j-1) F, built directly.
ChowClass segre_closed_form(int n, int k, int j);

/// k(d + n(k-1)(g-1)), the fiber coefficient of the product of inverse curve factors.
CoeffPoly curve_factor_product_coefficient(int n, int k);

}  // namespace infloc
