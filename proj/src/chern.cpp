#include "infloc/chern.hpp"

#include <stdexcept>
#include <string>

namespace infloc {

namespace {

mpz_class binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

const CoeffPoly& g_minus_one() {
  static const CoeffPoly p = CoeffPoly::g() - 1;
  return p;
}

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be positive, got " +
                                std::to_string(value));
  }
}

void require_segre_codim(int n, int j) {
  if (j < 1 || j > n) {
    throw std::out_of_range("segre term index " + std::to_string(j) + " outside 1.." +
                            std::to_string(n));
  }
}

}  // namespace

RankProfile rank_profile(int n, int k) {
  require_positive(n, "dimension n");
  require_positive(k, "jet order k");
  RankProfile r;
  r.n = n;
  r.k = k;
  r.rank_jet = binomial(n + k, n);
  r.rank_ek = mpz_class(k) * n + 1;
  r.rank_qk_dual = r.rank_jet - r.rank_ek;
  r.rank_mk = binomial(n + k - 1, n - 1) - n;
  return r;
}

ChowClass chern_curve_factor(int n, int i, FactorForm form) {
  require_positive(n, "dimension n");
  if (i < 0) throw std::invalid_argument("curve factor index must be nonnegative");
  const CoeffPoly c = CoeffPoly::d() + CoeffPoly(2L * i * n) * g_minus_one();
  const CoeffPoly f = form == FactorForm::inverse ? c : -c;
  return ChowClass::make(n, {{0, 1, 0}, {1, 0, f}});
}

ChowClass chern_line_twist(int n, int k) {
  require_positive(n, "dimension n");
  if (k < 0) throw std::invalid_argument("twist order must be nonnegative");
  return ChowClass::make(n, {{0, 1, 0}, {1, -1, CoeffPoly(-2L * k) * g_minus_one()}});
}

ChowClass total_chern_ek(int n, int k) {
  require_positive(k, "jet order k");
  ChowClass c = chern_line_twist(n, k);
  for (int i = 0; i < k; ++i) c = c * chern_curve_factor(n, i, FactorForm::direct);
  return c;
}

ChowClass segre_term(int n, int k, int j) {
  require_segre_codim(n, j);
  return total_chern_ek(n, k).inverse().graded_piece(j);
}

ChowClass segre_closed_form(int n, int k, int j) {
  require_positive(n, "dimension n");
  require_positive(k, "jet order k");
  require_segre_codim(n, j);
  const CoeffPoly fiber =
      CoeffPoly(k) * (CoeffPoly::d() + CoeffPoly(static_cast<long>(n) * (k - 1) + 2L * j) *
                                           g_minus_one());
  return ChowClass::make(n, {{j, 1, fiber}});
}

CoeffPoly curve_factor_product_coefficient(int n, int k) {
  return CoeffPoly(k) *
         (CoeffPoly::d() + CoeffPoly(static_cast<long>(n) * (k - 1)) * g_minus_one());
}

}  // namespace infloc
