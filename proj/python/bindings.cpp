#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "infloc/chern.hpp"
#include "infloc/formulas.hpp"
#include "infloc/scanner.hpp"
#include "infloc/scroll.hpp"

namespace py = pybind11;
using namespace infloc;

namespace {

py::object to_py(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

/// Accepts int, Fraction or anything whose str() is "a" or "a/b".
mpq_class to_mpq(const py::handle& h) {
  mpq_class q;
  if (q.set_str(py::str(h).cast<std::string>(), 10) != 0 || q.get_den() == 0) {
    throw py::value_error("not a rational number: " + py::repr(h).cast<std::string>());
  }
  q.canonicalize();
  return q;
}

std::optional<mpz_class> to_mpz(const std::optional<py::int_>& h) {
  if (!h) return std::nullopt;
  return mpz_class(py::str(*h).cast<std::string>());
}

/// An exact constant as an int or Fraction, otherwise the polynomial text.
py::object poly_value(const CoeffPoly& p) {
  if (p.is_constant()) return to_py(p.constant_term());
  return py::str(p.to_string());
}

DecomposableScroll scroll_of(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return DecomposableScroll::parse(h.cast<std::string>());
  return DecomposableScroll(h.cast<std::vector<int>>());
}

std::vector<UPoly> basis_of(const std::vector<std::vector<py::object>>& rows) {
  std::vector<UPoly> out;
  for (const auto& row : rows) {
    std::vector<mpq_class> c;
    for (const auto& x : row) c.push_back(to_mpq(x));
    out.emplace_back(std::move(c));
  }
  return out;
}

py::dict point_dict(const ScrollPoint& p) {
  py::dict d;
  d["base"] = p.base == BaseChart::zero ? "zero" : "infinity";
  d["u"] = to_py(p.u);
  d["fiber_chart"] = p.fiber_chart;
  py::list v;
  for (const auto& x : p.v) v.append(to_py(x));
  d["v"] = v;
  return d;
}

ScrollPoint point_of(const DecomposableScroll& x, const py::object& u, const std::vector<py::object>& v,
                     int fiber_chart, bool at_infinity) {
  ScrollPoint p;
  p.base = at_infinity ? BaseChart::infinity : BaseChart::zero;
  p.u = to_mpq(u);
  p.fiber_chart = fiber_chart;
  for (const auto& c : v) p.v.push_back(to_mpq(c));
  x.validate(p);
  return p;
}

py::dict wronskian_dict(const WronskianReport& r) {
  py::dict d;
  d["k"] = r.k;
  d["degenerate"] = r.degenerate;
  d["wronskian"] = r.wronskian_zero.to_string();
  py::list factors;
  for (const auto& f : r.finite_factors) {
    py::dict e;
    e["factor"] = f.factor.to_string();
    e["multiplicity"] = f.multiplicity;
    e["root"] = f.root ? to_py(*f.root) : py::none();
    factors.append(e);
  }
  d["finite_factors"] = factors;
  d["weight_at_infinity"] = r.weight_at_infinity;
  d["total_weight"] = r.total_weight;
  return d;
}

py::dict scan_dict(const ScanReport& r) {
  py::dict d;
  d["scroll"] = r.scroll;
  d["k"] = r.k;
  d["seed"] = r.spec.seed;
  d["points"] = r.entries.size();
  py::list inflected;
  for (const ScanEntry* e : r.inflected()) {
    py::dict p = point_dict(e->point);
    p["structured"] = e->structured;
    p["rank"] = e->rank;
    p["corank"] = e->corank;
    p["vanishing_coordinates"] = e->vanishing_coordinates;
    inflected.append(p);
  }
  d["inflected"] = inflected;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inflectional loci of scrolls over curves";
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def(
      "inflectional_class",
      [](int n, int ambient, std::optional<py::int_> d, std::optional<py::int_> g) {
        return inflectional_class(ScrollParams(n, ambient, to_mpz(d), to_mpz(g))).to_string();
      },
      py::arg("n"), py::arg("ambient"), py::arg("d") = py::none(), py::arg("g") = py::none(),
      "Class of the inflectional locus in terms of L and F.");

  m.def(
      "inflectional_degree",
      [](int n, int ambient, std::optional<py::int_> d, std::optional<py::int_> g) {
        return poly_value(inflectional_degree(ScrollParams(n, ambient, to_mpz(d), to_mpz(g))));
      },
      py::arg("n"), py::arg("ambient"), py::arg("d") = py::none(), py::arg("g") = py::none(),
      "Degree of the inflectional locus: an int when d and g are given, else a polynomial string.");

  m.def(
      "segre_term", [](int n, int k, int j) { return segre_term(n, k, j).to_string(); },
      py::arg("n"), py::arg("k"), py::arg("j"), "Codimension j part of the inverse Chern class of E_k.");

  m.def(
      "rank_profile",
      [](int n, int k) {
        const RankProfile r = rank_profile(n, k);
        py::dict d;
        d["jet"] = to_py(r.rank_jet);
        d["e_k"] = to_py(r.rank_ek);
        d["q_k_dual"] = to_py(r.rank_qk_dual);
        d["m_k"] = to_py(r.rank_mk);
        return d;
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "classify",
      [](int n, int k, int ell) -> py::object {
        const Classification c = classify_uninflected(n, k, ell);
        const auto* u = std::get_if<UninflectedDescriptor>(&c);
        if (!u) return py::none();
        py::dict d;
        d["genus"] = u->genus;
        d["degree"] = u->degree;
        d["splitting"] = u->splitting;
        d["ambient"] = u->ambient;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("ell"),
      "The candidate uninflected scroll, or None when every such scroll is inflected.");

  m.def(
      "double_point_check",
      [](const py::int_& n, const py::int_& d, const py::int_& g) {
        return double_point_check(*to_mpz(n), *to_mpz(d), *to_mpz(g));
      },
      py::arg("n"), py::arg("d"), py::arg("g"));

  m.def(
      "wronskian",
      [](const std::vector<std::vector<py::object>>& basis, int k) {
        const auto b = basis_of(basis);
        return wronskian_dict(wronskian_weights(b, k));
      },
      py::arg("basis"), py::arg("k"),
      "Inflection weights of u -> [p_0 : ... : p_k]; each polynomial is a coefficient list, constant first.");

  m.def(
      "curve_wronskian",
      [](int d, int k) { return wronskian_dict(wronskian_weights(DecomposableScroll({d}), k)); },
      py::arg("d"), py::arg("k"), "Inflection weights of the monomial projection of the degree d rational curve.");

  m.def(
      "is_inflected",
      [](const py::object& scroll, int k, const py::object& u, const std::vector<py::object>& v,
         int fiber_chart, bool at_infinity) {
        const DecomposableScroll x = scroll_of(scroll);
        return is_inflected(x, k, point_of(x, u, v, fiber_chart, at_infinity));
      },
      py::arg("scroll"), py::arg("k"), py::arg("u"), py::arg("v"), py::arg("fiber_chart") = 0,
      py::arg("at_infinity") = false);

  m.def(
      "determinant_divisor",
      [](const py::object& scroll, int k) {
        const DecomposableScroll x = scroll_of(scroll);
        const DeterminantDivisorReport r = determinant_divisor(x, k);
        py::dict d;
        d["degenerate"] = r.degenerate;
        if (!r.degenerate) {
          d["determinant"] = r.determinant().to_string(r.variables);
          d["class"] = r.divisor_class.to_chow(x.n()).to_string();
        }
        return d;
      },
      py::arg("scroll"), py::arg("k"));

  m.def(
      "rank_scan",
      [](const py::object& scroll, int k, int samples, std::uint64_t seed, bool structured,
         unsigned threads) {
        const SampleSpec spec{samples, seed, structured, threads};
        ScanReport r;
        {
          py::gil_scoped_release release;
          r = rank_scan(scroll_of(scroll), k, spec);
        }
        return scan_dict(r);
      },
      py::arg("scroll"), py::arg("k"), py::arg("samples") = 200, py::arg("seed") = kDefaultSeed,
      py::arg("structured") = true, py::arg("threads") = 0);

  m.def(
      "cross_validate",
      [](const py::object& scroll, std::optional<int> k, int samples, std::uint64_t seed) {
        const DecomposableScroll x = scroll_of(scroll);
        CrossValidation cv;
        {
          py::gil_scoped_release release;
          cv = cross_validate(x, k, SampleSpec{samples, seed, true, 0});
        }
        py::dict d;
        d["scroll"] = cv.scroll;
        d["k"] = cv.k;
        d["route"] = cv.route;
        d["formula_class"] = cv.formula_class.to_string();
        d["formula_degree"] = to_py(cv.formula_degree);
        d["oracle_class"] = cv.oracle_class ? py::object(py::str(cv.oracle_class->to_string())) : py::none();
        d["oracle_degree"] = cv.oracle_degree ? to_py(*cv.oracle_degree) : py::none();
        d["verdict"] = to_string(cv.verdict);
        d["detail"] = cv.detail;
        return d;
      },
      py::arg("scroll"), py::arg("k") = py::none(), py::arg("samples") = 200,
      py::arg("seed") = kDefaultSeed);
}
