#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "infloc/chern.hpp"
#include "infloc/formulas.hpp"
#include "infloc/scanner.hpp"
#include "infloc/scroll.hpp"

namespace infloc::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kDegreeFormula = "(k+1)d + k(2(N+1)-(k+1)n)(g-1)";
constexpr const char* kClassFormula = "L^ell + k(d + (n(k-1) + 2 ell)(g-1)) L^(ell-1) F";

/// Everything one verb produces: a JSON document and its aligned text rendering.
struct Output {
  ordered_json inputs = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::optional<ordered_json> certificate;
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> tail;
  int status = ok;

  void row(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpz_class parse_integer(const std::string& name, const std::string& text) {
  mpz_class z;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || z.set_str(t, 10) != 0) {
    throw InputError("--" + name + " expects an integer, got \"" + text + "\"");
  }
  return z;
}

std::optional<mpz_class> optional_integer(const std::string& name, const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_integer(name, *text);
}

std::string show(const std::optional<mpz_class>& z) { return z ? z->get_str() : "formal"; }

ordered_json sourced(std::string value, const std::string& source) {
  return ordered_json{{"value", std::move(value)}, {"source", source}};
}

ordered_json chow_json(const ChowClass& c, const std::string& source) {
  ordered_json terms = ordered_json::array();
  for (int j = 0; j <= c.dim(); ++j) {
    const auto& t = c.term(j);
    if (t.l_coeff.is_zero() && t.f_coeff.is_zero()) continue;
    terms.push_back({{"codim", j}, {"L", t.l_coeff.to_string()}, {"LF", t.f_coeff.to_string()}});
  }
  return ordered_json{{"value", c.to_string()}, {"terms", terms}, {"source", source}};
}

std::string point_text(const ScrollPoint& p) {
  std::ostringstream os;
  os << (p.base == BaseChart::zero ? "zero" : "infinity") << " u=" << p.u.get_str()
     << " chart=" << p.fiber_chart << " v=(";
  for (std::size_t i = 0; i < p.v.size(); ++i) os << (i ? "," : "") << p.v[i].get_str();
  os << ')';
  return os.str();
}

ordered_json point_json(const ScrollPoint& p) {
  ordered_json v = ordered_json::array();
  for (const auto& x : p.v) v.push_back(x.get_str());
  return {{"base", p.base == BaseChart::zero ? "zero" : "infinity"},
          {"u", p.u.get_str()},
          {"fiber_chart", p.fiber_chart},
          {"v", v}};
}

ordered_json certificate_json(const RankCertificate& c) {
  ordered_json kernel = ordered_json::array();
  for (const auto& vec : c.kernel) {
    ordered_json row = ordered_json::array();
    for (const auto& x : vec) row.push_back(x.get_str());
    kernel.push_back(row);
  }
  return {{"rank", c.rank}, {"pivot_rows", c.pivot_rows}, {"pivot_cols", c.pivot_cols}, {"kernel", kernel}};
}

std::string point_key(const DecomposableScroll& x, const ScrollPoint& p) {
  const ScrollPoint c = x.canonical(p);
  std::ostringstream os;
  os << point_text(c);
  return os.str();
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

DecomposableScroll parse_scroll(const std::string& text) {
  try {
    return DecomposableScroll::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

SampleSpec sample_spec(int samples, std::uint64_t seed, unsigned threads) {
  if (samples < 0) throw InputError("--samples must be nonnegative");
  SampleSpec s;
  s.samples = samples;
  s.seed = seed;
  s.threads = threads;
  return s;
}

// ---------------------------------------------------------------------------
// Verbs

struct ClassArgs {
  int n = 0;
  int ambient = 0;
  std::optional<std::string> d, g;
};

Output do_class(const ClassArgs& a) {
  const ScrollParams p(a.n, a.ambient, optional_integer("d", a.d), optional_integer("g", a.g));
  Output o;
  o.inputs = {{"n", a.n}, {"ambient", a.ambient}, {"d", show(p.degree())}, {"g", show(p.genus())}};
  const ChowClass c = inflectional_class(p);
  const CoeffPoly deg = inflectional_degree(p);
  o.result = {{"k", p.k()},
              {"ell", p.ell()},
              {"class", chow_json(c, "segre_closed_form")},
              {"degree", sourced(deg.to_string(), "inflectional_degree")}};
  o.result["class"]["formula"] = kClassFormula;
  o.row("n", std::to_string(a.n));
  o.row("ambient", std::to_string(a.ambient));
  o.row("d", show(p.degree()));
  o.row("g", show(p.genus()));
  o.row("k", std::to_string(p.k()));
  o.row("ell", std::to_string(p.ell()));
  o.row("class", c.to_string());
  o.row("degree", deg.to_string());
  return o;
}

Output do_degree(const ClassArgs& a) {
  const ScrollParams p(a.n, a.ambient, optional_integer("d", a.d), optional_integer("g", a.g));
  Output o;
  o.inputs = {{"n", a.n}, {"ambient", a.ambient}, {"d", show(p.degree())}, {"g", show(p.genus())}};
  const CoeffPoly deg = inflectional_degree(p);
  o.result = {{"k", p.k()}, {"ell", p.ell()}, {"degree", sourced(deg.to_string(), "inflectional_degree")}};
  o.result["degree"]["formula"] = kDegreeFormula;
  o.row("k", std::to_string(p.k()));
  o.row("ell", std::to_string(p.ell()));
  o.row("degree", deg.to_string());
  return o;
}

Output do_verify(int max_n, int max_k) {
  if (max_n < 1 || max_k < 1) throw InputError("--max-n and --max-k must be positive");
  Output o;
  o.inputs = {{"max_n", max_n}, {"max_k", max_k}};
  ordered_json entries = ordered_json::array();
  int passed = 0;
  int total = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      for (int j = 1; j <= n; ++j) {
        const ChowClass lhs = segre_term(n, k, j);
        const ChowClass rhs = segre_closed_form(n, k, j);
        const bool pass = lhs == rhs;
        ++total;
        passed += pass ? 1 : 0;
        entries.push_back({{"n", n},
                           {"k", k},
                           {"j", j},
                           {"status", pass ? "PASS" : "FAIL"},
                           {"segre_term", chow_json(lhs, "segre_term")},
                           {"closed_form", chow_json(rhs, "segre_closed_form")}});
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  n=" << n << " k=" << k << " j=" << j << "  "
             << lhs.to_string();
        if (!pass) line << "  expected " << rhs.to_string();
        o.tail.push_back(line.str());
      }
    }
  }
  o.result = {{"checked", total}, {"passed", passed}, {"failed", total - passed}, {"entries", entries}};
  o.row("checked", std::to_string(total));
  o.row("passed", std::to_string(passed));
  o.row("failed", std::to_string(total - passed));
  o.tail.push_back(std::to_string(passed) + " identities PASS" +
                   (passed == total ? "" : ", " + std::to_string(total - passed) + " FAIL"));
  if (passed != total) o.status = alarm;
  return o;
}

Output do_classify(int n, int k, int ell) {
  Output o;
  o.inputs = {{"n", n}, {"k", k}, {"ell", ell}};
  if (n < 1 || k < 1) throw InputError("--n and --k must be positive");
  const Classification c = classify_uninflected(n, k, ell);
  o.row("n", std::to_string(n));
  o.row("k", std::to_string(k));
  o.row("ell", std::to_string(ell));
  o.row("ambient", std::to_string(k * n + ell - 1));
  if (const auto* u = std::get_if<UninflectedDescriptor>(&c)) {
    o.result = {{"verdict", "uninflected-candidate"},
                {"genus", u->genus},
                {"degree", u->degree},
                {"splitting", u->splitting},
                {"ambient", u->ambient},
                {"source", "classify_uninflected"}};
    o.row("verdict", "uninflected-candidate");
    o.row("genus", std::to_string(u->genus));
    o.row("degree", std::to_string(u->degree));
    o.row("splitting", "O(" + join(u->splitting) + ")");
  } else {
    o.result = {{"verdict", "necessarily-inflected"}, {"source", "classify_uninflected"}};
    o.row("verdict", "necessarily-inflected");
  }
  return o;
}

Output do_ranks(int n, int k) {
  if (n < 1 || k < 1) throw InputError("--n and --k must be positive");
  const RankProfile r = rank_profile(n, k);
  Output o;
  o.inputs = {{"n", n}, {"k", k}};
  o.result = {{"rank_jet", sourced(r.rank_jet.get_str(), "rank_profile")},
              {"rank_ek", sourced(r.rank_ek.get_str(), "rank_profile")},
              {"rank_qk_dual", sourced(r.rank_qk_dual.get_str(), "rank_profile")},
              {"rank_mk", sourced(r.rank_mk.get_str(), "rank_profile")}};
  o.row("rank P^k(L)", r.rank_jet.get_str());
  o.row("rank E_k", r.rank_ek.get_str());
  o.row("rank Q_k^v", r.rank_qk_dual.get_str());
  o.row("rank M_k", r.rank_mk.get_str());
  return o;
}

struct ScanArgs {
  std::string scroll;
  std::optional<int> k;
  int samples = SampleSpec{}.samples;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

ordered_json scan_json(const DecomposableScroll& x, const ScanReport& s, ordered_json& certs,
                       std::size_t& distinct) {
  ordered_json points = ordered_json::array();
  std::set<std::string> keys;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const ScanEntry& e = s.entries[i];
    ordered_json pj = point_json(e.point);
    pj["structured"] = e.structured;
    pj["rank"] = e.rank;
    pj["corank"] = e.corank;
    pj["vanishing"] = e.vanishing_coordinates;
    points.push_back(pj);
    if (e.certificate) {
      ordered_json cj = certificate_json(*e.certificate);
      cj["index"] = i;
      certs.push_back(cj);
      keys.insert(point_key(x, e.point));
    }
  }
  distinct = keys.size();
  return points;
}

Output do_scan(const ScanArgs& a) {
  const DecomposableScroll x = parse_scroll(a.scroll);
  const int k = a.k.value_or(x.ambient() / x.n());
  const SampleSpec spec = sample_spec(a.samples, a.seed, a.threads);
  const ScanReport s = rank_scan(x, k, spec);
  Output o;
  o.inputs = {{"scroll", x.spec()}, {"k", k}, {"samples", a.samples}, {"seed", std::to_string(a.seed)}};
  ordered_json certs = ordered_json::array();
  std::size_t distinct = 0;
  ordered_json points = scan_json(x, s, certs, distinct);
  o.result = {{"ambient", x.ambient()},
              {"expected_rank", k * x.n() + 1},
              {"points", s.entries.size()},
              {"inflected", sourced(std::to_string(s.inflected_count()), "rank_scan")},
              {"distinct_inflected", distinct},
              {"entries", points}};
  o.certificate = ordered_json{{"kind", "rank"}, {"inflected", certs}};
  o.row("scroll", x.spec());
  o.row("ambient", std::to_string(x.ambient()));
  o.row("k", std::to_string(k));
  o.row("seed", std::to_string(a.seed));
  o.row("points", std::to_string(s.entries.size()));
  o.row("inflected", std::to_string(s.inflected_count()));
  o.row("distinct", std::to_string(distinct));
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const ScanEntry& e = s.entries[i];
    if (e.corank == 0) continue;
    std::ostringstream line;
    line << "  #" << i << ' ' << point_text(e.point) << " rank=" << e.rank << " corank=" << e.corank;
    if (!e.vanishing_coordinates.empty()) line << " zero=" << join(e.vanishing_coordinates);
    o.tail.push_back(line.str());
  }
  return o;
}

std::vector<UPoly> read_basis(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open basis file " + path);
  std::vector<UPoly> basis;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream fields(line);
    std::vector<mpq_class> coeffs;
    std::string tok;
    while (fields >> tok) {
      mpz_class z;
      std::string t = tok.front() == '+' ? tok.substr(1) : tok;
      if (t.empty() || z.set_str(t, 10) != 0) {
        throw InputError(path + ":" + std::to_string(lineno) + ": malformed coefficient \"" + tok + "\"");
      }
      coeffs.emplace_back(z);
    }
    if (!coeffs.empty()) basis.emplace_back(std::move(coeffs));
  }
  if (basis.empty()) throw InputError("basis file " + path + " holds no polynomials");
  return basis;
}

struct WronskianArgs {
  std::optional<std::string> degrees;
  std::optional<std::string> basis_file;
  std::optional<int> k;
};

Output do_wronskian(const WronskianArgs& a) {
  if (a.degrees.has_value() == a.basis_file.has_value()) {
    throw InputError("wronskian needs exactly one of --degrees or --basis");
  }
  std::vector<UPoly> basis;
  int k = 0;
  Output o;
  if (a.degrees) {
    const DecomposableScroll x = parse_scroll(*a.degrees);
    if (x.n() != 1) throw InputError("--degrees must name a curve, a single degree");
    k = a.k.value_or(x.degree());
    basis = monomial_projection_basis(x.degree(), k);
    o.inputs = {{"degrees", x.spec()}, {"k", k}};
  } else {
    basis = read_basis(*a.basis_file);
    k = a.k.value_or(static_cast<int>(basis.size()) - 1);
    o.inputs = {{"basis", *a.basis_file}, {"k", k}};
  }
  const WronskianReport w = wronskian_weights(basis, k);
  ordered_json basis_json = ordered_json::array();
  for (const auto& p : w.basis) basis_json.push_back(p.to_string());
  o.inputs["basis_polynomials"] = basis_json;

  o.row("k", std::to_string(k));
  o.row("degree", std::to_string(w.degree));
  if (w.degenerate) {
    o.result = {{"degree", w.degree}, {"degenerate", true}, {"source", "wronskian_weights"}};
    o.row("degenerate", "yes: the basis is linearly dependent");
    return o;
  }
  const mpq_class expected = curve_inflection_degree(w.degree, 0, k);
  ordered_json weights = ordered_json::array();
  for (const auto& f : w.finite_factors) {
    ordered_json fj = {{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}};
    if (f.root) fj["root"] = f.root->get_str();
    weights.push_back(fj);
    o.tail.push_back("  " + (f.root ? "u=" + f.root->get_str() : "roots of " + f.factor.to_string()) +
                     "  weight " + std::to_string(f.multiplicity));
  }
  if (w.weight_at_infinity > 0) o.tail.push_back("  u=inf  weight " + std::to_string(w.weight_at_infinity));
  o.result = {{"degree", w.degree},
              {"degenerate", false},
              {"wronskian_zero", w.wronskian_zero.to_string("u")},
              {"wronskian_infinity", w.wronskian_infinity.to_string("w")},
              {"finite_factors", weights},
              {"weight_at_infinity", w.weight_at_infinity},
              {"total_weight", sourced(std::to_string(w.total_weight), "wronskian_weights")},
              {"expected", sourced(expected.get_str(), "curve_inflection_degree")}};
  o.row("W(u)", w.wronskian_zero.to_string("u"));
  o.row("W(w) at infinity", w.wronskian_infinity.to_string("w"));
  o.row("total weight", std::to_string(w.total_weight));
  o.row("(k+1)(d-k)", expected.get_str());
  return o;
}

Output do_cross_validate(const ScanArgs& a) {
  const DecomposableScroll x = parse_scroll(a.scroll);
  const SampleSpec spec = sample_spec(a.samples, a.seed, a.threads);
  const CrossValidation cv = cross_validate(x, a.k, spec);
  Output o;
  o.inputs = {{"scroll", x.spec()}, {"samples", a.samples}, {"seed", std::to_string(a.seed)}};
  if (a.k) o.inputs["k"] = *a.k;
  const std::string oracle_source = cv.route == "wronskian"             ? "wronskian_weights"
                                    : cv.route == "determinant-divisor" ? "determinant_divisor"
                                                                        : "rank_scan";
  o.result = {{"n", cv.n},
              {"ambient", cv.ambient},
              {"k", cv.k},
              {"ell", cv.ell},
              {"route", cv.route},
              {"formula_class", chow_json(cv.formula_class, "inflectional_class")},
              {"formula_degree", sourced(cv.formula_degree.get_str(), "inflectional_degree")}};
  if (cv.oracle_class) o.result["oracle_class"] = chow_json(*cv.oracle_class, oracle_source);
  if (cv.oracle_degree) o.result["oracle_degree"] = sourced(cv.oracle_degree->get_str(), oracle_source);
  o.result["verdict"] = to_string(cv.verdict);
  o.result["detail"] = cv.detail;

  o.row("scroll", cv.scroll);
  o.row("ambient", std::to_string(cv.ambient));
  o.row("k", std::to_string(cv.k));
  o.row("ell", std::to_string(cv.ell));
  o.row("route", cv.route);
  o.row("formula class", cv.formula_class.to_string());
  o.row("formula degree", cv.formula_degree.get_str());
  if (cv.oracle_class) o.row("oracle class", cv.oracle_class->to_string());
  if (cv.oracle_degree) o.row("oracle degree", cv.oracle_degree->get_str());

  if (cv.wronskian) {
    o.certificate = ordered_json{{"kind", "wronskian"},
                                 {"wronskian_zero", cv.wronskian->wronskian_zero.to_string("u")},
                                 {"wronskian_infinity", cv.wronskian->wronskian_infinity.to_string("w")},
                                 {"weight_at_infinity", cv.wronskian->weight_at_infinity}};
    o.row("W(u)", cv.wronskian->wronskian_zero.to_string("u"));
  } else if (cv.divisor) {
    const auto& d = *cv.divisor;
    ordered_json charts = ordered_json::array();
    for (const auto& c : d.charts) {
      const auto names = chart_variable_names(x.n(), BaseChart::zero, c.fiber_chart);
      charts.push_back({{"fiber_chart", c.fiber_chart},
                        {"determinant", c.determinant.to_string(names)},
                        {"coordinate_multiplicity", c.coordinate_multiplicity},
                        {"fiber_at_infinity", c.fiber_at_infinity},
                        {"L", c.divisor_class.l_coeff.get_str()},
                        {"F", c.divisor_class.f_coeff.get_str()}});
    }
    ordered_json factors = ordered_json::array();
    for (const auto& [f, m] : d.factors) factors.push_back({{"factor", f.to_string(d.variables)}, {"multiplicity", m}});
    o.certificate = ordered_json{{"kind", "determinant"},
                                 {"variables", d.variables},
                                 {"degenerate", d.degenerate},
                                 {"affine_linear", d.affine_linear},
                                 {"factors", factors},
                                 {"charts", charts}};
    o.row("determinant", d.determinant().to_string(d.variables));
  } else if (cv.scan) {
    ordered_json certs = ordered_json::array();
    std::size_t distinct = 0;
    scan_json(x, *cv.scan, certs, distinct);
    o.result["points"] = cv.scan->entries.size();
    o.result["inflected"] = sourced(std::to_string(cv.scan->inflected_count()), "rank_scan");
    o.result["distinct_inflected"] = distinct;
    o.certificate = ordered_json{{"kind", "rank"}, {"inflected", certs}};
    o.row("points", std::to_string(cv.scan->entries.size()));
    o.row("inflected", std::to_string(cv.scan->inflected_count()));
    o.row("distinct", std::to_string(distinct));
  }
  o.row("verdict", to_string(cv.verdict));
  o.row("detail", cv.detail);
  if (cv.verdict == Verdict::mismatch) o.status = alarm;
  return o;
}

void render(const std::string& verb, const Output& o, bool as_json, std::ostream& out) {
  if (as_json) {
    ordered_json doc = {{"schema", 1}, {"verb", verb}, {"inputs", o.inputs}, {"result", o.result}};
    if (o.certificate) doc["certificate"] = *o.certificate;
    out << doc.dump(2) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : o.rows) width = std::max(width, key.size());
  for (const auto& [key, value] : o.rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  for (const auto& line : o.tail) out << line << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inflectional loci of scrolls: classes, degrees and oracle checks", "infloc"};
  app.require_subcommand(1);
  bool as_json = false;

  ClassArgs class_args;
  auto* class_cmd = app.add_subcommand("class", "Inflectional class in the L, F basis");
  auto* degree_cmd = app.add_subcommand("degree", "Degree of the inflectional locus");
  for (auto* cmd : {class_cmd, degree_cmd}) {
    cmd->add_option("--n", class_args.n, "Scroll dimension")->required();
    cmd->add_option("--ambient", class_args.ambient, "Ambient projective dimension N")->required();
    cmd->add_option("--d", class_args.d, "Scroll degree (formal if omitted)");
    cmd->add_option("--g", class_args.g, "Genus of the base curve (formal if omitted)");
  }

  int max_n = 6, max_k = 6;
  auto* verify_cmd = app.add_subcommand("verify-theorem3", "Check the Segre term identity over a grid");
  verify_cmd->add_option("--max-n", max_n, "Largest dimension")->capture_default_str();
  verify_cmd->add_option("--max-k", max_k, "Largest jet order")->capture_default_str();

  int cl_n = 0, cl_k = 0, cl_ell = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Which scroll can be uninflected");
  classify_cmd->add_option("--n", cl_n, "Scroll dimension")->required();
  classify_cmd->add_option("--k", cl_k, "Jet order")->required();
  classify_cmd->add_option("--ell", cl_ell, "Expected codimension, 1..n")->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Sampled jet rank scan of a decomposable scroll");
  auto* cv_cmd = app.add_subcommand("cross-validate", "Compare the formula with an exact oracle");
  for (auto* cmd : {scan_cmd, cv_cmd}) {
    cmd->add_option("--scroll", scan_args.scroll, "Splitting degrees, e.g. \"1,2\"")->required();
    cmd->add_option("--k", scan_args.k, "Jet order (default floor(N/n))");
    cmd->add_option("--samples", scan_args.samples, "Random sample points")->capture_default_str();
    cmd->add_option("--seed", scan_args.seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--threads", scan_args.threads, "Worker threads (0: all cores)");
  }

  WronskianArgs w_args;
  auto* w_cmd = app.add_subcommand("wronskian", "Inflection weights of a rational curve");
  w_cmd->add_option("--degrees", w_args.degrees, "Degree d of a rational curve");
  w_cmd->add_option("--basis", w_args.basis_file, "File with one polynomial per line, constant term first");
  w_cmd->add_option("--k", w_args.k, "Target P^k");

  int r_n = 0, r_k = 0;
  auto* ranks_cmd = app.add_subcommand("ranks", "Ranks of the jet bundles");
  ranks_cmd->add_option("--n", r_n, "Scroll dimension")->required();
  ranks_cmd->add_option("--k", r_k, "Jet order")->required();

  for (auto* cmd : app.get_subcommands({})) cmd->add_flag("--json", as_json, "Emit one JSON document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.erase(nl);
    err << "error: " << msg << '\n';
    return invalid_input;
  }

  const CLI::App* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  try {
    Output o;
    if (cmd == class_cmd) o = do_class(class_args);
    else if (cmd == degree_cmd) o = do_degree(class_args);
    else if (cmd == verify_cmd) o = do_verify(max_n, max_k);
    else if (cmd == classify_cmd) o = do_classify(cl_n, cl_k, cl_ell);
    else if (cmd == scan_cmd) o = do_scan(scan_args);
    else if (cmd == w_cmd) o = do_wronskian(w_args);
    else if (cmd == cv_cmd) o = do_cross_validate(scan_args);
    else o = do_ranks(r_n, r_k);
    render(verb, o, as_json, out);
    return o.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return invalid_input;
}

}  // namespace infloc::cli
