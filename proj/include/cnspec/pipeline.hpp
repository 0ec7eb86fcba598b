#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cnspec/classify.hpp"
#include "cnspec/error.hpp"
#include "cnspec/formulas.hpp"
#include "cnspec/graph.hpp"
#include "cnspec/group.hpp"
#include "cnspec/group_spec.hpp"
#include "cnspec/jacobi.hpp"
#include "cnspec/spectrum.hpp"

namespace cnspec {

enum class Method { Exact, Numeric, Both };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Numeric: return "numeric";
    case Method::Both: return "both";
  }
  return "";
}

struct PipelineOptions {
  Method method = Method::Both;
  CnMode mode = CnMode::AllPairs;
  JacobiOptions jacobi;
  double eigenvalue_tolerance = 1e-8;  // per sorted eigenvalue, numeric vs exact
  double energy_tolerance = 1e-6;      // relative, numeric vs exact energy
};

/// A disagreement between two routes that should agree identically.
struct RouteMismatch {
  std::string check;
  std::string detail;
};

struct MatrixResult {
  std::optional<ExactSpectrum> exact;  // structural, or certified when no decomposition exists
  std::optional<NumericSpectrum> numeric;
  std::optional<IntegralityCertificate> certificate;
  std::optional<Rational> energy;
  std::optional<double> energy_float;
  double max_deviation = 0.0;  // numeric vs exact, per sorted eigenvalue
};

struct GraphAnalysis {
  std::size_t vertex_count = 0;
  std::optional<CliqueDecomposition> decomposition;
  Rational delta;
  MatrixResult cnl, cnsl;
  EnergyReport report;
  Verdict verdict;
  std::vector<RouteMismatch> mismatches;
};

namespace pipeline_detail {

inline double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

inline ExactSpectrum from_certificate(const IntegralityCertificate& c) {
  ExactSpectrum s;
  for (auto [v, k] : c.witness) s.pairs.emplace_back(Rational(v), k);
  return s;
}

inline bool all_integer(const ExactSpectrum& s) {
  return std::all_of(s.pairs.begin(), s.pairs.end(), [](const auto& p) { return p.first.get_den() == 1; });
}

inline void run_numeric(const char* name, const IntMatrix& m, const PipelineOptions& opt, MatrixResult& out,
                        std::vector<RouteMismatch>& mismatches) {
  out.numeric = numeric_spectrum(m, opt.jacobi);
  out.certificate = certify_integral(m, *out.numeric);
  if (out.exact) {
    out.max_deviation = max_deviation(out.numeric->values, out.exact->expanded());
    if (!(out.max_deviation <= opt.eigenvalue_tolerance)) {
      std::ostringstream os;
      os << name << " numeric spectrum deviates from exact by " << out.max_deviation;
      mismatches.push_back({std::string(name) + "-numeric", os.str()});
    }
    if (out.certificate->integral && from_certificate(*out.certificate) != *out.exact) {
      mismatches.push_back({std::string(name) + "-certified",
                            std::string(name) + " certified spectrum " + to_string(from_certificate(*out.certificate)) +
                                " differs from structural " + to_string(*out.exact)});
    }
  } else if (out.certificate->integral) {
    out.exact = from_certificate(*out.certificate);
  }
}

}  // namespace pipeline_detail

/// Method::Exact needs a clique union and throws NotCliqueUnion otherwise.
/// The numeric route builds the CN matrices, runs Jacobi and certifies
/// integrality exactly.
inline GraphAnalysis analyze_graph(const CommutingGraph& g, const PipelineOptions& opt = {}) {
  using namespace pipeline_detail;
  GraphAnalysis a;
  a.vertex_count = g.vertex_count();
  a.decomposition = clique_decomposition(g);
  if (opt.method == Method::Exact && !a.decomposition)
    throw Error(ErrorKind::NotCliqueUnion, "graph is not a disjoint union of complete graphs; use --method numeric");
  // With Method::Both a non-clique-union graph takes the numeric route alone.
  const bool want_exact = opt.method != Method::Numeric && a.decomposition;
  const bool want_numeric = opt.method != Method::Exact;
  if (want_exact) {
    auto s = exact_spectrum_clique_union(*a.decomposition);
    a.cnl.exact = std::move(s.cnl);
    a.cnsl.exact = std::move(s.cnsl);
    a.delta = delta(*a.decomposition);
  }
  if (want_numeric) {
    const auto mats = cnrs_cnl_cnsl(cn_matrix(g, opt.mode));
    const Rational d = delta(mats.cnrs);
    if (want_exact && d != a.delta)
      a.mismatches.push_back({"delta", "CNRS trace gives " + to_string(d) + ", decomposition gives " + to_string(a.delta)});
    a.delta = d;
    run_numeric("cnl", mats.cnl, opt, a.cnl, a.mismatches);
    run_numeric("cnsl", mats.cnsl, opt, a.cnsl, a.mismatches);
  }
  const double delta_f = a.delta.get_d();
  for (MatrixResult* m : {&a.cnl, &a.cnsl}) {
    if (m->exact) m->energy = energy(*m->exact, a.delta);
    if (m->numeric) {
      m->energy_float = energy(*m->numeric, delta_f);
      if (m->energy) {
        const double e = m->energy->get_d();
        if (std::fabs(*m->energy_float - e) > opt.energy_tolerance * std::max(1.0, std::fabs(e)))
          a.mismatches.push_back({m == &a.cnl ? "cnl-energy" : "cnsl-energy",
                                  "numeric energy " + std::to_string(*m->energy_float) + " vs exact " + to_string(*m->energy)});
      }
    }
  }
  a.report.vertex_count = a.vertex_count;
  a.report.delta = a.delta;
  a.report.le_cn = a.cnl.energy;
  a.report.le_plus_cn = a.cnsl.energy;
  a.report.le_cn_float = a.cnl.energy_float;
  a.report.le_plus_cn_float = a.cnsl.energy_float;
  // Certificates prove integrality from the matrix; without them the exact
  // spectrum is inspected directly.
  a.report.cnl_integral = a.cnl.certificate ? a.cnl.certificate->integral : all_integer(*a.cnl.exact);
  a.report.cnsl_integral = a.cnsl.certificate ? a.cnsl.certificate->integral : all_integer(*a.cnsl.exact);
  a.verdict = classify(a.report);
  return a;
}

// ---------------------------------------------------------------------------
// Group instances

/// Closed-form route for a group spec, plus the central-quotient hypothesis
/// the chosen theorem relies on (if any).
struct FormulaRoute {
  FamilyResult result;
  std::optional<QuotientTarget> quotient;
};

namespace pipeline_detail {

inline long abelian_order(const std::vector<std::uint32_t>& a) {
  long n = 1;
  for (auto r : a) n *= static_cast<long>(r);
  return n;
}

inline std::vector<long> centralizer_sizes(const GroupTable& g) {
  std::vector<long> sizes;
  for (const auto& c : distinct_centralizers(g)) sizes.push_back(static_cast<long>(c.size));
  return sizes;
}

}  // namespace pipeline_detail

/// nullopt when no closed form covers the group.
inline std::optional<FormulaRoute> formula_route(const GroupSpec& spec) {
  using pipeline_detail::abelian_order;
  using T = QuotientTarget;
  if (auto* d = spec.get<QuasidihedralSpec>()) return FormulaRoute{eval_qd(d->n), std::nullopt};
  if (auto* d = spec.get<SL2Spec>()) {
    auto pp = prime_power(d->q);
    if (pp && pp->first == 2 && pp->second >= 2) return FormulaRoute{eval_psl(pp->second), std::nullopt};
    return std::nullopt;
  }
  if (auto* d = spec.get<GL2Spec>()) return FormulaRoute{eval_gl(d->q), std::nullopt};
  if (auto* d = spec.get<HanakiNuSpec>()) return FormulaRoute{eval_hanaki_nu(d->n), std::nullopt};
  if (auto* d = spec.get<HanakiPSpec>()) {
    if (d->n == 1) return FormulaRoute{eval_corollary(Corollary::OrderP3, d->p), T::zpzp(d->p)};
    return FormulaRoute{eval_hanaki_p(d->p, d->n), std::nullopt};
  }
  if (spec.get<Sz2Spec>()) return FormulaRoute{eval_sz2_quotient(1), T::sz2()};
  if (auto* d = spec.get<DihedralSpec>()) {
    const long m = d->m;
    return FormulaRoute{eval_corollary(Corollary::Dihedral, m), T::d2m(m % 2 ? m : m / 2)};
  }
  if (auto* d = spec.get<DicyclicSpec>()) {
    if (d->n < 2) return std::nullopt;
    return FormulaRoute{eval_corollary(Corollary::Dicyclic, d->n), T::d2m(d->n)};
  }
  if (auto* d = spec.get<MetacyclicSpec>()) {
    if (d->m < 3) return std::nullopt;
    const long m = d->m;
    return FormulaRoute{eval_corollary(Corollary::Metacyclic, m, d->n), T::d2m(m % 2 ? m : m / 2)};
  }
  if (auto* d = spec.get<U6nSpec>()) return FormulaRoute{eval_corollary(Corollary::U6n, d->n), T::d2m(3)};
  if (auto* d = spec.get<DirectProductSpec>()) {
    const long a = abelian_order(d->abelian);
    const GroupSpec& in = *d->inner;
    if (in.get<Sz2Spec>()) return FormulaRoute{eval_sz2_quotient(a), T::sz2()};
    if (auto* h = in.get<HanakiPSpec>(); h && h->n == 1)
      return FormulaRoute{eval_zpzp_quotient(h->p, static_cast<long>(h->p) * a), T::zpzp(h->p)};
    if (auto* h = in.get<DihedralSpec>()) {
      const long m = h->m;
      return m % 2 ? FormulaRoute{eval_d2m_quotient(m, a), T::d2m(m)}
                   : FormulaRoute{eval_d2m_quotient(m / 2, 2 * a), T::d2m(m / 2)};
    }
    if (auto* h = in.get<DicyclicSpec>(); h && h->n >= 2) return FormulaRoute{eval_d2m_quotient(h->n, 2 * a), T::d2m(h->n)};
    if (auto* h = in.get<U6nSpec>()) return FormulaRoute{eval_d2m_quotient(3, h->n * a), T::d2m(3)};
    if (auto* h = in.get<MetacyclicSpec>(); h && h->m >= 3) {
      const long m = h->m, n = h->n;
      return m % 2 ? FormulaRoute{eval_d2m_quotient(m, n * a), T::d2m(m)}
                   : FormulaRoute{eval_d2m_quotient(m / 2, 2 * n * a), T::d2m(m / 2)};
    }
    // Any other AC inner group: the product recipe over its own centralizers.
    const GroupTable inner = build_family(in);
    if (is_abelian(inner) || !is_ac(inner)) return std::nullopt;
    return FormulaRoute{eval_ac_product(pipeline_detail::centralizer_sizes(inner), static_cast<long>(center(inner).count()), a),
                        std::nullopt};
  }
  return std::nullopt;
}

// Realizations of the central-quotient theorems as direct products.

inline GroupSpec realize_sz2(long z) {
  if (z < 1) throw Error(ErrorKind::InvalidParams, "z must be >= 1");
  return z == 1 ? GroupSpec(Sz2Spec{}) : product(Sz2Spec{}, {static_cast<std::uint32_t>(z)});
}

/// Heisenberg group of order p^3 (center of order p) times Z_{z/p}.
inline GroupSpec realize_zpzp(long p, long z) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (z < 1) throw Error(ErrorKind::InvalidParams, "z must be >= 1");
  if (z % p != 0)
    throw Error(ErrorKind::NotConstructible, "no direct-product realization with quotient Z_p x Z_p and |Z| = " +
                                                 std::to_string(z) + " (needs p | z)");
  const GroupSpec h = HanakiPSpec{static_cast<std::uint32_t>(p), 1};
  return z == p ? h : product(h, {static_cast<std::uint32_t>(z / p)});
}

/// D_2m x Z_z for odd m, D_4m x Z_{z/2} for even m and even z.
inline GroupSpec realize_d2m(long m, long z) {
  if (m < 2 || z < 1) throw Error(ErrorKind::InvalidParams, "m >= 2 and z >= 1 required");
  GroupSpec base = DihedralSpec{0};
  long rest = z;
  if (m % 2 == 1) {
    base = DihedralSpec{static_cast<std::uint32_t>(m)};
  } else if (z % 2 == 0) {
    base = DihedralSpec{static_cast<std::uint32_t>(2 * m)};
    rest = z / 2;
  } else {
    throw Error(ErrorKind::NotConstructible, "no direct-product realization with quotient D_" + std::to_string(2 * m) +
                                                 " and odd |Z| = " + std::to_string(z));
  }
  return rest == 1 ? base : product(base, {static_cast<std::uint32_t>(rest)});
}

struct InstanceResult {
  explicit InstanceResult(GroupSpec s) : spec(std::move(s)), name(display_name(spec)) {}

  GroupSpec spec;
  std::string name;
  std::size_t order = 0;
  std::size_t center_size = 0;
  bool ac = false;
  GraphAnalysis analysis;
  std::optional<FamilyResult> formula;
  std::optional<FamilyResult> ac_recipe;
  std::optional<QuotientTarget> quotient;
  std::optional<bool> quotient_ok;
  std::optional<AssertedVerdict> asserted;
  std::vector<RouteMismatch> mismatches;
  std::vector<VerdictMismatch> verdict_mismatches;

  /// Family tag and parameters under which the instance is classified.
  std::string family() const { return formula ? formula->source : family_tag(spec); }
  Params params() const { return formula ? formula->params : Params{}; }

  std::size_t unexplained() const {
    std::size_t n = mismatches.size() + analysis.mismatches.size();
    if (formula)
      for (const auto& d : formula->discrepancies) n += !is_explained(d);
    for (const auto& v : verdict_mismatches) n += !v.explained;
    return n;
  }
  bool ok() const { return unexplained() == 0; }
};

namespace pipeline_detail {

inline void compare_family(const char* route, const FamilyResult& f, const GraphAnalysis& a, std::vector<RouteMismatch>& out) {
  const std::string r(route);
  if (a.cnl.exact && f.cnl != *a.cnl.exact)
    out.push_back({r + "-cnl", r + " CNL " + to_string(f.cnl) + " vs computed " + to_string(*a.cnl.exact)});
  if (a.cnsl.exact && f.cnsl != *a.cnsl.exact)
    out.push_back({r + "-cnsl", r + " CNSL " + to_string(f.cnsl) + " vs computed " + to_string(*a.cnsl.exact)});
  if (f.vertex_count != a.vertex_count)
    out.push_back({r + "-vertices", r + " |V| = " + std::to_string(f.vertex_count) + " vs " + std::to_string(a.vertex_count)});
  if (f.delta != a.delta) out.push_back({r + "-delta", r + " delta " + to_string(f.delta) + " vs " + to_string(a.delta)});
  if (a.cnl.energy && f.le_cn != *a.cnl.energy)
    out.push_back({r + "-le_cn", r + " LE " + to_string(f.le_cn) + " vs " + to_string(*a.cnl.energy)});
  if (a.cnsl.energy && f.le_plus_cn != *a.cnsl.energy)
    out.push_back({r + "-le_plus_cn", r + " LE+ " + to_string(f.le_plus_cn) + " vs " + to_string(*a.cnsl.energy)});
}

}  // namespace pipeline_detail

/// Construct, build the commuting graph, run the requested routes and the
/// closed-form route, and compare everything.
inline InstanceResult run_instance(const GroupSpec& spec, const GroupTable& g, const PipelineOptions& opt = {}) {
  InstanceResult r(spec);
  r.order = g.order();
  r.center_size = center(g).count();
  r.ac = is_ac(g);
  r.analysis = analyze_graph(commuting_graph(g), opt);
  if (r.ac) {
    r.ac_recipe = eval_ac_general(pipeline_detail::centralizer_sizes(g), static_cast<long>(r.center_size));
    pipeline_detail::compare_family("ac-recipe", *r.ac_recipe, r.analysis, r.mismatches);
  }
  if (auto route = formula_route(spec)) {
    r.formula = std::move(route->result);
    r.quotient = route->quotient;
    pipeline_detail::compare_family("formula", *r.formula, r.analysis, r.mismatches);
    if (r.quotient) {
      r.quotient_ok = quotient_matches(g, *r.quotient);
      if (!*r.quotient_ok) r.mismatches.push_back({"quotient", "central quotient does not match the theorem's hypothesis"});
    }
  }
  try {
    r.asserted = asserted_verdict(r.family(), r.params());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfDomain) throw;
  }
  if (r.asserted) r.verdict_mismatches = compare_verdict(r.family(), r.params(), r.analysis.verdict, *r.asserted);
  return r;
}

inline InstanceResult run_instance(const GroupSpec& spec, const PipelineOptions& opt = {}) {
  return run_instance(spec, build_family(spec), opt);
}

// ---------------------------------------------------------------------------
// Output

inline nlohmann::ordered_json decomposition_json(const CliqueDecomposition& d) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (auto [m, l] : d.parts) parts.push_back({m, l});
  return parts;
}

inline nlohmann::ordered_json matrix_json(const char* name, const MatrixResult& m, const Rational& delta) {
  nlohmann::ordered_json out = {{"matrix", name}};
  if (m.exact) out["exact"] = spectrum_json(*m.exact);
  if (m.numeric) {
    out["numeric"] = m.numeric->values;
    out["residual"] = m.numeric->residual;
    out["sweeps"] = m.numeric->sweeps;
  }
  nlohmann::ordered_json e = nlohmann::ordered_json::object();
  if (m.energy) e["exact"] = rational_json(*m.energy);
  if (m.energy_float) e["float"] = *m.energy_float;
  out["energy"] = e;
  out["delta"] = rational_json(delta);
  if (m.certificate) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (auto [v, k] : m.certificate->witness) w.push_back({v, k});
    out["certificate"] = {{"integral", m.certificate->integral}, {"witness", w}};
  }
  return out;
}

inline nlohmann::ordered_json to_json(const RouteMismatch& m) { return {{"check", m.check}, {"detail", m.detail}}; }

inline nlohmann::ordered_json to_json(const GraphAnalysis& a) {
  nlohmann::ordered_json out = {{"vertex_count", a.vertex_count}};
  out["decomposition"] = a.decomposition ? decomposition_json(*a.decomposition) : nlohmann::ordered_json(nullptr);
  out["delta"] = rational_json(a.delta);
  out["cnl"] = matrix_json("CNL", a.cnl, a.delta);
  out["cnsl"] = matrix_json("CNSL", a.cnsl, a.delta);
  out["baseline"] = rational_json(a.report.baseline());
  out["verdict"] = to_json(a.verdict);
  nlohmann::ordered_json mm = nlohmann::ordered_json::array();
  for (const auto& m : a.mismatches) mm.push_back(to_json(m));
  out["mismatches"] = mm;
  return out;
}

inline nlohmann::ordered_json to_json(const InstanceResult& r) {
  nlohmann::ordered_json out = {{"group", r.name},         {"spec", to_json(r.spec)}, {"family", r.family()},
                                {"params", r.params()},    {"order", r.order},        {"center_size", r.center_size},
                                {"ac", r.ac}};
  out.update(to_json(r.analysis));
  nlohmann::ordered_json mm = nlohmann::ordered_json::array();
  for (const auto& m : r.analysis.mismatches) mm.push_back(to_json(m));
  for (const auto& m : r.mismatches) mm.push_back(to_json(m));
  out["mismatches"] = mm;
  if (r.formula) out["formula"] = to_json(*r.formula);
  if (r.quotient_ok) out["quotient_matches"] = *r.quotient_ok;
  if (r.asserted) out["published_verdict"] = to_json(*r.asserted);
  nlohmann::ordered_json vm = nlohmann::ordered_json::array();
  for (const auto& v : r.verdict_mismatches) vm.push_back(to_json(v));
  out["verdict_mismatches"] = vm;
  out["ok"] = r.ok();
  return out;
}

/// EnergyReport with its verdict flags.
inline nlohmann::ordered_json energy_json(const GraphAnalysis& a) {
  const auto& r = a.report;
  nlohmann::ordered_json out = {{"vertex_count", r.vertex_count}, {"delta", rational_json(r.delta)}};
  if (r.le_cn) out["le_cn"] = rational_json(*r.le_cn);
  if (r.le_plus_cn) out["le_plus_cn"] = rational_json(*r.le_plus_cn);
  if (r.le_cn_float) out["le_cn_float"] = *r.le_cn_float;
  if (r.le_plus_cn_float) out["le_plus_cn_float"] = *r.le_plus_cn_float;
  out["baseline"] = rational_json(r.baseline());
  out["flags"] = {{"cnl_integral", a.verdict.cnl_integral},       {"cnsl_integral", a.verdict.cnsl_integral},
                  {"cnl_hyper", a.verdict.cnl == Standing::Hyper},  {"cnsl_hyper", a.verdict.cnsl == Standing::Hyper},
                  {"cnl_border", a.verdict.cnl == Standing::Border}, {"cnsl_border", a.verdict.cnsl == Standing::Border}};
  return out;
}

/// Per-instance verification record without the raw spectra.
inline nlohmann::ordered_json summary_json(const InstanceResult& r) {
  const auto& a = r.analysis;
  nlohmann::ordered_json out = {{"group", r.name}, {"family", r.family()}, {"params", r.params()},
                                {"order", r.order}, {"vertex_count", a.vertex_count}};
  out["decomposition"] = a.decomposition ? decomposition_json(*a.decomposition) : nlohmann::ordered_json(nullptr);
  out["delta"] = rational_json(a.delta);
  if (a.cnl.energy) out["le_cn"] = rational_json(*a.cnl.energy);
  if (a.cnsl.energy) out["le_plus_cn"] = rational_json(*a.cnsl.energy);
  out["max_deviation"] = {{"cnl", a.cnl.max_deviation}, {"cnsl", a.cnsl.max_deviation}};
  out["routes"] = {{"structural", a.cnl.exact.has_value() && a.decomposition.has_value()},
                   {"numeric", a.cnl.numeric.has_value()},
                   {"formula", r.formula ? nlohmann::ordered_json(r.formula->source + ":" + r.formula->branch)
                                         : nlohmann::ordered_json(nullptr)},
                   {"ac_recipe", r.ac_recipe.has_value()}};
  out["verdict"] = to_json(a.verdict);
  nlohmann::ordered_json mm = nlohmann::ordered_json::array();
  for (const auto& m : a.mismatches) mm.push_back(to_json(m));
  for (const auto& m : r.mismatches) mm.push_back(to_json(m));
  out["mismatches"] = mm;
  nlohmann::ordered_json ds = nlohmann::ordered_json::array();
  if (r.formula)
    for (const auto& d : r.formula->discrepancies) ds.push_back(to_json(d));
  out["discrepancies"] = ds;
  nlohmann::ordered_json vm = nlohmann::ordered_json::array();
  for (const auto& v : r.verdict_mismatches) vm.push_back(to_json(v));
  out["verdict_mismatches"] = vm;
  out["ok"] = r.ok();
  return out;
}

inline std::string csv_header() {
  return "family,params,vertices,le_cn,le_plus_cn,baseline,cnl_verdict,cnsl_verdict,published_verdict,match";
}

inline std::string csv_row(const InstanceResult& r) {
  const auto& a = r.analysis;
  auto energy_cell = [](const MatrixResult& m) {
    if (m.energy) return to_fraction_string(*m.energy);
    if (m.energy_float) {
      std::ostringstream os;
      os.precision(17);
      os << *m.energy_float;
      return os.str();
    }
    return std::string();
  };
  std::string p;
  for (const auto& [k, v] : r.params()) p += (p.empty() ? "" : ";") + k + "=" + std::to_string(v);
  std::string published = "n/a", match = "n/a";
  if (r.asserted) {
    published = std::string(r.asserted->cnl_hyper ? "hyper" : "not-hyper") + "/" + (r.asserted->cnsl_hyper ? "hyper" : "not-hyper");
    match = "yes";
    for (const auto& v : r.verdict_mismatches) {
      if (!v.explained) {
        match = "no";
        break;
      }
      match = "explained";
    }
  }
  std::ostringstream os;
  os << r.family() << "," << p << "," << a.vertex_count << "," << energy_cell(a.cnl) << "," << energy_cell(a.cnsl) << ","
     << to_fraction_string(a.report.baseline()) << "," << to_string(a.verdict.cnl) << "," << to_string(a.verdict.cnsl) << ","
     << published << "," << match;
  return os.str();
}

}  // namespace cnspec
