#pragma once

#include <nlohmann/json.hpp>

#include <cmath>
#include <optional>
#include <string>

#include "cnspec/error.hpp"
#include "cnspec/formulas.hpp"
#include "cnspec/rational.hpp"
#include "cnspec/spectrum.hpp"

namespace cnspec {

enum class Standing { Hyper, Border, Below };

inline const char* to_string(Standing s) {
  switch (s) {
    case Standing::Hyper: return "hyper";
    case Standing::Border: return "border";
    case Standing::Below: return "below";
  }
  return "";
}

/// Energies of one graph. Exact fields are set whenever the exact path ran;
/// float fields whenever the numeric path ran.
struct EnergyReport {
  std::size_t vertex_count = 0;
  Rational delta;
  std::optional<Rational> le_cn, le_plus_cn;
  std::optional<double> le_cn_float, le_plus_cn_float;
  bool cnl_integral = false;
  bool cnsl_integral = false;

  Rational baseline() const { return cnspec::baseline(vertex_count); }
};

inline constexpr double kNumericBorderTolerance = 1e-9;

struct Verdict {
  bool cnl_integral = false;
  bool cnsl_integral = false;
  Standing cnl = Standing::Below;
  Standing cnsl = Standing::Below;
  std::optional<Rational> cnl_difference, cnsl_difference;  // energy - baseline, exact
  double cnl_difference_float = 0.0, cnsl_difference_float = 0.0;
};

namespace classify_detail {

inline Standing standing(const Rational& diff) {
  const int s = sgn(diff);
  return s > 0 ? Standing::Hyper : s == 0 ? Standing::Border : Standing::Below;
}

inline Standing standing(double diff, double scale) {
  if (std::fabs(diff) <= kNumericBorderTolerance * (1.0 + scale)) return Standing::Border;
  return diff > 0 ? Standing::Hyper : Standing::Below;
}

}  // namespace classify_detail

inline Verdict classify(const EnergyReport& r) {
  Verdict v;
  v.cnl_integral = r.cnl_integral;
  v.cnsl_integral = r.cnsl_integral;
  const Rational base = r.baseline();
  const double base_f = base.get_d();
  auto side = [&](const std::optional<Rational>& exact, const std::optional<double>& approx, Standing& out,
                  std::optional<Rational>& diff, double& diff_f) {
    if (exact) {
      diff = *exact - base;
      diff_f = diff->get_d();
      out = classify_detail::standing(*diff);
    } else if (approx) {
      diff_f = *approx - base_f;
      out = classify_detail::standing(diff_f, base_f);
    } else {
      throw Error(ErrorKind::MalformedInput, "energy report has neither exact nor numeric energies");
    }
  };
  side(r.le_cn, r.le_cn_float, v.cnl, v.cnl_difference, v.cnl_difference_float);
  side(r.le_plus_cn, r.le_plus_cn_float, v.cnsl, v.cnsl_difference, v.cnsl_difference_float);
  return v;
}

// ---------------------------------------------------------------------------
// Published verdicts

/// What the classification theorems assert for a family instance.
struct AssertedVerdict {
  bool integral = true;  // both CNL and CNSL
  bool cnl_hyper = false;
  bool cnsl_hyper = false;
  std::string citation;
};

namespace classify_detail {

inline bool between(long v, long lo, long hi) { return lo <= v && v <= hi; }

inline bool d2m_cnl_below(long m, long z) {
  return m == 2 || (m == 3 && z <= 6) || (m == 4 && z <= 3) || (m == 5 && z <= 2) || (between(m, 6, 10) && z == 1);
}

inline bool d2m_cnsl_below(long m, long z) {
  return m == 2 || (m == 3 && z <= 7) || (m == 4 && z <= 3) || ((m == 5 || m == 6) && z <= 2) ||
         (between(m, 7, 11) && z == 1);
}

inline long param(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorKind::InvalidParams, std::string("missing parameter ") + key);
  return it->second;
}

}  // namespace classify_detail

/// family uses the evaluator tags of the formulas module. Throws OutOfDomain
/// outside the stated domain of the corresponding theorem.
inline AssertedVerdict asserted_verdict(const std::string& family, const Params& p) {
  using namespace classify_detail;
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::OutOfDomain, what);
  };
  AssertedVerdict v;
  if (family == "quasidihedral") {
    const long n = param(p, "n");
    need(n >= 4, "quasidihedral requires n >= 4");
    v.cnl_hyper = v.cnsl_hyper = n >= 5;
    v.citation = n >= 5 ? "quasidihedral: hyper for n >= 5" : "quasidihedral: not hyper for n = 4";
  } else if (family == "psl" || family == "gl" || family == "hanaki-nu" || family == "hanaki-p" ||
             family == "zpzp-quotient" || family == "order-p3" || family == "four-centralizer" ||
             family == "five-centralizer" || family == "p-plus-2-centralizer") {
    v.citation = family + ": never hyper";
  } else if (family == "sz2-quotient") {
    const long z = param(p, "z");
    need(z >= 1, "z >= 1");
    v.cnl_hyper = z >= 17;
    v.cnsl_hyper = z >= 16;
    v.citation = "sz2-quotient: CNL hyper iff z >= 17, CNSL hyper iff z >= 16";
  } else if (family == "d2m-quotient") {
    const long m = param(p, "m"), z = param(p, "z");
    need(m >= 2 && z >= 1, "m >= 2, z >= 1");
    v.cnl_hyper = !d2m_cnl_below(m, z);
    v.cnsl_hyper = !d2m_cnsl_below(m, z);
    v.citation = "d2m-quotient: (m, z) tables";
  } else if (family == "metacyclic") {
    const long m = param(p, "m"), n = param(p, "n");
    need(m >= 3 && n >= 1, "m >= 3, n >= 1");
    if (m % 2 == 0) {
      v.cnl_hyper = !(m == 4 || (m == 6 && n <= 3) || ((m == 8 || m == 10) && n == 1));
      v.cnsl_hyper = !(m == 4 || (m == 6 && n <= 3) || ((m == 8 || m == 10 || m == 12) && n == 1));
      v.citation = "metacyclic: even m lists";
    } else {
      v.cnl_hyper = !((m == 3 && n <= 6) || (m == 5 && n <= 2) || ((m == 7 || m == 9) && n == 1));
      v.cnsl_hyper = !((m == 3 && n <= 7) || (m == 5 && n == 1) || ((m == 7 || m == 9 || m == 11) && n == 1));
      v.citation = "metacyclic: odd m lists";
    }
  } else if (family == "dihedral") {
    const long m = param(p, "m");
    need(m >= 3, "m >= 3");
    if (m % 2 == 0) {
      v.cnl_hyper = !between(m, 4, 10);
      v.cnsl_hyper = !between(m, 4, 12);
      v.citation = "dihedral: even m, CNL not hyper for 4 <= m <= 10, CNSL for 4 <= m <= 12";
    } else {
      v.cnl_hyper = !between(m, 3, 9);
      v.cnsl_hyper = !between(m, 3, 11);
      v.citation = "dihedral: odd m, CNL not hyper for 3 <= m <= 9, CNSL for 3 <= m <= 11";
    }
  } else if (family == "dicyclic") {
    const long n = param(p, "n");
    need(n >= 2, "n >= 2");
    v.cnl_hyper = n > 5;
    v.cnsl_hyper = n > 6;
    v.citation = "dicyclic: CNL not hyper for n <= 5, CNSL for n <= 6";
  } else if (family == "u6n") {
    const long n = param(p, "n");
    need(n >= 1, "n >= 1");
    v.cnl_hyper = n > 6;
    v.cnsl_hyper = n > 7;
    v.citation = "u6n: CNL not hyper for n <= 6, CNSL for n <= 7";
  } else {
    throw Error(ErrorKind::OutOfDomain, "no classification statement for family " + family);
  }
  return v;
}

/// A disagreement between a computed verdict and the asserted one.
struct VerdictMismatch {
  std::string family;
  Params params;
  std::string field;  // "cnl-verdict", "cnsl-verdict", "cnl-integral", "cnsl-integral"
  std::string asserted;
  std::string computed;
  std::optional<Rational> difference;
  bool explained = false;
};

inline std::vector<VerdictMismatch> compare_verdict(const std::string& family, const Params& params, const Verdict& v,
                                                    const AssertedVerdict& a) {
  std::vector<VerdictMismatch> out;
  auto add = [&](const char* field, std::string asserted, std::string computed, std::optional<Rational> diff) {
    VerdictMismatch m{family, params, field, std::move(asserted), std::move(computed), std::move(diff), false};
    m.explained = find_erratum(family, field, params) != nullptr;
    out.push_back(std::move(m));
  };
  auto hyper_name = [](bool h) { return h ? std::string("hyper") : std::string("not hyper"); };
  if ((v.cnl == Standing::Hyper) != a.cnl_hyper) add("cnl-verdict", hyper_name(a.cnl_hyper), to_string(v.cnl), v.cnl_difference);
  if ((v.cnsl == Standing::Hyper) != a.cnsl_hyper)
    add("cnsl-verdict", hyper_name(a.cnsl_hyper), to_string(v.cnsl), v.cnsl_difference);
  if (v.cnl_integral != a.integral) add("cnl-integral", "integral", "not integral", std::nullopt);
  if (v.cnsl_integral != a.integral) add("cnsl-integral", "integral", "not integral", std::nullopt);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json out = {{"cnl_integral", v.cnl_integral},
                                {"cnsl_integral", v.cnsl_integral},
                                {"cnl", to_string(v.cnl)},
                                {"cnsl", to_string(v.cnsl)}};
  if (v.cnl_difference) out["cnl_difference"] = rational_json(*v.cnl_difference);
  else out["cnl_difference_float"] = v.cnl_difference_float;
  if (v.cnsl_difference) out["cnsl_difference"] = rational_json(*v.cnsl_difference);
  else out["cnsl_difference_float"] = v.cnsl_difference_float;
  return out;
}

inline nlohmann::ordered_json to_json(const AssertedVerdict& a) {
  return {{"integral", a.integral}, {"cnl_hyper", a.cnl_hyper}, {"cnsl_hyper", a.cnsl_hyper}, {"citation", a.citation}};
}

inline nlohmann::ordered_json to_json(const VerdictMismatch& m) {
  nlohmann::ordered_json out = {{"family", m.family}, {"params", m.params}, {"field", m.field},
                                {"asserted", m.asserted}, {"computed", m.computed}, {"explained", m.explained}};
  if (m.difference) out["difference"] = rational_json(*m.difference);
  return out;
}

}  // namespace cnspec
