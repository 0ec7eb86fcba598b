// Acceptance checks. Each criterion prints its detail lines and ends with one
// "criterion N: PASS|FAIL" line. Run with --criterion N, or without it for all.

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cnspec/pipeline.hpp"
#include "cnspec/sweeps.hpp"

namespace {

using namespace cnspec;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Criterion {
 public:
  explicit Criterion(int id) : id_(id), start_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) failed_ = true;
    std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << what << "\n";
  }
  void note(const std::string& what) { std::cout << "  " << what << "\n"; }
  double elapsed() const { return seconds_since(start_); }

  bool finish(const std::string& summary) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << elapsed();
    std::cout << "criterion " << id_ << ": " << (failed_ ? "FAIL" : "PASS") << "  " << summary << " (" << os.str() << " s)\n";
    return !failed_;
  }

 private:
  int id_;
  Clock::time_point start_;
  bool failed_ = false;
};

std::string eq_text(const Rational& got, const Rational& want) {
  return "got " + to_string(got) + ", want " + to_string(want);
}

PipelineOptions exact_only() {
  PipelineOptions o;
  o.method = Method::Exact;
  return o;
}

GraphAnalysis exact_analysis(const GroupSpec& spec) { return analyze_graph(commuting_graph(build_family(spec)), exact_only()); }

// 1. Printed golden values on the exact path.
bool criterion1() {
  Criterion c(1);
  const auto psl = exact_analysis(SL2Spec{4});
  c.check(*psl.cnsl.energy == make_rational(9260, 59), "PSL(2,4) LE+ = 9260/59: " + eq_text(*psl.cnsl.energy, make_rational(9260, 59)));
  const auto sz = exact_analysis(Sz2Spec{});
  c.check(*sz.cnl.energy == make_rational(648, 19), "Sz(2) LE = 648/19: " + eq_text(*sz.cnl.energy, make_rational(648, 19)));
  const auto qd = exact_analysis(QuasidihedralSpec{4});
  const Rational qd_base = baseline(qd.vertex_count);
  c.check(qd_base - *qd.cnl.energy == make_rational(1104, 7),
          "QD16 baseline - LE = 1104/7: " + eq_text(qd_base - *qd.cnl.energy, make_rational(1104, 7)));
  c.check(qd_base - *qd.cnsl.energy == make_rational(1224, 7),
          "QD16 baseline - LE+ = 1224/7: " + eq_text(qd_base - *qd.cnsl.energy, make_rational(1224, 7)));
  const Rational psl_gap = baseline(psl.vertex_count) - *psl.cnsl.energy;
  c.check(psl_gap == make_rational(380848, 59), "PSL(2,4) baseline - LE+ = 380848/59: " + eq_text(psl_gap, make_rational(380848, 59)));
  const Rational sz_gap = baseline(sz.vertex_count) - *sz.cnl.energy;
  c.check(sz_gap == make_rational(11040, 19), "Sz(2) baseline - LE = 11040/19: " + eq_text(sz_gap, make_rational(11040, 19)));
  if (sz_gap != make_rational(11040, 19)) {
    const auto* e = find_erratum("sz2-quotient", "cnl-baseline-difference", {{"z", 1}});
    if (e) c.note("known erratum: " + e->explanation);
  }
  const auto u6 = exact_analysis(U6nSpec{1});
  c.check(*u6.cnsl.energy == 0, "U6 LE+ = 0: got " + to_string(*u6.cnsl.energy));
  // (m, z) = (2, 1) has no group realization (G/Z(G) = Klein four forces G
  // abelian), so the exact path runs on the theorem's clique structure
  // K_{(m-1)z} + m K_z = 3 K_1.
  const auto d = make_decomposition({{1, 1}, {1, 2}});
  const auto s = exact_spectrum_clique_union(d);
  const Rational dd = delta(d);
  const auto f = eval_d2m_quotient(2, 1);
  c.check(energy(s.cnl, dd) == 0 && energy(s.cnsl, dd) == 0 && *f.printed_le_cn == 0 && *f.printed_le_plus_cn == 0,
          "D2m (m,z)=(2,1): LE = LE+ = 0 (structural " + to_string(energy(s.cnl, dd)) + ", " + to_string(energy(s.cnsl, dd)) +
              "; printed " + to_string(*f.printed_le_cn) + ", " + to_string(*f.printed_le_plus_cn) + ")");
  c.check(c.elapsed() < 5.0, "runtime < 5 s");
  return c.finish("golden values, exact rational equality");
}

// 2. Structural, numeric, certified, AC-recipe and closed-form routes agree.
bool criterion2() {
  Criterion c(2);
  const auto list = agreement_instances();
  std::size_t bad = 0;
  double worst = 0.0;
  for (const auto& spec : list) {
    const auto r = run_instance(spec);
    worst = std::max({worst, r.analysis.cnl.max_deviation, r.analysis.cnsl.max_deviation});
    std::vector<std::string> problems;
    for (const auto& m : r.analysis.mismatches) problems.push_back(m.detail);
    for (const auto& m : r.mismatches) problems.push_back(m.detail);
    if (!r.formula) problems.push_back("no closed-form route");
    if (!r.analysis.cnl.numeric || !r.analysis.cnl.exact) problems.push_back("missing route");
    if (!problems.empty()) {
      ++bad;
      for (const auto& p : problems) c.check(false, r.name + ": " + p);
    }
  }
  c.check(bad == 0, std::to_string(list.size() - bad) + "/" + std::to_string(list.size()) + " instances agree on every route");
  std::ostringstream os;
  os << "max numeric deviation " << worst << " <= 1e-8";
  c.check(worst <= 1e-8, os.str());
  c.check(c.elapsed() < 180.0, "runtime < 3 min");
  return c.finish("three-route agreement on " + std::to_string(list.size()) + " instances");
}

// 3. SL(2,8) end to end.
bool criterion3() {
  Criterion c(3);
  const auto r = run_instance(SL2Spec{8});
  c.check(r.analysis.vertex_count == 503, "503 vertices: got " + std::to_string(r.analysis.vertex_count));
  c.check(r.analysis.mismatches.empty() && r.mismatches.empty(), "exact, numeric, certified and closed-form routes agree");
  const auto f = eval_psl(3);
  c.check(f.branch == "k>=3", "closed form uses the k >= 3 branch: " + f.branch);
  c.check(*r.analysis.cnsl.energy == *f.printed_le_plus_cn,
          "LE+ equals the general branch: " + eq_text(*r.analysis.cnsl.energy, *f.printed_le_plus_cn));
  c.check(*r.analysis.cnl.energy == *f.printed_le_cn, "LE equals the closed form: " + eq_text(*r.analysis.cnl.energy, *f.printed_le_cn));
  c.check(r.analysis.verdict.cnl_integral && r.analysis.verdict.cnsl_integral, "both spectra certified integral");
  c.check(r.asserted && r.verdict_mismatches.empty(), "verdict matches the classification statement");
  c.check(c.elapsed() < 60.0, "runtime < 60 s");
  return c.finish("SL(2,8) pipeline");
}

// 4. Verdict sweep against the classification statements.
bool criterion4() {
  Criterion c(4);
  const auto list = verdict_instances();
  std::size_t checked = 0, unexplained = 0, explained = 0, border = 0;
  for (const auto& spec : list) {
    const auto r = run_instance(spec, exact_only());
    if (!r.asserted) {
      c.check(false, r.name + ": no classification statement covers " + r.family());
      ++unexplained;
      continue;
    }
    ++checked;
    if (r.analysis.verdict.cnl == Standing::Border || r.analysis.verdict.cnsl == Standing::Border) {
      ++border;
      c.note("finding: " + r.name + " is borderenergetic");
    }
    for (const auto& v : r.verdict_mismatches) {
      const std::string diff = v.difference ? " (difference " + to_string(*v.difference) + ")" : "";
      if (v.explained) {
        ++explained;
        c.note("explained: " + r.name + " " + v.field + " asserted " + v.asserted + ", computed " + v.computed + diff);
      } else {
        ++unexplained;
        c.check(false, r.name + " " + v.field + " asserted " + v.asserted + ", computed " + v.computed + diff);
      }
    }
    if (r.formula) {
      for (const auto& d : r.formula->discrepancies) {
        if (is_explained(d)) {
          ++explained;
        } else {
          ++unexplained;
          c.check(false, r.name + " printed " + d.field + " " + d.printed + " vs recomputed " + d.recomputed);
        }
      }
    }
    for (const auto& m : r.mismatches) {
      ++unexplained;
      c.check(false, r.name + ": " + m.detail);
    }
  }
  // Open items settled by construction.
  for (long n : {2L, 3L}) {
    const auto a = exact_analysis(U6nSpec{static_cast<std::uint32_t>(n)});
    const Rational top = a.cnsl.exact->pairs.back().first;
    const Rational factor2 = make_rational(2 * (2 * n - 1) * (2 * n - 2));
    c.check(top == factor2, "U6n n=" + std::to_string(n) + " top CNSL eigenvalue is 2(2n-1)(2n-2): " + eq_text(top, factor2));
  }
  {
    const auto a = exact_analysis(DihedralSpec{3});
    const auto f = eval_d2m_quotient(3, 1);
    c.check(*a.cnsl.energy == *f.printed_le_plus_cn,
            "D2m LE+ branch (m,z)=(3,1) on D6: " + eq_text(*a.cnsl.energy, *f.printed_le_plus_cn));
    const auto g = eval_d2m_quotient(4, 1);
    c.check(*g.printed_le_plus_cn == g.le_plus_cn,
            "D2m LE+ branch (m,z)=(4,1) against its own spectrum (no group realizes it): " +
                eq_text(*g.printed_le_plus_cn, g.le_plus_cn));
  }
  for (long z : {15L, 16L, 17L}) {
    const auto r = run_instance(realize_sz2(z), exact_only());
    c.note("sz2-quotient z=" + std::to_string(z) + ": CNL " + to_string(r.analysis.verdict.cnl) + ", CNSL " +
           to_string(r.analysis.verdict.cnsl));
  }
  c.check(unexplained == 0, std::to_string(unexplained) + " unexplained discrepancies");
  c.note(std::to_string(explained) + " explained discrepancies, " + std::to_string(border) + " borderenergetic findings");
  return c.finish("verdicts on " + std::to_string(checked) + " instances");
}

// 5. Exact integrality certificates for every sweep spectrum.
bool criterion5() {
  Criterion c(5);
  const auto list = verdict_instances();
  std::size_t certified = 0, ambiguous = 0, failed = 0;
  for (const auto& spec : list) {
    try {
      const auto r = run_instance(spec);
      for (const MatrixResult* m : {&r.analysis.cnl, &r.analysis.cnsl}) {
        if (m->certificate && m->certificate->integral) {
          ++certified;
        } else {
          ++failed;
          c.check(false, r.name + ": spectrum not certified integral");
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AmbiguousCluster) throw;
      ++ambiguous;
      c.check(false, display_name(spec) + ": " + e.what());
    }
  }
  c.check(failed == 0, std::to_string(certified) + " spectra certified by exact Bareiss nullity");
  c.check(ambiguous == 0, std::to_string(ambiguous) + " AmbiguousCluster outcomes");
  return c.finish("integrality over " + std::to_string(list.size()) + " instances");
}

// 6. Clique-union formula vs Jacobi, trace/Frobenius identities, baseline.
bool criterion6() {
  Criterion c(6);
  std::mt19937_64 rng(0x5eed);
  double worst = 0.0;
  std::size_t trace_fail = 0, frob_fail = 0;
  auto identities = [&](const IntMatrix& m, const ExactSpectrum& exact, const NumericSpectrum& num) {
    const double tr = m.trace().get_d();
    if (exact.trace() != Rational(m.trace())) ++trace_fail;
    long double sum = 0, sq = 0;
    for (double v : num.values) {
      sum += v;
      sq += static_cast<long double>(v) * v;
    }
    if (std::fabs(static_cast<double>(sum) - tr) > 1e-8 * std::max(1.0, std::fabs(tr))) ++trace_fail;
    const double f2 = m.frobenius_norm() * m.frobenius_norm();
    if (std::fabs(static_cast<double>(sq) - f2) > 1e-6 * std::max(1.0, f2)) ++frob_fail;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> parts(1, 8), size(1, 12), count(1, 3);
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    const int r = parts(rng);
    for (int i = 0; i < r; ++i) raw.emplace_back(size(rng), count(rng));
    const auto d = make_decomposition(raw);
    const auto exact = exact_spectrum_clique_union(d);
    const auto mats = cnrs_cnl_cnsl(cn_matrix(clique_union_graph(d)));
    const auto ncnl = numeric_spectrum(mats.cnl), ncnsl = numeric_spectrum(mats.cnsl);
    auto dev = [](const std::vector<double>& a, const std::vector<double>& b) {
      double w = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::fabs(a[i] - b[i]));
      return w;
    };
    worst = std::max({worst, dev(ncnl.values, exact.cnl.expanded()), dev(ncnsl.values, exact.cnsl.expanded())});
    identities(mats.cnl, exact.cnl, ncnl);
    identities(mats.cnsl, exact.cnsl, ncnsl);
  }
  std::ostringstream os;
  os << "200 random clique unions: max eigenvalue deviation " << worst << " < 1e-8";
  c.check(worst < 1e-8, os.str());
  c.check(trace_fail == 0, "trace identity on every matrix (" + std::to_string(trace_fail) + " failures)");
  c.check(frob_fail == 0, "Frobenius identity on every matrix (" + std::to_string(frob_fail) + " failures)");
  // Baseline from first principles: build K_n, certify both spectra exactly,
  // and evaluate the energy around the exact delta.
  std::size_t base_fail = 0;
  for (std::size_t n = 3; n <= 60; ++n) {
    CommutingGraph k(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) k.add_edge(i, j);
    const auto mats = cnrs_cnl_cnsl(cn_matrix(k));
    const Rational dl = delta(mats.cnrs);
    auto cnl = certified_spectrum(mats.cnl), cnsl = certified_spectrum(mats.cnsl);
    const Rational want = make_rational(static_cast<long>(2 * (n - 1) * (n - 2)));
    if (!cnl || !cnsl || energy(*cnl, dl) != want || energy(*cnsl, dl) != want || baseline(n) != want) {
      ++base_fail;
      c.check(false, "K_" + std::to_string(n) + " energy differs from 2(n-1)(n-2)");
    }
  }
  c.check(base_fail == 0, "K_n energies equal 2(n-1)(n-2) exactly for 3 <= n <= 60");
  return c.finish("property suite");
}

// 7. Jacobi contract on random symmetric integer matrices.
bool criterion7() {
  Criterion c(7);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> dim(1, 60), entry(-100, 100);
  std::size_t conv_fail = 0, residual_fail = 0, spot_fail = 0, spots = 0;
  int max_sweeps = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = dim(rng);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    NumericSpectrum s;
    try {
      s = numeric_spectrum(m);
    } catch (const Error& e) {
      ++conv_fail;
      c.check(false, "trial " + std::to_string(trial) + ": " + e.what());
      continue;
    }
    max_sweeps = std::max(max_sweeps, s.sweeps);
    if (s.sweeps > 50) ++conv_fail;
    if (!(s.residual < 1e-9 * (1.0 + m.frobenius_norm()))) ++residual_fail;
    // Shifted inverse iteration from a shift just off each sampled eigenvalue.
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 5; ++k) {
      const double lambda = s.values[pick(rng)];
      const double shift = lambda + 1e-9 * (1.0 + std::fabs(lambda));
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(a - shift * Eigen::MatrixXd::Identity(n, n));
      Eigen::VectorXd x = Eigen::VectorXd::Ones(n) + 0.01 * Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
      x.normalize();
      for (int it = 0; it < 8; ++it) {
        x = lu.solve(x);
        x.normalize();
      }
      const double rq = x.dot(a * x);
      const double err = std::fabs(rq - lambda);
      worst = std::max(worst, err);
      ++spots;
      if (!(err <= 1e-7)) ++spot_fail;
    }
  }
  c.check(conv_fail == 0, "100 matrices converge within 50 sweeps (max " + std::to_string(max_sweeps) + ")");
  c.check(residual_fail == 0, "residual < 1e-9 (1 + ||M||_F) on every matrix");
  std::ostringstream os;
  os << spots << " inverse-iteration spot checks, max |rayleigh - jacobi| = " << worst << " <= 1e-7";
  c.check(spot_fail == 0, os.str());
  return c.finish("eigensolver contract");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::function<bool()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                  criterion5, criterion6, criterion7};
  bool ok = true;
  for (int i = 1; i <= 7; ++i) {
    if (only != 0 && only != i) continue;
    try {
      ok = all[i - 1]() && ok;
    } catch (const std::exception& e) {
      std::cout << "criterion " << i << ": FAIL  exception: " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
