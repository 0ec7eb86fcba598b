#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnspec/error.hpp"
#include "cnspec/finite_field.hpp"
#include "cnspec/graph.hpp"
#include "cnspec/group_spec.hpp"
#include "cnspec/rational.hpp"
#include "cnspec/spectrum.hpp"

namespace cnspec {

using Params = std::map<std::string, long>;

inline std::string params_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ",";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

/// A printed closed form that disagrees with the value recomputed from the
/// evaluator's own spectrum (or with the theorem a corollary specializes).
struct FormulaDiscrepancy {
  std::string source;
  Params params;
  std::string field;  // "le_cn", "le_plus_cn", "cnl-spectrum", "cnsl-spectrum", ...
  std::string printed;
  std::string recomputed;
};

struct FamilyResult {
  std::string source;  // evaluator tag, e.g. "quasidihedral" or "d2m-quotient"
  std::string branch;  // piecewise branch taken by the printed energies
  Params params;
  std::size_t vertex_count = 0;
  Rational delta;
  ExactSpectrum cnl, cnsl;
  Rational le_cn, le_plus_cn;  // recomputed from cnl / cnsl and delta
  std::optional<Rational> printed_le_cn, printed_le_plus_cn;
  std::vector<FormulaDiscrepancy> discrepancies;
};

namespace formula_detail {

using Terms = std::vector<std::pair<Rational, BigInt>>;

inline BigInt big(long v) { return BigInt(v); }

inline BigInt pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational q(const BigInt& num, const BigInt& den = 1) { return make_rational(num, den); }

inline void out_of_domain(bool bad, const std::string& what) {
  if (bad) throw Error(ErrorKind::OutOfDomain, what);
}

inline void check_energy(FamilyResult& r, const char* field, const Rational& printed, const Rational& recomputed) {
  if (printed != recomputed) r.discrepancies.push_back({r.source, r.params, field, to_string(printed), to_string(recomputed)});
}

/// Fills delta and energies from the spectra and compares any printed
/// energies that were set.
inline FamilyResult finish(FamilyResult r) {
  r.vertex_count = r.cnl.total_multiplicity();
  if (r.cnsl.total_multiplicity() != r.vertex_count) {
    r.discrepancies.push_back({r.source, r.params, "cnsl-multiplicity", std::to_string(r.cnsl.total_multiplicity()),
                               std::to_string(r.vertex_count)});
  }
  if (r.cnsl.trace() != r.cnl.trace()) {
    r.discrepancies.push_back({r.source, r.params, "cnsl-trace", to_string(r.cnsl.trace()), to_string(r.cnl.trace())});
  }
  r.delta = r.vertex_count == 0 ? Rational(0) : Rational(r.cnl.trace() / static_cast<unsigned long>(r.vertex_count));
  r.delta.canonicalize();
  r.le_cn = energy(r.cnl, r.delta);
  r.le_plus_cn = energy(r.cnsl, r.delta);
  if (r.printed_le_cn) check_energy(r, "le_cn", *r.printed_le_cn, r.le_cn);
  if (r.printed_le_plus_cn) check_energy(r, "le_plus_cn", *r.printed_le_plus_cn, r.le_plus_cn);
  return r;
}

/// Spectra of K_{(m-1)z} + m K_z as printed in the D_2m-quotient statement.
inline SpectrumPair d2m_spectra(const BigInt& m, const BigInt& z) {
  const BigInt w = (m - 1) * z;
  return {make_spectrum({{q(0), m + 1}, {q(w * (w - 2)), w - 1}, {q(z * (z - 2)), m * (z - 1)}}),
          make_spectrum({{q(2 * (w - 1) * (w - 2)), 1},
                         {q((w - 2) * (w - 2)), w - 1},
                         {q(2 * (z - 1) * (z - 2)), m},
                         {q((z - 2) * (z - 2)), m * (z - 1)}})};
}

/// Spectra of (p+1) K_{(p-1)z} as printed in the Z_p x Z_p statement.
inline SpectrumPair zpzp_spectra(const BigInt& p, const BigInt& z) {
  const BigInt w = (p - 1) * z;
  return {make_spectrum({{q(0), p + 1}, {q(w * (w - 2)), (p + 1) * (w - 1)}}),
          make_spectrum({{q(2 * (w - 1) * (w - 2)), p + 1}, {q((w - 2) * (w - 2)), (p + 1) * (w - 1)}})};
}

/// A corollary returns its parent theorem's result, re-tagged, after
/// comparing the corollary's own printed spectra and energies against it.
inline FamilyResult specialize(FamilyResult parent, const std::string& source, const Params& params,
                               const std::optional<SpectrumPair>& printed, std::optional<Rational> printed_le,
                               std::optional<Rational> printed_le_plus) {
  FamilyResult r = std::move(parent);
  r.branch = r.source + "[" + params_string(r.params) + "]/" + r.branch;
  r.source = source;
  r.params = params;
  if (printed) {
    if (printed->cnl != r.cnl) r.discrepancies.push_back({source, params, "cnl-spectrum", to_string(printed->cnl), to_string(r.cnl)});
    if (printed->cnsl != r.cnsl)
      r.discrepancies.push_back({source, params, "cnsl-spectrum", to_string(printed->cnsl), to_string(r.cnsl)});
  }
  r.printed_le_cn = std::move(printed_le);
  r.printed_le_plus_cn = std::move(printed_le_plus);
  if (r.printed_le_cn) check_energy(r, "le_cn", *r.printed_le_cn, r.le_cn);
  if (r.printed_le_plus_cn) check_energy(r, "le_plus_cn", *r.printed_le_plus_cn, r.le_plus_cn);
  return r;
}

}  // namespace formula_detail

// ---------------------------------------------------------------------------
// AC families

inline FamilyResult eval_qd(long n_) {
  using namespace formula_detail;
  out_of_domain(n_ < 4, "quasidihedral requires n >= 4");
  FamilyResult r;
  r.source = "quasidihedral";
  r.branch = "n>=4";
  r.params = {{"n", n_}};
  const BigInt N = pow(2, n_), h = pow(2, n_ - 1);
  r.cnl = make_spectrum({{q(0), h + 1}, {q((h - 2) * (h - 4)), h - 3}});
  r.cnsl = make_spectrum({{q(0), h}, {q(2 * (h - 3) * (h - 4)), 1}, {q((h - 4) * (h - 4)), h - 3}});
  r.printed_le_cn = q((N - 8) * (N - 6) * (N - 4) * (N + 2), 8 * (N - 2));
  r.printed_le_plus_cn = q(pow(2, n_ - 3) * (N - 8) * (N - 6) * (N - 4), N - 2);
  return finish(std::move(r));
}

inline FamilyResult eval_psl(long k_) {
  using namespace formula_detail;
  out_of_domain(k_ < 2, "PSL(2,2^k) requires k >= 2");
  FamilyResult r;
  r.source = "psl";
  r.params = {{"k", k_}};
  const unsigned long k = static_cast<unsigned long>(k_);
  const BigInt K = pow(2, k), H = pow(2, k - 1);
  r.cnl = make_spectrum({{q(0), K + K * K + 1},
                         {q((K - 1) * (K - 3)), (K + 1) * (K - 2)},
                         {q((K - 2) * (K - 4)), H * (K + 1) * (K - 3)},
                         {q(K * (K - 2)), H * (K - 1) * (K - 1)}});
  r.cnsl = make_spectrum({{q(2 * (K - 2) * (K - 3)), K + 1},
                          {q((K - 3) * (K - 3)), (K + 1) * (K - 2)},
                          {q(2 * (K - 3) * (K - 4)), H * (K + 1)},
                          {q((K - 4) * (K - 4)), H * (K + 1) * (K - 3)},
                          {q(2 * (K - 1) * (K - 2)), H * (K - 1)},
                          {q((K - 2) * (K - 2)), H * (K - 1) * (K - 1)}});
  const BigInt den = pow(8, k) - K - 1;
  r.printed_le_cn = q((K - 2) * (19 * K - pow(2, 3 * k + 2) + 3 * pow(4, k + 1) - 7 * pow(16, k) - 5 * pow(32, k) +
                             3 * pow(64, k) + 6),
                      den);
  if (k == 2) {
    r.branch = "k=2";
    r.printed_le_plus_cn = q(9260, 59);
  } else {
    r.branch = "k>=3";
    r.printed_le_plus_cn = q(-5 * pow(2, k + 2) + 7 * pow(2, 3 * k + 1) + pow(2, 4 * k + 5) - 9 * pow(4, k) + pow(32, k) -
                                 13 * pow(64, k) + 3 * pow(128, k) - 12,
                             den);
  }
  return finish(std::move(r));
}

inline FamilyResult eval_gl(long q_) {
  using namespace formula_detail;
  out_of_domain(q_ <= 2 || q_ > 1000000 || !prime_power(static_cast<std::uint32_t>(q_)), "GL(2,q) requires a prime power q > 2");
  FamilyResult r;
  r.source = "gl";
  r.params = {{"q", q_}};
  const BigInt Q = q_;
  const BigInt a = Q * Q - 3 * Q + 2, b = Q * Q - Q, c = Q * Q - 2 * Q + 1;  // clique sizes
  r.cnl = make_spectrum({{q(0), Q * Q + Q + 1},
                         {q(a * (a - 2)), (Q * Q + Q) * (a - 1) / 2},
                         {q(b * (b - 2)), (Q * Q - Q) * (b - 1) / 2},
                         {q(c * (c - 2)), (Q + 1) * (c - 1)}});
  r.cnsl = make_spectrum({{q(2 * (a - 1) * (a - 2)), (Q * Q + Q) / 2},
                          {q((a - 2) * (a - 2)), (Q * Q + Q) * (a - 1) / 2},
                          {q(2 * (b - 1) * (b - 2)), (Q * Q - Q) / 2},
                          {q((b - 2) * (b - 2)), (Q * Q - Q) * (b - 1) / 2},
                          {q(2 * (c - 1) * (c - 2)), Q + 1},
                          {q((c - 2) * (c - 2)), (Q + 1) * (c - 1)}});
  const BigInt den = Q * Q * Q - Q - 1;
  r.printed_le_cn = q((Q - 2) * (Q - 1) * pow(Q, 4) * (Q + 1) * (2 * Q - 3) * ((Q - 1) * Q - 1), den);
  if (q_ <= 5) {
    r.branch = "q<=5";
    r.printed_le_plus_cn =
        q((Q - 2) * Q * (Q + 1) * (Q * (Q * (Q * (Q * (2 * Q * ((Q - 4) * Q + 6) - 7) - 7) - 1) + 11) + 2), den);
  } else {
    r.branch = "q>=6";
    r.printed_le_plus_cn =
        q(Q * (Q + 1) * ((Q * (Q * (Q * (Q * (2 * Q - 11) + 20) - 16) + 7) + 8) * pow(Q, 3) - 12 * Q - 4), den);
  }
  return finish(std::move(r));
}

inline FamilyResult eval_hanaki_nu(long n_) {
  using namespace formula_detail;
  out_of_domain(n_ < 2, "A(n, nu) requires n >= 2");
  FamilyResult r;
  r.source = "hanaki-nu";
  r.branch = "n>=2";
  r.params = {{"n", n_}};
  const BigInt Q = pow(2, n_);
  r.cnl = make_spectrum({{q(0), Q - 1}, {q(Q * (Q - 2)), (Q - 1) * (Q - 1)}});
  r.cnsl = make_spectrum({{q(2 * (Q - 1) * (Q - 2)), Q - 1}, {q((Q - 2) * (Q - 2)), (Q - 1) * (Q - 1)}});
  r.printed_le_cn = r.printed_le_plus_cn = q(2 * (Q - 2) * (Q - 1) * (Q - 1));
  return finish(std::move(r));
}

inline FamilyResult eval_hanaki_p(long p_, long n_) {
  using namespace formula_detail;
  out_of_domain(p_ < 2 || !is_prime(static_cast<std::uint64_t>(p_)), "A(n, p) requires p prime");
  out_of_domain(n_ < 1, "A(n, p) requires n >= 1");
  FamilyResult r;
  r.source = "hanaki-p";
  r.branch = "n>=1";
  r.params = {{"p", p_}, {"n", n_}};
  const BigInt P = pow(p_, n_);
  const BigInt w = P * P - P;
  r.cnl = make_spectrum({{q(0), P + 1}, {q(w * (w - 2)), (P + 1) * (w - 1)}});
  r.cnsl = make_spectrum({{q(2 * (w - 1) * (w - 2)), P + 1}, {q((w - 2) * (w - 2)), (P + 1) * (w - 1)}});
  r.printed_le_cn = r.printed_le_plus_cn = q(2 * (P + 1) * (P + 1) * (-3 * P * P + P * P * P + P + 2));
  return finish(std::move(r));
}

// ---------------------------------------------------------------------------
// Central-quotient theorems

inline FamilyResult eval_sz2_quotient(long z_) {
  using namespace formula_detail;
  out_of_domain(z_ < 1, "center size z must be >= 1");
  FamilyResult r;
  r.source = "sz2-quotient";
  r.params = {{"z", z_}};
  const BigInt z = z_;
  r.cnl = make_spectrum({{q(0), 6}, {q(4 * z * (4 * z - 2)), 4 * z - 1}, {q(3 * z * (3 * z - 2)), 5 * (3 * z - 1)}});
  r.cnsl = make_spectrum({{q(2 * (4 * z - 1) * (4 * z - 2)), 1},
                          {q((4 * z - 2) * (4 * z - 2)), 4 * z - 1},
                          {q(2 * (3 * z - 1) * (3 * z - 2)), 5},
                          {q((3 * z - 2) * (3 * z - 2)), 5 * (3 * z - 1)}});
  if (z_ == 1) {
    r.branch = "z=1";
    r.printed_le_cn = q(648, 19);
  } else {
    r.branch = "z>=2";
    r.printed_le_cn = q(2 * (4 * z - 1) * (z * (105 * z + 31) - 38), 19);
  }
  r.printed_le_plus_cn = q(10 * (3 * z - 1) * (z * (28 * z + 45) - 38), 19);
  return finish(std::move(r));
}

inline FamilyResult eval_zpzp_quotient(long p_, long z_) {
  using namespace formula_detail;
  out_of_domain(p_ < 2 || !is_prime(static_cast<std::uint64_t>(p_)), "Z_p x Z_p quotient requires p prime");
  out_of_domain(z_ < 1, "center size z must be >= 1");
  FamilyResult r;
  r.source = "zpzp-quotient";
  r.params = {{"p", p_}, {"z", z_}};
  const BigInt p = p_, z = z_;
  auto s = zpzp_spectra(p, z);
  r.cnl = s.cnl;
  r.cnsl = s.cnsl;
  if (p_ == 2 && z_ == 1) {
    r.branch = "p=2,z=1";
    r.printed_le_cn = r.printed_le_plus_cn = q(0);
  } else {
    r.branch = "otherwise";
    r.printed_le_cn = r.printed_le_plus_cn = q(2 * (p + 1) * ((p - 1) * z - 2) * ((p - 1) * z - 1));
  }
  return finish(std::move(r));
}

inline FamilyResult eval_d2m_quotient(long m_, long z_) {
  using namespace formula_detail;
  out_of_domain(m_ < 2, "D_2m quotient requires m >= 2");
  out_of_domain(z_ < 1, "center size z must be >= 1");
  FamilyResult r;
  r.source = "d2m-quotient";
  r.params = {{"m", m_}, {"z", z_}};
  const BigInt m = m_, z = z_;
  auto s = d2m_spectra(m, z);
  r.cnl = s.cnl;
  r.cnsl = s.cnsl;
  std::string le_branch, le_plus_branch;
  if (m_ == 2 && z_ == 1) {
    le_branch = le_plus_branch = "m=2,z=1";
    r.printed_le_cn = r.printed_le_plus_cn = q(0);
  } else if (m_ == 2) {
    le_branch = le_plus_branch = "m=2,z>=2";
    r.printed_le_cn =
        q(-6 * (m * m * m + 1) * z + 4 * (2 * m * m + m - 1) + 2 * (m * (m * (m - 1) * (m - 1) + 3) - 1) * z * z, 2 * m - 1);
    r.printed_le_plus_cn = q(18 * z * z - 54 * z + 36, 3);
  } else {
    le_branch = "otherwise";
    r.printed_le_cn = q(2 * ((m - 1) * z - 1) * (m * (z * ((m - 2) * m * z - m + 3) - 4) + z + 2), 2 * m - 1);
    if ((m_ == 3 || m_ == 4) && z_ == 1) {
      le_plus_branch = "m in {3,4},z=1";
      r.printed_le_plus_cn =
          q(2 * m * (((m - 3) * m * m + 1) * z * z - 3 * ((m - 5) * m + 3) * z - 4 * m + 2), 2 * m - 1);
    } else {
      le_plus_branch = "otherwise";
      r.printed_le_plus_cn = q(2 * (m - 2) * (m - 1) * m * z * z * (m * z - 3), 2 * m - 1);
    }
  }
  r.branch = "LE:" + le_branch + ";LE+:" + le_plus_branch;
  return finish(std::move(r));
}

// ---------------------------------------------------------------------------
// Corollaries

enum class Corollary {
  Metacyclic,         // (m, n), m >= 3
  Dihedral,           // (m), order 2m, m >= 3
  U6n,                // (n), n >= 1
  Dicyclic,           // (n), order 4n, n >= 2
  OrderP3,            // (p)
  FourCentralizer,    // (z)
  FiveCentralizer,    // (z)
  PPlus2Centralizer,  // (p, z)
};

inline const char* corollary_tag(Corollary c) {
  switch (c) {
    case Corollary::Metacyclic: return "metacyclic";
    case Corollary::Dihedral: return "dihedral";
    case Corollary::U6n: return "u6n";
    case Corollary::Dicyclic: return "dicyclic";
    case Corollary::OrderP3: return "order-p3";
    case Corollary::FourCentralizer: return "four-centralizer";
    case Corollary::FiveCentralizer: return "five-centralizer";
    case Corollary::PPlus2Centralizer: return "p-plus-2-centralizer";
  }
  return "";
}

/// a and b are the corollary's parameters in the order listed in Corollary.
inline FamilyResult eval_corollary(Corollary c, long a, long b = 0) {
  using namespace formula_detail;
  const std::string tag = corollary_tag(c);
  switch (c) {
    case Corollary::Metacyclic: {
      const long m_ = a, n_ = b;
      out_of_domain(m_ < 3, "metacyclic corollary requires m >= 3 (m = 2 gives an abelian group)");
      out_of_domain(n_ < 1, "metacyclic corollary requires n >= 1");
      const BigInt m = m_, n = n_;
      const bool odd = m_ % 2 == 1;
      auto parent = odd ? eval_d2m_quotient(m_, n_) : eval_d2m_quotient(m_ / 2, 2 * n_);
      auto printed = odd ? d2m_spectra(m, n) : d2m_spectra(m / 2, 2 * n);
      Rational le = odd ? q(2 * ((m - 1) * n - 1) * (m * (n * ((m - 2) * m * n - m + 3) - 4) + n + 2), 2 * m - 1)
                        : q(((m - 2) * n - 1) * (m * (n * ((m - 4) * m * n - m + 6) - 4) + 4 * (n + 1)), m - 1);
      Rational le_plus = (m_ == 3 && n_ == 1) ? q(0)
                         : odd              ? q(2 * (m - 2) * (m - 1) * m * n * n * (m * n - 3), 2 * m - 1)
                                            : q((m - 4) * (m - 2) * m * n * n * (m * n - 3), m - 1);
      return specialize(std::move(parent), tag, {{"m", m_}, {"n", n_}}, printed, le, le_plus);
    }
    case Corollary::Dihedral: {
      const long m_ = a;
      out_of_domain(m_ < 3, "dihedral corollary requires m >= 3");
      const BigInt m = m_;
      const bool odd = m_ % 2 == 1;
      auto parent = odd ? eval_d2m_quotient(m_, 1) : eval_d2m_quotient(m_ / 2, 2);
      const BigInt e = odd ? m - 1 : m - 2;  // size of the large clique
      SpectrumPair printed{make_spectrum({{q(0), m + 1}, {q(e * (e - 2)), e - 1}}),
                           make_spectrum({{q(0), m}, {q(2 * (e - 1) * (e - 2)), 1}, {q((e - 2) * (e - 2)), e - 1}})};
      Rational le = odd ? q(2 * (m - 3) * (m - 2) * (m - 1) * (m + 1), 2 * m - 1)
                        : q((m - 4) * (m - 3) * (m - 2) * (m + 1), m - 1);
      Rational le_plus = odd ? q(2 * (m - 3) * (m - 2) * (m - 1) * m, 2 * m - 1) : q((m - 4) * (m - 3) * (m - 2) * m, m - 1);
      return specialize(std::move(parent), tag, {{"m", m_}}, printed, le, le_plus);
    }
    case Corollary::U6n: {
      const long n_ = a;
      out_of_domain(n_ < 1, "U6n corollary requires n >= 1");
      const BigInt n = n_;
      SpectrumPair printed{
          make_spectrum({{q(0), 4}, {q(2 * n * (2 * n - 2)), 2 * n - 1}, {q(n * (n - 2)), 3 * (n - 1)}}),
          make_spectrum({{q((2 * n - 1) * (2 * n - 2)), 1},
                         {q((2 * n - 2) * (2 * n - 2)), 2 * n - 1},
                         {q(2 * (n - 1) * (n - 2)), 3},
                         {q((n - 2) * (n - 2)), 3 * (n - 1)}})};
      Rational le = q(2 * (n - 1) * (2 * n - 1) * (9 * n + 10), 5);
      Rational le_plus = n_ == 1 ? q(6 * (n - 1) * (n + 10), 5) : q(36 * (n - 1) * n * n, 5);
      return specialize(eval_d2m_quotient(3, n_), tag, {{"n", n_}}, printed, le, le_plus);
    }
    case Corollary::Dicyclic: {
      const long n_ = a;
      out_of_domain(n_ < 2, "dicyclic corollary requires n >= 2");
      const BigInt n = n_;
      SpectrumPair printed{make_spectrum({{q(0), 2 * n + 1}, {q((2 * n - 2) * (2 * n - 4)), 2 * n - 3}}),
                           make_spectrum({{q(0), 2 * n},
                                          {q(2 * (2 * n - 3) * (2 * n - 4)), 1},
                                          {q((2 * n - 4) * (2 * n - 4)), 2 * n - 3}})};
      Rational le = q(4 * (n - 2) * (n - 1) * (2 * n - 3) * (2 * n + 1), 2 * n - 1);
      Rational le_plus = q(8 * (n - 2) * (n - 1) * n * (2 * n - 3), 2 * n - 1);
      return specialize(eval_d2m_quotient(n_, 2), tag, {{"n", n_}}, printed, le, le_plus);
    }
    case Corollary::OrderP3: {
      const long p_ = a;
      out_of_domain(p_ < 2 || !is_prime(static_cast<std::uint64_t>(p_)), "order-p^3 corollary requires p prime");
      const BigInt p = p_;
      Rational e = q(2 * (p + 1) * ((p - 1) * p - 2) * ((p - 1) * p - 1));
      return specialize(eval_zpzp_quotient(p_, p_), tag, {{"p", p_}}, zpzp_spectra(p, p), e, e);
    }
    case Corollary::FourCentralizer: {
      const long z_ = a;
      out_of_domain(z_ < 1, "center size z must be >= 1");
      const BigInt z = z_;
      SpectrumPair printed{make_spectrum({{q(0), 3}, {q(z * (z - 2)), 3 * ((2 - 1) * z - 1)}}),
                           make_spectrum({{q(2 * (z - 1) * (z - 2)), 3}, {q((z - 2) * (z - 2)), 3 * (z - 1)}})};
      Rational e = z_ == 1 ? q(0) : q(6 * (z - 2) * (z - 1));
      return specialize(eval_zpzp_quotient(2, z_), tag, {{"z", z_}}, printed, e, e);
    }
    case Corollary::FiveCentralizer: {
      const long z_ = a;
      out_of_domain(z_ < 1, "center size z must be >= 1");
      const BigInt z = z_;
      SpectrumPair printed{make_spectrum({{q(0), 4}, {q(2 * z * (2 * z - 2)), 4 * (2 * z - 1)}}),
                           make_spectrum({{q(2 * (2 * z - 1) * (2 * z - 2)), 4}, {q((2 * z - 2) * (2 * z - 2)), 4 * (z - 1)}})};
      Rational e = q(8 * (2 * z - 2) * (2 * z - 1));
      return specialize(eval_zpzp_quotient(3, z_), tag, {{"z", z_}}, printed, e, e);
    }
    case Corollary::PPlus2Centralizer: {
      const long p_ = a, z_ = b;
      out_of_domain(p_ < 2 || !is_prime(static_cast<std::uint64_t>(p_)), "(p+2)-centralizer corollary requires p prime");
      out_of_domain(z_ < 1, "center size z must be >= 1");
      const BigInt p = p_, z = z_;
      const BigInt w = (p - 1) * z;
      SpectrumPair printed{make_spectrum({{q(0), p + 1}, {q((p - 1) * (w - 2)), (p + 1) * (w - 1)}}),
                           zpzp_spectra(p, z).cnsl};
      Rational e = q(2 * (p + 1) * (w - 2) * (w - 1));
      return specialize(eval_zpzp_quotient(p_, z_), tag, {{"p", p_}, {"z", z_}}, printed, e, e);
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown corollary");
}

// ---------------------------------------------------------------------------
// General AC recipe

/// Graph K_{|X_1|-z} + ... + K_{|X_n|-z} from the centralizer sizes.
inline FamilyResult eval_ac_product(const std::vector<long>& sizes, long z, long a) {
  if (z < 1 || a < 1) throw Error(ErrorKind::InvalidSizes, "center and abelian factor orders must be >= 1");
  if (sizes.empty()) throw Error(ErrorKind::InvalidSizes, "no centralizers given");
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  for (long s : sizes) {
    if (s <= z) throw Error(ErrorKind::InvalidSizes, "centralizer size must exceed the center size");
    raw.emplace_back(static_cast<std::size_t>(a * (s - z)), 1);
  }
  auto d = make_decomposition(raw);
  auto spectra = exact_spectrum_clique_union(d);
  FamilyResult r;
  r.source = a == 1 ? "ac-general" : "ac-product";
  r.branch = describe(d);
  r.params = {{"z", z}};
  if (a != 1) r.params["a"] = a;
  r.cnl = spectra.cnl;
  r.cnsl = spectra.cnsl;
  return formula_detail::finish(std::move(r));
}

inline FamilyResult eval_ac_general(const std::vector<long>& sizes, long z) { return eval_ac_product(sizes, z, 1); }

// ---------------------------------------------------------------------------
// Known errata: discrepancies whose cause has been identified.

struct KnownErratum {
  std::string source;
  std::string field;
  std::function<bool(const Params&)> applies;
  std::string explanation;
};

inline const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> list = {
      {"u6n", "cnsl-spectrum", [](const Params&) { return true; },
       "top CNSL eigenvalue printed as (2n-1)(2n-2); the D_6-quotient specialization and the clique-union formula "
       "give 2(2n-1)(2n-2)"},
      {"five-centralizer", "cnsl-spectrum", [](const Params&) { return true; },
       "multiplicity of (2z-2)^2 printed as 4(z-1); the Z_3 x Z_3 specialization gives 4(2z-1)"},
      {"p-plus-2-centralizer", "cnl-spectrum", [](const Params&) { return true; },
       "non-zero CNL eigenvalue printed as (p-1)((p-1)z-2); the Z_p x Z_p specialization gives (p-1)z((p-1)z-2)"},
      {"metacyclic", "le_cn", [](const Params& p) { return p.at("m") == 4; },
       "even-m energy formula does not cover m = 4, whose central quotient D_4 falls in the m = 2 branch"},
      {"metacyclic", "le_plus_cn", [](const Params& p) { return p.at("m") == 4; },
       "even-m energy formula does not cover m = 4, whose central quotient D_4 falls in the m = 2 branch"},
      {"metacyclic", "cnsl-verdict", [](const Params& p) { return p.at("m") == 5 && p.at("n") == 2; },
       "the odd-m CNSL list omits (m, n) = (5, 2), which the D_2m-quotient table (m = 5, z = 2) marks as not "
       "hyperenergetic; the exact difference is negative"},
      {"sz2-quotient", "cnl-baseline-difference", [](const Params& p) { return p.at("z") == 1; },
       "printed 11040/19 equals the z >= 2 expression evaluated at z = 1; 612 - 648/19 = 10980/19"},
  };
  return list;
}

inline const KnownErratum* find_erratum(const std::string& source, const std::string& field, const Params& params) {
  for (const auto& e : known_errata())
    if (e.source == source && e.field == field && e.applies(params)) return &e;
  return nullptr;
}

inline bool is_explained(const FormulaDiscrepancy& d) { return find_erratum(d.source, d.field, d.params) != nullptr; }

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const FormulaDiscrepancy& d) {
  nlohmann::ordered_json out = {{"source", d.source}, {"params", d.params}, {"field", d.field},
                                {"printed", d.printed}, {"recomputed", d.recomputed}};
  const auto* e = find_erratum(d.source, d.field, d.params);
  out["explained"] = e != nullptr;
  if (e) out["explanation"] = e->explanation;
  return out;
}

inline nlohmann::ordered_json to_json(const FamilyResult& r) {
  nlohmann::ordered_json out = {{"source", r.source},
                                {"branch", r.branch},
                                {"params", r.params},
                                {"vertex_count", r.vertex_count},
                                {"delta", rational_json(r.delta)},
                                {"cnl", spectrum_json(r.cnl)},
                                {"cnsl", spectrum_json(r.cnsl)},
                                {"le_cn", rational_json(r.le_cn)},
                                {"le_plus_cn", rational_json(r.le_plus_cn)}};
  if (r.printed_le_cn) out["printed_le_cn"] = rational_json(*r.printed_le_cn);
  if (r.printed_le_plus_cn) out["printed_le_plus_cn"] = rational_json(*r.printed_le_plus_cn);
  nlohmann::ordered_json ds = nlohmann::ordered_json::array();
  for (const auto& d : r.discrepancies) ds.push_back(to_json(d));
  out["discrepancies"] = ds;
  return out;
}

}  // namespace cnspec
