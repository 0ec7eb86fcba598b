#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cnspec/error.hpp"
#include "cnspec/graph.hpp"
#include "cnspec/jacobi.hpp"
#include "cnspec/matrix.hpp"
#include "cnspec/rational.hpp"

namespace cnspec {

/// AllPairs counts common neighbours for every pair of distinct vertices.
/// AdjacentOnly zeroes the entries of non-adjacent pairs. Both agree on
/// disjoint unions of complete graphs.
enum class CnMode { AllPairs, AdjacentOnly };

inline IntMatrix cn_matrix(const CommutingGraph& g, CnMode mode = CnMode::AllPairs) {
  const std::size_t n = g.vertex_count();
  IntMatrix cn(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mode == CnMode::AdjacentOnly && !g.adjacent(i, j)) continue;
      const auto c = static_cast<std::int64_t>(g.neighbors(i).intersection_count(g.neighbors(j)));
      cn(i, j) = cn(j, i) = c;
    }
  return cn;
}

struct CnMatrices {
  IntMatrix cnrs, cnl, cnsl;
};

inline CnMatrices cnrs_cnl_cnsl(const IntMatrix& cn) {
  const std::size_t n = cn.size();
  CnMatrices out{IntMatrix(n), IntMatrix(n), IntMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += cn(i, j);
    out.cnrs(i, i) = row;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t d = i == j ? row : 0;
      out.cnl(i, j) = d - cn(i, j);
      out.cnsl(i, j) = d + cn(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact spectra

/// Distinct eigenvalues with multiplicities, ascending.
struct ExactSpectrum {
  std::vector<std::pair<Rational, std::size_t>> pairs;

  std::size_t total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& p : pairs) n += p.second;
    return n;
  }

  Rational trace() const {
    Rational t = 0;
    for (const auto& [v, k] : pairs) t += v * static_cast<unsigned long>(k);
    return t;
  }

  /// Each eigenvalue repeated by multiplicity, ascending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const auto& [v, k] : pairs) out.insert(out.end(), k, v.get_d());
    return out;
  }

  friend bool operator==(const ExactSpectrum&, const ExactSpectrum&) = default;
};

/// Merges equal eigenvalues, drops zero multiplicities, sorts ascending.
inline ExactSpectrum make_spectrum(const std::vector<std::pair<Rational, BigInt>>& raw) {
  std::map<Rational, BigInt> merged;
  for (const auto& [v, k] : raw) {
    if (k < 0) throw Error(ErrorKind::InvalidSizes, "negative multiplicity");
    if (k == 0) continue;
    merged[v] += k;
  }
  ExactSpectrum s;
  for (const auto& [v, k] : merged) s.pairs.emplace_back(v, k.get_ui());
  return s;
}

inline std::string to_string(const ExactSpectrum& s) {
  std::string out = "{";
  for (const auto& [v, k] : s.pairs) {
    if (out.size() > 1) out += ", ";
    out += to_string(v) + "^" + std::to_string(k);
  }
  return out + "}";
}

struct SpectrumPair {
  ExactSpectrum cnl, cnsl;
};

/// Spectra of l_1 K_{m_1} + ... + l_r K_{m_r}. Per part: CNL has 0 (x l) and
/// m(m-2) (x l(m-1)); CNSL has 2(m-1)(m-2) (x l) and (m-2)^2 (x l(m-1)).
inline SpectrumPair exact_spectrum_clique_union(const CliqueDecomposition& d) {
  std::vector<std::pair<Rational, BigInt>> cnl, cnsl;
  for (auto [m_, l_] : d.parts) {
    const BigInt m = static_cast<unsigned long>(m_), l = static_cast<unsigned long>(l_);
    cnl.emplace_back(Rational(0), l);
    cnl.emplace_back(Rational(m * (m - 2)), l * (m - 1));
    cnsl.emplace_back(Rational(2 * (m - 1) * (m - 2)), l);
    cnsl.emplace_back(Rational((m - 2) * (m - 2)), l * (m - 1));
  }
  return {make_spectrum(cnl), make_spectrum(cnsl)};
}

// ---------------------------------------------------------------------------
// Delta, energies, baseline

/// tr(CNRS) / |V|.
inline Rational delta(const IntMatrix& cnrs) {
  if (cnrs.size() == 0) return 0;
  return make_rational(cnrs.trace(), BigInt(static_cast<unsigned long>(cnrs.size())));
}

inline Rational delta(const CommutingGraph& g, CnMode mode = CnMode::AllPairs) {
  return delta(cnrs_cnl_cnsl(cn_matrix(g, mode)).cnrs);
}

/// Same quantity from the clique structure: every vertex of K_m has CN row sum (m-1)(m-2).
inline Rational delta(const CliqueDecomposition& d) {
  BigInt tr = 0, n = 0;
  for (auto [m_, l_] : d.parts) {
    const BigInt m = static_cast<unsigned long>(m_), l = static_cast<unsigned long>(l_);
    tr += l * m * (m - 1) * (m - 2);
    n += l * m;
  }
  if (n == 0) return 0;
  return make_rational(tr, n);
}

inline Rational energy(const ExactSpectrum& s, const Rational& delta) {
  Rational e = 0;
  for (const auto& [v, k] : s.pairs) e += rational_abs(v - delta) * static_cast<unsigned long>(k);
  return e;
}

inline double energy(const NumericSpectrum& s, double delta) {
  long double e = 0;
  for (double v : s.values) e += std::fabs(static_cast<long double>(v) - delta);
  return static_cast<double>(e);
}

/// Energy of K_n under both matrices: 2(n-1)(n-2).
inline Rational baseline(std::size_t n) {
  const BigInt b = static_cast<unsigned long>(n);
  if (n < 2) return 0;
  return Rational(2 * (b - 1) * (b - 2));
}

// ---------------------------------------------------------------------------
// Integrality certification

struct IntegralityCertificate {
  bool integral = false;
  std::vector<std::pair<long, std::size_t>> witness;  // (eigenvalue, certified multiplicity)
};

inline constexpr double kClusterTolerance = 1e-6;

/// Exact nullity of (M - cI), computed block by block over the off-diagonal
/// support. Identical blocks are eliminated once.
class NullityOracle {
 public:
  explicit NullityOracle(const IntMatrix& m) {
    for (const auto& idx : support_blocks(m)) {
      IntMatrix b = m.submatrix(idx);
      auto [it, fresh] = index_.emplace(b.data(), blocks_.size());
      if (fresh) {
        blocks_.push_back({std::move(b), 1, {}});
      } else {
        ++blocks_[it->second].copies;
      }
    }
  }

  std::size_t nullity(long c) {
    std::size_t total = 0;
    for (auto& b : blocks_) {
      auto it = b.cache.find(c);
      if (it == b.cache.end()) {
        const std::size_t r = bareiss_rank(b.matrix.shifted(c));
        it = b.cache.emplace(c, b.matrix.size() - r).first;
      }
      total += it->second * b.copies;
    }
    return total;
  }

  std::size_t distinct_blocks() const { return blocks_.size(); }

 private:
  struct Block {
    IntMatrix matrix;
    std::size_t copies;
    std::map<long, std::size_t> cache;
  };
  std::vector<Block> blocks_;
  std::map<std::vector<std::int64_t>, std::size_t> index_;
};

/// Clusters the numeric eigenvalues around integers and proves each cluster
/// exactly: det(M - cI) = 0 and nullity(M - cI) equals the cluster size.
/// A value far from every integer is checked against its nearest integer c;
/// if M - cI has a larger kernel than the numeric cluster at c accounts for,
/// the numeric spectrum cannot be trusted and AmbiguousCluster is raised.
inline IntegralityCertificate certify_integral(const IntMatrix& m, const NumericSpectrum& spec) {
  if (spec.values.size() != m.size()) throw Error(ErrorKind::InvalidSizes, "spectrum length differs from matrix size");
  std::map<long, std::size_t> clusters;
  std::vector<double> stray;
  for (double v : spec.values) {
    const double r = std::round(v);
    if (std::fabs(v - r) <= kClusterTolerance) {
      ++clusters[static_cast<long>(r)];
    } else {
      stray.push_back(v);
    }
  }
  NullityOracle oracle(m);
  IntegralityCertificate cert;
  bool all_certified = true;
  for (auto [c, k] : clusters) {
    const std::size_t nul = oracle.nullity(c);
    if (nul == k) {
      cert.witness.emplace_back(c, k);
    } else {
      all_certified = false;
    }
  }
  for (double v : stray) {
    const long c = static_cast<long>(std::round(v));
    const std::size_t have = clusters.count(c) ? clusters[c] : 0;
    if (oracle.nullity(c) > have) {
      throw Error(ErrorKind::AmbiguousCluster, "numeric eigenvalue " + std::to_string(v) + " lies off the integers but " +
                                                   std::to_string(c) + " has unclaimed exact multiplicity");
    }
  }
  cert.integral = stray.empty() && all_certified;
  return cert;
}

/// Certified exact spectrum of an integer-spectrum symmetric matrix, derived
/// only from the matrix itself.
inline std::optional<ExactSpectrum> certified_spectrum(const IntMatrix& m) {
  auto cert = certify_integral(m, numeric_spectrum(m));
  if (!cert.integral) return std::nullopt;
  ExactSpectrum s;
  for (auto [c, k] : cert.witness) s.pairs.emplace_back(Rational(c), k);
  return s;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json rational_json(const Rational& r) {
  return nlohmann::ordered_json::array({nlohmann::ordered_json::parse(r.get_num().get_str()),
                                        nlohmann::ordered_json::parse(r.get_den().get_str())});
}

inline nlohmann::ordered_json spectrum_json(const ExactSpectrum& s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [v, k] : s.pairs) {
    auto r = rational_json(v);
    r.push_back(k);
    out.push_back(r);
  }
  return out;
}

}  // namespace cnspec
