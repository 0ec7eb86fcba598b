#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cnspec/error.hpp"
#include "cnspec/matrix.hpp"

namespace cnspec {

struct NumericSpectrum {
  std::vector<double> values;  // ascending
  double residual = 0.0;       // off-diagonal Frobenius norm at exit
  int sweeps = 0;
};

struct JacobiOptions {
  double relative_tolerance = 1e-9;  // stop when off(A) < tol * (1 + ||A||_F)
  int max_sweeps = 50;
};

/// Eigenvalues of a real symmetric matrix (row-major, n x n) by cyclic Jacobi.
/// Pairs are visited in row-major upper-triangle order; pairs whose entry is
/// exactly zero are skipped, so block-diagonal structure is never disturbed.
inline NumericSpectrum jacobi_eigenvalues(std::vector<double> a, std::size_t n, const JacobiOptions& opt = {}) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0L * at(i, j) * at(i, j);
    return static_cast<double>(std::sqrt(s));
  };
  long double fro2 = 0;
  for (double v : a) fro2 += static_cast<long double>(v) * v;
  const double threshold = opt.relative_tolerance * (1.0 + static_cast<double>(std::sqrt(fro2)));

  NumericSpectrum out;
  double off = off_norm();
  while (off >= threshold) {
    if (out.sweeps >= opt.max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi did not converge in " + std::to_string(opt.max_sweeps) +
                                                " sweeps (residual " + std::to_string(off) + ")");
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          if (akp == 0.0 && akq == 0.0) continue;
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          at(k, p) = at(p, k) = nkp;
          at(k, q) = at(q, k) = nkq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    ++out.sweeps;
    off = off_norm();
  }
  out.residual = off;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

inline NumericSpectrum numeric_spectrum(const IntMatrix& m, const JacobiOptions& opt = {}) {
  if (!m.is_symmetric()) throw Error(ErrorKind::MalformedInput, "matrix is not symmetric");
  std::vector<double> a(m.data().begin(), m.data().end());
  return jacobi_eigenvalues(std::move(a), m.size(), opt);
}

}  // namespace cnspec
