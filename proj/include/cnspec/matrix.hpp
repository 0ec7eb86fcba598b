#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cnspec/rational.hpp"

namespace cnspec {

/// Dense square integer matrix. Entries are bounded by |V|^2 for everything
/// built here, so int64 storage is exact; elimination switches to BigInt.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return a_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += static_cast<long>((*this)(i, i));
    return t;
  }

  double frobenius_norm() const {
    long double s = 0;
    for (auto v : a_) s += static_cast<long double>(v) * v;
    return static_cast<double>(std::sqrt(s));
  }

  /// Principal submatrix on the given indices.
  IntMatrix submatrix(const std::vector<std::size_t>& idx) const {
    IntMatrix b(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(idx[i], idx[j]);
    return b;
  }

  IntMatrix shifted(std::int64_t c) const {
    IntMatrix b = *this;
    for (std::size_t i = 0; i < n_; ++i) b(i, i) -= c;
    return b;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Fraction-free Gaussian elimination (Bareiss) over BigInt. Returns the rank;
/// when the matrix is square and of full rank, det receives the determinant.
inline std::size_t bareiss_rank(const IntMatrix& m, BigInt* det = nullptr) {
  const std::size_t n = m.size();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.data()[i]);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  // Dividing each row by its content keeps the rank and shrinks the minors.
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt g = 0;
    for (std::size_t j = 0; j < n; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), at(i, j).get_mpz_t());
    if (g > 1) {
      for (std::size_t j = 0; j < n; ++j) mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), g.get_mpz_t());
      scale *= g;
    }
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  int swaps = 0;
  BigInt t;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
      ++swaps;
    }
    const BigInt& p = at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const BigInt f = at(i, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        // a_ij = (p * a_ij - a_i,col * a_rank,j) / prev, exact by Sylvester's identity
        t = p * at(i, j);
        t -= f * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  if (det != nullptr) {
    if (rank < n) {
      *det = 0;
    } else {
      *det = n == 0 ? BigInt(1) : at(n - 1, n - 1);
      *det *= scale;
      if (swaps % 2 != 0) *det = -*det;
    }
  }
  return rank;
}

inline BigInt bareiss_determinant(const IntMatrix& m) {
  BigInt d;
  bareiss_rank(m, &d);
  return d;
}

/// Connected components of the off-diagonal support. Permuting a symmetric
/// matrix into these blocks is a similarity, so spectra and nullities split.
inline std::vector<std::vector<std::size_t>> support_blocks(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != 0 || m(j, i) != 0) {
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

}  // namespace cnspec
