#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cnspec/bitset.hpp"
#include "cnspec/error.hpp"

namespace cnspec {

inline constexpr std::size_t kMaxGroupOrder = 4096;
inline constexpr std::size_t kExhaustiveAssociativityBound = 512;

/// A finite group given by its Cayley table. Elements are 0..order-1.
class GroupTable {
 public:
  using Element = std::uint16_t;

  GroupTable() = default;

  /// Validates the table: Latin square, two-sided identity, inverses and
  /// associativity (exhaustive up to order 512, 10000 seeded random triples
  /// above).
  GroupTable(std::size_t order, std::vector<Element> mul, std::vector<std::string> labels = {})
      : order_(order), mul_(std::move(mul)), labels_(std::move(labels)) {
    if (order_ == 0) throw Error(ErrorKind::MalformedInput, "empty group");
    if (order_ > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(order_) + " exceeds 4096");
    if (mul_.size() != order_ * order_) throw Error(ErrorKind::MalformedInput, "table size mismatch");
    if (!labels_.empty() && labels_.size() != order_) throw Error(ErrorKind::MalformedInput, "label count mismatch");
    validate();
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * order_ + b]; }
  Element inv(std::size_t a) const noexcept { return inv_[a]; }
  const std::vector<Element>& table() const noexcept { return mul_; }

  std::string label(std::size_t a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool commute(std::size_t a, std::size_t b) const noexcept { return mul(a, b) == mul(b, a); }

 private:
  void validate() {
    const std::size_t n = order_;
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t a = 0; a < n; ++a) {
      ++stamp;
      for (std::size_t b = 0; b < n; ++b) {
        auto v = mul(a, b);
        if (v >= n || seen[v] == stamp) throw Error(ErrorKind::MalformedInput, "table is not a Latin square");
        seen[v] = stamp;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      ++stamp;
      for (std::size_t a = 0; a < n; ++a) {
        auto v = mul(a, b);
        if (seen[v] == stamp) throw Error(ErrorKind::MalformedInput, "table is not a Latin square");
        seen[v] = stamp;
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
      if (ok) {
        identity_ = static_cast<Element>(e);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::MalformedInput, "no identity element");
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul(a, b) == identity_) {
          if (mul(b, a) != identity_) throw Error(ErrorKind::MalformedInput, "one-sided inverse");
          inv_[a] = static_cast<Element>(b);
          break;
        }
      }
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
    if (n <= kExhaustiveAssociativityBound) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t ab = mul(a, b);
          const Element* row_ab = &mul_[ab * n];
          const Element* row_b = &mul_[b * n];
          const Element* row_a = &mul_[a * n];
          for (std::size_t c = 0; c < n; ++c) {
            if (row_ab[c] != row_a[row_b[c]]) throw Error(ErrorKind::MalformedInput, "table is not associative");
          }
        }
    } else {
      std::mt19937_64 rng(0x5eedULL);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int i = 0; i < 10000; ++i) {
        if (!assoc(pick(rng), pick(rng), pick(rng))) throw Error(ErrorKind::MalformedInput, "table is not associative");
      }
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
  std::vector<Element> inv_;
};

using Subset = Bitset;

inline Subset centralizer(const GroupTable& g, std::size_t x) {
  Subset s(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (g.commute(x, y)) s.set(y);
  }
  return s;
}

inline Subset center(const GroupTable& g) {
  Subset s(g.order());
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y) central = g.commute(z, y);
    if (central) s.set(z);
  }
  return s;
}

inline bool is_abelian(const GroupTable& g) { return center(g).count() == g.order(); }

struct Centralizer {
  Subset members;
  std::size_t size = 0;
};

/// Distinct centralizers of non-central elements, sorted by
/// (size, smallest member index).
inline std::vector<Centralizer> distinct_centralizers(const GroupTable& g) {
  const Subset z = center(g);
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  std::vector<Centralizer> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (z.test(x)) continue;
    Subset c = centralizer(g, x);
    if (index.count(c)) continue;
    index.emplace(c, out.size());
    const std::size_t size = c.count();
    out.push_back({std::move(c), size});
  }
  std::sort(out.begin(), out.end(), [](const Centralizer& a, const Centralizer& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.members.first() < b.members.first();
  });
  return out;
}

inline bool is_subset_abelian(const GroupTable& g, const Subset& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.commute(m[i], m[j])) return false;
  return true;
}

inline bool is_ac(const GroupTable& g) {
  for (const auto& c : distinct_centralizers(g)) {
    if (!is_subset_abelian(g, c.members)) return false;
  }
  return true;
}

/// G/Z(G) on the smallest-index representative of each coset.
inline GroupTable central_quotient(const GroupTable& g) {
  const auto zs = center(g).members();
  const std::size_t n = g.order();
  std::vector<std::size_t> coset_of(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    for (auto z : zs) coset_of[g.mul(a, z)] = reps.size();
    reps.push_back(a);
  }
  const std::size_t q = reps.size();
  std::vector<GroupTable::Element> mul(q * q);
  std::vector<std::string> labels;
  labels.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels.push_back(g.label(reps[i]) + "Z");
    for (std::size_t j = 0; j < q; ++j) mul[i * q + j] = static_cast<GroupTable::Element>(coset_of[g.mul(reps[i], reps[j])]);
  }
  return GroupTable(q, std::move(mul), std::move(labels));
}

inline std::size_t element_order(const GroupTable& g, std::size_t a) {
  std::size_t k = 1;
  std::size_t x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

/// element order -> number of elements of that order
inline std::map<std::size_t, std::size_t> element_order_histogram(const GroupTable& g) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t a = 0; a < g.order(); ++a) ++h[element_order(g, a)];
  return h;
}

/// Isomorphism-invariant fingerprint used to compare small groups.
struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> order_histogram;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

inline GroupInvariants invariants(const GroupTable& g) {
  return {g.order(), is_abelian(g), element_order_histogram(g)};
}

/// (x^i y^j)(x^i' y^j') = x^(i + i' k^j) y^(j + j'), with y^s folded into x^t.
/// Elements are enumerated as x^i y^j with i the major index.
inline GroupTable build_presented(std::uint32_t m, std::uint32_t s, std::uint32_t t, std::uint32_t k) {
  if (m < 1 || s < 1) throw Error(ErrorKind::InvalidPresentation, "m and s must be positive");
  if (m == 1) {
    if (t != 0 || k != 0) throw Error(ErrorKind::InvalidPresentation, "m = 1 requires t = 0 and k = 0");
  } else {
    if (t >= m) throw Error(ErrorKind::InvalidPresentation, "t must satisfy 0 <= t < m");
    if (k < 1 || k >= m) throw Error(ErrorKind::InvalidPresentation, "k must satisfy 1 <= k < m");
  }
  const std::uint64_t mm = m;
  std::uint64_t ks = 1 % mm;
  for (std::uint32_t i = 0; i < s; ++i) ks = ks * k % mm;
  if (ks != 1 % mm) throw Error(ErrorKind::InvalidPresentation, "k^s is not 1 mod m");
  if ((static_cast<std::uint64_t>(t) * (k + mm - 1)) % mm != 0) throw Error(ErrorKind::InvalidPresentation, "t(k-1) is not 0 mod m");
  const std::uint64_t n = mm * s;
  if (n > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds 4096");

  std::vector<std::uint64_t> kpow(s);
  kpow[0] = 1 % mm;
  for (std::uint32_t j = 1; j < s; ++j) kpow[j] = kpow[j - 1] * k % mm;

  std::vector<GroupTable::Element> mul(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < s; ++j) labels.push_back("x^" + std::to_string(i) + "y^" + std::to_string(j));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < s; ++j)
      for (std::uint32_t i2 = 0; i2 < m; ++i2)
        for (std::uint32_t j2 = 0; j2 < s; ++j2) {
          std::uint64_t x = (i + i2 * kpow[j]) % mm;
          std::uint32_t y = j + j2;
          if (y >= s) {
            y -= s;
            x = (x + t) % mm;
          }
          mul[(i * s + j) * n + (i2 * s + j2)] = static_cast<GroupTable::Element>(x * s + y);
        }
  return GroupTable(n, std::move(mul), std::move(labels));
}

/// G x Z_r1 x ... x Z_rj with lexicographic pairs (g, a), g major.
inline GroupTable direct_product(const GroupTable& g, const std::vector<std::uint32_t>& cyclic) {
  std::uint64_t a_order = 1;
  for (auto r : cyclic) {
    if (r < 1) throw Error(ErrorKind::InvalidParams, "cyclic factor order must be >= 1");
    a_order *= r;
    if (a_order > kMaxGroupOrder) break;
  }
  const std::uint64_t n = g.order() * a_order;
  if (n > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds 4096");
  // mixed-radix digits of the abelian part, last factor least significant
  auto digits = [&](std::uint64_t a) {
    std::vector<std::uint32_t> d(cyclic.size());
    for (std::size_t i = cyclic.size(); i-- > 0;) {
      d[i] = static_cast<std::uint32_t>(a % cyclic[i]);
      a /= cyclic[i];
    }
    return d;
  };
  std::vector<std::uint64_t> a_mul(a_order * a_order);
  for (std::uint64_t a = 0; a < a_order; ++a) {
    auto da = digits(a);
    for (std::uint64_t b = 0; b < a_order; ++b) {
      auto db = digits(b);
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < cyclic.size(); ++i) c = c * cyclic[i] + (da[i] + db[i]) % cyclic[i];
      a_mul[a * a_order + b] = c;
    }
  }
  std::vector<GroupTable::Element> mul(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t x = 0; x < g.order(); ++x)
    for (std::uint64_t a = 0; a < a_order; ++a) {
      std::string l = "(" + g.label(x);
      for (auto d : digits(a)) l += "," + std::to_string(d);
      labels.push_back(l + ")");
    }
  for (std::uint64_t x = 0; x < g.order(); ++x)
    for (std::uint64_t a = 0; a < a_order; ++a)
      for (std::uint64_t y = 0; y < g.order(); ++y)
        for (std::uint64_t b = 0; b < a_order; ++b)
          mul[(x * a_order + a) * n + (y * a_order + b)] =
              static_cast<GroupTable::Element>(g.mul(x, y) * a_order + a_mul[a * a_order + b]);
  return GroupTable(n, std::move(mul), std::move(labels));
}

}  // namespace cnspec
