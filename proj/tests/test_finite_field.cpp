#include <gtest/gtest.h>

#include "cnspec/error.hpp"
#include "cnspec/finite_field.hpp"

using namespace cnspec;

TEST(FiniteField, Gf4UsesConwayStyleModulus) {
  const auto f = field_create(2, 2);
  EXPECT_EQ(f.order(), 4u);
  EXPECT_EQ(f.modulus, (std::vector<std::uint32_t>{1, 1, 1}));  // x^2 + x + 1
  const FieldElement x{{0, 1}};
  EXPECT_EQ(field_mul(f, x, x), (FieldElement{{1, 1}}));  // x * x = x + 1
}

TEST(FiniteField, RejectsNonPrimeCharacteristic) {
  try {
    field_create(4, 1);
    FAIL() << "expected NonPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPrime);
  }
}

TEST(FiniteField, PrimeFieldArithmetic) {
  const auto f = field_create(7, 1);
  const FieldElement three{{3}}, five{{5}};
  EXPECT_EQ(field_add(f, three, five), (FieldElement{{1}}));
  EXPECT_EQ(field_mul(f, three, five), (FieldElement{{1}}));
  EXPECT_EQ(field_inv(f, three), five);
  EXPECT_EQ(field_sub(f, three, five), (FieldElement{{5}}));
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, HoldOnEveryElement) {
  const auto [p, n] = GetParam();
  const FieldTables t(field_create(p, n));
  const std::uint32_t q = t.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    EXPECT_EQ(t.add(a, t.neg(a)), 0u);
    EXPECT_EQ(t.mul(a, 1), a);
    if (a != 0) {
      std::uint32_t hits = 0;
      for (std::uint32_t b = 0; b < q; ++b) hits += t.mul(a, b) == 1;
      EXPECT_EQ(hits, 1u) << "unique inverse of " << a;
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      EXPECT_EQ(t.mul(a, b), t.mul(b, a));
      for (std::uint32_t c = 0; c < q; ++c) {
        EXPECT_EQ(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        EXPECT_EQ(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
      }
    }
  }
}

TEST_P(FieldAxioms, FrobeniusIsAdditiveAndMultiplicative) {
  const auto [p, n] = GetParam();
  const FieldTables t(field_create(p, n));
  for (std::uint32_t a = 0; a < t.order(); ++a)
    for (std::uint32_t b = 0; b < t.order(); ++b) {
      EXPECT_EQ(t.frobenius(t.add(a, b)), t.add(t.frobenius(a), t.frobenius(b)));
      EXPECT_EQ(t.frobenius(t.mul(a, b)), t.mul(t.frobenius(a), t.frobenius(b)));
    }
}

TEST_P(FieldAxioms, EveryElementSatisfiesXqEqualsX) {
  const auto [p, n] = GetParam();
  const auto f = field_create(p, n);
  for (std::uint32_t i = 0; i < f.order(); ++i) {
    const auto x = from_index(f, i);
    EXPECT_EQ(field_pow(f, x, f.order()), x);
  }
  EXPECT_EQ(field_pow(f, field_generator(f), f.order()), field_generator(f));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{2u, 4u}));

TEST(FiniteField, IndexRoundTrip) {
  const auto f = field_create(3, 3);
  for (std::uint32_t i = 0; i < f.order(); ++i) EXPECT_EQ(to_index(f, from_index(f, i)), i);
}
