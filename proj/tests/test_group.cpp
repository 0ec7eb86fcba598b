#include <gtest/gtest.h>

#include <complex>
#include <functional>

#include "cnspec/graph.hpp"
#include "cnspec/group_spec.hpp"

using namespace cnspec;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST(Group, FamilyOrders) {
  EXPECT_EQ(build_family(Sz2Spec{}).order(), 20u);
  EXPECT_EQ(build_family(SL2Spec{4}).order(), 60u);
  EXPECT_EQ(build_family(GL2Spec{3}).order(), 48u);
  EXPECT_EQ(build_family(HanakiPSpec{2, 1}).order(), 8u);
  EXPECT_EQ(build_family(QuasidihedralSpec{4}).order(), 16u);
  EXPECT_EQ(build_family(DicyclicSpec{3}).order(), 12u);
  EXPECT_EQ(build_family(MetacyclicSpec{5, 2}).order(), 20u);
  EXPECT_EQ(build_family(U6nSpec{2}).order(), 12u);
  EXPECT_EQ(build_family(HanakiNuSpec{2}).order(), 16u);
}

TEST(Group, ExpectedOrderMatchesBuiltOrder) {
  for (const GroupSpec& s : {GroupSpec{DihedralSpec{7}}, GroupSpec{GL2Spec{4}}, GroupSpec{SL2Spec{8}}, product(Sz2Spec{}, {3}),
                             GroupSpec{MetacyclicSpec{6, 3}}}) {
    EXPECT_EQ(expected_order(s), build_family(s).order()) << display_name(s);
  }
}

TEST(Group, CentersOfKnownGroups) {
  EXPECT_EQ(center(build_family(Sz2Spec{})).count(), 1u);
  EXPECT_EQ(center(build_family(GL2Spec{3})).count(), 2u);
  EXPECT_EQ(center(build_family(QuasidihedralSpec{4})).count(), 2u);
  EXPECT_EQ(center(build_family(DihedralSpec{5})).count(), 1u);
  EXPECT_EQ(center(build_family(DihedralSpec{6})).count(), 2u);
  EXPECT_EQ(center(build_family(product(Sz2Spec{}, {4}))).count(), 4u);
}

TEST(Group, AcPropertyAndQuotients) {
  EXPECT_TRUE(is_ac(build_family(SL2Spec{4})));
  EXPECT_TRUE(is_ac(build_family(Sz2Spec{})));
  EXPECT_FALSE(is_abelian(build_family(Sz2Spec{})));
  const auto g = build_family(product(Sz2Spec{}, {3}));
  EXPECT_TRUE(quotient_matches(g, QuotientTarget::sz2()));
  EXPECT_TRUE(quotient_matches(build_family(HanakiPSpec{3, 1}), QuotientTarget::zpzp(3)));
  EXPECT_TRUE(quotient_matches(build_family(DihedralSpec{6}), QuotientTarget::d2m(3)));
  EXPECT_FALSE(quotient_matches(build_family(DihedralSpec{6}), QuotientTarget::d2m(6)));
}

TEST(Group, DihedralAndDicyclicOfOrder12AreDistinguished) {
  const auto d = invariants(build_family(DihedralSpec{6}));
  const auto q = invariants(build_family(DicyclicSpec{3}));
  EXPECT_NE(d, q);
  EXPECT_EQ(q.order_histogram.at(4), 6u);  // Q12 has six elements of order 4
}

// Q12 as 2x2 complex matrices: a = diag(w, w^-1) with w a primitive sixth
// root of unity, b = [[0, -1], [1, 0]]. Closure is taken numerically.
TEST(Group, DicyclicMatchesComplexMatrixModel) {
  using C = std::complex<double>;
  using M = std::array<C, 4>;
  auto mul = [](const M& x, const M& y) {
    return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  auto same = [](const M& x, const M& y) {
    for (int i = 0; i < 4; ++i)
      if (std::abs(x[i] - y[i]) > 1e-9) return false;
    return true;
  };
  const C w = std::polar(1.0, 2 * M_PI / 6);
  std::vector<M> elems = {M{1, 0, 0, 1}};
  const std::vector<M> gens = {M{w, 0, 0, std::conj(w)}, M{0, -1, 1, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      const M p = mul(elems[i], g);
      bool found = false;
      for (const auto& e : elems) found = found || same(e, p);
      if (!found) elems.push_back(p);
    }
  ASSERT_EQ(elems.size(), 12u);
  std::size_t central = 0, commuting_pairs = 0;
  std::map<std::size_t, std::size_t> orders;
  for (const auto& x : elems) {
    bool is_central = true;
    for (const auto& y : elems) {
      const bool c = same(mul(x, y), mul(y, x));
      is_central = is_central && c;
      commuting_pairs += c;
    }
    central += is_central;
    std::size_t k = 1;
    for (M p = x; !same(p, elems[0]); p = mul(p, x)) ++k;
    ++orders[k];
  }
  const auto g = build_family(DicyclicSpec{3});
  EXPECT_EQ(center(g).count(), central);
  EXPECT_EQ(element_order_histogram(g), orders);
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) pairs += g.commute(x, y);
  EXPECT_EQ(pairs, commuting_pairs);
}

TEST(Group, InvalidParameters) {
  EXPECT_EQ(kind_of([] { build_family(QuasidihedralSpec{3}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { build_family(DihedralSpec{2}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { build_family(GL2Spec{6}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { build_family(GL2Spec{64}); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { build_family(PresentedSpec{5, 2, 0, 3}); }), ErrorKind::InvalidPresentation);
}

TEST(Group, RejectsMalformedTables) {
  // Latin square without associativity: the quasigroup x*y = 2x - y mod 3
  // has no identity.
  EXPECT_EQ(kind_of([] { GroupTable(3, {0, 2, 1, 2, 1, 0, 1, 0, 2}); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { GroupTable(2, {0, 1, 1, 1}); }), ErrorKind::MalformedInput);
}

TEST(Group, SpecJsonRoundTrip) {
  for (const GroupSpec& s : {GroupSpec{QuasidihedralSpec{5}}, GroupSpec{HanakiPSpec{3, 1}}, product(DihedralSpec{5}, {2, 3}),
                             GroupSpec{PresentedSpec{5, 4, 0, 2}}}) {
    const auto back = group_spec_from_json(nlohmann::json::parse(to_json(s).dump()));
    EXPECT_EQ(to_json(back), to_json(s));
  }
  EXPECT_EQ(kind_of([] { group_spec_from_json(nlohmann::json::parse(R"({"family":"nope"})")); }), ErrorKind::MalformedInput);
}

TEST(Group, TableJsonRoundTrip) {
  const auto g = build_family(Sz2Spec{});
  const auto back = table_from_json(nlohmann::json::parse(table_to_json(g).dump()));
  EXPECT_EQ(back.table(), g.table());
  EXPECT_EQ(back.labels(), g.labels());
}
