#include <gtest/gtest.h>

#include "cnspec/formulas.hpp"
#include "cnspec/group_spec.hpp"

using namespace cnspec;

namespace {

// Structural spectra of the group behind a formula instance.
SpectrumPair structural(const GroupSpec& s) {
  const auto d = clique_decomposition(commuting_graph(build_family(s)));
  EXPECT_TRUE(d.has_value());
  return exact_spectrum_clique_union(*d);
}

bool has_field(const FamilyResult& r, const std::string& field) {
  for (const auto& d : r.discrepancies)
    if (d.field == field) return true;
  return false;
}

}  // namespace

TEST(Formulas, QuasidihedralEnergies) {
  const auto r = eval_qd(4);
  EXPECT_EQ(r.vertex_count, 14u);
  EXPECT_EQ(r.delta, make_rational(60, 7));
  EXPECT_EQ(r.le_cn, make_rational(1080, 7));
  EXPECT_EQ(r.le_plus_cn, make_rational(960, 7));
  EXPECT_TRUE(r.discrepancies.empty());
  const auto s = structural(QuasidihedralSpec{4});
  EXPECT_EQ(r.cnl, s.cnl);
  EXPECT_EQ(r.cnsl, s.cnsl);
}

TEST(Formulas, PslBranches) {
  const auto small = eval_psl(2);
  EXPECT_EQ(*small.printed_le_plus_cn, make_rational(9260, 59));
  EXPECT_EQ(small.le_plus_cn, make_rational(9260, 59));
  EXPECT_EQ(eval_psl(3).branch, "k>=3");
  EXPECT_TRUE(eval_psl(3).discrepancies.empty());
  EXPECT_EQ(eval_psl(2).cnl, structural(SL2Spec{4}).cnl);
}

TEST(Formulas, GlAndHanakiAgreeWithStructure) {
  EXPECT_EQ(eval_gl(3).cnl, structural(GL2Spec{3}).cnl);
  EXPECT_EQ(eval_gl(3).le_cn, make_rational(9720, 23));
  EXPECT_EQ(eval_hanaki_nu(2).le_cn, 36);
  EXPECT_EQ(eval_hanaki_nu(2).cnsl, structural(HanakiNuSpec{2}).cnsl);
  EXPECT_EQ(eval_hanaki_p(3, 1).le_plus_cn, 160);
  EXPECT_EQ(eval_hanaki_p(2, 2).cnl, structural(HanakiPSpec{2, 2}).cnl);
}

TEST(Formulas, Sz2QuotientPrintedValues) {
  const auto one = eval_sz2_quotient(1);
  EXPECT_EQ(one.le_cn, make_rational(648, 19));
  EXPECT_EQ(one.le_plus_cn, make_rational(700, 19));
  EXPECT_EQ(one.branch, "z=1");
  const auto two = eval_sz2_quotient(2);
  EXPECT_EQ(two.le_cn, make_rational(6216, 19));
  EXPECT_EQ(two.cnsl, structural(product(Sz2Spec{}, {2})).cnsl);
  EXPECT_TRUE(two.discrepancies.empty());
}

TEST(Formulas, ZpZpQuotient) {
  const auto r = eval_zpzp_quotient(2, 1);
  EXPECT_EQ(r.le_cn, 0);
  EXPECT_EQ(r.branch, "p=2,z=1");
  EXPECT_EQ(eval_zpzp_quotient(3, 3).cnl, structural(HanakiPSpec{3, 1}).cnl);
  EXPECT_THROW(eval_zpzp_quotient(4, 2), Error);
}

TEST(Formulas, D2mQuotientMatchesDihedral) {
  // D_10 has trivial center and central quotient D_10.
  const auto r = eval_d2m_quotient(5, 1);
  EXPECT_EQ(r.cnl, structural(DihedralSpec{5}).cnl);
  EXPECT_EQ(r.le_cn, 32);
  EXPECT_EQ(r.le_plus_cn, make_rational(80, 3));
  const auto two = eval_d2m_quotient(2, 1);
  EXPECT_EQ(two.le_cn, 0);
  EXPECT_EQ(two.le_plus_cn, 0);
}

TEST(Formulas, CorollariesMatchStructure) {
  EXPECT_EQ(eval_corollary(Corollary::Dihedral, 12).le_cn, make_rational(9360, 11));
  EXPECT_EQ(eval_corollary(Corollary::Dicyclic, 3).cnl, structural(DicyclicSpec{3}).cnl);
  EXPECT_EQ(eval_corollary(Corollary::Metacyclic, 5, 2).le_cn, make_rational(1232, 3));
  EXPECT_EQ(eval_corollary(Corollary::OrderP3, 3).le_cn, 160);
}

TEST(Formulas, U6nCnslTopEigenvalueErratumIsRecordedAndExplained) {
  const auto r = eval_corollary(Corollary::U6n, 3);
  ASSERT_TRUE(has_field(r, "cnsl-spectrum"));
  for (const auto& d : r.discrepancies) EXPECT_TRUE(is_explained(d)) << d.field;
  EXPECT_EQ(r.cnsl, structural(U6nSpec{3}).cnsl);
}

TEST(Formulas, MetacyclicM4PrintedEnergyIsKnownErratum) {
  const auto r = eval_corollary(Corollary::Metacyclic, 4, 3);
  ASSERT_TRUE(has_field(r, "le_cn"));
  for (const auto& d : r.discrepancies) EXPECT_TRUE(is_explained(d));
  EXPECT_EQ(r.cnl, structural(MetacyclicSpec{4, 3}).cnl);
}

TEST(Formulas, AcProductRecipe) {
  // Sz(2) x Z_3 from its centralizer sizes 4 (x5) and 5 (x1) over a trivial center.
  const auto r = eval_ac_product({4, 4, 4, 4, 4, 5}, 1, 3);
  EXPECT_EQ(r.source, "ac-product");
  EXPECT_EQ(r.cnl, structural(product(Sz2Spec{}, {3})).cnl);
  EXPECT_EQ(eval_ac_general({4, 4, 4, 4, 4, 5}, 1).le_cn, make_rational(648, 19));
  EXPECT_THROW(eval_ac_product({4}, 0, 1), Error);
}

TEST(Formulas, DomainChecks) {
  EXPECT_THROW(eval_qd(3), Error);
  EXPECT_THROW(eval_psl(1), Error);
  EXPECT_THROW(eval_sz2_quotient(0), Error);
  EXPECT_THROW(eval_d2m_quotient(1, 1), Error);
}

TEST(Formulas, ErrataRegistryLookups) {
  EXPECT_NE(find_erratum("sz2-quotient", "cnl-baseline-difference", {{"z", 1}}), nullptr);
  EXPECT_EQ(find_erratum("sz2-quotient", "cnl-baseline-difference", {{"z", 2}}), nullptr);
  EXPECT_NE(find_erratum("metacyclic", "cnsl-verdict", {{"m", 5}, {"n", 2}}), nullptr);
  EXPECT_EQ(find_erratum("metacyclic", "cnsl-verdict", {{"m", 7}, {"n", 2}}), nullptr);
  EXPECT_EQ(find_erratum("quasidihedral", "le_cn", {{"n", 4}}), nullptr);
}

TEST(Formulas, EnergiesAreTraceConsistent) {
  for (long n = 4; n <= 9; ++n) {
    const auto r = eval_qd(n);
    EXPECT_EQ(r.cnl.total_multiplicity(), r.vertex_count);
    EXPECT_EQ(r.cnl.trace(), r.cnsl.trace());  // both equal tr(CNRS)
    EXPECT_EQ(r.cnl.trace(), r.delta * static_cast<unsigned long>(r.vertex_count));
  }
}
