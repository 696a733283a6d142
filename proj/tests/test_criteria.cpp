#include "support/corpus.hpp"

#include "valg/criteria.hpp"
#include "valg/sl2_family.hpp"

#include <gtest/gtest.h>

using namespace valg;

namespace {

CriteriaVerdict run_family(std::size_t l) {
  FamilySpec spec{l, FamilyVariant::semisimple};
  return criteria_engine(build_sl2_algebroid(spec), family_levi(spec));
}

bool concludes(const CriteriaVerdict& v, const std::string& c) {
  return std::find(v.conclusions.begin(), v.conclusions.end(), c) != v.conclusions.end();
}

}  // namespace

TEST(Criteria, LevelOneUsesTheSimpleBranch) {
  CriteriaVerdict v = run_family(1);
  EXPECT_EQ(v.verdict, "IndecomposableNonSimple via Thm 1.2(i)");
  EXPECT_TRUE(concludes(v, "IndecomposableNonSimple via Thm 1.1(ii)"));
  EXPECT_EQ(v.clauses.find("Thm 1.1(i)")->status, Status::fail);
}

TEST(Criteria, HigherLevelsUseTheSemisimpleBranch) {
  for (std::size_t l = 2; l <= 3; ++l) {
    CriteriaVerdict v = run_family(l);
    EXPECT_EQ(v.verdict, "IndecomposableNonSimple via Thm 1.2(ii)") << "l = " << l;
    EXPECT_EQ(v.clauses.find("Thm 1.2(i)")->status, Status::fail);
    EXPECT_TRUE(concludes(v, "IndecomposableNonSimple via Thm 1.1(ii)"));
  }
}

TEST(Criteria, BranchTwoWitnessIsTheNilpotentSpan) {
  const Check* c = run_family(2).clauses.find("Thm 1.1(ii)");
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->detail.find("span{[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]}"), std::string::npos)
      << c->detail;
}

TEST(Criteria, WithoutLeviOnlyTheoremOneOneApplies) {
  CriteriaVerdict v = criteria_engine(build_sl2_algebroid({1, FamilyVariant::semisimple}), std::nullopt);
  EXPECT_EQ(v.clauses.find("Thm 1.2(c)")->status, Status::fail);
  EXPECT_EQ(v.verdict, "IndecomposableNonSimple via Thm 1.1(ii)");
}

TEST(Criteria, WrongLeviTripleFailsClauseC) {
  FamilySpec spec{1, FamilyVariant::semisimple};
  LeviTriple swapped = family_levi(spec);
  std::swap(swapped[0], swapped[1]);
  CriteriaVerdict v = criteria_engine(build_sl2_algebroid(spec), swapped);
  EXPECT_EQ(v.clauses.find("Thm 1.2(c)")->status, Status::fail);
}

TEST(Criteria, DimensionOneAlgebraGivesNoVerdict) {
  CriteriaVerdict v = criteria_engine(valg::testing::sl2_over_scalars(), LeviTriple{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)});
  EXPECT_FALSE(v.decided());
  EXPECT_EQ(v.verdict, "NoVerdict: clause (a) fails");
}

TEST(Criteria, NullPairingTriggersTheRadicalBranch) {
  CriteriaVerdict v = criteria_engine(valg::testing::null_pairing_algebroid(), std::nullopt);
  EXPECT_EQ(v.verdict, "IndecomposableNonSimple via Thm 1.1(i)");
}

TEST(Criteria, NonLocalAlgebraIsUndecided) {
  // A = C x C acting on nothing: clause (b) fails and (a) fails on dim Gamma.
  VertexAlgebroid b = make_vertex_algebroid(valg::testing::split_pair(), 0);
  ASSERT_TRUE(check_vertex_algebroid(b).empty());
  CriteriaVerdict v = criteria_engine(b, std::nullopt);
  EXPECT_FALSE(v.decided());
  EXPECT_EQ(v.clauses.find("Thm 1.1(b)")->status, Status::fail);
}

TEST(Criteria, InvalidInputThrows) {
  VertexAlgebroid b = build_sl2_algebroid({1, FamilyVariant::semisimple});
  b.brk.at(0, 1, 2) += 1;
  EXPECT_THROW(criteria_engine(b, std::nullopt), std::invalid_argument);
}

TEST(Criteria, NonzeroSquare) {
  EXPECT_FALSE(nonzero_square(sl2()));
  auto sq = nonzero_square(build_simple_leibniz_sl2(2));
  ASSERT_TRUE(sq);
}
