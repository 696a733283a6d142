#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace valg;
using valg::testing::dual_numbers;
using valg::testing::split_pair;

namespace {

// C[t]/(t^n) on the monomial basis.
CommAlg truncated_poly(std::size_t n) {
  CommAlg a = make_comm_alg(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; i + j < n; ++j) a.mul.at(i, j, i + j) = 1;
  return a;
}

}  // namespace

TEST(CommAlg, AxiomsHoldOnStandardExamples) {
  EXPECT_TRUE(check_comm_assoc(dual_numbers()).empty());
  EXPECT_TRUE(check_comm_assoc(split_pair()).empty());
  EXPECT_TRUE(check_comm_assoc(truncated_poly(5)).empty());
}

TEST(CommAlg, ViolationsNameTheAxiom) {
  CommAlg a = truncated_poly(3);
  a.mul.at(1, 2, 1) = 1;  // t * t^2 = t, but t^2 * t = 0
  auto bad = check_comm_assoc(a);
  ASSERT_FALSE(bad.empty());
  bool commutative = false;
  for (const auto& v : bad) commutative |= v.axiom_id == "calg.commutative";
  EXPECT_TRUE(commutative);
}

TEST(CommAlg, JacobsonRadicalAndLocality) {
  EXPECT_EQ(jacobson_radical(truncated_poly(4)), Subspace::span(4, {unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)}));
  EXPECT_TRUE(is_local_over_C(truncated_poly(4)));
  EXPECT_TRUE(jacobson_radical(split_pair()).is_zero());
  EXPECT_FALSE(is_local_over_C(split_pair()));
  EXPECT_TRUE(is_local_over_C(make_comm_alg(1)));
}

TEST(CommAlg, IdealTest) {
  CommAlg a = truncated_poly(3);
  EXPECT_TRUE(is_assoc_ideal(a, Subspace::span(3, {unit_vec(3, 2)})));
  EXPECT_TRUE(is_assoc_ideal(a, Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)})));
  EXPECT_FALSE(is_assoc_ideal(a, Subspace::span(3, {unit_vec(3, 1)})));
}

TEST(CommAlg, IdempotentsOfSplitPair) {
  CommAlg a = split_pair();
  // The unit lies in span{1}; both primitive idempotents escape a line.
  EXPECT_EQ(idempotents_in(a, Subspace::full(2)).verdict, Tri::yes);
  auto r = idempotents_in(a, Subspace::span(2, {Vec{1, 1}}));
  EXPECT_EQ(r.verdict, Tri::no);
  ASSERT_TRUE(r.escaping);
  Vec e = *r.escaping;
  EXPECT_EQ(a.multiply(e, e), e);
  EXPECT_EQ(idempotents_in(dual_numbers(), Subspace::span(2, {unit_vec(2, 0)})).verdict, Tri::yes);
}
