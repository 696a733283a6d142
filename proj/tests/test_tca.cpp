#include "support/corpus.hpp"

#include "valg/sl2_family.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace valg;
using valg::testing::sl2_doublet_tca;

namespace {

bool prop_all_pass(const TCA& c) { return check_prop_C0C1(c).all_pass(); }

}  // namespace

TEST(TCA, DoubletTablesFromTheLiePair) {
  TCA c = sl2_doublet_tca();
  ASSERT_EQ(c.d0, 3u);
  ASSERT_EQ(c.d1, 5u);
  EXPECT_TRUE(check_tca(c).empty());
  EXPECT_TRUE(prop_all_pass(c));
  // e_1 f = K(e, f) 1 = 4 on the scalar line.
  EXPECT_EQ(c.pair1.basis_product(0, 1), (Vec{4, 0, 0}));
  // M pairs with g through phi = id: x_1 m = x . m in A_M.
  EXPECT_EQ(c.pair1.basis_product(1, 3), (Vec{0, 0, 1}));
  EXPECT_EQ(c.pair1.basis_product(3, 1), (Vec{0, 0, 1}));
  // d is zero on the scalar and maps A_M onto M.
  EXPECT_TRUE(is_zero(c.partial.column(0)));
  EXPECT_EQ(c.partial.column(1), (Vec{0, 0, 0, 1, 0}));
}

TEST(TCA, WholeSpaceProductsRespectDegrees) {
  TCA c = sl2_doublet_tca();
  std::size_t n = c.total_dim();
  // a_0 b = 0 and a_1 x = 0 for a in C0.
  for (std::size_t i = 0; i < c.d0; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_TRUE(is_zero(c.product(1, unit_vec(n, i), unit_vec(n, j))));
      if (j < c.d0) {
        EXPECT_TRUE(is_zero(c.product(0, unit_vec(n, i), unit_vec(n, j))));
      }
    }
  EXPECT_THROW(c.product(2, unit_vec(n, 0), unit_vec(n, 0)), std::invalid_argument);
}

TEST(TCA, FamilyAlgebroidGivesATCA) {
  for (std::size_t l = 1; l <= 2; ++l) {
    TCA c = tca_of_vertex_algebroid(build_sl2_algebroid({l, FamilyVariant::semisimple}));
    EXPECT_TRUE(check_tca(c).empty());
    EXPECT_TRUE(prop_all_pass(c));
  }
}

TEST(TCA, InvalidLiePairInputsAreRefused) {
  LeibnizAlg g = sl2();
  Trilinear form = valg::testing::killing_form_trilinear(g);
  LeibnizModule v = sl2_module(1);
  Trilinear skew = form;
  skew.at(0, 1, 0) += 1;
  EXPECT_THROW(tca_from_lie_pair(g, skew, v, v, RatMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(tca_from_lie_pair(g, form, v, v, RatMatrix(2, 2)), std::invalid_argument);
  // Swapping basis vectors does not commute with h.
  EXPECT_THROW(tca_from_lie_pair(g, form, v, v, RatMatrix(2, 2, {0, 1, 1, 0})), std::invalid_argument);
  VertexAlgebroid broken = build_sl2_algebroid({1, FamilyVariant::semisimple});
  broken.partial(3, 1) += 1;
  EXPECT_THROW(tca_of_vertex_algebroid(broken), std::invalid_argument);
}

TEST(TCA, MutantsNameTheBrokenAxiomFamily) {
  TCA c = sl2_doublet_tca();
  c.partial(3, 1) += 1;
  auto bad = check_tca(c);
  ASSERT_FALSE(bad.empty());
  EXPECT_FALSE(prop_all_pass(c));
}

// Equivalence of the axiom list with the module-theoretic description,
// over every single-entry mutation of two base objects.
TEST(TCAProperty, AxiomsAgreeWithModuleDescriptionUnderMutation) {
  std::vector<TCA> bases{sl2_doublet_tca(), tca_of_vertex_algebroid(build_sl2_algebroid({1, FamilyVariant::semisimple}))};
  std::mt19937 rng(29);
  std::size_t mutants = 0;
  for (const TCA& base : bases) {
    std::vector<Trilinear TCA::*> tables{&TCA::act0, &TCA::brk0, &TCA::pair1};
    for (auto table : tables) {
      const Trilinear& t = base.*table;
      std::uniform_int_distribution<std::size_t> di(0, t.d_left() - 1), dj(0, t.d_right() - 1), dk(0, t.d_out() - 1);
      for (int trial = 0; trial < 25; ++trial) {
        TCA m = base;
        (m.*table).at(di(rng), dj(rng), dk(rng)) += trial % 3 == 0 ? Rat(-1, 2) : Rat(1);
        EXPECT_EQ(check_tca(m).empty(), prop_all_pass(m));
        ++mutants;
      }
    }
    for (std::size_t r = 0; r < base.d1; ++r)
      for (std::size_t s = 0; s < base.d0; ++s) {
        TCA m = base;
        m.partial(r, s) += 1;
        EXPECT_EQ(check_tca(m).empty(), prop_all_pass(m));
        ++mutants;
      }
  }
  EXPECT_GT(mutants, 150u);
}
