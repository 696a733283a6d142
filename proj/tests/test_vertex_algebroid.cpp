#include "support/corpus.hpp"

#include "valg/sl2_family.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace valg;
using valg::testing::null_pairing_algebroid;
using valg::testing::sl2_over_scalars;

namespace {

VertexAlgebroid family(std::size_t l) { return build_sl2_algebroid({l, FamilyVariant::semisimple}); }

Status status_of(const Report& r, const std::string& id) {
  const Check* c = r.find(id);
  EXPECT_NE(c, nullptr) << id;
  return c ? c->status : Status::fail;
}

}  // namespace

TEST(VertexAlgebroid, HandBuiltExamplesAreValid) {
  EXPECT_TRUE(check_vertex_algebroid(sl2_over_scalars()).empty());
  EXPECT_TRUE(check_vertex_algebroid(null_pairing_algebroid()).empty());
}

TEST(VertexAlgebroid, ShapeMismatchThrows) {
  VertexAlgebroid b = sl2_over_scalars();
  b.pair = Trilinear(2, 2, 1);
  EXPECT_THROW(check_vertex_algebroid(b), std::invalid_argument);
}

TEST(VertexAlgebroid, ZeroDerivationOverScalars) {
  VertexAlgebroid b = sl2_over_scalars();
  EXPECT_EQ(ker_partial(b), Subspace::full(1));
  EXPECT_TRUE(leib(b).is_zero());
  EXPECT_TRUE(partial_image(b).is_zero());
  EXPECT_EQ(annihilator(b), Subspace::full(3));
  EXPECT_TRUE(rad_pairing(b).is_zero());
  // Lemma hypotheses fail (Leib = 0), so nothing is asserted.
  Report r = verify_annba(b);
  EXPECT_EQ(status_of(r, "Lemma-annba.hyp.leib-nonzero"), Status::fail);
  EXPECT_EQ(status_of(r, "Lemma-annba.conclusions"), Status::undetermined);
  EXPECT_TRUE(check_containments(b).all_pass());
}

TEST(VertexAlgebroid, NullPairingLeavesKernelEqualityOpen) {
  VertexAlgebroid b = null_pairing_algebroid();
  EXPECT_EQ(rad_pairing(b), Subspace::full(1));
  EXPECT_EQ(ker_partial(b), Subspace::span(2, {unit_vec(2, 0)}));
  Report r = verify_ker_eq_A0(b);
  EXPECT_EQ(status_of(r, "Thm-kerA0.hyp.rad=0"), Status::fail);
  EXPECT_EQ(status_of(r, "Thm-kerA0.ker-in-A0"), Status::pass);
  EXPECT_EQ(status_of(r, "Thm-kerA0.ker=A0"), Status::undetermined);
  EXPECT_TRUE(check_containments(b).all_pass());
}

TEST(VertexAlgebroid, FamilyInvariantsMatchTheTheorem) {
  for (std::size_t l = 1; l <= 3; ++l) {
    VertexAlgebroid b = family(l);
    std::vector<Vec> d_rows;
    for (std::size_t j = 1; j <= l; ++j)
      for (std::size_t i = 0; i < 2; ++i) d_rows.push_back(unit_vec(b.gdim, family_index::d(j, i)));
    Subspace dA = Subspace::span(b.gdim, d_rows);
    EXPECT_EQ(leib(b), dA);
    EXPECT_EQ(partial_image(b), dA);
    EXPECT_EQ(annihilator(b), dA);
    EXPECT_EQ(a_partial_a(b), dA);
    EXPECT_TRUE(rad_pairing(b).is_zero());
    EXPECT_EQ(ker_partial(b), Subspace::span(b.adim(), {unit_vec(b.adim(), 0)}));
    EXPECT_EQ(joint_kernel_A0(b), ker_partial(b));
    EXPECT_TRUE(is_local_over_C(b.a));
    EXPECT_TRUE(is_algebroid_ideal(b, dA));
    EXPECT_TRUE(check_containments(b).all_pass());
    // Gamma is simple only for l = 1; beyond that the Lemma has nothing to say.
    Report annba = verify_annba(b);
    if (l == 1) {
      EXPECT_TRUE(annba.all_pass());
    } else {
      EXPECT_EQ(status_of(annba, "Lemma-annba.hyp.gamma-simple"), Status::fail);
      EXPECT_EQ(status_of(annba, "Lemma-annba.conclusions"), Status::undetermined);
    }
    EXPECT_TRUE(verify_ker_eq_A0(b).all_pass());
  }
}

TEST(VertexAlgebroid, ContainmentsRefuseInvalidInput) {
  VertexAlgebroid b = family(1);
  b.mact.at(family_index::a(1, 0), family_index::e, family_index::e) += 1;
  ASSERT_FALSE(check_vertex_algebroid(b).empty());
  EXPECT_THROW(check_containments(b), std::invalid_argument);
}

TEST(VertexAlgebroid, SubmoduleAndIdealTests) {
  VertexAlgebroid b = family(1);
  Subspace levi = Subspace::span(b.gdim, {unit_vec(b.gdim, 0), unit_vec(b.gdim, 1), unit_vec(b.gdim, 2)});
  // a . e lands in the d-part, so the Levi factor is not an A-submodule.
  EXPECT_FALSE(is_a_submodule(b, levi));
  EXPECT_FALSE(is_algebroid_ideal(b, levi));
  EXPECT_TRUE(is_algebroid_ideal(b, Subspace::full(b.gdim)));
  EXPECT_TRUE(is_algebroid_ideal(b, Subspace::zero(b.gdim)));
}

TEST(VertexAlgebroid, ViolationOrderIgnoresParallelism) {
  VertexAlgebroid b = family(2);
  b.brk.at(family_index::e, family_index::f, family_index::e) += 1;
  b.pair.at(family_index::h, family_index::e, 0) += 1;
  auto parallel = check_vertex_algebroid(b);
  ::setenv("VALG_NO_PARALLEL", "1", 1);
  ASSERT_FALSE(parallel_enabled());
  auto serial = check_vertex_algebroid(b);
  ::unsetenv("VALG_NO_PARALLEL");
  ASSERT_FALSE(parallel.empty());
  ASSERT_EQ(parallel.size(), serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(to_string(parallel[i]), to_string(serial[i]));
}
