#include "valg/lie_algebroid.hpp"
#include "valg/sl2_family.hpp"

#include <gtest/gtest.h>

using namespace valg;
namespace fi = valg::family_index;

namespace {

VertexAlgebroid family(std::size_t l) { return build_sl2_algebroid({l, FamilyVariant::semisimple}); }

// sl2 written out by hand: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
Trilinear sl2_by_hand() {
  Trilinear t(3, 3, 3);
  t.at(0, 1, 2) = 1;
  t.at(1, 0, 2) = -1;
  t.at(2, 0, 0) = 2;
  t.at(0, 2, 0) = -2;
  t.at(2, 1, 1) = -2;
  t.at(1, 2, 1) = 2;
  return t;
}

}  // namespace

TEST(Sl2Family, DimensionsAndLabels) {
  for (std::size_t l = 1; l <= 4; ++l) {
    VertexAlgebroid b = family(l);
    EXPECT_EQ(b.adim(), 2 * l + 1);
    EXPECT_EQ(b.gdim, 2 * l + 3);
    FamilyLabels labels = family_labels({l, FamilyVariant::semisimple});
    EXPECT_EQ(labels.a.size(), b.adim());
    EXPECT_EQ(labels.gamma.size(), b.gdim);
  }
  FamilyLabels one = family_labels({1, FamilyVariant::simple});
  EXPECT_EQ(one.a, (std::vector<std::string>{"1", "a1_0", "a1_1"}));
  EXPECT_EQ(one.gamma, (std::vector<std::string>{"e", "f", "h", "da1_0", "da1_1"}));
}

TEST(Sl2Family, RejectsBadSpecs) {
  EXPECT_THROW(build_sl2_algebroid({0, FamilyVariant::semisimple}), std::invalid_argument);
  EXPECT_THROW(build_sl2_algebroid({2, FamilyVariant::simple}), std::invalid_argument);
  EXPECT_THROW(build_simple_leibniz_sl2(0), std::invalid_argument);
}

TEST(Sl2Family, AxiomsHoldUpToFourSummands) {
  for (std::size_t l = 1; l <= 4; ++l) EXPECT_TRUE(check_vertex_algebroid(family(l)).empty()) << "l = " << l;
}

TEST(Sl2Family, PairingConstantsAtLevelOne) {
  VertexAlgebroid b = family(1);
  auto g = [&](std::size_t i) { return unit_vec(b.gdim, i); };
  const Vec one = unit_vec(b.adim(), 0);
  EXPECT_EQ(b.pairing(g(fi::e), g(fi::f)), one);  // k = 1
  EXPECT_EQ(b.pairing(g(fi::h), g(fi::h)), Rat(2) * one);
  for (auto [x, y] : {std::pair{fi::e, fi::e}, {fi::f, fi::f}, {fi::e, fi::h}, {fi::f, fi::h}})
    EXPECT_TRUE(is_zero(b.pairing(g(x), g(y))));
}

TEST(Sl2Family, QuotientByAnnihilatorIsSl2) {
  for (std::size_t l = 1; l <= 3; ++l) {
    QuotientAlgebroid q = quotient_lie_algebroid(family(l), QuotientBy::Ann);
    EXPECT_EQ(q.algd.ldim, 3u);
    EXPECT_EQ(q.algd.lie, sl2_by_hand());
    EXPECT_TRUE(check_lie_algebroid(q.algd).empty());
  }
}

TEST(Sl2Family, VerifyReportAllPass) {
  for (std::size_t l = 1; l <= 3; ++l) {
    Report r = verify_family_theorems({l, FamilyVariant::semisimple});
    for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::pass) << "l = " << l << ": " << c.id << " " << c.detail;
    for (std::size_t j = 1; j <= l; ++j) EXPECT_NE(r.find("Cor-Bss.N" + std::to_string(j) + ".irreducible"), nullptr);
  }
}

TEST(Sl2Family, SimpleVariantMatchesLevelOne) {
  VertexAlgebroid s = build_sl2_algebroid({1, FamilyVariant::simple});
  VertexAlgebroid t = family(1);
  EXPECT_EQ(s.brk, t.brk);
  EXPECT_EQ(s.pair, t.pair);
  EXPECT_TRUE(verify_family_theorems({1, FamilyVariant::simple}).all_pass());
}

TEST(Probe, BothDegenerateVariantsAreInfeasible) {
  for (ProbeVariant v : {ProbeVariant::unit, ProbeVariant::nil}) {
    ProbeResult r = probe_dim1_extension(v);
    EXPECT_FALSE(r.feasible);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.back(), "INFEASIBLE");
    EXPECT_FALSE(r.model.has_value());
    bool contradiction = false;
    for (const auto& line : r.trace) contradiction |= line.find("forces k = 0") != std::string::npos;
    EXPECT_TRUE(contradiction);
    // Deterministic replay.
    EXPECT_EQ(probe_dim1_extension(v).trace, r.trace);
  }
}

TEST(Probe, ReferenceModelIsFeasible) {
  ProbeResult r = probe_dim1_extension(ProbeVariant::reference);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.trace.back(), "FEASIBLE");
  ASSERT_TRUE(r.model);
  EXPECT_TRUE(check_vertex_algebroid(*r.model).empty());
}
