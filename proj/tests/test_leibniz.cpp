#include "valg/leibniz.hpp"
#include "valg/sl2_family.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace valg;

namespace {

LeibnizAlg abelian(std::size_t n) { return {n, Trilinear(n, n, n)}; }

// Upper triangular 2x2 matrices: basis h' = e11, z = e22, x = e12.
LeibnizAlg borel() {
  LeibnizAlg l{3, Trilinear(3, 3, 3)};
  l.bracket.at(0, 2, 2) = 1;
  l.bracket.at(2, 0, 2) = -1;
  l.bracket.at(1, 2, 2) = -1;
  l.bracket.at(2, 1, 2) = 1;
  return l;
}

Subspace tail_space(std::size_t n, std::size_t from) {
  std::vector<Vec> rows;
  for (std::size_t i = from; i < n; ++i) rows.push_back(unit_vec(n, i));
  return Subspace::span(n, rows);
}

}  // namespace

TEST(Leibniz, Sl2IsSimpleLie) {
  LeibnizAlg g = sl2();
  EXPECT_TRUE(check_left_leibniz(g).empty());
  EXPECT_TRUE(is_lie(g));
  EXPECT_TRUE(is_simple_lie(g));
  EXPECT_TRUE(is_simple(g));
  EXPECT_TRUE(leib_ideal(g).is_zero());
  // Killing form in basis e, f, h: K(e,f) = 4, K(h,h) = 8.
  EXPECT_EQ(killing_form(g), RatMatrix(3, 3, {0, 4, 0, 4, 0, 0, 0, 0, 8}));
}

TEST(Leibniz, Sl2ModulesSatisfyTheModuleAxioms) {
  for (long m = 0; m <= 5; ++m) {
    LeibnizModule v = sl2_module(m);
    EXPECT_EQ(v.dim, static_cast<std::size_t>(m + 1));
    EXPECT_TRUE(check_module(v).empty()) << "m = " << m;
  }
}

TEST(Leibniz, AbelianAndSolvableAreNotSimple) {
  EXPECT_FALSE(is_simple(abelian(1)));
  EXPECT_FALSE(is_simple(abelian(3)));
  EXPECT_TRUE(is_solvable(borel()));
  EXPECT_FALSE(is_simple(borel()));
  EXPECT_FALSE(is_semisimple(borel()));
  EXPECT_EQ(radical(borel()).dim(), 3u);
}

TEST(Leibniz, HemisemidirectSimpleForEachModuleDim) {
  for (long dim = 2; dim <= 5; ++dim) {
    LeibnizAlg l = build_simple_leibniz_sl2(dim);
    ASSERT_EQ(l.dim, static_cast<std::size_t>(3 + dim));
    EXPECT_TRUE(check_left_leibniz(l).empty());
    EXPECT_FALSE(is_lie(l));
    EXPECT_EQ(leib_ideal(l), tail_space(l.dim, 3)) << "dim V = " << dim;
    EXPECT_TRUE(is_semisimple(l));
    EXPECT_TRUE(is_simple(l)) << "dim V = " << dim;
    EXPECT_TRUE(verify_levi(l, Subspace::span(l.dim, {unit_vec(l.dim, 0), unit_vec(l.dim, 1), unit_vec(l.dim, 2)})));
  }
}

TEST(Leibniz, TrivialSummandBreaksSemisimplicity) {
  LeibnizAlg l = build_hemisemidirect(sl2(), direct_sum(sl2_module(1), sl2_module(0)));
  EXPECT_TRUE(check_left_leibniz(l).empty());
  EXPECT_FALSE(is_semisimple(l));
  EXPECT_EQ(radical(l).dim(), 3u);
}

TEST(Leibniz, TrivialModuleGivesNonSimple) {
  // Leib = V with sl2 acting by zero: condition on a nontrivial action fails.
  LeibnizAlg l = build_hemisemidirect(sl2(), sl2_module(0));
  EXPECT_TRUE(check_left_leibniz(l).empty());
  EXPECT_FALSE(is_simple(l));
}

TEST(Leibniz, DoubleModuleIsSemisimpleButNotSimple) {
  LeibnizAlg l = build_hemisemidirect(sl2(), direct_sum(sl2_module(1), sl2_module(1)));
  EXPECT_TRUE(check_left_leibniz(l).empty());
  EXPECT_EQ(leib_ideal(l).dim(), 4u);
  EXPECT_TRUE(is_semisimple(l));
  EXPECT_FALSE(is_simple(l));
  Subspace first = Subspace::span(l.dim, {unit_vec(l.dim, 3), unit_vec(l.dim, 4)});
  EXPECT_TRUE(is_leibniz_ideal(l, first, Side::two_sided));
}

TEST(Leibniz, DerivedSeriesOfLeibStopsAfterOneStep) {
  LeibnizAlg l = build_simple_leibniz_sl2(3);
  auto series = derived_series(l, leib_ideal(l));
  ASSERT_EQ(series.size(), 2u);
  EXPECT_EQ(series[0], leib_ideal(l));
  EXPECT_TRUE(series[1].is_zero());
  // The whole algebra is perfect: the series stalls at l itself.
  auto whole = derived_series(l);
  EXPECT_EQ(whole.back(), Subspace::full(l.dim));
}

TEST(Leibniz, QuotientByLeibIsSl2) {
  LeibnizAlg l = build_simple_leibniz_sl2(2);
  LeibnizAlg q = quotient(l, leib_ideal(l));
  EXPECT_EQ(q.bracket, sl2().bracket);
  EXPECT_THROW(quotient(l, Subspace::span(l.dim, {unit_vec(l.dim, 0)})), std::invalid_argument);
}

TEST(Leibniz, IdealSidedness) {
  LeibnizAlg l = build_simple_leibniz_sl2(2);
  Subspace g = Subspace::span(l.dim, {unit_vec(l.dim, 0), unit_vec(l.dim, 1), unit_vec(l.dim, 2)});
  // [V, g] = 0 and [g, g] = g, but [g, V] lands in V: [l, g] stays in g only.
  EXPECT_TRUE(is_leibniz_ideal(l, g, Side::left));
  EXPECT_FALSE(is_leibniz_ideal(l, g, Side::right));
}

TEST(LeibnizProperty, RandomModulesGiveLeibnizAlgebras) {
  std::mt19937 rng(23);
  // Nontrivial summands only: a trivial summand is a central ideal outside
  // Leib, which would make the radical strictly larger.
  std::uniform_int_distribution<long> pick(1, 3);
  for (int trial = 0; trial < 8; ++trial) {
    LeibnizModule m = sl2_module(pick(rng));
    for (long extra = pick(rng) - 1; extra > 0; --extra) m = direct_sum(m, sl2_module(pick(rng)));
    LeibnizAlg l = build_hemisemidirect(sl2(), m);
    EXPECT_TRUE(check_left_leibniz(l).empty());
    EXPECT_TRUE(is_semisimple(l));
    // Leib acts trivially from the left: [[a,a],b] = 0.
    Subspace lb = leib_ideal(l);
    for (const auto& v : lb.basis_vectors())
      for (std::size_t j = 0; j < l.dim; ++j) EXPECT_TRUE(is_zero(l(v, unit_vec(l.dim, j))));
  }
}

TEST(LeibnizProperty, SingleEntryMutationsOfSl2AreCaught) {
  LeibnizAlg g = sl2();
  std::size_t caught = 0, total = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        LeibnizAlg m = g;
        m.bracket.at(i, j, k) += 1;
        ++total;
        if (!check_left_leibniz(m).empty() || !is_lie(m)) ++caught;
      }
  EXPECT_EQ(caught, total);
}
