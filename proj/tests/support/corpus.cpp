#include "corpus.hpp"

#include "valg/sl2_family.hpp"

namespace valg::testing {

CommAlg dual_numbers() {
  CommAlg a = make_comm_alg(2);
  return a;  // t*t = 0 already
}

CommAlg split_pair() {
  CommAlg a;
  a.dim = 2;
  a.unit = Vec{1, 1};
  a.mul = Trilinear(2, 2, 2);
  a.mul.at(0, 0, 0) = 1;
  a.mul.at(1, 1, 1) = 1;
  return a;
}

Trilinear killing_form_trilinear(const LeibnizAlg& g) {
  RatMatrix k = killing_form(g);
  Trilinear t(g.dim, g.dim, 1);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) t.at(i, j, 0) = k(i, j);
  return t;
}

VertexAlgebroid sl2_over_scalars() {
  LeibnizAlg g = sl2();
  VertexAlgebroid b = make_vertex_algebroid(make_comm_alg(1), 3);
  b.brk = g.bracket;
  b.pair = killing_form_trilinear(g);
  return b;
}

VertexAlgebroid null_pairing_algebroid() {
  VertexAlgebroid b = make_vertex_algebroid(dual_numbers(), 1);
  b.partial(0, 1) = 1;
  return b;
}

TCA sl2_doublet_tca() {
  LeibnizAlg g = sl2();
  LeibnizModule v = sl2_module(1);
  return tca_from_lie_pair(g, killing_form_trilinear(g), v, v, RatMatrix::identity(2));
}

namespace {

std::vector<Trilinear*> tables(VertexAlgebroid& b) { return {&b.a.mul, &b.mact, &b.brk, &b.pair, &b.act}; }

std::size_t table_size(const Trilinear& t) { return t.d_left() * t.d_right() * t.d_out(); }

Fixture named(std::string name, FixtureObject obj) {
  Fixture f;
  f.name = std::move(name);
  f.object = std::move(obj);
  return f;
}

Fixture family(std::size_t l) {
  FamilySpec spec{l, FamilyVariant::semisimple};
  Fixture f = named("sl2-family-l" + std::to_string(l), build_sl2_algebroid(spec));
  FamilyLabels labels = family_labels(spec);
  f.labels["A"] = labels.a;
  f.labels["Gamma"] = labels.gamma;
  auto levi = family_levi(spec);
  f.subspaces["levi"] = {levi[0], levi[1], levi[2]};
  return f;
}

}  // namespace

std::size_t mutable_entry_count(const VertexAlgebroid& b) {
  std::size_t n = b.partial.rows() * b.partial.cols();
  for (auto* t : tables(const_cast<VertexAlgebroid&>(b))) n += table_size(*t);
  return n;
}

bool bump_entry(VertexAlgebroid& b, std::size_t flat) {
  for (auto* t : tables(b)) {
    std::size_t n = table_size(*t);
    if (flat < n) {
      std::size_t k = flat % t->d_out(), rest = flat / t->d_out();
      t->at(rest / t->d_right(), rest % t->d_right(), k) += 1;
      return true;
    }
    flat -= n;
  }
  if (flat < b.partial.rows() * b.partial.cols()) {
    b.partial(flat / b.partial.cols(), flat % b.partial.cols()) += 1;
    return true;
  }
  return false;
}

std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  out.push_back(family(1));
  out.push_back(family(2));
  out.push_back(family(3));

  Fixture scalars = named("sl2-over-scalars", sl2_over_scalars());
  scalars.labels["A"] = {"1"};
  scalars.labels["Gamma"] = {"e", "f", "h"};
  scalars.subspaces["levi"] = {unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)};
  out.push_back(scalars);

  Fixture null_pair = named("null-pairing", null_pairing_algebroid());
  null_pair.labels["A"] = {"1", "t"};
  null_pair.labels["Gamma"] = {"dt"};
  out.push_back(null_pair);

  out.push_back(named("dual-numbers", dual_numbers()));
  out.push_back(named("split-pair", split_pair()));
  out.push_back(named("sl2-doublet-leibniz", build_simple_leibniz_sl2(2)));
  out.push_back(named("sl2-doublet-tca", sl2_doublet_tca()));
  out.push_back(named("sl2-family-l1-tca", tca_of_vertex_algebroid(build_sl2_algebroid({1, FamilyVariant::semisimple}))));

  // Mutants: one bumped constant each.
  VertexAlgebroid m1 = build_sl2_algebroid({1, FamilyVariant::semisimple});
  m1.mact.at(family_index::a(1, 0), family_index::e, family_index::e) += 1;
  out.push_back(named("mutant-family-l1-mact", m1));

  VertexAlgebroid m2 = build_sl2_algebroid({1, FamilyVariant::semisimple});
  m2.pair.at(family_index::e, family_index::f, family_index::unit) += 1;
  out.push_back(named("mutant-family-l1-pair", m2));

  TCA t1 = sl2_doublet_tca();
  t1.brk0.at(0, 1, 2) += 1;
  out.push_back(named("mutant-doublet-tca-brk0", t1));

  TCA t2 = sl2_doublet_tca();
  t2.partial(3, 1) += 1;
  out.push_back(named("mutant-doublet-tca-partial", t2));

  TCA t3 = tca_of_vertex_algebroid(build_sl2_algebroid({1, FamilyVariant::semisimple}));
  t3.act0.at(family_index::e, family_index::a(1, 1), family_index::a(1, 0)) += 1;
  out.push_back(named("mutant-family-l1-tca-act0", t3));

  CommAlg c = dual_numbers();
  c.mul.at(0, 1, 0) += 1;
  out.push_back(named("mutant-dual-numbers", c));

  LeibnizAlg l = build_simple_leibniz_sl2(2);
  l.bracket.at(3, 0, 4) += 1;
  out.push_back(named("mutant-sl2-doublet-leibniz", l));
  return out;
}

}  // namespace valg::testing
