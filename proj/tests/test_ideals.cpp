#include "svc/cone.hpp"
#include "svc/fixtures.hpp"
#include "svc/ideals.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace svc;

namespace {

bool divides(const Exponent &a, const Exponent &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Exponent ex(std::initializer_list<long> v) { return Exponent(v); }

std::set<std::pair<Exponent, Exponent>> unordered(const std::vector<Binomial> &v) {
  std::set<std::pair<Exponent, Exponent>> out;
  for (const Binomial &b : v)
    out.insert(std::minmax(b.plus, b.minus));
  return out;
}

bool in_row_lattice(const Configuration &b, const Binomial &f) {
  std::vector<IntVec> rows = b.matrix().row_list();
  IntVec d;
  for (std::size_t i = 0; i < f.plus.size(); ++i)
    d.emplace_back(f.plus[i] - f.minus[i]);
  return lattice_solve(rows, d).has_value();
}

}  // namespace

TEST(Format, Binomials) {
  EXPECT_EQ(to_string(make_binomial(ex({2, 1, 0, 0, 0, 0}), ex({0, 0, 0, 0, 1, 2}))),
            "x1^2*x2 - x5*x6^2");
  EXPECT_EQ(to_string(make_binomial(ex({1, 0}), ex({0, 0}))), "x1 - 1");
  EXPECT_EQ(to_string(make_monomial(ex({0, 3}))), "x2^3");
}

TEST(LatticeIdeal, DimensionOne) {
  LatticeIdeal j = lattice_ideal(fixture("b_neg2_3").config);
  ASSERT_EQ(j.generators.size(), 1u);
  EXPECT_EQ(to_string(j.generators[0]), "x2^3 - x1^2");
  EXPECT_TRUE(j.saturationCertified);
  LatticeIdeal k = lattice_ideal(fixture("b_2_3").config);
  ASSERT_EQ(k.generators.size(), 1u);
  EXPECT_EQ(to_string(k.generators[0]), "x1^2*x2^3 - 1");
}

TEST(LatticeIdeal, InitialIdealsInDimensionOne) {
  LatticeIdeal j = lattice_ideal(fixture("b_neg2_3").config);
  InitialIdeal pos = initial_ideal(j, RatVec{1});
  InitialIdeal neg = initial_ideal(j, RatVec{-1});
  EXPECT_NE(pos.first_terms(), neg.first_terms());
  LatticeIdeal k = lattice_ideal(fixture("b_2_3").config);
  EXPECT_EQ(initial_ideal(k, RatVec{1}).first_terms(),
            initial_ideal(k, RatVec{7}).first_terms());
  EXPECT_THROW(initial_ideal(k, RatVec{-1}), Error);
}

TEST(GroebnerBasis, PentagonalChamberGolden) {
  const Configuration &b = fixture("quad51").config;
  LatticeIdeal j = lattice_ideal(b);
  GroebnerBasis gb = groebner_basis(j, weight_order_from_omega(b, {0, 0, 0, 0, 1, 4, 1, 0}));
  std::vector<std::pair<Binomial, bool>> printed = {
      {make_binomial(ex({0, 4, 1, 0, 0, 2, 0, 0}), ex({0, 0, 0, 2, 5, 0, 1, 0})), true},
      {make_binomial(ex({0, 0, 0, 0, 1, 0, 1, 2}), ex({2, 2, 1, 0, 0, 0, 0, 0})), false},
      {make_binomial(ex({0, 1, 0, 0, 0, 1, 0, 1}), ex({1, 0, 0, 1, 2, 0, 0, 0})), false},
      {make_binomial(ex({0, 0, 0, 0, 0, 0, 1, 3}), ex({4, 3, 2, 1, 0, 0, 0, 0})), true},
      {make_binomial(ex({0, 0, 0, 0, 0, 1, 0, 2}), ex({3, 0, 1, 2, 3, 0, 0, 0})), true},
      {make_binomial(ex({0, 0, 0, 1, 2, 0, 1, 1}), ex({0, 1, 0, 0, 0, 0, 0, 0})), false},
      {make_binomial(ex({1, 2, 1, 0, 0, 1, 0, 0}), ex({0, 0, 0, 0, 1, 0, 0, 0})), false},
      {make_binomial(ex({1, 0, 0, 2, 4, 0, 1, 0}), ex({0, 2, 0, 0, 0, 1, 0, 0})), true},
      {make_binomial(ex({2, 1, 1, 1, 1, 0, 0, 0}), ex({0, 0, 0, 0, 0, 0, 0, 1})), true},
      {make_binomial(ex({2, 0, 1, 2, 3, 0, 1, 0}), ex({0, 0, 0, 0, 0, 0, 0, 0})), false},
  };
  ASSERT_EQ(gb.elements.size(), printed.size());
  GroebnerCone gc = groebner_cone(gb, b);
  for (const auto &[f, flip] : printed) {
    auto it = std::find(gb.elements.begin(), gb.elements.end(), f);
    ASSERT_NE(it, gb.elements.end()) << to_string(f);
    EXPECT_EQ(gc.flippable[it - gb.elements.begin()], flip) << to_string(f);
  }
}

TEST(GroebnerBasis, ReducedBasisInvariants) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(0, 5);
  for (const char *name : {"rect61", "quad51", "unit_square", "hilbert3d+"}) {
    const Configuration &b = fixture(name).config;
    LatticeIdeal j = lattice_ideal(b);
    EXPECT_TRUE(j.saturationCertified) << name;
    for (int trial = 0; trial < 4; ++trial) {
      RatVec omega(b.size());
      for (Rat &x : omega)
        x = d(rng);
      WeightOrder wo = weight_order_from_omega(b, omega);
      GroebnerBasis gb = groebner_basis(j, wo);
      TermOrder ord = wo.term_order();
      for (const Binomial &f : gb.elements) {
        EXPECT_FALSE(f.monomial);
        EXPECT_GT(ord.compare(f.plus, f.minus), 0);
        EXPECT_TRUE(in_row_lattice(b, f)) << to_string(f);
        for (const Binomial &g : gb.elements) {
          if (&f == &g)
            continue;
          EXPECT_FALSE(divides(g.plus, f.plus));
          EXPECT_FALSE(divides(g.plus, f.minus));
        }
      }
      // the basis generates the same ideal as the graded one
      EXPECT_TRUE(same_ideal(gb.elements, j.generators, b.size()));
    }
  }
}

TEST(GroebnerBasis, NormalFormsAgreeWithinAFiber) {
  const Configuration &b = fixture("quad51").config;
  LatticeIdeal j = lattice_ideal(b);
  GroebnerBasis gb = groebner_basis(j, weight_order_from_omega(b, {0, 0, 0, 0, 1, 4, 1, 0}));
  std::vector<IntVec> rows = b.matrix().row_list();
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<long> d(0, 3), coef(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Exponent u(8), v(8);
    for (long &x : u)
      x = d(rng) + 3;
    IntVec z = {coef(rng), coef(rng), coef(rng)};
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i) {
      v[i] = u[i] - dot(b[i], z).get_si();
      if (v[i] < 0)
        ok = false;
    }
    if (!ok)
      continue;
    EXPECT_EQ(normal_form(u, gb), normal_form(v, gb));
  }
}

TEST(InitialIdeal, CentroidOfRectangleGolden) {
  const Configuration &b = fixture("rect61").config;
  InitialIdeal in = initial_ideal(lattice_ideal(b), RatVec{2, 2, 1});
  EXPECT_FALSE(in.is_monomial());
  std::vector<Binomial> printed = {
      make_monomial(ex({1, 1, 1, 0, 0, 0})),
      make_monomial(ex({0, 0, 0, 1, 1, 1})),
      make_monomial(ex({0, 0, 1, 0, 1, 2})),
      make_binomial(ex({2, 1, 0, 0, 0, 0}), ex({0, 0, 0, 0, 1, 2})),
      make_binomial(ex({0, 0, 0, 2, 1, 0}), ex({0, 1, 2, 0, 0, 0})),
      make_binomial(ex({0, 0, 1, 0, 0, 1}), ex({1, 0, 0, 1, 0, 0})),
  };
  std::vector<Binomial> computedBin, printedBin;
  std::vector<Exponent> computedMono, printedMono;
  for (const Binomial &f : in.generators) {
    if (f.monomial)
      computedMono.push_back(f.plus);
    else
      computedBin.push_back(f);
  }
  for (const Binomial &f : printed) {
    if (f.monomial)
      printedMono.push_back(f.plus);
    else
      printedBin.push_back(f);
  }
  EXPECT_EQ(unordered(computedBin), unordered(printedBin));
  EXPECT_EQ(make_monomial_ideal(computedMono), make_monomial_ideal(printedMono));
  EXPECT_TRUE(same_ideal(in.generators, printed, 6));

  // first printed terms, then minimal primes
  std::vector<Exponent> first;
  for (const Binomial &f : printed)
    first.push_back(f.plus);
  std::vector<Cell> primes = minimal_primes(make_monomial_ideal(first));
  std::vector<Cell> expected = {{0, 2, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}};
  EXPECT_EQ(primes, expected);
}

TEST(InitialIdeal, GenericWeightIsMonomialAndAGraded) {
  const Configuration &b = fixture("rect61").config;
  InitialIdeal in = initial_ideal(lattice_ideal(b), RatVec{7, 9, 4});
  EXPECT_TRUE(in.is_monomial());
  EXPECT_TRUE(is_A_graded(in.first_terms(), b, 6));
  EXPECT_FALSE(is_A_graded(make_monomial_ideal({ex({1, 0, 0, 0, 0, 0})}), b, 6));
}

TEST(InitialIdeal, WeightOutsideTheCone) {
  const Configuration &b = fixture("rect61").config;
  EXPECT_THROW(weight_order_for(b, RatVec{-1, 0, 0}), Error);
  WeightOrder wo = weight_order_for(b, RatVec{2, 2, 1});
  RatVec back(3, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_GE(wo.omega[i], 0);
    for (std::size_t k = 0; k < 3; ++k)
      back[k] += wo.omega[i] * b[i][k];
  }
  EXPECT_EQ(back, (RatVec{2, 2, 1}));
}

TEST(MonomialIdeal, MinimalPrimesAndMembership) {
  MonomialIdeal m = make_monomial_ideal({ex({1, 1, 0}), ex({0, 1, 1}), ex({1, 1, 1})});
  EXPECT_EQ(m.generators.size(), 2u);
  EXPECT_TRUE(m.contains(ex({2, 3, 0})));
  EXPECT_FALSE(m.contains(ex({5, 0, 5})));
  EXPECT_EQ(minimal_primes(m), (std::vector<Cell>{{0, 2}, {1}}));
}

TEST(Buchberger, MixedMonomialAndBinomialInput) {
  // <x1 - x2, x2^2> contains x1^2 and x1 x2
  std::vector<Binomial> gens = {make_binomial(ex({1, 0}), ex({0, 1})),
                                make_monomial(ex({0, 2}))};
  GroebnerBasis gb = buchberger_reduced(gens, graded_order(2));
  EXPECT_FALSE(normal_form(ex({2, 0}), gb).has_value());
  EXPECT_FALSE(normal_form(ex({1, 1}), gb).has_value());
  EXPECT_TRUE(normal_form(ex({1, 0}), gb).has_value());
}
