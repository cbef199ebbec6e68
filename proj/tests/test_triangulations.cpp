#include "oracles.hpp"
#include "svc/fixtures.hpp"
#include "svc/triangulations.hpp"
#include "svc/virtual_chambers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace svc;

namespace {

bool refines(const Subdivision &fine, const Subdivision &coarse) {
  for (const Cell &c : fine.cells) {
    bool inside = false;
    for (const Cell &d : coarse.cells)
      if (std::includes(d.begin(), d.end(), c.begin(), c.end()))
        inside = true;
    if (!inside)
      return false;
  }
  return true;
}

Subdivision parse_cells(std::vector<std::vector<std::size_t>> oneBased) {
  for (auto &c : oneBased)
    for (auto &i : c)
      --i;
  return canonical(oneBased);
}

}  // namespace

TEST(Circuits, AreMinimalDependentSets) {
  const Configuration &b = fixture("rect61").config;
  auto cs = circuits(b);
  EXPECT_FALSE(cs.empty());
  for (const Circuit &z : cs) {
    Cell supp = z.pos;
    supp.insert(supp.end(), z.neg.begin(), z.neg.end());
    std::sort(supp.begin(), supp.end());
    std::vector<IntVec> vs = b.subset(supp);
    EXPECT_EQ(rank(vs), supp.size() - 1);
    for (std::size_t drop = 0; drop < supp.size(); ++drop) {
      std::vector<IntVec> sub;
      for (std::size_t k = 0; k < supp.size(); ++k)
        if (k != drop)
          sub.push_back(vs[k]);
      EXPECT_EQ(rank(sub), sub.size());
    }
    EXPECT_EQ(z.pos.front(), supp.front());
  }
}

TEST(Triangulations, PlanarPointedCount) {
  // k distinct directions in an open half-plane: each interior ray is
  // optional, and exactly one triangulation uses every vector
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntVec> vs;
    std::size_t k = 2 + trial % 5;
    while (vs.size() < k) {
      IntVec v = primitive(IntVec{d(rng), std::abs(d(rng)) + 1});
      if (std::find(vs.begin(), vs.end(), v) == vs.end())
        vs.push_back(v);
    }
    Configuration b(2, vs);
    EXPECT_EQ(all_triangulations(b, false).size(), std::size_t(1) << (k - 2));
    EXPECT_EQ(all_triangulations(b, true).size(), 1u);
  }
}

TEST(Triangulations, RectangleConfiguration) {
  const Configuration &b = fixture("rect61").config;
  auto all = all_triangulations(b, false);
  auto full = all_triangulations(b, true);
  EXPECT_EQ(full.size(), 6u);
  EXPECT_EQ(all.size(), 14u);
  for (const Subdivision &t : all) {
    EXPECT_TRUE(is_triangulation(b, t));
    RegularityResult r = is_regular(b, t);
    EXPECT_TRUE(r.regular);
    ASSERT_TRUE(r.lifting);
    EXPECT_EQ(regular_subdivision(b, *r.lifting), t);
  }
  for (const Subdivision &t : full) {
    EXPECT_TRUE(uses_all_vectors(b, t));
    EXPECT_TRUE(is_unimodular(b, t));
  }
}

TEST(Triangulations, GaleDualOfRectangle) {
  Configuration a = gale_configuration(fixture("rect61").config);
  auto ts = all_triangulations(a, false);
  EXPECT_EQ(ts.size(), 18u);
  std::vector<Subdivision> nonRegular;
  for (const Subdivision &t : ts) {
    EXPECT_TRUE(is_triangulation(a, t));
    if (!is_regular(a, t).regular)
      nonRegular.push_back(t);
  }
  std::vector<Subdivision> expected = {
      complement_cells(parse_cells({{1, 3, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                    {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {2, 5, 6}}),
                       6),
      complement_cells(parse_cells({{1, 2, 5}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6},
                                    {2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 4, 6}}),
                       6)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(nonRegular, expected);
}

TEST(Triangulations, RejectsNonTriangulations) {
  const Configuration &b = fixture("rect61").config;
  // overlapping cells
  EXPECT_FALSE(is_triangulation(b, parse_cells({{1, 3, 4}, {1, 3, 6}, {1, 4, 6}})));
  // does not cover
  EXPECT_FALSE(is_triangulation(b, parse_cells({{1, 3, 4}})));
  EXPECT_TRUE(is_triangulation(b, parse_cells({{1, 3, 6}, {1, 4, 6}})));
}

TEST(Refinement, RefinesRegularSubdivision) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> d(-2, 2);
  for (const char *name : {"rect61", "quad51", "unit_square", "hilbert3d+"}) {
    const Configuration &b = fixture(name).config;
    for (int trial = 0; trial < 8; ++trial) {
      IntVec c(b.size());
      for (Int &x : c)
        x = trial == 0 ? 0 : d(rng);
      Subdivision coarse = regular_subdivision(b, c);
      LiftedTriangulation lt = refine_to_triangulation(b, c);
      EXPECT_TRUE(is_triangulation(b, lt.triangulation)) << name;
      EXPECT_TRUE(refines(lt.triangulation, coarse)) << name;
      for (const Cell &cell : coarse.cells)
        for (std::size_t i : cell) {
          bool ray = false;
          for (const Cell &fine : lt.triangulation.cells)
            for (std::size_t j : fine)
              ray = ray || primitive(b[j]) == primitive(b[i]);
          EXPECT_TRUE(ray) << name << " vector " << i;
        }
      if (trial == 0)
        EXPECT_TRUE(uses_all_vectors(b, lt.triangulation)) << name;
      EXPECT_EQ(regular_subdivision(b, lt.lifting), lt.triangulation) << name;
    }
  }
}

TEST(Refinement, GenericRightHandSideGivesTriangulation) {
  const Configuration &b = fixture("rect61").config;
  Subdivision s = regular_subdivision(b, {0, 1, 3, 7, 2, 5});
  EXPECT_TRUE(is_triangulation(b, s));
  EXPECT_EQ(s.cells.size(), 4u);
}

TEST(Unimodular, NonSupernormalHasNonUnimodularCell) {
  const Configuration &b = fixture("hilbert3d").config;
  bool found = false;
  for (const Subdivision &t : all_triangulations(b, true))
    if (!is_unimodular(b, t))
      found = true;
  EXPECT_TRUE(found);
}

TEST(Guards, EnumerationSize) {
  std::vector<IntVec> vs;
  for (long i = 0; i < 13; ++i)
    vs.push_back({1, i});
  EXPECT_THROW(all_triangulations(Configuration(2, vs), false), Error);
}
