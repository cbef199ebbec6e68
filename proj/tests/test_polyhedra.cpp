#include "svc/polyhedra.hpp"
#include "svc/supernormal.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace svc;

namespace {

/// Box enumeration with a direct inequality test.
std::vector<IntVec> brute_points(const Configuration &b, const IntVec &c, long r) {
  std::vector<IntVec> out;
  IntVec z(b.dim(), -r);
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (dot(b[i], z) > c[i])
        inside = false;
    if (inside)
      out.push_back(z);
    std::size_t k = z.size();
    while (k > 0 && z[k - 1] == r)
      z[--k] = -r;
    if (k == 0)
      return out;
    z[k - 1] += 1;
  }
}

}  // namespace

TEST(Polyhedron, UnitSquareVertices) {
  Configuration b(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  PolyhedronPc p = make_polyhedron(b, {1, 1, 0, 0});
  EXPECT_TRUE(p.bounded());
  EXPECT_EQ(p.vertices, (std::vector<RatVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(lattice_points(p).size(), 4u);
  EXPECT_EQ(normal_fan(p).cells.size(), 4u);
}

TEST(Polyhedron, RankDeficientConfiguration) {
  EXPECT_THROW(make_polyhedron(Configuration(2, {{1, 0}, {2, 0}}), {1, 1}), Error);
}

TEST(Polyhedron, EmptyPolyhedron) {
  PolyhedronPc p = make_polyhedron(Configuration(1, {{1}, {-1}}), {-1, 0});
  EXPECT_TRUE(p.empty());
}

TEST(Polyhedron, BoundedLatticePointsMatchBruteForce) {
  Configuration b(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 2}});
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntVec c = {d(rng), d(rng), d(rng), d(rng)};
    PolyhedronPc p = make_polyhedron(b, c);
    if (p.empty())
      continue;
    EXPECT_EQ(lattice_points(p), brute_points(b, c, 15));
  }
}

TEST(Polyhedron, UnboundedNeedsBox) {
  Configuration b(1, {{-2}, {3}});
  PolyhedronPc p = make_polyhedron(b, {1, 1});
  // -2x <= 1 and 3x <= 1 cut out [-1/2, 1/3]
  EXPECT_TRUE(p.bounded());
  EXPECT_EQ(p.vertices, (std::vector<RatVec>{{Rat(-1, 2)}, {Rat(1, 3)}}));
  EXPECT_EQ(lattice_points(p), (std::vector<IntVec>{{0}}));
  Configuration half(2, {{1, 0}, {0, 1}});
  PolyhedronPc q = make_polyhedron(half, {0, 0});
  EXPECT_FALSE(q.bounded());
  EXPECT_THROW(lattice_points(q), Error);
  EXPECT_FALSE(representative_points(q).empty());
}

TEST(Polyhedron, IntegerHullOfTriangle) {
  // 2x + 3y <= c with x, y >= 0
  Configuration b(2, {{-1, 0}, {0, -1}, {2, 3}});
  IntegerHullQc q = integer_hull(make_polyhedron(b, {0, 0, 6}));
  EXPECT_EQ(q.hullVertices, (std::vector<IntVec>{{0, 0}, {0, 2}, {3, 0}}));
  IntegerHullQc q2 = integer_hull(make_polyhedron(b, {0, 0, 5}));
  EXPECT_EQ(q2.hullVertices, (std::vector<IntVec>{{0, 0}, {0, 1}, {1, 1}, {2, 0}}));
}

TEST(Polyhedron, TdiSystemsHaveIntegralVertices) {
  // TDI with integral right-hand side implies P_c = Q_c
  Configuration b(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}});
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> d(0, 5);
  int tdiCount = 0;
  for (int trial = 0; trial < 100; ++trial) {
    IntVec c(6);
    for (Int &x : c)
      x = d(rng);
    PolyhedronPc p = make_polyhedron(b, c);
    if (p.empty() || !is_TDI(b, c))
      continue;
    ++tdiCount;
    for (const RatVec &v : p.vertices)
      for (const Rat &x : v)
        EXPECT_EQ(x.get_den(), 1);
  }
  EXPECT_GT(tdiCount, 0);
}
