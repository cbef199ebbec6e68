#include "svc/fixtures.hpp"

#include <algorithm>

namespace svc {

namespace {

Configuration columns(std::vector<IntVec> rows, const std::string &name) {
  std::size_t n = rows.front().size();
  return Configuration::from_matrix(IntMatrix::from_rows(rows, n), name);
}

Configuration vectors(std::size_t dim, std::vector<IntVec> vs,
                      const std::string &name) {
  return Configuration(dim, std::move(vs), name);
}

std::vector<IntVec> signed_cube() {
  std::vector<IntVec> out;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        if (a || b || c)
          out.push_back({a, b, c});
  return out;
}

std::vector<Fixture> build() {
  std::vector<IntVec> cube = {{1, 1, 1, 1, 1, 1, 1, 1},
                              {0, 1, 0, 1, 0, 1, 0, 1},
                              {0, 0, 1, 1, 0, 0, 1, 1},
                              {0, 0, 0, 0, 1, 1, 1, 1}};
  std::vector<IntVec> cubePlus = cube;
  for (std::size_t k = 0; k < 4; ++k)
    cubePlus[k].push_back(k == 0 ? 2 : 1);
  std::vector<IntVec> hilbert3d = {{1, 0, 0}, {0, 1, 0}, {1, 1, 1},
                                   {1, 1, 2}, {1, 2, 3}, {1, 2, 4}};
  std::vector<IntVec> hilbert3dPlus = hilbert3d;
  hilbert3dPlus.push_back({1, 2, 2});

  std::vector<Fixture> out = {
      {"b_neg2_3", "dimension one, normal but not supernormal",
       vectors(1, {{-2}, {3}}, "b_neg2_3")},
      {"b_2_3", "dimension one, pointed and not normal",
       vectors(1, {{2}, {3}}, "b_2_3")},
      {"b_neg1_1", "dimension one, {-1, +1}", vectors(1, {{-1}, {1}}, "b_neg1_1")},
      {"planar", "pointed, normal, not supernormal",
       vectors(2, {{1, 0}, {1, 2}, {0, 1}}, "planar")},
      {"hilbert3d", "Hilbert basis of cone((1,0,0),(0,1,0),(1,2,4))",
       vectors(3, hilbert3d, "hilbert3d")},
      {"hilbert3d+", "hilbert3d together with (1,2,2)",
       vectors(3, hilbert3dPlus, "hilbert3d+")},
      {"ex24", "the 26 nonzero vectors of {-1,0,1}^3",
       vectors(3, signed_cube(), "ex24")},
      {"cube4", "cone over the three-dimensional cube", columns(cube, "cube4")},
      {"cube4+", "cube4 together with the centroid (2,1,1,1)",
       columns(cubePlus, "cube4+")},
      {"quad51", "cone over the quadrilateral with vertices (1,0),(0,1),(2,3),(3,1)",
       columns({{1, 1, 1, 1, 1, 1, 1, 1},
                {1, 0, 1, 2, 3, 1, 2, 2},
                {0, 1, 1, 1, 1, 2, 2, 3}},
               "quad51")},
      {"rect61", "cone over the 2 x 1 lattice rectangle",
       columns({{1, 1, 1, 1, 1, 1}, {0, 1, 2, 0, 1, 2}, {0, 0, 0, 1, 1, 1}},
               "rect61")},
      {"unit_square", "cone over the unit square",
       columns({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}, "unit_square")},
      {"thm23", "P_0, ..., P_12 of the index-two sequence",
       vectors(3, generator_sequence(13), "thm23")},
      {"standard2", "standard basis of Z^2",
       vectors(2, {{1, 0}, {0, 1}}, "standard2")},
  };
  std::sort(out.begin(), out.end(),
            [](const Fixture &a, const Fixture &b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<Fixture> &fixture_catalog() {
  static const std::vector<Fixture> catalog = build();
  return catalog;
}

const Fixture &fixture(const std::string &name) {
  for (const Fixture &f : fixture_catalog())
    if (f.name == name)
      return f;
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

std::vector<IntVec> generator_sequence(std::size_t count) {
  std::vector<IntVec> p = {{-1, 1, 2}, {1, -1, 1}, {0, 1, 0}, {1, 0, 0}};
  for (std::size_t i = 4; i < count; ++i) {
    IntVec next(3);
    for (std::size_t k = 0; k < 3; ++k) {
      Int s = p[i - 2][k] + p[i - 1][k] + p[i % 2][k];
      if (s % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "sequence left the lattice");
      next[k] = s / 2;
    }
    p.push_back(next);
  }
  p.resize(count);
  return p;
}

}  // namespace svc
