// Regular subdivisions, exhaustive triangulation enumeration, unimodularity
// and regularity of triangulations of vector configurations.
#pragma once

#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <optional>
#include <vector>

namespace svc {

/// Guard on the configuration size for exhaustive enumeration.
inline constexpr std::size_t kMaxTriangulationSize = 12;

/// A minimal linear dependency sum_{pos} l_i b_i = sum_{neg} l_i b_i with all
/// l_i > 0. Each circuit is listed once, with the lexicographically first
/// element in `pos`.
struct Circuit {
  Cell pos;
  Cell neg;
};

std::vector<Circuit> circuits(const Configuration &b);

/// Active sets of the vertices of P_c (the normal fan).
Subdivision regular_subdivision(const Configuration &b, const IntVec &c);

struct LiftedTriangulation {
  Subdivision triangulation;
  IntVec lifting;
};

/// A regular triangulation refining regular_subdivision(b, c). For pointed
/// configurations every vector of a cell of the coarse subdivision spans a
/// ray of the result.
LiftedTriangulation refine_to_triangulation(const Configuration &b,
                                            const IntVec &c);

/// Every cell has m linearly independent vectors, cells intersect properly,
/// and the union of their cones is cone(b).
bool is_triangulation(const Configuration &b, const Subdivision &s);

/// Every vector spans a ray of the fan.
bool uses_all_vectors(const Configuration &b, const Subdivision &s);

/// Every maximal cell is a lattice basis of Z^m.
bool is_unimodular(const Configuration &b, const Subdivision &s);

struct RegularityResult {
  bool regular = false;
  /// Integer c with regular_subdivision(b, c) == s.
  std::optional<IntVec> lifting;
};

RegularityResult is_regular(const Configuration &b, const Subdivision &s);

/// All triangulations of cone(b), sorted. With usesAllVectors only those in
/// which every vector spans a ray.
std::vector<Subdivision> all_triangulations(const Configuration &b,
                                            bool usesAllVectors,
                                            std::size_t maxSize = kMaxTriangulationSize);

}  // namespace svc
