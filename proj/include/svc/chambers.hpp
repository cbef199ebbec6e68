// Chamber complexes of vector configurations (m <= 3) and the planar
// subdivision of a lattice polygon by all segments between its lattice points.
#pragma once

#include "svc/arrangement.hpp"
#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace svc {

using IntPoint2 = std::pair<std::int64_t, std::int64_t>;

class LatticePolygon {
public:
  /// Convex hull of the given integer points.
  explicit LatticePolygon(std::vector<IntPoint2> points);

  /// Hull vertices, counterclockwise from the lexicographically least.
  const std::vector<IntPoint2> &vertices() const { return vertices_; }
  /// All lattice points in the closed polygon, lex-sorted.
  std::vector<IntPoint2> lattice_points() const;
  bool contains(const IntPoint2 &p) const;

private:
  std::vector<IntPoint2> vertices_;
};

/// Guard on the number of lattice points of a polygon.
inline constexpr std::size_t kMaxPolygonPoints = 120;

struct PlanarChamberComplex {
  std::vector<IntPoint2> latticePoints;
  SegmentArrangement arrangement;
  /// side count -> number of faces
  std::map<std::size_t, std::size_t> facesByEdges;
  std::size_t mu = 0;
};

PlanarChamberComplex polygon_chamber_complex(const LatticePolygon &p,
                                             bool unsafeLarge = false);
std::size_t mu(const LatticePolygon &p, bool unsafeLarge = false);

/// {(1, u, v) : (u, v) lattice point of P}, ordered by v and then u.
Configuration cone_over_polygon(const LatticePolygon &p);

struct Chamber {
  /// Independent m-subsets whose cone contains the chamber.
  std::vector<Cell> containingCells;
  RatVec interiorPoint;
  std::size_t facets = 0;
};

struct ChamberComplex {
  Configuration config;
  /// Sorted by interior point.
  std::vector<Chamber> chambers;
  std::map<std::size_t, std::size_t> facetsCensus;
};

/// Full-dimensional chambers of a configuration of rank m <= 3 (pointed
/// when m == 3).
ChamberComplex chamber_complex(const Configuration &b);

/// Independent m-subsets whose cone contains x in its interior.
std::vector<Cell> containing_cells(const Configuration &b, const RatVec &x);

struct SvgOptions {
  bool shadeByEdges = true;
  bool highlightMax = true;
  double scale = 80.0;
};

std::string emit_svg(const PlanarChamberComplex &pcc, const SvgOptions &opts = {});

}  // namespace svc
