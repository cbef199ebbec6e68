// Exact planar arrangement of all segments joining pairs of integer points.
// Coordinates are kept as reduced fractions of 64-bit integers and compared
// with 128-bit products.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace svc {

/// The point (x / d, y / d) with d > 0 and gcd(x, y, d) == 1.
struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t d = 1;

  bool operator==(const Point2 &) const = default;
  bool operator<(const Point2 &o) const;
};

Point2 make_point(std::int64_t x, std::int64_t y, std::int64_t d = 1);

/// Largest admissible absolute input coordinate.
inline constexpr std::int64_t kMaxArrangementCoord = std::int64_t(1) << 15;

struct ArrangementFace {
  /// Vertex indices counterclockwise, including points where the boundary
  /// goes straight on.
  std::vector<std::size_t> boundary;
  /// Corners of the boundary: the number of maximal straight sides.
  std::size_t sides = 0;
};

struct SegmentArrangement {
  std::vector<Point2> vertices;  ///< sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Bounded faces, sorted by their boundary cycles starting at the least
  /// vertex index.
  std::vector<ArrangementFace> faces;
  std::size_t segmentCount = 0;  ///< maximal segments after merging
  bool convexFaces = true;
  /// V - E + F == 1 + number of connected components (F counts bounded faces).
  bool eulerHolds = true;
};

/// Arrangement of the segments between all pairs of the given points.
/// Collinear segments are merged into maximal segments first.
SegmentArrangement
segment_arrangement(const std::vector<std::pair<std::int64_t, std::int64_t>> &points);

}  // namespace svc
