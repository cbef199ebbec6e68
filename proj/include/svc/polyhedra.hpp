// The polyhedra P_c = {x : b_i.x <= c_i}, their lattice points and integer
// hulls Q_c, and normal fans.
#pragma once

#include "svc/cone.hpp"
#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <optional>
#include <vector>

namespace svc {

struct PolyhedronPc {
  Configuration config;
  IntVec c;
  /// Lex-sorted. Empty iff P_c is empty (the configuration spans R^m).
  std::vector<RatVec> vertices;
  /// P_0 = {x : b_i.x <= 0}.
  Cone recessionCone;

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return recessionCone.extremeRays.empty(); }
  /// Indices i with b_i.x == c_i.
  Cell active_set(const RatVec &x) const;
};

/// Requires a configuration of full rank m.
PolyhedronPc make_polyhedron(const Configuration &b, const IntVec &c);

struct IntBox {
  IntVec lo;
  IntVec hi;
};

/// Bounding box of the vertices, rounded outward.
IntBox vertex_box(const PolyhedronPc &p);

/// Vertex box enlarged by the extreme rays of P_0. Every lattice point z of
/// P_c can be written z = y + r with y a lattice point of P_c inside this box
/// and r an integer point of P_0, so slack minima and integer hull vertices
/// are attained inside it.
IntBox reduced_box(const PolyhedronPc &p);

/// All lattice points, lex-sorted. Throws Unbounded for unbounded P_c.
std::vector<IntVec> lattice_points(const PolyhedronPc &p);
/// Lattice points of P_c inside the box, lex-sorted.
std::vector<IntVec> lattice_points(const PolyhedronPc &p, const IntBox &box);
/// Lattice points of P_c inside reduced_box.
std::vector<IntVec> representative_points(const PolyhedronPc &p);

struct IntegerHullQc {
  /// Lex-sorted vertices of Q_c; Q_c = conv(hullVertices) + P_0.
  std::vector<IntVec> hullVertices;
};

IntegerHullQc integer_hull(const PolyhedronPc &p);

/// Maximal cells sigma(v) = active set of each vertex v.
Subdivision normal_fan(const PolyhedronPc &p);

/// Guard on the number of lattice points visited by box enumeration.
inline constexpr std::size_t kMaxBoxPoints = 2000000;

}  // namespace svc
