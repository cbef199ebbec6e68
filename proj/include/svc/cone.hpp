// Rational polyhedral cones: double description at small dimension, Hilbert
// bases and membership in finitely generated monoids.
#pragma once

#include "svc/lattice.hpp"

#include <optional>
#include <vector>

namespace svc {

/// Default dimension guard for cone computations.
inline constexpr std::size_t kMaxConeDim = 4;

struct Cone {
  std::size_t dim = 0;
  std::vector<IntVec> generators;
  /// Primitive generators of the one-dimensional faces above the lineality
  /// space, one per face, sorted lexicographically.
  std::vector<IntVec> extremeRays;
  /// Primitive normals h in the span with h.x >= 0 on the cone, sorted.
  std::vector<IntVec> facets;
  /// Integer equations of the linear span, in Hermite normal form.
  std::vector<IntVec> equations;
  /// Saturated lattice basis of the lineality space.
  std::vector<IntVec> linealityBasis;

  bool pointed() const { return linealityBasis.empty(); }
  std::size_t span_dim() const { return dim - equations.size(); }
  bool full_dimensional() const { return equations.empty(); }
};

Cone cone_from(const std::vector<IntVec> &vectors, std::size_t dim,
               std::size_t maxDim = kMaxConeDim);
bool cone_contains(const Cone &c, const IntVec &v);
bool cone_contains(const Cone &c, const RatVec &v);
/// True if v lies in the relative interior of the cone.
bool cone_contains_relint(const Cone &c, const RatVec &v);
bool cone_equal(const Cone &a, const Cone &b);

/// Exists u with b.u > 0 for every vector.
bool is_pointed(const std::vector<IntVec> &vectors, std::size_t dim);
/// An integer u with b.u > 0 for every vector, if the set is pointed.
std::optional<IntVec> positive_functional(const std::vector<IntVec> &vectors,
                                          std::size_t dim);

struct HilbertBasis {
  Cone cone;
  std::vector<IntVec> elements;  ///< sorted by (sum of entries, lex)
};

HilbertBasis hilbert_basis(const Cone &c);

struct MonoidMembership {
  bool member = false;
  /// When member: nonnegative integers k with sum k_i g_i == v.
  std::vector<Int> multipliers;
};

MonoidMembership monoid_membership(const IntVec &v,
                                   const std::vector<IntVec> &generators);

/// Integer coefficients t with sum t_i g_i == v, if v is in the group
/// generated by the g_i.
std::optional<IntVec> lattice_solve(const std::vector<IntVec> &generators,
                                    const IntVec &v);

/// Lattice points of the half-open parallelepiped spanned by linearly
/// independent vectors (full rank in their own span lattice).
std::vector<IntVec>
fundamental_parallelepiped(const std::vector<IntVec> &simplex, std::size_t dim);

/// Pulling triangulation of a pointed cone into simplicial subcones; returns
/// index lists into `vectors`.
std::vector<std::vector<std::size_t>>
simplicial_cover(const std::vector<IntVec> &vectors, std::size_t dim);

}  // namespace svc
