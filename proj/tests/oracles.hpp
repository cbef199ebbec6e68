// Brute-force reference implementations used only by the tests. They are
// slow and deliberately share no code with the library beyond the number
// types.
#pragma once

#include "svc/lattice.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using svc::Int;
using svc::IntVec;
using svc::Rat;

/// Leibniz expansion.
Int det(const std::vector<IntVec> &rows);

/// gcd of the maximal minors of the vectors (as rows), 0 when dependent.
Int minor_gcd(const std::vector<IntVec> &vectors, std::size_t dim);

/// Facet normals of a full-dimensional cone, from all (dim-1)-subsets.
std::vector<IntVec> facets(const std::vector<IntVec> &vectors, std::size_t dim);

bool in_cone(const std::vector<IntVec> &facetNormals, const IntVec &p);

/// A vector h with h . v > 0 for every generator, by search in a small box.
IntVec positive_functional(const std::vector<IntVec> &vectors, std::size_t dim);

/// Lattice points x of the cone with 0 < h . x <= bound.
std::vector<IntVec> cone_points(const std::vector<IntVec> &vectors, std::size_t dim,
                                const IntVec &h, const Int &bound);

/// Irreducible lattice points (pointed, full-dimensional cone).
std::vector<IntVec> hilbert_basis(const std::vector<IntVec> &vectors,
                                  std::size_t dim);

/// Breadth-first search over sums of generators (pointed).
bool monoid_member(const IntVec &p, const std::vector<IntVec> &generators);

/// Every subset B' of B, every lattice point of cone(B') of bounded height
/// in the monoid of B cap cone(B'); pointed configurations only.
bool supernormal(const std::vector<IntVec> &b, std::size_t dim);

/// Faces of the subdivision of the convex hull of `points` by all segments
/// between them, in exact rational arithmetic.
struct PlanarCensus {
  std::size_t vertices = 0, edges = 0;
  std::map<std::size_t, std::size_t> facesBySides;
  std::size_t mu = 0;
};

PlanarCensus planar_census(const std::vector<std::pair<long, long>> &points);

}  // namespace oracle
