// Exact rational feasibility for small linear systems (dense simplex with
// Bland's rule). Used for regularity certificates, redundancy tests and
// convex-hull membership.
#pragma once

#include "svc/lattice.hpp"

#include <optional>
#include <vector>

namespace svc {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  RatVec coeffs;
  Relation rel = Relation::LessEq;
  Rat rhs = 0;
};

/// A point satisfying every constraint (variables are free), or nullopt.
std::optional<RatVec>
find_feasible_point(std::size_t numVars,
                    const std::vector<LinearConstraint> &constraints);

/// Convenience: integer coefficient row.
LinearConstraint make_constraint(const IntVec &coeffs, Relation rel,
                                 const Rat &rhs);

}  // namespace svc
