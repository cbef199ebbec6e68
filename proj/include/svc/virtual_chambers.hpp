// Virtual chambers of B (complements of the triangulations of the Gale dual
// A), the sections of A they define, virtual initial ideals and the map
// from ideals back to chambers.
#pragma once

#include "svc/ideals.hpp"
#include "svc/subdivision.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace svc {

struct VirtualChamber {
  /// m-element complements of the maximal cells of a triangulation of A.
  Subdivision cells;
  bool regular = false;

  bool operator==(const VirtualChamber &o) const { return cells == o.cells; }
  bool operator<(const VirtualChamber &o) const { return cells < o.cells; }
};

/// The Gale dual of b as a configuration of n vectors in Z^(n-m).
Configuration gale_configuration(const Configuration &b);

/// Complement of every cell within {0, ..., n-1}.
Subdivision complement_cells(const Subdivision &s, std::size_t n);

/// One entry per triangulation of A, sorted by cells.
std::vector<VirtualChamber> virtual_chambers(const Configuration &b);

/// s(b) = the nonnegative u with A u = b supported on a cell of the
/// triangulation; on shared faces the lexicographically least cell is used.
class Section {
public:
  Section(Configuration a, Subdivision triangulation);

  const Subdivision &triangulation() const { return triangulation_; }
  /// Throws PointOutsideCone.
  RatVec operator()(const RatVec &b) const;
  /// c in N^n lies in the image iff its support lies in a cell.
  bool in_image(const IntVec &c) const;
  bool in_image(const Exponent &c) const;

private:
  Configuration a_;
  Subdivision triangulation_;
};

Section section_from_triangulation(const Configuration &a,
                                   const Subdivision &triangulation);
Section section_of(const Configuration &b, const VirtualChamber &vc);

/// Shared data for virtual initial ideals of b up to total degree D: the
/// tight right-hand sides c in N^n and the fibers of the A-grading.
struct VirtualContext {
  Configuration config;
  std::size_t degreeBound = 0;
  /// Exponents c with |c|_1 <= D and P_c tight, sorted by degree then lex.
  std::vector<Exponent> tight;
  FiberTable fibers;
};

VirtualContext virtual_context(const Configuration &b, std::size_t degreeBound);

struct VirtualInitialIdeal {
  /// Minimal generators of total degree <= certifiedToDegree.
  MonomialIdeal ideal;
  std::size_t certifiedToDegree = 0;
  std::optional<VirtualChamber> sourceChamber;
};

/// Membership in the virtual initial ideal of `vc` in every degree: the
/// generators `low` up to D, and the tight x^c outside the image beyond D.
/// The context must outlive the returned function.
std::function<bool(const Exponent &)> virtual_membership(const VirtualContext &ctx,
                                                        const VirtualChamber &vc,
                                                        const MonomialIdeal &low);

/// Generated by the x^c with P_c tight and c outside the image of the
/// section of `vc`. Throws NotAGraded when the Hilbert check fails up to D.
VirtualInitialIdeal virtual_initial_ideal(const VirtualContext &ctx,
                                          const VirtualChamber &vc);
VirtualInitialIdeal virtual_initial_ideal(const Configuration &b,
                                          const VirtualChamber &vc,
                                          std::size_t degreeBound);

/// Minimal primes <x_i : i in cell>, validated against A. Throws
/// NotATriangulation.
VirtualChamber chamber_from_ideal(const Configuration &b, const MonomialIdeal &m);

struct BijectionReport {
  std::size_t chambers = 0;
  std::size_t distinctIdeals = 0;
  std::size_t roundTrips = 0;
  std::vector<VirtualInitialIdeal> ideals;

  bool holds() const {
    return distinctIdeals == chambers && roundTrips == chambers;
  }
};

BijectionReport verify_bijection(const Configuration &b, std::size_t degreeBound);

/// x^u | x^v implies x^(u-w) | x^(v-w') with x^w, x^w' the gcds of the
/// monomials of the degrees of u and v; in terms of tightening,
/// tighten(u) <= tighten(v) coordinatewise.
struct DivisibilityReport {
  std::size_t checked = 0;
  std::vector<std::pair<IntVec, IntVec>> violations;
};

DivisibilityReport check_gcd_divisibility(
    const Configuration &b, const std::vector<std::pair<IntVec, IntVec>> &pairs);

}  // namespace svc
