// Normality, supernormality, tightness and total dual integrality.
#pragma once

#include "svc/cone.hpp"
#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace svc {

/// Every lattice point of cone(vectors) is a nonnegative integer combination.
bool is_normal(const std::vector<IntVec> &vectors, std::size_t dim,
               std::size_t maxDim = kMaxConeDim);
bool is_normal(const Configuration &b, std::size_t maxDim = kMaxConeDim);

enum class SupernormalMethod { DefinitionSubsets, TriangulationCriterion };

const char *to_string(SupernormalMethod method);

struct SupernormalWitness {
  Cell subset;  ///< B' as indices
  IntVec point; ///< lattice point of cone(B') outside the monoid of B n cone(B')
};

struct SupernormalityReport {
  bool verdict = false;
  std::optional<SupernormalWitness> witness;
  SupernormalMethod method = SupernormalMethod::DefinitionSubsets;
};

SupernormalityReport
is_supernormal(const Configuration &b,
               SupernormalMethod method = SupernormalMethod::DefinitionSubsets);

/// Planar test: the primitive directions present in b, in counterclockwise
/// order, have determinant 1 for every consecutive pair less than a half
/// turn apart, and each direction's primitive vector belongs to b.
bool check_dim2_criterion(const Configuration &b);

struct TightnessReport {
  IntVec c;
  bool tight = false;
  Cell slackIndices;
  std::optional<IntVec> tightenedC;
};

TightnessReport is_tight(const Configuration &b, const IntVec &c);
/// c - u with u_i the least slack of row i over the lattice points of P_c.
IntVec tighten(const Configuration &b, const IntVec &c);

/// At every vertex of P_c the active vectors form a normal set.
bool is_TDI(const Configuration &b, const IntVec &c);

struct Theorem38Report {
  bool supernormal = false;
  std::size_t sampled = 0;
  std::size_t tightCount = 0;
  /// Tight but not TDI right-hand sides found in the sample.
  std::vector<IntVec> violations;
};

Theorem38Report property_test_theorem_3_8(const Configuration &b,
                                          const std::vector<IntVec> &samples);

/// Every integer vector in [lo, hi]^n, lex order.
std::vector<IntVec> box_samples(std::size_t n, long lo, long hi);
/// `count` vectors drawn uniformly from [lo, hi]^n.
std::vector<IntVec> random_samples(std::size_t n, std::size_t count, long lo,
                                   long hi, std::uint64_t seed);

}  // namespace svc
