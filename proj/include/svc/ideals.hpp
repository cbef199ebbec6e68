// Binomial ideals with coefficients +1/-1: lattice ideals J_B, reduced
// Groebner bases under weight orders, initial ideals, Groebner cones and
// monomial ideals.
#pragma once

#include "svc/lattice.hpp"
#include "svc/subdivision.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace svc {

using Exponent = std::vector<long>;

/// x^plus - x^minus, or the monomial x^plus when `monomial` is set. Inside
/// a Groebner basis `plus` is the initial term.
struct Binomial {
  Exponent plus;
  Exponent minus;
  bool monomial = false;

  bool operator==(const Binomial &) const = default;
  bool operator<(const Binomial &o) const;
};

Binomial make_binomial(Exponent plus, Exponent minus);
Binomial make_monomial(Exponent e);

/// "x1^2*x2 - x5*x6^2"; the empty monomial prints as "1".
std::string to_string(const Exponent &e);
std::string to_string(const Binomial &b);

/// Weight vectors compared in turn, then lex with x1 > x2 > ... > xn.
struct TermOrder {
  std::vector<std::vector<long>> weights;
  std::size_t nvars = 0;

  /// Negative, zero or positive as x^a is smaller, equal or larger.
  int compare(const Exponent &a, const Exponent &b) const;
};

TermOrder graded_order(std::size_t nvars);

/// w in cone(B) and a nonnegative omega with B omega = w.
struct WeightOrder {
  RatVec w;
  RatVec omega;

  TermOrder term_order() const;
};

/// omega supported on the lexicographically first linearly independent
/// m-subset sigma with w in cone(sigma). Throws NotInCone.
WeightOrder weight_order_for(const Configuration &b, const RatVec &w);
WeightOrder weight_order_from_omega(const Configuration &b, const RatVec &omega);

struct LatticeIdeal {
  Configuration config;
  /// Reduced Groebner basis under graded_order.
  std::vector<Binomial> generators;
  bool saturationCertified = false;
};

/// J_B: the binomials of a row basis of B, saturated by the product of all
/// variables.
LatticeIdeal lattice_ideal(const Configuration &b);

struct GroebnerBasis {
  TermOrder order;
  /// Initial term first, sorted by total degree then lex of initial terms.
  std::vector<Binomial> elements;
  std::vector<bool> flippable;
};

/// Guard on the number of basis elements produced by Buchberger's algorithm.
inline constexpr std::size_t kMaxGroebnerElements = 20000;

GroebnerBasis buchberger_reduced(const std::vector<Binomial> &generators,
                                 const TermOrder &order);
GroebnerBasis groebner_basis(const LatticeIdeal &ideal, const WeightOrder &order);

/// Normal form of x^e modulo a Groebner basis: the reduced exponent, or
/// nullopt when a monomial element divides it (the monomial lies in the
/// ideal).
std::optional<Exponent> normal_form(const Exponent &e, const GroebnerBasis &gb);

struct MonomialIdeal {
  /// Minimal generators, sorted by total degree then lex.
  std::vector<Exponent> generators;

  bool contains(const Exponent &e) const;
  bool operator==(const MonomialIdeal &) const = default;
};

MonomialIdeal make_monomial_ideal(std::vector<Exponent> gens);

/// Initial forms of a Groebner basis with respect to the weight omega
/// alone: binomials whose two terms tie, monomials otherwise.
struct InitialIdeal {
  std::vector<Binomial> generators;
  bool is_monomial() const;
  /// The monomial ideal of first terms (binomials replaced by their first
  /// term).
  MonomialIdeal first_terms() const;
};

InitialIdeal initial_ideal(const LatticeIdeal &ideal, const WeightOrder &order);
InitialIdeal initial_ideal(const LatticeIdeal &ideal, const RatVec &w);

/// Both generating sets define the same ideal.
bool same_ideal(const std::vector<Binomial> &a, const std::vector<Binomial> &b,
                std::size_t nvars);

/// Normals u_g with (initial - trailing exponent of g) = B^T u_g, and flags
/// for the elements whose inequality u_g . w >= 0 defines a facet of the
/// Groebner cone inside cone(B).
struct GroebnerCone {
  std::vector<RatVec> normals;
  std::vector<bool> flippable;
};

GroebnerCone groebner_cone(const GroebnerBasis &gb, const Configuration &b);

/// Minimal sets of variables meeting the support of every generator.
std::vector<Cell> minimal_primes(const MonomialIdeal &m);

/// Fibers of the grading by the Gale dual: for each degree A u with
/// |u|_1 <= degreeBound, the monomials of that degree whose exponents lie in
/// the reduced box of P_u. Outside the box every monomial of the fiber is a
/// multiple of one of `recessionMonomials`.
struct FiberTable {
  std::vector<std::vector<Exponent>> fibers;
  std::vector<Exponent> recessionMonomials;
};

FiberTable fiber_table(const Configuration &b, std::size_t degreeBound);

/// Exactly one monomial outside the ideal in every degree of the table.
bool is_A_graded(const std::function<bool(const Exponent &)> &inIdeal,
                 const FiberTable &table);
bool is_A_graded(const MonomialIdeal &m, const Configuration &b,
                 std::size_t degreeBound);

}  // namespace svc
