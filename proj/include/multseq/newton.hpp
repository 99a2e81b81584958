#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "multseq/monomial.hpp"

namespace multseq {

/// Closed halfspace { x : normal . x >= offset }. Entries are integers with
/// gcd 1 and the normal is componentwise nonnegative (every facet normal of
/// a Newton polyhedron is).
struct Halfspace {
  std::vector<mpz_class> normal;
  mpz_class offset;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// Exact V- and H-representation of conv(generator exponents) + R^d_{>=0}.
/// Vertices are a subset of the minimal generators; facets are sorted by
/// canonicalized normal, then offset, so equal polyhedra compare equal.
struct NewtonPolyhedron {
  RingSpec ring;
  std::vector<Monomial> vertices;
  std::vector<Halfspace> facets;
};

NewtonPolyhedron newtonPolyhedron(const MonomialIdeal& a);

/// Membership test against the facet inequalities.
bool pointInPolyhedron(const NewtonPolyhedron& p,
                       const std::vector<mpq_class>& point);
bool pointInPolyhedron(const NewtonPolyhedron& p, const Monomial& point);

/// The ideal generated by exactly the vertices of the Newton polyhedron:
/// the smallest monomial ideal with the same polyhedron.
MonomialIdeal monReduction(const MonomialIdeal& a);

/// Integral closure: the ideal of all monomials whose exponents lie in the
/// Newton polyhedron. Generated by the componentwise-minimal lattice points,
/// which all fit inside the box bounded by the per-coordinate generator
/// maxima.
MonomialIdeal integralClosure(const MonomialIdeal& a);

/// Analytic spread: 1 + the largest dimension of a compact face of the
/// Newton polyhedron. Always in [1, d].
int monAnalyticSpread(const MonomialIdeal& a);

/// j-multiplicity: d! times the volume of the union of pyramids from the
/// origin over the bounded facets (the facets with strictly positive
/// normal). Computed as an exact integer determinant sum over a fan
/// triangulation of each bounded facet.
std::int64_t monJMult(const MonomialIdeal& a);

/// Hilbert-Samuel multiplicity of an m-primary ideal: d! times the volume
/// between the origin and the Newton polyhedron. Shares the pyramid kernel
/// with monJMult; rejects ideals that are not m-primary.
std::int64_t normalizedCovolume(const MonomialIdeal& a);

namespace detail {

enum class FanApex { LexMin, LexMax };

/// Determinant sum over the bounded facets; exposed so tests can check that
/// the total does not depend on the triangulation.
mpz_class pyramidVolumeSum(const NewtonPolyhedron& p,
                           FanApex apex = FanApex::LexMin);

}  // namespace detail

}  // namespace multseq
