#pragma once

#include <gmpxx.h>

#include <vector>

namespace multseq::exact {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Determinant of a square integer matrix (fraction-free Bareiss
/// elimination; every intermediate value is an exact integer).
BigInt determinant(IntMatrix m);

/// Rank of an integer matrix.
int rank(IntMatrix m);

/// Kernel of a d x (d+1) integer matrix of rank d: the one-dimensional
/// nullspace, returned as a primitive integer vector (entries coprime).
/// Returns the zero vector when the rank is below d.
std::vector<BigInt> kernelVector(const IntMatrix& m);

/// Solves A x = b exactly for square A. Returns false if A is singular.
bool solveLinearSystem(const IntMatrix& a, const std::vector<BigInt>& b,
                       std::vector<Rational>& x);

/// Divides the vector by the gcd of its entries (no-op on the zero vector).
void makePrimitive(std::vector<BigInt>& v);

/// Phase-I simplex with Bland's rule over exact rationals:
/// decides whether { x >= 0 : A x = b } is nonempty.
bool feasibleNonnegativeSystem(std::vector<std::vector<Rational>> a,
                               std::vector<Rational> b);

}  // namespace multseq::exact
