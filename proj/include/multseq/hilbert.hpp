#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "multseq/monomial.hpp"

namespace multseq {

/// Tuning knobs for the length-table and interpolation pipeline.
struct HilbertOptions {
  /// Cap on intermediate generator/monomial set sizes (0 = unlimited).
  std::size_t genCap = 2'000'000;
  /// Largest grid bound the adaptive driver may reach.
  int gridCap = 128;
  /// Worker threads for the length table (rows are independent).
  int threads = 1;
};

/// Grid of graded-piece lengths. values[i][j] is the length of the (i,j)
/// piece of the doubly graded algebra attached to the ideal: the quotient
/// (m^i I^j + I^{j+1}) / (m^{i+1} I^j + I^{j+1}).
struct LambdaTable {
  MonomialIdeal ideal;
  int maxI = 0;
  int maxJ = 0;
  std::vector<std::vector<std::int64_t>> values;  // [i][j]
};

/// Length of the single graded piece (i,j).
///
/// m * N lies in D for N = m^i I^j + I^{j+1} and D = m^{i+1} I^j + I^{j+1},
/// so every monomial of N that properly multiplies a minimal generator of N
/// falls into D; the monomials spanning N/D are exactly the minimal
/// generators of N outside D.
std::int64_t lambdaCell(const MonomialIdeal& a, int i, int j,
                        std::size_t genCap = 2'000'000);

/// The full grid for 0 <= i <= maxI, 0 <= j <= maxJ. Same values as
/// per-cell lambdaCell calls, computed by a shared shell decomposition
/// per column.
LambdaTable lambdaTable(const MonomialIdeal& a, int maxI, int maxJ,
                        const HilbertOptions& opts = {});

using Grid = std::vector<std::vector<std::int64_t>>;

/// Double partial-sum transform: h[m][n] = sum of values[i][j] over
/// i <= m, j <= n. Nondecreasing in both arguments.
Grid sumTransform(const LambdaTable& t);

/// Exact polynomial in two variables of bounded total degree; coefficient
/// map keyed by (degree in m, degree in n), zero coefficients omitted.
struct BivariatePolynomial {
  int degreeBound = 0;
  std::map<std::pair<int, int>, mpq_class> coeffs;

  mpq_class eval(std::int64_t m, std::int64_t n) const;
  mpq_class coefficient(int a, int b) const;
};

struct GridWindow {
  int mLo = 0, nLo = 0, mHi = 0, nHi = 0;
};

/// Interpolates the unique polynomial of total degree <= degree agreeing
/// with h on the graded-triangular node set in the window's top-right
/// corner; solved over exact rationals. Validation against the rest of the
/// grid is the caller's job.
BivariatePolynomial fitBivariate(const Grid& h, int degree, GridWindow window);

/// The multiplicity sequence c_0..c_d of an ideal in a d-dimensional ring.
struct MultiplicitySequence {
  int d = 0;
  std::vector<std::int64_t> c;
};

/// Reads c_i off the degree-d part of p: c_i = coeff(m^{d-i} n^i) * (d-i)!
/// * i!. Every c_i must come out a nonnegative integer, else FitError.
MultiplicitySequence extractCoefficients(const BivariatePolynomial& p, int d);

/// Adaptive end-to-end computation: grow the grid from (2d+4, 2d+4),
/// interpolate on the top-right corner, validate on a margin of d+2 extra
/// points per axis, and double the grid until the fit is exact and the
/// coefficients are nonnegative integers. Results are cached per canonical
/// generator set.
MultiplicitySequence multiplicitySequence(const MonomialIdeal& a,
                                          const HilbertOptions& opts = {});

/// c_d, the top entry of the multiplicity sequence.
std::int64_t jMultiplicity(const MonomialIdeal& a,
                           const HilbertOptions& opts = {});

}  // namespace multseq
