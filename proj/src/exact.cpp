#include "multseq/exact.hpp"

#include <cstddef>
#include <utility>

#include "multseq/errors.hpp"

namespace multseq::exact {

namespace {

// Fraction-free forward elimination in place. Returns the rank; if detOut is
// non-null and the matrix is square of full rank, *detOut receives the
// determinant (sign-adjusted for row swaps).
int bareissEliminate(IntMatrix& m, BigInt* detOut) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  BigInt prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (detOut != nullptr) {
    if (rows == 0) {
      *detOut = 1;
    } else if (r < rows) {
      *detOut = 0;
    } else {
      *detOut = sign * m[rows - 1][rows - 1];
    }
  }
  return static_cast<int>(r);
}

}  // namespace

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw InvalidArgumentError("determinant: matrix not square");
    }
  }
  BigInt det;
  bareissEliminate(m, &det);
  return det;
}

int rank(IntMatrix m) { return bareissEliminate(m, nullptr); }

void makePrimitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

std::vector<BigInt> kernelVector(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows + 1;
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw InvalidArgumentError("kernelVector: expected d x (d+1) matrix");
    }
  }
  // Cofactor construction: x_j = (-1)^j det(m without column j). Laplace
  // expansion of the matrix with any row of m repeated on top shows m x = 0.
  std::vector<BigInt> x(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    IntMatrix minor(rows, std::vector<BigInt>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t t = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == j) continue;
        minor[i][t++] = m[i][c];
      }
    }
    BigInt d = determinant(std::move(minor));
    x[j] = (j % 2 == 0) ? d : -d;
  }
  makePrimitive(x);
  return x;
}

bool solveLinearSystem(const IntMatrix& a, const std::vector<BigInt>& b,
                       std::vector<Rational>& x) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw InvalidArgumentError("solveLinearSystem: size mismatch");
  }
  IntMatrix m(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) {
      throw InvalidArgumentError("solveLinearSystem: matrix not square");
    }
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  if (bareissEliminate(m, nullptr) < static_cast<int>(n)) {
    // Either singular or inconsistent; callers treat both as "no solve".
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    // A pivot may have landed in the augmented column of an inconsistent
    // system; a zero diagonal entry means the coefficient part is singular.
    if (m[i][i] == 0) return false;
  }
  x.assign(n, Rational(0));
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) {
      s -= Rational(m[ii][j]) * x[j];
    }
    x[ii] = s / Rational(m[ii][ii]);
    x[ii].canonicalize();
  }
  return true;
}

bool feasibleNonnegativeSystem(std::vector<std::vector<Rational>> a,
                               std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) {
    throw InvalidArgumentError("feasibleNonnegativeSystem: size mismatch");
  }
  const std::size_t n = rows == 0 ? 0 : a[0].size();
  for (auto& row : a) {
    if (row.size() != n) {
      throw InvalidArgumentError("feasibleNonnegativeSystem: ragged matrix");
    }
  }
  // Normalize to b >= 0, then run Phase I: minimize the sum of one
  // artificial variable per row. Feasible iff the optimum is zero.
  for (std::size_t i = 0; i < rows; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }
  const std::size_t total = n + rows;  // original columns + artificials
  std::vector<std::vector<Rational>> t(rows,
                                       std::vector<Rational>(total + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

  // Reduced costs for minimizing the artificial sum, with the artificials
  // substituted out so that basic columns carry reduced cost zero.
  std::vector<Rational> red(total + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) red[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < rows; ++i) red[total] -= t[i][total];
  std::vector<bool> banned(total, false);  // artificials may not re-enter

  for (;;) {
    // Bland's rule: the lowest-index improving column.
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (!banned[j] && red[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;
    std::size_t leave = rows;
    Rational bestRatio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        Rational ratio = t[i][total] / t[i][enter];
        if (leave == rows || ratio < bestRatio ||
            (ratio == bestRatio && basis[i] < basis[leave])) {
          leave = i;
          bestRatio = ratio;
        }
      }
    }
    if (leave == rows) {
      // Unbounded direction cannot happen in Phase I (objective >= 0).
      throw InternalError("simplex: unbounded Phase-I subproblem");
    }
    const Rational piv = t[leave][enter];
    for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    if (red[enter] != 0) {
      const Rational f = red[enter];
      for (std::size_t j = 0; j <= total; ++j) red[j] -= f * t[leave][j];
    }
    if (basis[leave] >= n) banned[basis[leave]] = true;
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= n) objective += t[i][total];
  }
  return objective == 0;
}

}  // namespace multseq::exact
