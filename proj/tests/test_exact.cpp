#include "doctest.h"
#include "multseq/exact.hpp"

using namespace multseq::exact;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long v : r) m.back().emplace_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(determinant(mat({{-5}})) == -5);
}

TEST_CASE("rank") {
  CHECK(rank(mat({{1, 1}, {2, 2}})) == 1);
  CHECK(rank(mat({{1, 0}, {0, 1}})) == 2);
  CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(mat({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}})) == 2);
}

TEST_CASE("kernelVector of a d x (d+1) matrix") {
  auto k = kernelVector(mat({{1, 0, 0}, {0, 1, 0}}));
  CHECK(k == std::vector<BigInt>{0, 0, 1});

  // Row (2,0,1),(1,1,1): kernel spans (-1,-1,2) up to sign.
  auto k2 = kernelVector(mat({{2, 0, 1}, {1, 1, 1}}));
  BigInt dot1 = 2 * k2[0] + k2[2];
  BigInt dot2 = k2[0] + k2[1] + k2[2];
  CHECK(dot1 == 0);
  CHECK(dot2 == 0);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), k2[0].get_mpz_t(), k2[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k2[2].get_mpz_t());
  CHECK(g == 1);

  // Rank-deficient input yields the zero vector.
  auto k3 = kernelVector(mat({{1, 1, 0}, {2, 2, 0}}));
  CHECK(k3 == std::vector<BigInt>{0, 0, 0});
}

TEST_CASE("solveLinearSystem is exact") {
  std::vector<Rational> x;
  REQUIRE(solveLinearSystem(mat({{2, 1}, {1, 3}}), {BigInt(3), BigInt(5)}, x));
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));

  CHECK_FALSE(
      solveLinearSystem(mat({{1, 2}, {2, 4}}), {BigInt(1), BigInt(2)}, x));

  // Inconsistent system: singular coefficients, full-rank augmentation.
  CHECK_FALSE(
      solveLinearSystem(mat({{1, 2}, {2, 4}}), {BigInt(1), BigInt(3)}, x));
}

TEST_CASE("feasibleNonnegativeSystem") {
  // x1 + x2 = 1 with x >= 0: feasible.
  CHECK(feasibleNonnegativeSystem({{Rational(1), Rational(1)}},
                                  {Rational(1)}));
  // x1 + x2 = 1 and x1 + x2 = 2: contradictory.
  CHECK_FALSE(feasibleNonnegativeSystem(
      {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
      {Rational(1), Rational(2)}));
  // x1 - x2 = 3 with x >= 0: feasible (x1 = 3).
  CHECK(feasibleNonnegativeSystem({{Rational(1), Rational(-1)}},
                                  {Rational(3)}));
  // -x1 - x2 = 1 with x >= 0: infeasible.
  CHECK_FALSE(feasibleNonnegativeSystem({{Rational(-1), Rational(-1)}},
                                        {Rational(1)}));
  // Degenerate but feasible: 0 = 0.
  CHECK(feasibleNonnegativeSystem({{Rational(0)}}, {Rational(0)}));
  // 0 = 1: infeasible.
  CHECK_FALSE(feasibleNonnegativeSystem({{Rational(0)}}, {Rational(1)}));
}
