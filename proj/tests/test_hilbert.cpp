#include <cstdint>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "multseq/hilbert.hpp"
#include "multseq/newton.hpp"

using multseq::BivariatePolynomial;
using multseq::Grid;
using multseq::GridWindow;
using multseq::HilbertOptions;
using multseq::LambdaTable;
using multseq::MonomialIdeal;
using testutil::ideal;
using testutil::randomIdeal;
using testutil::ring;

TEST_CASE("lambdaCell closed forms for the maximal ideal") {
  auto m = ideal("x,y", "x,y");
  for (int j = 0; j <= 5; ++j) {
    CHECK(multseq::lambdaCell(m, 0, j) == j + 1);
    for (int i = 1; i <= 4; ++i) {
      CHECK(multseq::lambdaCell(m, i, j) == 0);
    }
  }
}

TEST_CASE("lambdaCell closed forms for (x^2, xy)") {
  auto a = ideal("x,y", "x2,xy");
  for (int j = 0; j <= 5; ++j) {
    CHECK(multseq::lambdaCell(a, 0, j) == j + 1);
    CHECK(multseq::lambdaCell(a, 1, j) == j + 2);
    for (int i = 2; i <= 5; ++i) {
      CHECK(multseq::lambdaCell(a, i, j) == 1);
    }
  }
}

TEST_CASE("the (0,0) cell is one for any proper nonzero ideal") {
  CHECK(multseq::lambdaCell(ideal("x,y", "x2,xy"), 0, 0) == 1);
  CHECK(multseq::lambdaCell(ideal("x,y,z", "xyz"), 0, 0) == 1);
  CHECK(multseq::lambdaCell(ideal("a,b,c,d", "ab2,bc3,cd4,da5"), 0, 0) == 1);
}

TEST_CASE("lambdaTable matches the per-cell values") {
  auto check = [](const MonomialIdeal& a, int maxI, int maxJ) {
    LambdaTable t = multseq::lambdaTable(a, maxI, maxJ);
    for (int i = 0; i <= maxI; ++i) {
      for (int j = 0; j <= maxJ; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              multseq::lambdaCell(a, i, j));
      }
    }
  };
  check(ideal("x,y", "x2,xy"), 5, 5);
  check(ideal("x,y", "x,y"), 4, 4);
  for (std::uint64_t i = 0; i < 4; ++i) {
    check(randomIdeal(7000 + i), 4, 4);
  }
}

TEST_CASE("lambdaTable row pattern for the maximal ideal") {
  LambdaTable t = multseq::lambdaTable(ideal("x,y", "x,y"), 4, 4);
  CHECK(t.values[0] == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  for (int i = 1; i <= 4; ++i) {
    CHECK(t.values[static_cast<std::size_t>(i)] ==
          std::vector<std::int64_t>{0, 0, 0, 0, 0});
  }
}

TEST_CASE("lambdaTable is schedule-independent") {
  auto a = ideal("x,y", "x2,xy");
  HilbertOptions seq;
  HilbertOptions par;
  par.threads = 3;
  CHECK(multseq::lambdaTable(a, 6, 6, seq).values ==
        multseq::lambdaTable(a, 6, 6, par).values);

  auto b = ideal("a,b,c,d", "ab2,bc3,cd4,da5");
  CHECK(multseq::lambdaTable(b, 4, 4, seq).values ==
        multseq::lambdaTable(b, 4, 4, par).values);
}

TEST_CASE("lambdaTable handles exponents past the packed-lane range") {
  // One variable: the shell between (x^c)^j and (x^c)^{j+1} holds one
  // monomial per degree, so every cell with i < c counts exactly one.
  auto a = ideal("x", "x^40000");
  LambdaTable t = multseq::lambdaTable(a, 3, 2);
  for (const auto& row : t.values) {
    for (auto v : row) CHECK(v == 1);
  }
  CHECK(multseq::lambdaCell(a, 2, 1) == 1);
}

TEST_CASE("lambdaTable enforces the generator cap") {
  HilbertOptions tiny;
  tiny.genCap = 5;
  CHECK_THROWS_AS(multseq::lambdaTable(ideal("x,y", "x2,xy"), 6, 6, tiny),
                  multseq::ResourceCapError);
}

TEST_CASE("sumTransform takes double prefix sums") {
  LambdaTable t = multseq::lambdaTable(ideal("x,y", "x,y"), 5, 5);
  Grid h = multseq::sumTransform(t);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(h[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] ==
            (n + 1) * (n + 2) / 2);
    }
  }

  LambdaTable zero{MonomialIdeal::unit(ring("x,y")), 2, 2,
                   {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  Grid hz = multseq::sumTransform(zero);
  for (const auto& row : hz) {
    for (auto v : row) CHECK(v == 0);
  }

  // Prefix sums of nonnegative entries are monotone in both directions.
  LambdaTable r = multseq::lambdaTable(randomIdeal(7100), 5, 5);
  Grid hr = multseq::sumTransform(r);
  for (std::size_t m = 0; m + 1 < hr.size(); ++m) {
    for (std::size_t n = 0; n + 1 < hr[m].size(); ++n) {
      CHECK(hr[m][n] <= hr[m + 1][n]);
      CHECK(hr[m][n] <= hr[m][n + 1]);
    }
  }
}

namespace {

Grid tabulate(int size, std::int64_t (*f)(std::int64_t, std::int64_t)) {
  Grid h(static_cast<std::size_t>(size),
         std::vector<std::int64_t>(static_cast<std::size_t>(size), 0));
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) {
      h[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
          f(m, n);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("fitBivariate recovers exact polynomials") {
  Grid tri = tabulate(9, [](std::int64_t, std::int64_t n) {
    return (n + 1) * (n + 2) / 2;
  });
  BivariatePolynomial p = multseq::fitBivariate(tri, 2, {0, 0, 8, 8});
  CHECK(p.coefficient(0, 2) == mpq_class(1, 2));
  CHECK(p.coefficient(0, 1) == mpq_class(3, 2));
  CHECK(p.coefficient(0, 0) == 1);
  CHECK(p.coefficient(1, 0) == 0);
  CHECK(p.coefficient(2, 0) == 0);
  CHECK(p.coefficient(1, 1) == 0);

  Grid ones = tabulate(4, [](std::int64_t, std::int64_t) {
    return std::int64_t{1};
  });
  BivariatePolynomial c = multseq::fitBivariate(ones, 0, {0, 0, 3, 3});
  CHECK(c.coefficient(0, 0) == 1);

  Grid prod = tabulate(9, [](std::int64_t m, std::int64_t n) {
    return (m + 1) * (n + 1);
  });
  BivariatePolynomial q = multseq::fitBivariate(prod, 2, {0, 0, 8, 8});
  CHECK(q.coefficient(1, 1) == 1);
  CHECK(q.coefficient(1, 0) == 1);
  CHECK(q.coefficient(0, 1) == 1);
  CHECK(q.coefficient(0, 0) == 1);
  CHECK(q.eval(6, 7) == 56);
}

TEST_CASE("extractCoefficients normalizes the top-degree part") {
  BivariatePolynomial p;
  p.degreeBound = 2;
  p.coeffs[{0, 2}] = mpq_class(1, 2);
  auto seq = multseq::extractCoefficients(p, 2);
  CHECK(seq.c == std::vector<std::int64_t>{0, 0, 1});

  BivariatePolynomial q;
  q.degreeBound = 2;
  q.coeffs[{0, 2}] = 1;
  q.coeffs[{1, 1}] = 1;
  auto seq2 = multseq::extractCoefficients(q, 2);
  CHECK(seq2.c == std::vector<std::int64_t>{0, 1, 2});

  BivariatePolynomial z;
  z.degreeBound = 1;
  auto seq3 = multseq::extractCoefficients(z, 1);
  CHECK(seq3.c == std::vector<std::int64_t>{0, 0});

  BivariatePolynomial bad;
  bad.degreeBound = 2;
  bad.coeffs[{0, 2}] = mpq_class(1, 3);
  CHECK_THROWS_AS(multseq::extractCoefficients(bad, 2), multseq::FitError);

  BivariatePolynomial neg;
  neg.degreeBound = 2;
  neg.coeffs[{0, 2}] = mpq_class(-1, 2);
  CHECK_THROWS_AS(multseq::extractCoefficients(neg, 2), multseq::FitError);
}

TEST_CASE("multiplicitySequence on the worked 2-variable examples") {
  auto m = multseq::multiplicitySequence(ideal("x,y", "x,y"));
  CHECK(m.c == std::vector<std::int64_t>{0, 0, 1});

  auto a = multseq::multiplicitySequence(ideal("x,y", "x2,xy"));
  CHECK(a.c == std::vector<std::int64_t>{0, 1, 2});

  auto b = multseq::multiplicitySequence(ideal("x,y", "x2,y3"));
  CHECK(b.c == std::vector<std::int64_t>{0, 0, 6});
}

TEST_CASE("jMultiplicity reads the top entry") {
  CHECK(multseq::jMultiplicity(ideal("x,y", "x2,xy")) == 2);
  CHECK(multseq::jMultiplicity(ideal("x,y", "x")) == 0);
  CHECK(multseq::jMultiplicity(ideal("x,y", "x,y")) == 1);
}

TEST_CASE("repeated runs give identical sequences") {
  auto a = ideal("x,y", "x3,xy2");
  auto s1 = multseq::multiplicitySequence(a);
  auto s2 = multseq::multiplicitySequence(a);
  CHECK(s1.c == s2.c);
}

TEST_CASE("the driver reports its cap with diagnostics") {
  HilbertOptions opts;
  opts.gridCap = 4;  // below the starting grid, so no attempt can run
  // A fresh ideal: cached results are returned before the cap check.
  CHECK_THROWS_AS(
      multseq::multiplicitySequence(ideal("x,y", "x5,x3y2,y4"), opts),
      multseq::GridCapError);
}

TEST_CASE("vanishing range of the sequence on the random family") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto a = randomIdeal(7200 + i);
    auto seq = multseq::multiplicitySequence(a);
    const int d = a.dim();
    const int lo = d - a.quotientDimension();
    const int spread = multseq::monAnalyticSpread(a);
    for (int k = 0; k <= d; ++k) {
      CAPTURE(k);
      if (k < lo || k > spread) {
        CHECK(seq.c[static_cast<std::size_t>(k)] == 0);
      }
      CHECK(seq.c[static_cast<std::size_t>(k)] >= 0);
    }
  }
}
