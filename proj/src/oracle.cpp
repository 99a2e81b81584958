#include "multseq/oracle.hpp"

#include <algorithm>
#include <vector>

namespace multseq::oracle {

namespace {

std::uint64_t regionSizeCapped(int d, Expo maxDeg, std::uint64_t cap) {
  // C(maxDeg + d, d), the number of monomials of degree <= maxDeg.
  std::uint64_t r = 1;
  for (int i = 1; i <= d; ++i) {
    r = r * (static_cast<std::uint64_t>(maxDeg) + static_cast<std::uint64_t>(i)) /
        static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

// Visits every exponent vector of total degree <= maxDeg.
template <typename Fn>
void forEachMonomialUpTo(int d, Expo maxDeg, Fn&& fn) {
  std::vector<Expo> v(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int k, Expo left) -> void {
    if (k == d - 1) {
      for (Expo e = 0; e <= left; ++e) {
        v[static_cast<std::size_t>(k)] = e;
        fn(v);
      }
      v[static_cast<std::size_t>(k)] = 0;
      return;
    }
    for (Expo e = 0; e <= left; ++e) {
      v[static_cast<std::size_t>(k)] = e;
      self(self, k + 1, left - e);
    }
    v[static_cast<std::size_t>(k)] = 0;
  };
  rec(rec, 0, maxDeg);
}

}  // namespace

std::int64_t bruteLambda(const MonomialIdeal& a, int i, int j,
                         std::size_t enumCap) {
  requireProperNonzero(a, "bruteLambda");
  if (i < 0 || j < 0) {
    throw InvalidArgumentError("bruteLambda: negative grading");
  }
  const int d = a.dim();
  MonomialIdeal aj = power(a, j);
  MonomialIdeal aj1 = product(aj, a);
  MonomialIdeal numer = sum(timesMaximalIdealPower(aj, i), aj1);
  MonomialIdeal denom = sum(timesMaximalIdealPower(aj, i + 1), aj1);

  Expo maxDeg = 0;
  for (const auto& g : numer.generators()) {
    maxDeg = std::max(maxDeg, g.degree());
  }
  if (regionSizeCapped(d, maxDeg, enumCap) > enumCap) {
    throw ResourceCapError("bruteLambda: enumeration region larger than " +
                           std::to_string(enumCap) + " monomials");
  }

  std::int64_t count = 0;
  forEachMonomialUpTo(d, maxDeg, [&](const std::vector<Expo>& v) {
    Monomial m{v};
    if (numer.contains(m) && !denom.contains(m)) ++count;
  });
  return count;
}

int muGrowthSpread(const MonomialIdeal& a, int nMax) {
  requireProperNonzero(a, "muGrowthSpread");
  if (nMax < a.dim() + 3) {
    throw InvalidArgumentError("muGrowthSpread: nMax below d + 3");
  }
  std::vector<std::int64_t> mu;
  MonomialIdeal p = a;
  mu.push_back(static_cast<std::int64_t>(p.generators().size()));
  for (int n = 2; n <= nMax; ++n) {
    p = product(p, a);
    mu.push_back(static_cast<std::int64_t>(p.generators().size()));
  }

  constexpr int kTail = 3;
  std::vector<std::int64_t> diffs = mu;
  for (int e = 0; static_cast<int>(diffs.size()) >= kTail; ++e) {
    bool constant = true;
    for (std::size_t t = diffs.size() - kTail + 1; t < diffs.size(); ++t) {
      if (diffs[t] != diffs[diffs.size() - kTail]) {
        constant = false;
        break;
      }
    }
    if (constant) return e + 1;
    for (std::size_t t = 0; t + 1 < diffs.size(); ++t) {
      diffs[t] = diffs[t + 1] - diffs[t];
    }
    diffs.pop_back();
  }
  throw InconclusiveError("muGrowthSpread: differences did not stabilize "
                          "within nMax = " + std::to_string(nMax));
}

std::int64_t standardMonomialCount(const MonomialIdeal& a, Expo degreeCap,
                                   std::size_t enumCap) {
  requireProperNonzero(a, "standardMonomialCount");
  if (degreeCap < 0) {
    throw InvalidArgumentError("standardMonomialCount: negative cap");
  }
  const int d = a.dim();
  if (regionSizeCapped(d, degreeCap, enumCap) > enumCap) {
    throw ResourceCapError("standardMonomialCount: enumeration region too "
                           "large");
  }
  std::int64_t count = 0;
  forEachMonomialUpTo(d, degreeCap, [&](const std::vector<Expo>& v) {
    if (!a.contains(Monomial{v})) ++count;
  });
  return count;
}

}  // namespace multseq::oracle
