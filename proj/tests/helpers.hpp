#pragma once

#include <random>
#include <string>
#include <vector>

#include "multseq/monomial.hpp"
#include "multseq/parse.hpp"

namespace testutil {

inline multseq::RingSpec ring(const std::string& csv) {
  return multseq::parseVarList(csv);
}

inline multseq::MonomialIdeal ideal(const std::string& vars,
                                    const std::string& expr) {
  return multseq::parseIdeal(expr, ring(vars));
}

inline multseq::Monomial mono(std::vector<multseq::Expo> e) {
  return multseq::Monomial(std::move(e));
}

/// Pinned random family shared by the property tests: up to 3 variables,
/// exponents up to 4, up to 5 generators, proper and nonzero. Deterministic
/// per index.
inline multseq::MonomialIdeal randomIdeal(std::uint64_t index) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^
                      (index * 0xb5026f5aa96619e9ULL + 0x2545f4914f6cdd1dULL));
  for (;;) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int g = 1 + static_cast<int>(rng() % 5);
    std::vector<multseq::Monomial> pts;
    while (static_cast<int>(pts.size()) < g) {
      std::vector<multseq::Expo> e(static_cast<std::size_t>(d));
      bool allZero = true;
      for (auto& x : e) {
        x = static_cast<multseq::Expo>(rng() % 5);
        if (x != 0) allZero = false;
      }
      if (allZero) continue;
      pts.emplace_back(std::move(e));
    }
    std::vector<std::string> names;
    for (int k = 0; k < d; ++k) {
      names.emplace_back(1, static_cast<char>('x' + k));
    }
    auto candidate = multseq::MonomialIdeal::generatedBy(
        std::move(pts), multseq::RingSpec(std::move(names)));
    if (candidate.isProperNonzero()) return candidate;
  }
}

}  // namespace testutil
