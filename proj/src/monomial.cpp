#include "multseq/monomial.hpp"

#include <algorithm>
#include <set>

namespace multseq {

Expo checkedAdd(Expo a, Expo b) {
  Expo s = a + b;  // operands are in [0, kExpoGuard], so no UB here
  if (s > kExpoGuard) {
    throw OverflowError("exponent overflow: " + std::to_string(a) + " + " +
                        std::to_string(b) + " exceeds the guard");
  }
  return s;
}

RingSpec::RingSpec(std::vector<std::string> varNames)
    : names_(std::move(varNames)) {
  if (names_.empty()) {
    throw InvalidArgumentError("a ring needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw InvalidArgumentError("variable names must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw InvalidArgumentError("duplicate variable name '" + n + "'");
    }
  }
}

Monomial::Monomial(std::vector<Expo> exps) : exps_(std::move(exps)) {
  for (Expo e : exps_) {
    if (e < 0) {
      throw InvalidArgumentError("negative exponent " + std::to_string(e));
    }
    if (e > kExpoGuard) {
      throw OverflowError("exponent " + std::to_string(e) +
                          " exceeds the guard");
    }
  }
}

Expo Monomial::degree() const {
  Expo d = 0;
  for (Expo e : exps_) d += e;
  return d;
}

bool Monomial::isOne() const {
  for (Expo e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw DimensionMismatchError("monomials live in different rings");
  }
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) {
    throw DimensionMismatchError("monomials live in different rings");
  }
  std::vector<Expo> e(a.exps_.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] = checkedAdd(a.exps_[k], b.exps_[k]);
  }
  return Monomial(std::move(e));
}

std::size_t Monomial::Hash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Expo e : m.exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

bool gradedLexLess(const Monomial& a, const Monomial& b) {
  Expo da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

namespace {

// Sorts graded-lex, dedupes, and drops every point that a lower-degree kept
// point divides. Equal-degree distinct points are incomparable, so scanning
// previously kept points suffices.
std::vector<Monomial> minimalize(std::vector<Monomial> pts) {
  std::sort(pts.begin(), pts.end(), gradedLexLess);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Monomial> kept;
  kept.reserve(pts.size());
  for (const auto& p : pts) {
    bool redundant = false;
    for (const auto& q : kept) {
      if (q.degree() >= p.degree()) break;
      if (q.divides(p)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(p);
  }
  return kept;
}

void requireSameRing(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) {
    throw RingMismatchError("ideals live in different rings");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> canonicalGens)
    : ring_(std::move(ring)), gens_(std::move(canonicalGens)) {}

MonomialIdeal MonomialIdeal::generatedBy(std::vector<Monomial> points,
                                         RingSpec ring) {
  for (const auto& p : points) {
    if (p.size() != ring.dim()) {
      throw DimensionMismatchError(
          "generator has " + std::to_string(p.size()) + " exponents, ring has " +
          std::to_string(ring.dim()) + " variables");
    }
  }
  return MonomialIdeal(std::move(ring), minimalize(std::move(points)));
}

MonomialIdeal MonomialIdeal::zero(RingSpec ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingSpec ring) {
  Monomial one{std::vector<Expo>(static_cast<std::size_t>(ring.dim()), 0)};
  return MonomialIdeal(std::move(ring), {one});
}

MonomialIdeal MonomialIdeal::maximal(RingSpec ring) {
  std::vector<Monomial> vars;
  const int d = ring.dim();
  for (int k = 0; k < d; ++k) {
    std::vector<Expo> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(k)] = 1;
    vars.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), minimalize(std::move(vars)));
}

bool MonomialIdeal::isUnit() const {
  return gens_.size() == 1 && gens_.front().isOne();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != dim()) {
    throw DimensionMismatchError("monomial dimension mismatch");
  }
  const Expo md = m.degree();
  for (const auto& g : gens_) {
    if (g.degree() > md) return false;  // gens_ is degree-sorted
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::isMPrimary() const {
  requireProperNonzero(*this, "isMPrimary");
  const int d = dim();
  std::vector<bool> hasPurePower(static_cast<std::size_t>(d), false);
  for (const auto& g : gens_) {
    int support = -1;
    bool pure = true;
    for (int k = 0; k < d; ++k) {
      if (g[k] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = k;
      }
    }
    if (pure && support >= 0) hasPurePower[static_cast<std::size_t>(support)] = true;
  }
  for (bool b : hasPurePower) {
    if (!b) return false;
  }
  return true;
}

int MonomialIdeal::quotientDimension() const {
  if (isUnit()) {
    throw ImproperIdealError("quotientDimension: unit ideal rejected");
  }
  const int d = dim();
  if (isZero()) return d;
  if (d > 25) {
    throw ResourceCapError("quotientDimension: too many variables for the "
                           "subset search");
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    bool ok = true;
    for (const auto& g : gens_) {
      bool inside = true;
      for (int k = 0; k < d; ++k) {
        if (g[k] > 0 && !(mask & (1u << k))) {
          inside = false;
          break;
        }
      }
      if (inside) {  // some generator supported entirely inside the subset
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameRing(a, b);
  std::vector<Monomial> pts = a.generators();
  pts.insert(pts.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::generatedBy(std::move(pts), a.ring());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b,
                      std::size_t genCap) {
  requireSameRing(a, b);
  if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.ring());
  const std::size_t count = a.generators().size() * b.generators().size();
  if (genCap != 0 && count > genCap) {
    throw ResourceCapError("product: " + std::to_string(count) +
                           " candidate generators exceed the cap of " +
                           std::to_string(genCap));
  }
  std::vector<Monomial> pts;
  pts.reserve(count);
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      pts.push_back(g + h);
    }
  }
  return MonomialIdeal::generatedBy(std::move(pts), a.ring());
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t k, std::size_t genCap) {
  if (k < 0) {
    throw InvalidArgumentError("power: negative exponent " + std::to_string(k));
  }
  MonomialIdeal acc = MonomialIdeal::unit(a.ring());
  for (std::int64_t s = 0; s < k; ++s) {
    acc = product(acc, a, genCap);
  }
  return acc;
}

MonomialIdeal timesMaximalIdealPower(const MonomialIdeal& a, std::int64_t i,
                                     std::size_t genCap) {
  if (i < 0) {
    throw InvalidArgumentError("timesMaximalIdealPower: negative power");
  }
  if (a.isZero()) {
    throw ImproperIdealError("timesMaximalIdealPower: zero ideal rejected");
  }
  if (i == 0) return a;
  const int d = a.dim();

  // All exponent vectors of total degree i, appended to each generator.
  std::vector<Monomial> pts;
  std::vector<Expo> e(static_cast<std::size_t>(d), 0);
  auto emit = [&](auto&& self, int k, Expo left) -> void {
    if (k == d - 1) {
      e[static_cast<std::size_t>(k)] = left;
      for (const auto& g : a.generators()) {
        pts.push_back(g + Monomial(e));
        if (genCap != 0 && pts.size() > genCap) {
          throw ResourceCapError("timesMaximalIdealPower: candidate set "
                                 "exceeds the cap");
        }
      }
      return;
    }
    for (Expo v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, left - v);
    }
  };
  emit(emit, 0, i);
  return MonomialIdeal::generatedBy(std::move(pts), a.ring());
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameRing(a, b);
  return a.generators() == b.generators();
}

void requireProperNonzero(const MonomialIdeal& a, const char* what) {
  if (a.isZero()) {
    throw ImproperIdealError(std::string(what) + ": zero ideal rejected");
  }
  if (a.isUnit()) {
    throw ImproperIdealError(std::string(what) + ": unit ideal rejected");
  }
}

}  // namespace multseq
