#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multseq/errors.hpp"

namespace multseq {

using Expo = std::int64_t;

/// Largest exponent admitted by the checked arithmetic. Far above anything a
/// desk-scale computation produces; crossing it is an error, never wraparound.
inline constexpr Expo kExpoGuard = Expo{1} << 40;

Expo checkedAdd(Expo a, Expo b);

/// Ambient polynomial ring: an ordered list of distinct variable names.
class RingSpec {
 public:
  explicit RingSpec(std::vector<std::string> varNames);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& varNames() const { return names_; }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.names_ == b.names_;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
};

/// A monomial, stored as its exponent vector. Immutable value type.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Expo> exps);

  int size() const { return static_cast<int>(exps_.size()); }
  Expo operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }
  const std::vector<Expo>& exponents() const { return exps_; }

  Expo degree() const;
  bool isOne() const;

  /// true iff this divides other, i.e. this <= other componentwise.
  bool divides(const Monomial& other) const;

  friend Monomial operator+(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  struct Hash {
    std::size_t operator()(const Monomial& m) const noexcept;
  };

 private:
  std::vector<Expo> exps_;
};

/// Canonical generator order: total degree first, ties broken
/// lexicographically on the exponent vector.
bool gradedLexLess(const Monomial& a, const Monomial& b);

/// A monomial ideal in canonical form: the minimal generators, stored as a
/// graded-lex sorted antichain (no generator divides another). The zero
/// ideal has no generators; the unit ideal's single generator is 1.
class MonomialIdeal {
 public:
  /// Canonicalizing factory: keeps exactly the componentwise-minimal points.
  static MonomialIdeal generatedBy(std::vector<Monomial> points, RingSpec ring);
  static MonomialIdeal zero(RingSpec ring);
  static MonomialIdeal unit(RingSpec ring);
  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(RingSpec ring);

  const RingSpec& ring() const { return ring_; }
  int dim() const { return ring_.dim(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const;
  bool isProperNonzero() const { return !isZero() && !isUnit(); }

  /// true iff some minimal generator divides m.
  bool contains(const Monomial& m) const;

  /// true iff the ideal contains a pure power of every variable
  /// (equivalently, the quotient has finitely many standard monomials).
  /// Rejects the zero and unit ideal.
  bool isMPrimary() const;

  /// Krull dimension of the quotient ring: the largest number of variables
  /// spanning a coordinate subspace that no generator's support fits inside.
  /// Brute force over all variable subsets. Rejects the unit ideal; the zero
  /// ideal gives the ambient dimension.
  int quotientDimension() const;

  /// Structural equality (same ring, identical canonical generators).
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

 private:
  MonomialIdeal(RingSpec ring, std::vector<Monomial> canonicalGens);

  RingSpec ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Pairwise products of generators, minimalized. genCap (0 = unlimited)
/// bounds the candidate set; exceeding it raises ResourceCapError.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b,
                      std::size_t genCap = 0);

/// k-th power by iterated products with intermediate minimalization.
MonomialIdeal power(const MonomialIdeal& a, std::int64_t k,
                    std::size_t genCap = 0);

/// m^i * a, where m is the maximal ideal of the ambient ring.
MonomialIdeal timesMaximalIdealPower(const MonomialIdeal& a, std::int64_t i,
                                     std::size_t genCap = 0);

/// Ring-checked comparison; throws RingMismatchError on different rings.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// Throws ImproperIdealError unless a is proper and nonzero. `what` names
/// the operation for the diagnostic.
void requireProperNonzero(const MonomialIdeal& a, const char* what);

}  // namespace multseq
