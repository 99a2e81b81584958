#pragma once

#include <optional>
#include <string>

#include "multseq/monomial.hpp"

namespace multseq {

/// Comma-separated variable list ("x,y" or "a, b, c") to a ring.
RingSpec parseVarList(const std::string& csv);

/// Parses an ideal expression. Two modes, picked automatically:
///
///   shorthand  "ab2,bc3,cd4,da5"   single-character variables only;
///                                  juxtaposition multiplies, a bare decimal
///                                  exponent (>= 1) follows its variable
///   explicit   "x^2*y, y^3"        any variable names; factors joined with
///                                  '*', exponents (>= 0) after '^'
///
/// "1" is a valid term in either mode (the unit ideal). Whitespace is
/// ignored. The result is minimalized. '+' or '-' anywhere is rejected:
/// only monomial generators exist here.
MonomialIdeal parseIdeal(const std::string& src, const RingSpec& ring);

/// An ideal expression as given on a command line or batch file: optionally
/// wrapped as "(expr)^k" to request the k-th power.
struct IdealExpression {
  std::string raw;
  RingSpec ring;
  MonomialIdeal parsed;
  std::optional<std::int64_t> power;
};

IdealExpression parseIdealExpression(const std::string& raw,
                                     const RingSpec& ring);

/// Canonical rendering in explicit mode; re-parsing yields an equal ideal.
std::string renderMonomial(const Monomial& m, const RingSpec& ring);
std::string renderIdeal(const MonomialIdeal& ideal);

}  // namespace multseq
