#pragma once

#include <cstdint>

#include "multseq/monomial.hpp"

namespace multseq::oracle {

/// Brute-force validators. These stay on definitional counting plus plain
/// ideal arithmetic and share no code with the length-table engine or the
/// polyhedral kernels they cross-check; tests rely on that independence.

/// Counts the monomials of (m^i I^j + I^{j+1}) \ (m^{i+1} I^j + I^{j+1}) by
/// enumerating every monomial up to the largest generator degree of the
/// numerator and membership-testing each one. The bound is complete: each
/// counted monomial is a minimal generator of the numerator.
std::int64_t bruteLambda(const MonomialIdeal& a, int i, int j,
                         std::size_t enumCap = 20'000'000);

/// Analytic spread via generator growth: the number of minimal generators
/// of I^n eventually grows as a polynomial of degree (spread - 1). Finds
/// the lowest finite-difference order whose tail is constant. Throws
/// InconclusiveError when the differences have not settled by nMax.
int muGrowthSpread(const MonomialIdeal& a, int nMax);

/// Number of monomials of degree <= degreeCap outside the ideal. For an
/// m-primary ideal this stabilizes to the colength.
std::int64_t standardMonomialCount(const MonomialIdeal& a, Expo degreeCap,
                                   std::size_t enumCap = 20'000'000);

}  // namespace multseq::oracle
