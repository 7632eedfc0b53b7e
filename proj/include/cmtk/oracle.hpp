#pragma once

#include "cmtk/cm_type.hpp"
#include "cmtk/numeric.hpp"

#include <set>
#include <vector>

// Brute-force cross-checks, deliberately independent of the algorithms in
// lattice.cpp / hodge.cpp.  Used by the test suites and the `oracle` CLI
// command.  Everything here trades speed for obviousness.
namespace cmtk::oracle {

/// Rank over Q by plain fraction Gaussian elimination.
int rational_rank(const IntMat& rows);

/// gcd of all k x k minors (0 when every minor vanishes; D_0 = 1).
/// Cofactor expansion; intended for small k.
Int minor_gcd(const IntMat& rows, int k);

/// Cokernel invariants of Z^ambient / rowspan via the classical minors
/// formula d_k = D_k / D_{k-1}.
FgAbelianGroup cokernel_via_minors(const IntMat& rows, std::size_t ambient);

/// Does `candidate` have the same Z-span as `rows`?  Checks rank equality,
/// containment of every row of `rows` by exact back-substitution against
/// the echelon `candidate`, and equality of all minor gcds (a Z-span
/// invariant), which pins the index to 1.  `candidate` must be in echelon
/// form with positive pivots.
bool spans_equal_echelon(const IntMat& rows, const IntMat& candidate);

/// Membership of v in the Z-span of gens, by enumerating the coefficient
/// box [-bound, bound]^k.  Exact but exponential; keep k and bound tiny.
bool box_member(const IntMat& gens, const IntVec& v, long bound);

/// Exterior-power weight support by enumerating every exponent vector
/// over the weight list with multiplicity.
std::set<IntVec> exterior_support_brute(const std::vector<IntVec>& weights,
                                        const std::vector<long>& multiplicities,
                                        long r, long m);

} // namespace cmtk::oracle
