#pragma once

#include "cmtk/cm_type.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmtk {

/// Certificate for a torsion-infinite Hodge class on A1^m x A2^n:
///
///     r*alpha0 + twist*chi  =  sum_beta e_beta * beta      in Z[G],
///
/// with alpha0 a weight of A1's system, the sum over distinct weights beta
/// of A2's system, r + s even, twist = (s - r)/2, sum e_beta = s,
/// e_beta <= n*mult(beta) and r <= m*mult(alpha0).  The class lives in
/// H^r(A1^m)^v ⊗ H^s(A2^n)(twist).
struct HodgeWitness {
    GaloisFrame frame;
    GroupRingVector alpha0;
    Int r = 0, s = 0;
    Int m = 0, n = 0;
    Int twist = 0;
    /// Nonzero coefficients only, keyed by weight, ascending.
    std::vector<std::pair<GroupRingVector, Int>> coeffs;

    HodgeWitness(GaloisFrame f, GroupRingVector a0)
        : frame(std::move(f)), alpha0(std::move(a0)) {}
};

std::string degree_descriptor(const HodgeWitness& w);

/// Weights reachable by r-fold sums of the system's weights with each
/// weight used at most m*mult times (the exterior-power weight support).
/// Empty when infeasible.
std::vector<GroupRingVector> exterior_support(const WeightSystem& ws, long r, long m);

struct WitnessBounds {
    long max_r = -1;  // -1: default |G|
    long max_t = -1;
};

enum class WitnessStatus { Found, ProvenAbsent, BoundsExhausted };

struct WitnessSearchResult {
    WitnessStatus status = WitnessStatus::BoundsExhausted;
    std::optional<HodgeWitness> witness;
};

/// Minimal witness from `source` to `target` (ordering: r, then twist,
/// then lexicographic coefficient vector), or ProvenAbsent when the
/// Q-span inclusion fails, or BoundsExhausted when the (r, t) grid is
/// used up without a hit.
WitnessSearchResult find_witness(const CMType& source, const CMType& target,
                                 WitnessBounds bounds = {});

enum class WitnessError {
    None,
    FrameMismatch,
    Alpha0NotWeight,
    BadDegrees,
    ParityViolation,
    TwistMismatch,
    CoeffKeyNotWeight,
    NegativeCoeff,
    EquationViolated,
    CoeffSumMismatch,
    CoeffBoundExceeded,
    RBoundExceeded,
};

const char* witness_error_name(WitnessError e);

struct WitnessCheck {
    bool ok = false;
    WitnessError error = WitnessError::None;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Re-checks every invariant by exact arithmetic against the two weight
/// systems.  Never throws for structural problems; reports a reason code.
WitnessCheck verify_witness(const HodgeWitness& w, const CMType& source,
                            const CMType& target);

/// The constructive route: solve alpha0 rationally over the target's
/// weights, flip negative coefficients through beta -> chi - beta, clear
/// denominators.  Yields the proof-shaped certificate (m = r, n = s), not
/// necessarily minimal.  Throws input_error when the inclusion fails.
HodgeWitness witness_from_rational_solution(const CMType& source, const CMType& target,
                                            const GroupRingVector& alpha0);

} // namespace cmtk
