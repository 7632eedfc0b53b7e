#pragma once

#include "cmtk/cm_type.hpp"

#include <optional>
#include <string>
#include <utility>

namespace cmtk {

enum class TorsionKind { PotentiallyTorsionInfinite, EssentiallyTorsionFinite };

const char* torsion_kind_name(TorsionKind k);

/// Verdict for one ordered direction (first relative to second).
/// Invariant: kind == PotentiallyTorsionInfinite  <=>  qspan_included
/// <=> h_group->free_rank == 0 (whenever h_group is present; it is always
/// present on CM-pair paths).
struct TorsionVerdict {
    TorsionKind kind = TorsionKind::EssentiallyTorsionFinite;
    bool qspan_included = false;
    std::optional<FgAbelianGroup> h_group;
};

struct PairVerdict {
    TorsionVerdict dir12;  // cm1 relative to cm2
    TorsionVerdict dir21;

    bool mutual_pti() const {
        return dir12.kind == TorsionKind::PotentiallyTorsionInfinite &&
               dir21.kind == TorsionKind::PotentiallyTorsionInfinite;
    }
};

/// Both-direction decision for a CM pair on a shared frame.
PairVerdict decide_cm_pair(const CMType& cm1, const CMType& cm2);

/// Character lattice of the product torus: sum of the two MT lattices.
CharLattice product_mt_lattice(const CMType& cm1, const CMType& cm2);

/// Rank bookkeeping for the mutual-torsion-infiniteness equivalences.
struct MutualReport {
    int rank1 = 0;
    int rank2 = 0;
    int rank12 = 0;
    bool ranks_all_equal = false;
    bool mutual_pti = false;
    bool consistent = false;  // ranks_all_equal == mutual_pti
};

MutualReport mutual_verdict_equivalences(const CMType& cm1, const CMType& cm2);

/// Exact test dA >= 2^(3*dB - 1); true is sufficient for "A essentially
/// torsion finite for B" (A absolutely simple).
bool dimension_gap_sufficient(long dim_a, long dim_b);

/// Albert-class tag in (g, Type) notation, e.g. IV(3,1).
struct AlbertType {
    enum class Family { I, II, III, IV };
    Family family = Family::I;
    std::optional<std::pair<int, int>> iv_params;  // (e0, m) when written
    bool cm_marked = false;                        // trailing "CM"

    static AlbertType parse(const std::string& tag);
    std::string to_string() const;
};

/// Input descriptor for the low-dimension decision table.
struct LowDimDescriptor {
    int dim = 1;  // 1..3
    AlbertType albert_type;
    std::optional<CMType> cm_type;             // required for the CM-vs-CM case
    std::optional<bool> endo_embedding_flag;   // cases (a)/(b)

    bool is_cm_elliptic() const;
    bool is_cm_threefold() const;
    bool is_type4_noncm_threefold() const;
};

/// Decision table for absolutely simple, non-isogenous pairs with
/// dim <= 3: mutual essential torsion finiteness except the three special
/// shapes (CM elliptic vs CM threefold, CM elliptic vs non-CM type IV
/// threefold, CM threefold vs CM threefold).
std::pair<TorsionVerdict, TorsionVerdict> low_dim_verdict(const LowDimDescriptor& a,
                                                          const LowDimDescriptor& b);

} // namespace cmtk
