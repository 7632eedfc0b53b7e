#pragma once

#include "cmtk/group_ring.hpp"
#include "cmtk/numeric.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace cmtk {

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors d1 | d2 | ... (each >= 2, factors of 1 dropped).
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FgAbelianGroup&) const = default;
};

/// Canonical row Hermite normal form: echelon shape, positive pivots,
/// entries above each pivot reduced into [0, pivot).  Zero rows dropped.
/// The Z-span of the input rows is preserved.
IntMat hermite_form(IntMat rows);

/// Hermite reduction carrying the unimodular transform: u * rows = h,
/// with h in echelon form (zero rows kept, at the bottom) and u square
/// unimodular.  Rows of u opposite zero rows of h span the integer
/// left-kernel of the input.
struct HermiteTransform {
    IntMat h;
    IntMat u;
};
HermiteTransform hermite_with_transform(IntMat rows);

/// Invariant factors of the cokernel Z^ambient / rowspan(rows).
FgAbelianGroup cokernel_invariants(const IntMat& rows, std::size_t ambient);

/// Integer sublattice of Z[G], kept with its original generator list.
/// The canonical Hermite basis is computed on first use and cached; the
/// once-only initialization is safe for concurrent readers.
class CharLattice {
public:
    CharLattice(GaloisFrame frame, std::vector<GroupRingVector> generators);
    static CharLattice zero(const GaloisFrame& f) { return CharLattice(f, {}); }

    const GaloisFrame& frame() const { return d_->frame; }
    const std::vector<GroupRingVector>& generators() const { return d_->gens; }

    const IntMat& basis() const;  // canonical HNF rows
    int rank() const;

    /// Exact integral membership (reduction against the Hermite basis).
    bool contains(const GroupRingVector& v) const;

    /// Lattice equality = literal equality of canonical bases.
    bool operator==(const CharLattice& o) const;
    bool operator!=(const CharLattice& o) const { return !(*this == o); }

private:
    struct Data {
        GaloisFrame frame;
        std::vector<GroupRingVector> gens;
        mutable std::once_flag once;
        mutable IntMat hnf;
        mutable int rank = 0;
        Data(GaloisFrame f, std::vector<GroupRingVector> g)
            : frame(std::move(f)), gens(std::move(g)) {}
    };
    void ensure_basis() const;
    std::shared_ptr<Data> d_;
};

/// True iff every generator of inner lies in the Q-span of outer.
bool qspan_contains(const CharLattice& outer, const CharLattice& inner);

CharLattice lattice_sum(const CharLattice& a, const CharLattice& b);

/// Exact intersection, via the integer kernel of the stacked-basis matrix.
CharLattice lattice_intersection(const CharLattice& a, const CharLattice& b);

/// Invariants of num / (num ∩ den).  den need not be contained in num.
FgAbelianGroup quotient_group(const CharLattice& num, const CharLattice& den);

/// One rational solution expressing target over the lattice's *stored
/// generator list* (free variables set to zero), or nullopt when target
/// is outside the Q-span.
std::optional<std::vector<Rat>> solve_rational(const CharLattice& lattice,
                                               const GroupRingVector& target);

/// Integral coordinates of v against canonical HNF rows; nullopt if v is
/// not in the Z-span.
std::optional<IntVec> coords_in_hermite_basis(const IntMat& basis, IntVec v);

} // namespace cmtk
