#pragma once

#include "cmtk/frame.hpp"
#include "cmtk/lattice.hpp"

#include <vector>

namespace cmtk {

/// A CM type: a subset phi with phi ⊔ c·phi = G.  Validated on
/// construction; immutable.
class CMType {
public:
    CMType(GaloisFrame frame, std::vector<int> phi);

    const GaloisFrame& frame() const { return frame_; }
    const std::vector<int>& phi() const { return phi_; }
    int g() const { return static_cast<int>(phi_.size()); }

    /// {x^{-1} : x in phi}, sorted.
    std::vector<int> phi_inverse() const;

    bool operator==(const CMType& o) const { return frame_ == o.frame_ && phi_ == o.phi_; }

private:
    GaloisFrame frame_;
    std::vector<int> phi_;  // sorted
};

/// All 2^{|G|/2} CM types of the frame (one choice per conjugate pair),
/// in a fixed deterministic order.
std::vector<CMType> enumerate_cm_types(const GaloisFrame& frame);

struct CMOrbit {
    CMType representative;  // lexicographically least member
    long size = 0;
};

/// Orbits of all CM types under translation (phi -> g·phi for Side::Left),
/// sorted by representative.
std::vector<CMOrbit> classify_cm_types(const GaloisFrame& frame, Side side = Side::Left);

/// Galois orbit of the indicator vector of phi^{-1}; weight i of the orbit
/// is the indicator of sigma·phi^{-1}.  All multiplicities are equal to
/// the order of the right setwise stabilizer of phi.
struct WeightSystem {
    GaloisFrame frame;
    std::vector<GroupRingVector> weights;   // distinct, ascending
    std::vector<long> multiplicities;       // parallel to weights
    GroupRingVector identity_weight;        // indicator(phi^{-1})

    long multiplicity_of(const GroupRingVector& w) const;  // 0 if absent
    long total() const;                                    // == |G|
};

WeightSystem weight_system(const CMType& cm);

/// Z-span of the weight system inside Z[G] (the character lattice of the
/// associated torus).  Stored generators are the distinct weights.
CharLattice mt_lattice(const CMType& cm);

/// Trivial right setwise stabilizer.
bool is_primitive(const CMType& cm);

/// Left setwise stabilizer of phi; its fixed field is the reflex field.
Subgroup reflex_group(const CMType& cm);

/// rank(mt_lattice) == g + 1.
bool is_nondegenerate(const CMType& cm);

} // namespace cmtk
