#pragma once

#include "cmtk/frame.hpp"
#include "cmtk/numeric.hpp"

#include <compare>
#include <span>

namespace cmtk {

/// An element of Z[G]: coefficient i belongs to group element i.
struct GroupRingVector {
    GaloisFrame frame;
    IntVec coeffs;  // length == frame.order()

    static GroupRingVector zero(const GaloisFrame& f);
    static GroupRingVector indicator(const GaloisFrame& f, std::span<const int> subset);
    /// The norm character chi = sum of all group elements.
    static GroupRingVector norm_char(const GaloisFrame& f);

    GroupRingVector& operator+=(const GroupRingVector& o);
    GroupRingVector& operator-=(const GroupRingVector& o);
    friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
    friend GroupRingVector operator-(GroupRingVector a, const GroupRingVector& b) { return a -= b; }
    friend GroupRingVector operator*(const Int& k, const GroupRingVector& v);

    bool is_zero() const;
    Int coeff_sum() const;

    bool operator==(const GroupRingVector& o) const { return frame == o.frame && coeffs == o.coeffs; }
    bool operator!=(const GroupRingVector& o) const { return !(*this == o); }
    /// Lexicographic order on coefficients (frames assumed equal).
    bool operator<(const GroupRingVector& o) const { return coeffs < o.coeffs; }
};

void require_same_frame(const GaloisFrame& a, const GaloisFrame& b, const char* op);

} // namespace cmtk
