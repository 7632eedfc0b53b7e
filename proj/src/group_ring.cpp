#include "cmtk/group_ring.hpp"

namespace cmtk {

void require_same_frame(const GaloisFrame& a, const GaloisFrame& b, const char* op) {
    if (a != b) throw input_error(std::string(op) + ": frame mismatch");
}

GroupRingVector GroupRingVector::zero(const GaloisFrame& f) {
    return GroupRingVector{f, IntVec(static_cast<size_t>(f.order()), Int(0))};
}

GroupRingVector GroupRingVector::indicator(const GaloisFrame& f, std::span<const int> subset) {
    GroupRingVector v = zero(f);
    for (int x : subset) {
        if (x < 0 || x >= f.order()) throw input_error("indicator: element out of range");
        v.coeffs[static_cast<size_t>(x)] += 1;
    }
    return v;
}

GroupRingVector GroupRingVector::norm_char(const GaloisFrame& f) {
    return GroupRingVector{f, IntVec(static_cast<size_t>(f.order()), Int(1))};
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& o) {
    require_same_frame(frame, o.frame, "add");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

GroupRingVector& GroupRingVector::operator-=(const GroupRingVector& o) {
    require_same_frame(frame, o.frame, "subtract");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

GroupRingVector operator*(const Int& k, const GroupRingVector& v) {
    GroupRingVector out = v;
    for (auto& c : out.coeffs) c *= k;
    return out;
}

bool GroupRingVector::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

Int GroupRingVector::coeff_sum() const {
    Int s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

} // namespace cmtk
