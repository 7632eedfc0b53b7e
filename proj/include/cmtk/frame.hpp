#pragma once

#include "cmtk/error.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cmtk {

/// How a frame was built; serialized into configs and reports.
/// Multiplication tables are never serialized.
struct FrameSpec {
    enum class Kind { Cyclic, Product, Custom };
    Kind kind = Kind::Custom;
    long cyclic_n = 0;                // Kind::Cyclic
    std::vector<long> moduli;         // Kind::Product
    std::vector<long> conj_coords;    // Kind::Product

    bool operator==(const FrameSpec&) const = default;
};

enum class Side { Left, Right };

/// A finite group with a designated central involution, standing in for
/// Gal(E/Q) with complex conjugation.  Values are immutable after
/// construction and cheap to copy (shared internal table).
///
/// Element 0 is always the identity; constructors renumber if needed.
class GaloisFrame {
public:
    /// Z/n with conjugation at n/2.  n must be even and >= 2.
    static GaloisFrame cyclic(long n);

    /// Direct product of cyclic groups Z/m1 x ... x Z/mk with the
    /// designated involution given by coordinates.  Rejects a conj choice
    /// that is not a central involution.
    static GaloisFrame product(const std::vector<long>& moduli,
                               const std::vector<long>& conj_coords);

    /// Direct product of two frames, with conj chosen by flat index
    /// (index = ia * b.order() + ib).  Discards the component involutions.
    static GaloisFrame product(const GaloisFrame& a, const GaloisFrame& b, int conj_index);

    /// From a raw multiplication table (row-major, order x order).
    /// Validates the group axioms and the involution, and renumbers so the
    /// identity sits at index 0.
    static GaloisFrame from_table(std::vector<int> mul_table, int conj);

    int order() const { return d_->order; }
    int mul(int a, int b) const { return d_->mul[static_cast<size_t>(a) * d_->order + b]; }
    int inverse(int a) const { return d_->inv[static_cast<size_t>(a)]; }
    int conj() const { return d_->conj; }
    bool is_abelian() const { return d_->abelian; }
    const FrameSpec& spec() const { return d_->spec; }

    bool operator==(const GaloisFrame& o) const;
    bool operator!=(const GaloisFrame& o) const { return !(*this == o); }

private:
    struct Data {
        int order = 0;
        std::vector<int> mul;  // order*order, row-major
        std::vector<int> inv;
        int conj = 0;
        bool abelian = true;
        FrameSpec spec;
    };
    explicit GaloisFrame(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static GaloisFrame finish(Data d);  // validates + renumbers
    std::shared_ptr<const Data> d_;
};

/// Subgroup as a sorted element-index list; closed under mul and inverse.
struct Subgroup {
    GaloisFrame frame;
    std::vector<int> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool is_trivial() const { return elements.size() == 1; }
    bool contains(int g) const;
};

/// {g*x} or {x*g} over the subset, returned sorted.
std::vector<int> translate(const GaloisFrame& frame, std::span<const int> subset,
                           int g, Side side);

/// Elements whose translation fixes the subset setwise.
Subgroup stabilizer(const GaloisFrame& frame, std::span<const int> subset, Side side);

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

} // namespace cmtk
