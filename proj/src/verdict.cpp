#include "cmtk/verdict.hpp"

#include <cassert>
#include <sstream>

namespace cmtk {

const char* torsion_kind_name(TorsionKind k) {
    return k == TorsionKind::PotentiallyTorsionInfinite ? "potentially_torsion_infinite"
                                                        : "essentially_torsion_finite";
}

namespace {

TorsionVerdict directed_verdict(const CharLattice& self, const CharLattice& other) {
    TorsionVerdict v;
    v.qspan_included = qspan_contains(other, self);
    v.h_group = quotient_group(self, other);
    v.kind = v.qspan_included ? TorsionKind::PotentiallyTorsionInfinite
                              : TorsionKind::EssentiallyTorsionFinite;
    assert(v.qspan_included == (v.h_group->free_rank == 0));
    return v;
}

} // namespace

PairVerdict decide_cm_pair(const CMType& cm1, const CMType& cm2) {
    require_same_frame(cm1.frame(), cm2.frame(), "decide_cm_pair");
    CharLattice l1 = mt_lattice(cm1);
    CharLattice l2 = mt_lattice(cm2);
    return PairVerdict{directed_verdict(l1, l2), directed_verdict(l2, l1)};
}

CharLattice product_mt_lattice(const CMType& cm1, const CMType& cm2) {
    require_same_frame(cm1.frame(), cm2.frame(), "product_mt_lattice");
    return lattice_sum(mt_lattice(cm1), mt_lattice(cm2));
}

MutualReport mutual_verdict_equivalences(const CMType& cm1, const CMType& cm2) {
    MutualReport r;
    r.rank1 = mt_lattice(cm1).rank();
    r.rank2 = mt_lattice(cm2).rank();
    r.rank12 = product_mt_lattice(cm1, cm2).rank();
    r.ranks_all_equal = r.rank12 == r.rank1 && r.rank12 == r.rank2;
    r.mutual_pti = decide_cm_pair(cm1, cm2).mutual_pti();
    r.consistent = r.ranks_all_equal == r.mutual_pti;
    return r;
}

bool dimension_gap_sufficient(long dim_a, long dim_b) {
    if (dim_a < 1 || dim_b < 1) throw input_error("dimension_gap: dimensions must be positive");
    Int threshold = Int(1) << static_cast<unsigned>(3 * dim_b - 1);
    return Int(dim_a) >= threshold;
}

AlbertType AlbertType::parse(const std::string& tag) {
    AlbertType t;
    size_t i = 0;
    auto skip_ws = [&] { while (i < tag.size() && tag[i] == ' ') ++i; };
    skip_ws();
    size_t romans = 0;
    while (i + romans < tag.size() && (tag[i + romans] == 'I' || tag[i + romans] == 'V')) ++romans;
    std::string fam = tag.substr(i, romans);
    i += romans;
    if (fam == "I") t.family = Family::I;
    else if (fam == "II") t.family = Family::II;
    else if (fam == "III") t.family = Family::III;
    else if (fam == "IV") t.family = Family::IV;
    else throw input_error("unrecognized Albert type tag: " + tag);
    skip_ws();
    if (i < tag.size() && tag[i] == '(') {
        size_t close = tag.find(')', i);
        if (close == std::string::npos) throw input_error("unbalanced Albert type tag: " + tag);
        std::string inside = tag.substr(i + 1, close - i - 1);
        std::istringstream ss(inside);
        int a = 0, b = 1;
        char comma = 0;
        if (!(ss >> a)) throw input_error("bad Albert type parameters: " + tag);
        if (ss >> comma) {
            if (comma != ',' || !(ss >> b)) throw input_error("bad Albert type parameters: " + tag);
        }
        t.iv_params = std::make_pair(a, b);
        i = close + 1;
    }
    skip_ws();
    if (tag.compare(i, 2, "CM") == 0) {
        t.cm_marked = true;
        i += 2;
    }
    skip_ws();
    if (i != tag.size()) throw input_error("trailing junk in Albert type tag: " + tag);
    return t;
}

std::string AlbertType::to_string() const {
    std::string s;
    switch (family) {
        case Family::I: s = "I"; break;
        case Family::II: s = "II"; break;
        case Family::III: s = "III"; break;
        case Family::IV: s = "IV"; break;
    }
    if (iv_params) {
        s += "(" + std::to_string(iv_params->first) + "," + std::to_string(iv_params->second) + ")";
    }
    if (cm_marked) s += " CM";
    return s;
}

bool LowDimDescriptor::is_cm_elliptic() const {
    // every type IV elliptic curve has CM by an imaginary quadratic field
    return dim == 1 && albert_type.family == AlbertType::Family::IV;
}

bool LowDimDescriptor::is_cm_threefold() const {
    if (dim != 3 || albert_type.family != AlbertType::Family::IV) return false;
    if (albert_type.iv_params) return *albert_type.iv_params == std::make_pair(3, 1);
    return albert_type.cm_marked;
}

bool LowDimDescriptor::is_type4_noncm_threefold() const {
    if (dim != 3 || albert_type.family != AlbertType::Family::IV) return false;
    if (albert_type.iv_params) return *albert_type.iv_params == std::make_pair(1, 1);
    return false;
}

namespace {

TorsionVerdict flag_verdict(bool pti) {
    TorsionVerdict v;
    v.kind = pti ? TorsionKind::PotentiallyTorsionInfinite : TorsionKind::EssentiallyTorsionFinite;
    v.qspan_included = pti;
    return v;  // no character lattice on this path, so no h group
}

void check_descriptor(const LowDimDescriptor& d) {
    if (d.dim < 1 || d.dim > 3) throw input_error("low-dim descriptor: dim must be 1..3");
    if (d.cm_type && d.cm_type->g() != d.dim)
        throw input_error("low-dim descriptor: CM type dimension does not match dim");
    if (d.dim == 3 && d.albert_type.family == AlbertType::Family::IV &&
        !d.albert_type.iv_params && !d.albert_type.cm_marked)
        throw input_error("low-dim descriptor: type IV threefold needs (3,1) or (1,1) parameters");
}

} // namespace

std::pair<TorsionVerdict, TorsionVerdict> low_dim_verdict(const LowDimDescriptor& a,
                                                          const LowDimDescriptor& b) {
    check_descriptor(a);
    check_descriptor(b);
    const bool swapped = a.dim > b.dim;
    const LowDimDescriptor& x = swapped ? b : a;  // dim(x) <= dim(y)
    const LowDimDescriptor& y = swapped ? a : b;

    TorsionVerdict xy, yx;
    if (x.is_cm_elliptic() && y.is_cm_threefold()) {
        // case (a): threefold always essentially torsion finite for the
        // curve; the curve's verdict follows the End^0 embedding
        auto flag = x.endo_embedding_flag ? x.endo_embedding_flag : y.endo_embedding_flag;
        if (!flag)
            throw input_error("low_dim_verdict: CM elliptic vs CM threefold needs the "
                              "endomorphism-embedding flag");
        xy = flag_verdict(*flag);
        yx = flag_verdict(false);
    } else if (x.is_cm_elliptic() && y.is_type4_noncm_threefold()) {
        // case (b): same shape, with an End^0 isomorphism flag
        auto flag = x.endo_embedding_flag ? x.endo_embedding_flag : y.endo_embedding_flag;
        if (!flag)
            throw input_error("low_dim_verdict: CM elliptic vs non-CM type IV threefold "
                              "needs the endomorphism-isomorphism flag");
        xy = flag_verdict(*flag);
        yx = flag_verdict(false);
    } else if (x.is_cm_threefold() && y.is_cm_threefold()) {
        // case (c): decided by the CM types on a common frame
        if (!x.cm_type || !y.cm_type)
            throw input_error("low_dim_verdict: CM threefold pair needs both CM types");
        PairVerdict pv = decide_cm_pair(*x.cm_type, *y.cm_type);
        xy = pv.dir12;
        yx = pv.dir21;
    } else {
        xy = flag_verdict(false);
        yx = flag_verdict(false);
    }
    if (swapped) std::swap(xy, yx);
    return {xy, yx};
}

} // namespace cmtk
