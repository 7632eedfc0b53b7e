#include "cmtk/verdict.hpp"

#include <doctest.h>

using namespace cmtk;

namespace {

const std::vector<std::vector<int>> kZeta13 = {
    {0, 1, 2, 3, 4, 5},  {0, 2, 3, 4, 5, 7}, {0, 1, 3, 4, 5, 8},
    {0, 3, 4, 5, 7, 8},  {0, 3, 5, 7, 8, 10}, {0, 1, 4, 5, 8, 9},
};
const std::vector<std::vector<int>> kZeta11 = {
    {0, 2, 4, 6, 8}, {0, 2, 3, 4, 6}, {0, 2, 3, 6, 9}, {0, 1, 2, 3, 4},
};

bool is_pti(const TorsionVerdict& v) { return v.kind == TorsionKind::PotentiallyTorsionInfinite; }

void check_invariant(const TorsionVerdict& v) {
    CHECK(is_pti(v) == v.qspan_included);
    if (v.h_group) CHECK(v.qspan_included == (v.h_group->free_rank == 0));
}

} // namespace

TEST_CASE("decide_cm_pair on the zeta13 pair") {
    auto f = GaloisFrame::cyclic(12);
    auto pv = decide_cm_pair(CMType(f, kZeta13[0]), CMType(f, kZeta13[1]));
    CHECK(pv.mutual_pti());
    REQUIRE(pv.dir12.h_group.has_value());
    CHECK(pv.dir12.h_group->torsion == std::vector<Int>{2, 2});
    CHECK(pv.dir12.h_group->free_rank == 0);
    CHECK(pv.dir21.h_group->is_trivial());
    check_invariant(pv.dir12);
    check_invariant(pv.dir21);
}

TEST_CASE("decide_cm_pair zeta13 against the degenerate class") {
    auto f = GaloisFrame::cyclic(12);
    auto pv = decide_cm_pair(CMType(f, kZeta13[5]), CMType(f, kZeta13[0]));
    CHECK(is_pti(pv.dir12));        // degenerate one is PTI for the others
    CHECK_FALSE(is_pti(pv.dir21));  // and they are ETF for it
    CHECK(pv.dir21.h_group->free_rank > 0);
}

TEST_CASE("decide_cm_pair zeta11 tables") {
    auto f = GaloisFrame::cyclic(10);
    auto pv = decide_cm_pair(CMType(f, kZeta11[1]), CMType(f, kZeta11[2]));
    CHECK(pv.mutual_pti());

    auto pv2 = decide_cm_pair(CMType(f, kZeta11[1]), CMType(f, kZeta11[0]));
    CHECK_FALSE(is_pti(pv2.dir12));  // Phi2 is ETF for Phi1
    CHECK(is_pti(pv2.dir21));        // Phi1 is PTI for Phi2
}

TEST_CASE("decide_cm_pair rejects mixed frames") {
    auto a = CMType(GaloisFrame::cyclic(6), {0, 1, 2});
    auto b = CMType(GaloisFrame::cyclic(10), {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(decide_cm_pair(a, b), input_error);
}

TEST_CASE("reflexivity and translation invariance") {
    auto f = GaloisFrame::cyclic(10);
    CMType phi(f, kZeta11[1]);
    auto self = decide_cm_pair(phi, phi);
    CHECK(self.mutual_pti());
    CHECK(self.dir12.h_group->is_trivial());
    CHECK(self.dir21.h_group->is_trivial());

    CMType other(f, kZeta11[2]);
    auto base = decide_cm_pair(phi, other);
    for (int g = 0; g < 10; ++g) {
        CMType moved(f, translate(f, phi.phi(), g, Side::Left));
        auto pv = decide_cm_pair(moved, other);
        CHECK(pv.dir12.kind == base.dir12.kind);
        CHECK(pv.dir21.kind == base.dir21.kind);
        CHECK(*pv.dir12.h_group == *base.dir12.h_group);
        CHECK(*pv.dir21.h_group == *base.dir21.h_group);
    }
}

TEST_CASE("qspan order is transitive") {
    for (int n : {6, 8, 10}) {
        auto f = GaloisFrame::cyclic(n);
        auto types = enumerate_cm_types(f);
        std::vector<CharLattice> lats;
        for (const auto& t : types) lats.push_back(mt_lattice(t));
        for (size_t i = 0; i < types.size(); i += 2)
            for (size_t j = 0; j < types.size(); j += 2)
                for (size_t k = 0; k < types.size(); k += 2) {
                    if (qspan_contains(lats[j], lats[i]) && qspan_contains(lats[k], lats[j]))
                        CHECK(qspan_contains(lats[k], lats[i]));
                }
    }
}

TEST_CASE("nondegenerate targets absorb every source") {
    for (int n : {2, 4, 6, 8, 10}) {
        auto f = GaloisFrame::cyclic(n);
        auto types = enumerate_cm_types(f);
        for (const auto& a : types)
            for (const auto& b : types) {
                if (!is_nondegenerate(b)) continue;
                auto pv = decide_cm_pair(a, b);
                CHECK(is_pti(pv.dir12));
                if (is_nondegenerate(a)) {
                    CHECK(pv.mutual_pti());  // equal Q-spans
                }
            }
    }
}

TEST_CASE("product_mt_lattice") {
    auto f = GaloisFrame::cyclic(10);
    CMType phi(f, kZeta11[1]);
    CHECK(product_mt_lattice(phi, phi) == mt_lattice(phi));

    CMType phi1(f, kZeta11[0]);
    CHECK(product_mt_lattice(phi1, phi).rank() == 6);

    auto f6 = GaloisFrame::cyclic(6);
    CHECK(product_mt_lattice(CMType(f6, {0, 2, 4}), CMType(f6, {0, 1, 2})).rank() == 4);
}

TEST_CASE("mutual_verdict_equivalences") {
    auto f = GaloisFrame::cyclic(10);
    auto r = mutual_verdict_equivalences(CMType(f, kZeta11[1]), CMType(f, kZeta11[2]));
    CHECK(r.rank1 == 6);
    CHECK(r.rank2 == 6);
    CHECK(r.rank12 == 6);
    CHECK(r.ranks_all_equal);
    CHECK(r.mutual_pti);
    CHECK(r.consistent);

    auto f12 = GaloisFrame::cyclic(12);
    auto r2 = mutual_verdict_equivalences(CMType(f12, kZeta13[0]), CMType(f12, kZeta13[5]));
    CHECK_FALSE(r2.ranks_all_equal);
    CHECK_FALSE(r2.mutual_pti);
    CHECK(r2.consistent);

    CMType phi(f, kZeta11[3]);
    auto r3 = mutual_verdict_equivalences(phi, phi);
    CHECK(r3.ranks_all_equal);
    CHECK(r3.consistent);
}

TEST_CASE("dimension_gap_sufficient") {
    CHECK(dimension_gap_sufficient(4, 1));
    CHECK_FALSE(dimension_gap_sufficient(3, 1));
    CHECK(dimension_gap_sufficient(32, 2));
    CHECK_FALSE(dimension_gap_sufficient(31, 2));
    CHECK_THROWS_AS(dimension_gap_sufficient(0, 1), input_error);

    for (long da = 1; da <= 64; ++da)
        for (long db = 1; db <= 3; ++db) {
            Int rhs = Int(1) << static_cast<unsigned>(3 * db - 1);
            CHECK(dimension_gap_sufficient(da, db) == (Int(da) >= rhs));
        }
}

TEST_CASE("albert type parsing") {
    auto t = AlbertType::parse("IV(3,1)");
    CHECK(t.family == AlbertType::Family::IV);
    CHECK(t.iv_params == std::make_pair(3, 1));

    auto t2 = AlbertType::parse("II(1)");
    CHECK(t2.family == AlbertType::Family::II);

    auto t3 = AlbertType::parse("IV CM");
    CHECK(t3.family == AlbertType::Family::IV);
    CHECK(t3.cm_marked);
    CHECK_FALSE(t3.iv_params.has_value());

    CHECK(AlbertType::parse("I").family == AlbertType::Family::I);
    CHECK(AlbertType::parse("III(1)").family == AlbertType::Family::III);
    CHECK_THROWS_AS(AlbertType::parse("V"), input_error);
    CHECK_THROWS_AS(AlbertType::parse("IV(3;1)"), input_error);
}

TEST_CASE("low_dim_verdict case a: CM elliptic vs CM threefold") {
    LowDimDescriptor curve{1, AlbertType::parse("IV(1,1)"), std::nullopt, true};
    LowDimDescriptor threefold{3, AlbertType::parse("IV(3,1)"), std::nullopt, std::nullopt};

    auto [ab, ba] = low_dim_verdict(curve, threefold);
    CHECK(is_pti(ab));
    CHECK_FALSE(is_pti(ba));
    CHECK_FALSE(ab.h_group.has_value());  // flag-decided branch carries no h group

    // argument order does not change the substance
    auto [ba2, ab2] = low_dim_verdict(threefold, curve);
    CHECK(ab2.kind == ab.kind);
    CHECK(ba2.kind == ba.kind);

    curve.endo_embedding_flag = false;
    auto [ab3, ba3] = low_dim_verdict(curve, threefold);
    CHECK_FALSE(is_pti(ab3));
    CHECK_FALSE(is_pti(ba3));

    curve.endo_embedding_flag.reset();
    CHECK_THROWS_AS(low_dim_verdict(curve, threefold), input_error);
}

TEST_CASE("low_dim_verdict case b: CM elliptic vs non-CM type IV threefold") {
    LowDimDescriptor curve{1, AlbertType::parse("IV(1,1)"), std::nullopt, false};
    LowDimDescriptor threefold{3, AlbertType::parse("IV(1,1)"), std::nullopt, std::nullopt};
    auto [ab, ba] = low_dim_verdict(curve, threefold);
    CHECK_FALSE(is_pti(ab));
    CHECK_FALSE(is_pti(ba));

    curve.endo_embedding_flag = true;
    auto [ab2, ba2] = low_dim_verdict(curve, threefold);
    CHECK(is_pti(ab2));
    CHECK_FALSE(is_pti(ba2));
}

TEST_CASE("low_dim_verdict default branch") {
    LowDimDescriptor surface{2, AlbertType::parse("II(1)"), std::nullopt, std::nullopt};
    LowDimDescriptor threefold{3, AlbertType::parse("I(1)"), std::nullopt, std::nullopt};
    auto [ab, ba] = low_dim_verdict(surface, threefold);
    CHECK_FALSE(is_pti(ab));
    CHECK_FALSE(is_pti(ba));

    // two non-isogenous CM elliptic curves fall through to the default
    LowDimDescriptor e1{1, AlbertType::parse("IV(1,1)"), std::nullopt, std::nullopt};
    auto [xy, yx] = low_dim_verdict(e1, e1);
    CHECK_FALSE(is_pti(xy));
    CHECK_FALSE(is_pti(yx));
}

TEST_CASE("low_dim_verdict case c delegates to the CM machinery") {
    auto f = GaloisFrame::cyclic(6);
    LowDimDescriptor a{3, AlbertType::parse("IV(3,1)"), CMType(f, {0, 2, 4}), std::nullopt};
    LowDimDescriptor b{3, AlbertType::parse("IV(3,1)"), CMType(f, {0, 1, 2}), std::nullopt};
    auto [ab, ba] = low_dim_verdict(a, b);
    CHECK(is_pti(ab));
    CHECK_FALSE(is_pti(ba));
    REQUIRE(ab.h_group.has_value());  // delegated branch carries certificates
    CHECK(ab.h_group->free_rank == 0);

    LowDimDescriptor missing{3, AlbertType::parse("IV(3,1)"), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(low_dim_verdict(a, missing), input_error);
}

TEST_CASE("low_dim_verdict input validation") {
    LowDimDescriptor bad{4, AlbertType::parse("I(1)"), std::nullopt, std::nullopt};
    LowDimDescriptor ok{1, AlbertType::parse("I"), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(low_dim_verdict(bad, ok), input_error);

    // type IV threefold without parameters or a CM marker is ambiguous
    LowDimDescriptor ambiguous{3, AlbertType::parse("IV"), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(low_dim_verdict(ok, ambiguous), input_error);

    // CM data of the wrong dimension
    auto f = GaloisFrame::cyclic(6);
    LowDimDescriptor mismatched{1, AlbertType::parse("IV(1,1)"), CMType(f, {0, 1, 2}),
                                std::nullopt};
    CHECK_THROWS_AS(low_dim_verdict(mismatched, ok), input_error);
}
