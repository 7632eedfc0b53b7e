#include "cmtk/cm_type.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>

namespace cmtk {

namespace {

constexpr int kMaxEnumerationPairs = 20;  // 2^20 types; beyond that, refuse

uint64_t to_mask(std::span<const int> elems) {
    uint64_t m = 0;
    for (int x : elems) m |= uint64_t{1} << x;
    return m;
}

} // namespace

CMType::CMType(GaloisFrame frame, std::vector<int> phi)
    : frame_(std::move(frame)), phi_(std::move(phi)) {
    const int n = frame_.order();
    std::sort(phi_.begin(), phi_.end());
    if (std::adjacent_find(phi_.begin(), phi_.end()) != phi_.end())
        throw input_error("CM type: repeated element");
    for (int x : phi_)
        if (x < 0 || x >= n) throw input_error("CM type: element out of range");
    if (static_cast<int>(phi_.size()) * 2 != n)
        throw input_error("CM type: phi must contain exactly half the frame");
    // phi and c*phi must partition the frame
    const int c = frame_.conj();
    for (int x : phi_)
        if (std::binary_search(phi_.begin(), phi_.end(), frame_.mul(c, x)))
            throw input_error("CM type: phi contains a conjugate pair");
}

std::vector<int> CMType::phi_inverse() const {
    std::vector<int> inv;
    inv.reserve(phi_.size());
    for (int x : phi_) inv.push_back(frame_.inverse(x));
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<CMType> enumerate_cm_types(const GaloisFrame& frame) {
    const int n = frame.order();
    const int c = frame.conj();
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        int y = frame.mul(c, x);
        pairs.emplace_back(x, y);
        seen[x] = seen[y] = true;
    }
    const int k = static_cast<int>(pairs.size());
    if (k > kMaxEnumerationPairs)
        throw input_error("CM type enumeration infeasible at this frame order");
    std::vector<CMType> out;
    out.reserve(size_t{1} << k);
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        std::vector<int> phi;
        phi.reserve(k);
        for (int j = 0; j < k; ++j) phi.push_back(mask >> j & 1 ? pairs[j].second : pairs[j].first);
        out.emplace_back(frame, std::move(phi));
    }
    return out;
}

std::vector<CMOrbit> classify_cm_types(const GaloisFrame& frame, Side side) {
    auto types = enumerate_cm_types(frame);
    const int n = frame.order();

    std::map<uint64_t, bool> visited;
    for (const auto& t : types) visited[to_mask(t.phi())] = false;

    std::vector<CMOrbit> orbits;
    for (const auto& t : types) {
        uint64_t m0 = to_mask(t.phi());
        if (visited[m0]) continue;
        std::vector<int> rep = t.phi();
        long size = 0;
        for (int g = 0; g < n; ++g) {
            auto moved = translate(frame, t.phi(), g, side);
            uint64_t m = to_mask(moved);
            auto it = visited.find(m);
            assert(it != visited.end());  // translation permutes CM types
            if (!it->second) {
                it->second = true;
                ++size;
                if (moved < rep) rep = std::move(moved);
            }
        }
        orbits.push_back(CMOrbit{CMType(frame, std::move(rep)), size});
    }
    std::sort(orbits.begin(), orbits.end(), [](const CMOrbit& a, const CMOrbit& b) {
        return a.representative.phi() < b.representative.phi();
    });
    return orbits;
}

long WeightSystem::multiplicity_of(const GroupRingVector& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w);
    if (it == weights.end() || !(*it == w)) return 0;
    return multiplicities[static_cast<size_t>(it - weights.begin())];
}

long WeightSystem::total() const {
    long t = 0;
    for (long m : multiplicities) t += m;
    return t;
}

WeightSystem weight_system(const CMType& cm) {
    const GaloisFrame& f = cm.frame();
    const int n = f.order();
    auto inv = cm.phi_inverse();

    std::map<std::vector<int>, long> orbit;  // translated set -> hit count
    for (int g = 0; g < n; ++g) ++orbit[translate(f, inv, g, Side::Left)];

    WeightSystem ws{f, {}, {}, GroupRingVector::indicator(f, inv)};
    for (const auto& [subset, count] : orbit) {
        ws.weights.push_back(GroupRingVector::indicator(f, subset));
        ws.multiplicities.push_back(count);
    }
    // map keys are sorted subsets; indicator order coincides with lex order
    // on the vectors only after an explicit sort
    std::vector<size_t> idx(ws.weights.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return ws.weights[a] < ws.weights[b]; });
    WeightSystem sorted{f, {}, {}, ws.identity_weight};
    for (size_t i : idx) {
        sorted.weights.push_back(std::move(ws.weights[i]));
        sorted.multiplicities.push_back(ws.multiplicities[i]);
    }
#ifndef NDEBUG
    for (long m : sorted.multiplicities) assert(m == sorted.multiplicities[0]);
    assert(sorted.total() == n);
#endif
    return sorted;
}

CharLattice mt_lattice(const CMType& cm) {
    auto ws = weight_system(cm);
    return CharLattice(cm.frame(), std::move(ws.weights));
}

bool is_primitive(const CMType& cm) {
    return stabilizer(cm.frame(), cm.phi(), Side::Right).is_trivial();
}

Subgroup reflex_group(const CMType& cm) {
    return stabilizer(cm.frame(), cm.phi(), Side::Left);
}

bool is_nondegenerate(const CMType& cm) {
    return mt_lattice(cm).rank() == cm.g() + 1;
}

} // namespace cmtk
