#include "cmtk/frame.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

namespace cmtk {

namespace {

constexpr int kHardOrderCap = 512;  // table is order^2 ints; sanity limit

// Relabel the table so that element `e` becomes 0 (swap labels 0 <-> e).
void swap_labels(std::vector<int>& mul, int order, int e) {
    if (e == 0) return;
    auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<int> out(mul.size());
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            out[static_cast<size_t>(relabel(a)) * order + relabel(b)] =
                relabel(mul[static_cast<size_t>(a) * order + b]);
    mul = std::move(out);
}

} // namespace

GaloisFrame GaloisFrame::finish(Data d) {
    const int n = d.order;
    if (n < 2) throw input_error("frame order must be at least 2");
    if (n > kHardOrderCap) throw input_error("frame order exceeds hard cap");
    if (d.mul.size() != static_cast<size_t>(n) * n)
        throw input_error("multiplication table has wrong size");
    for (int x : d.mul)
        if (x < 0 || x >= n) throw input_error("multiplication table entry out of range");

    // locate the identity and renumber it to 0
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = d.mul[static_cast<size_t>(cand) * n + a] == a &&
                 d.mul[static_cast<size_t>(a) * n + cand] == a;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw input_error("multiplication table has no identity");
    if (e != 0) {
        swap_labels(d.mul, n, e);
        if (d.conj == 0) d.conj = e;
        else if (d.conj == e) d.conj = 0;
    }

    auto mul = [&](int a, int b) { return d.mul[static_cast<size_t>(a) * n + b]; };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw input_error("multiplication table is not associative");

    d.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) { d.inv[a] = b; break; }
        if (d.inv[a] < 0) throw input_error("multiplication table lacks inverses");
    }

    if (d.conj <= 0 || d.conj >= n) throw input_error("conj must be a non-identity element");
    if (mul(d.conj, d.conj) != 0) throw input_error("conj is not an involution");
    for (int a = 0; a < n; ++a)
        if (mul(d.conj, a) != mul(a, d.conj))
            throw input_error("conj is not central");

    // forced by the fixed-point-free pairing x <-> conj*x, but cheap to state
    if (n % 2 != 0) throw input_error("frame order must be even");

    d.abelian = true;
    for (int a = 0; a < n && d.abelian; ++a)
        for (int b = 0; b < a && d.abelian; ++b)
            if (mul(a, b) != mul(b, a)) d.abelian = false;

    return GaloisFrame(std::make_shared<const Data>(std::move(d)));
}

GaloisFrame GaloisFrame::cyclic(long n) {
    if (n < 2 || n % 2 != 0) throw input_error("cyclic frame order must be even and >= 2");
    if (n > kHardOrderCap) throw input_error("frame order exceeds hard cap");
    Data d;
    d.order = static_cast<int>(n);
    d.mul.resize(static_cast<size_t>(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            d.mul[static_cast<size_t>(a) * n + b] = static_cast<int>((a + b) % n);
    d.conj = static_cast<int>(n / 2);
    d.spec.kind = FrameSpec::Kind::Cyclic;
    d.spec.cyclic_n = n;
    return finish(std::move(d));
}

GaloisFrame GaloisFrame::product(const std::vector<long>& moduli,
                                 const std::vector<long>& conj_coords) {
    if (moduli.empty()) throw input_error("product frame needs at least one factor");
    if (moduli.size() != conj_coords.size())
        throw input_error("conj coordinates must match the number of factors");
    long n = 1;
    for (long m : moduli) {
        if (m < 1) throw input_error("cyclic factor must be positive");
        n *= m;
        if (n > kHardOrderCap) throw input_error("frame order exceeds hard cap");
    }
    const size_t k = moduli.size();
    // row-major mixed radix: last coordinate varies fastest
    std::vector<long> stride(k, 1);
    for (size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * moduli[i];

    auto encode = [&](const std::vector<long>& c) {
        long idx = 0;
        for (size_t i = 0; i < k; ++i) idx += ((c[i] % moduli[i] + moduli[i]) % moduli[i]) * stride[i];
        return idx;
    };

    Data d;
    d.order = static_cast<int>(n);
    d.mul.resize(static_cast<size_t>(n) * n);
    std::vector<long> ca(k), cb(k), cs(k);
    for (long a = 0; a < n; ++a) {
        long t = a;
        for (size_t i = 0; i < k; ++i) { ca[i] = t / stride[i]; t %= stride[i]; }
        for (long b = 0; b < n; ++b) {
            t = b;
            for (size_t i = 0; i < k; ++i) { cb[i] = t / stride[i]; t %= stride[i]; }
            for (size_t i = 0; i < k; ++i) cs[i] = ca[i] + cb[i];
            d.mul[static_cast<size_t>(a) * n + b] = static_cast<int>(encode(cs));
        }
    }
    for (size_t i = 0; i < k; ++i)
        if (conj_coords[i] < 0 || conj_coords[i] >= moduli[i])
            throw input_error("conj coordinate out of range");
    d.conj = static_cast<int>(encode(conj_coords));
    d.spec.kind = FrameSpec::Kind::Product;
    d.spec.moduli = moduli;
    d.spec.conj_coords = conj_coords;
    return finish(std::move(d));
}

GaloisFrame GaloisFrame::product(const GaloisFrame& a, const GaloisFrame& b, int conj_index) {
    const long na = a.order(), nb = b.order(), n = na * nb;
    if (n > kHardOrderCap) throw input_error("frame order exceeds hard cap");
    Data d;
    d.order = static_cast<int>(n);
    d.mul.resize(static_cast<size_t>(n) * n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            int xa = static_cast<int>(x / nb), xb = static_cast<int>(x % nb);
            int ya = static_cast<int>(y / nb), yb = static_cast<int>(y % nb);
            d.mul[static_cast<size_t>(x) * n + y] =
                a.mul(xa, ya) * static_cast<int>(nb) + b.mul(xb, yb);
        }
    if (conj_index < 0 || conj_index >= n) throw input_error("conj index out of range");
    d.conj = conj_index;
    // Compose a serializable spec when both factors decompose into cyclics.
    const FrameSpec& sa = a.spec();
    const FrameSpec& sb = b.spec();
    auto factors_of = [](const FrameSpec& s) -> std::optional<std::vector<long>> {
        if (s.kind == FrameSpec::Kind::Cyclic) return std::vector<long>{s.cyclic_n};
        if (s.kind == FrameSpec::Kind::Product) return s.moduli;
        return std::nullopt;
    };
    auto fa = factors_of(sa);
    auto fb = factors_of(sb);
    if (fa && fb) {
        d.spec.kind = FrameSpec::Kind::Product;
        d.spec.moduli = *fa;
        d.spec.moduli.insert(d.spec.moduli.end(), fb->begin(), fb->end());
        // decode conj_index into per-factor coordinates
        std::vector<long> stride(d.spec.moduli.size(), 1);
        for (size_t i = d.spec.moduli.size(); i-- > 1;)
            stride[i - 1] = stride[i] * d.spec.moduli[i];
        long t = conj_index;
        for (size_t i = 0; i < d.spec.moduli.size(); ++i) {
            d.spec.conj_coords.push_back(t / stride[i]);
            t %= stride[i];
        }
    }
    return finish(std::move(d));
}

GaloisFrame GaloisFrame::from_table(std::vector<int> mul_table, int conj) {
    Data d;
    size_t n2 = mul_table.size();
    int n = 0;
    while (static_cast<size_t>(n) * n < n2) ++n;
    if (static_cast<size_t>(n) * n != n2) throw input_error("multiplication table is not square");
    d.order = n;
    d.mul = std::move(mul_table);
    d.conj = conj;
    return finish(std::move(d));
}

bool GaloisFrame::operator==(const GaloisFrame& o) const {
    if (d_ == o.d_) return true;
    return d_->order == o.d_->order && d_->conj == o.d_->conj && d_->mul == o.d_->mul;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<int> translate(const GaloisFrame& frame, std::span<const int> subset,
                           int g, Side side) {
    std::vector<int> out;
    out.reserve(subset.size());
    for (int x : subset) {
        if (x < 0 || x >= frame.order()) throw input_error("subset element out of range");
        out.push_back(side == Side::Left ? frame.mul(g, x) : frame.mul(x, g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup stabilizer(const GaloisFrame& frame, std::span<const int> subset, Side side) {
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> elems;
    for (int g = 0; g < frame.order(); ++g)
        if (translate(frame, sorted, g, side) == sorted) elems.push_back(g);

#ifndef NDEBUG
    // closure check on every call in test builds
    for (int a : elems)
        for (int b : elems)
            assert(std::binary_search(elems.begin(), elems.end(), frame.mul(a, b)));
    assert(!elems.empty() && elems[0] == 0);
#endif
    return Subgroup{frame, std::move(elems)};
}

} // namespace cmtk
