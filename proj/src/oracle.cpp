#include "cmtk/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace cmtk::oracle {

int rational_rank(const IntMat& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rat>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> q(r.size());
        for (size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
        a.push_back(std::move(q));
    }
    const size_t n = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < a.size(); ++col) {
        size_t sel = a.size();
        for (size_t i = rank; i < a.size(); ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel == a.size()) continue;
        std::swap(a[rank], a[sel]);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

Int determinant(const IntMat& m) {
    const size_t k = m.size();
    if (k == 0) return 1;
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int det = 0;
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0) continue;
        IntMat minor;
        minor.reserve(k - 1);
        for (size_t i = 1; i < k; ++i) {
            IntVec row;
            row.reserve(k - 1);
            for (size_t jj = 0; jj < k; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void combinations(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace

Int minor_gcd(const IntMat& rows, int k) {
    if (k == 0) return 1;
    if (rows.empty() || k < 0) return 0;
    const size_t m = rows.size();
    const size_t n = rows[0].size();
    if (static_cast<size_t>(k) > m || static_cast<size_t>(k) > n) return 0;
    Int g = 0;
    combinations(m, static_cast<size_t>(k), [&](const std::vector<size_t>& ri) {
        combinations(n, static_cast<size_t>(k), [&](const std::vector<size_t>& ci) {
            IntMat sub(static_cast<size_t>(k), IntVec(static_cast<size_t>(k)));
            for (size_t a = 0; a < ri.size(); ++a)
                for (size_t b = 0; b < ci.size(); ++b) sub[a][b] = rows[ri[a]][ci[b]];
            g = cmtk::gcd(g, determinant(sub));
        });
    });
    return abs_int(g);
}

FgAbelianGroup cokernel_via_minors(const IntMat& rows, std::size_t ambient) {
    FgAbelianGroup out;
    int r = 0;
    Int prev = 1;
    std::vector<Int> invariants;
    for (int k = 1;; ++k) {
        Int dk = minor_gcd(rows, k);
        if (dk == 0) break;
        invariants.push_back(dk / prev);
        prev = dk;
        r = k;
    }
    out.free_rank = static_cast<long>(ambient) - r;
    for (const auto& d : invariants)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

bool spans_equal_echelon(const IntMat& rows, const IntMat& candidate) {
    int r1 = rational_rank(rows);
    int r2 = rational_rank(candidate);
    if (r1 != r2) return false;
    if (static_cast<size_t>(r2) != candidate.size()) return false;  // echelon basis expected

    // every original row must reduce to zero against the echelon candidate
    for (const auto& row : rows) {
        IntVec v = row;
        for (const auto& basis_row : candidate) {
            size_t p = 0;
            while (p < basis_row.size() && basis_row[p] == 0) ++p;
            if (p == basis_row.size()) return false;
            if (v[p] % basis_row[p] != 0) return false;
            Int q = v[p] / basis_row[p];
            if (q != 0)
                for (size_t j = p; j < v.size(); ++j) v[j] -= q * basis_row[j];
        }
        for (const auto& x : v)
            if (x != 0) return false;
    }
    // containment plus equal minor gcds pins the index to one
    for (int k = 1; k <= r1; ++k)
        if (minor_gcd(rows, k) != minor_gcd(candidate, k)) return false;
    return true;
}

bool box_member(const IntMat& gens, const IntVec& v, long bound) {
    const size_t k = gens.size();
    const size_t n = v.size();
    IntVec acc(n, Int(0));
    std::vector<long> c(k, -bound);
    // initialize accumulator at all coefficients = -bound
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) acc[j] += Int(-bound) * gens[i][j];
    for (;;) {
        if (acc == v) return true;
        size_t i = 0;
        while (i < k && c[i] == bound) {
            for (size_t j = 0; j < n; ++j) acc[j] += Int(-2 * bound) * gens[i][j];
            c[i] = -bound;
            ++i;
        }
        if (i == k) return false;
        ++c[i];
        for (size_t j = 0; j < n; ++j) acc[j] += gens[i][j];
    }
}

std::set<IntVec> exterior_support_brute(const std::vector<IntVec>& weights,
                                        const std::vector<long>& multiplicities,
                                        long r, long m) {
    // expand the multiset: mult(beta) copies of each weight, each copy
    // contributing an exponent in [0, m]
    std::vector<const IntVec*> expanded;
    for (size_t i = 0; i < weights.size(); ++i)
        for (long c = 0; c < multiplicities[i]; ++c) expanded.push_back(&weights[i]);

    std::set<IntVec> sums;
    const size_t n = weights.empty() ? 0 : weights[0].size();
    IntVec current(n, Int(0));
    std::function<void(size_t, long)> rec = [&](size_t i, long remaining) {
        if (i == expanded.size()) {
            if (remaining == 0) sums.insert(current);
            return;
        }
        long cap = std::min(remaining, m);
        for (long e = 0; e <= cap; ++e) {
            if (e > 0)
                for (size_t j = 0; j < n; ++j) current[j] += (*expanded[i])[j];
            rec(i + 1, remaining - e);
        }
        for (long e = cap; e > 0; --e)
            for (size_t j = 0; j < n; ++j) current[j] -= (*expanded[i])[j];
    };
    rec(0, r);
    return sums;
}

} // namespace cmtk::oracle
