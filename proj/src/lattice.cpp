#include "cmtk/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace cmtk {

namespace {

// Row-echelon reduction by unimodular row operations (swap, negate, add
// integer multiples).  Returns the rank; zero rows end up at the bottom.
// When `u` is non-null it receives the same operations, starting from the
// identity, so that u * input = output.
size_t echelonize(IntMat& m, IntMat* u) {
    const size_t nrows = m.size();
    const size_t ncols = nrows == 0 ? 0 : m[0].size();
    if (u) {
        u->assign(nrows, IntVec(nrows, Int(0)));
        for (size_t i = 0; i < nrows; ++i) (*u)[i][i] = 1;
    }
    auto row_axpy = [&](size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        for (size_t j = 0; j < ncols; ++j) m[dst][j] -= q * m[src][j];
        if (u)
            for (size_t j = 0; j < nrows; ++j) (*u)[dst][j] -= q * (*u)[src][j];
    };
    auto row_swap = [&](size_t a, size_t b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        if (u) std::swap((*u)[a], (*u)[b]);
    };

    size_t r = 0;
    for (size_t col = 0; col < ncols && r < nrows; ++col) {
        // euclidean elimination within the column
        for (;;) {
            size_t best = nrows;
            for (size_t i = r; i < nrows; ++i)
                if (m[i][col] != 0 &&
                    (best == nrows || abs_int(m[i][col]) < abs_int(m[best][col])))
                    best = i;
            if (best == nrows) break;  // column clear below r
            row_swap(r, best);
            bool clean = true;
            for (size_t i = r + 1; i < nrows; ++i) {
                if (m[i][col] == 0) continue;
                row_axpy(i, r, floor_div(m[i][col], m[r][col]));
                if (m[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][col] != 0) ++r;
    }
    return r;
}

// Canonical HNF shape on an echelonized matrix: positive pivots, entries
// above each pivot reduced into [0, pivot).
void canonicalize(IntMat& m, size_t rank, IntMat* u) {
    const size_t ncols = m.empty() ? 0 : m[0].size();
    const size_t nrows = m.size();
    for (size_t i = 0; i < rank; ++i) {
        size_t p = 0;
        while (p < ncols && m[i][p] == 0) ++p;
        assert(p < ncols);
        if (m[i][p] < 0) {
            for (auto& x : m[i]) x = -x;
            if (u)
                for (auto& x : (*u)[i]) x = -x;
        }
        for (size_t k = 0; k < i; ++k) {
            Int q = floor_div(m[k][p], m[i][p]);
            if (q == 0) continue;
            for (size_t j = 0; j < ncols; ++j) m[k][j] -= q * m[i][j];
            if (u)
                for (size_t j = 0; j < nrows; ++j) (*u)[k][j] -= q * (*u)[i][j];
        }
    }
}

} // namespace

IntMat hermite_form(IntMat rows) {
    size_t r = echelonize(rows, nullptr);
    canonicalize(rows, r, nullptr);
    rows.resize(r);
    return rows;
}

HermiteTransform hermite_with_transform(IntMat rows) {
    HermiteTransform out;
    out.h = std::move(rows);
    size_t r = echelonize(out.h, &out.u);
    canonicalize(out.h, r, &out.u);
    return out;
}

FgAbelianGroup cokernel_invariants(const IntMat& rows, std::size_t ambient) {
    for (const auto& r : rows)
        if (r.size() != ambient) throw input_error("cokernel: row length mismatch");
    IntMat m = rows;
    const size_t nr = m.size();
    const size_t nc = ambient;
    std::vector<Int> diag;
    size_t t = 0;
    while (t < nr && t < nc) {
        // smallest nonzero entry of the trailing submatrix to (t, t)
        size_t bi = nr, bj = nc;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j)
                if (m[i][j] != 0 && (bi == nr || abs_int(m[i][j]) < abs_int(m[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == nr) break;
        std::swap(m[t], m[bi]);
        for (auto& row : m) std::swap(row[t], row[bj]);

        bool again = false;
        for (size_t i = t + 1; i < nr; ++i) {
            if (m[i][t] == 0) continue;
            Int q = floor_div(m[i][t], m[t][t]);
            for (size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < nc; ++j) {
            if (m[t][j] == 0) continue;
            Int q = floor_div(m[t][j], m[t][t]);
            for (size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) again = true;
        }
        if (again) continue;
        // pivot must divide the rest of the submatrix
        bool fixed = false;
        for (size_t i = t + 1; i < nr && !fixed; ++i)
            for (size_t j = t + 1; j < nc && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t jj = t; jj < nc; ++jj) m[t][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        diag.push_back(abs_int(m[t][t]));
        ++t;
    }
    FgAbelianGroup g;
    g.free_rank = static_cast<long>(ambient) - static_cast<long>(diag.size());
    for (auto& d : diag)
        if (d > 1) g.torsion.push_back(d);
#ifndef NDEBUG
    for (size_t i = 1; i < g.torsion.size(); ++i)
        assert(g.torsion[i] % g.torsion[i - 1] == 0);
#endif
    return g;
}

CharLattice::CharLattice(GaloisFrame frame, std::vector<GroupRingVector> generators) {
    for (const auto& g : generators) require_same_frame(frame, g.frame, "lattice generator");
    d_ = std::make_shared<Data>(std::move(frame), std::move(generators));
}

void CharLattice::ensure_basis() const {
    std::call_once(d_->once, [this] {
        IntMat rows;
        rows.reserve(d_->gens.size());
        for (const auto& g : d_->gens) rows.push_back(g.coeffs);
        d_->hnf = hermite_form(std::move(rows));
        d_->rank = static_cast<int>(d_->hnf.size());
    });
}

const IntMat& CharLattice::basis() const {
    ensure_basis();
    return d_->hnf;
}

int CharLattice::rank() const {
    ensure_basis();
    return d_->rank;
}

std::optional<IntVec> coords_in_hermite_basis(const IntMat& basis, IntVec v) {
    IntVec coords;
    coords.reserve(basis.size());
    for (const auto& row : basis) {
        size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        assert(p < row.size());
        if (v[p] % row[p] != 0) return std::nullopt;
        Int q = v[p] / row[p];
        coords.push_back(q);
        if (q != 0)
            for (size_t j = p; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0) return std::nullopt;
    return coords;
}

bool CharLattice::contains(const GroupRingVector& v) const {
    require_same_frame(frame(), v.frame, "lattice membership");
    return coords_in_hermite_basis(basis(), v.coeffs).has_value();
}

bool CharLattice::operator==(const CharLattice& o) const {
    return frame() == o.frame() && basis() == o.basis();
}

bool qspan_contains(const CharLattice& outer, const CharLattice& inner) {
    require_same_frame(outer.frame(), inner.frame(), "qspan_contains");
    IntMat stacked = outer.basis();
    for (const auto& g : inner.generators()) stacked.push_back(g.coeffs);
    return echelonize(stacked, nullptr) == static_cast<size_t>(outer.rank());
}

CharLattice lattice_sum(const CharLattice& a, const CharLattice& b) {
    require_same_frame(a.frame(), b.frame(), "lattice_sum");
    std::vector<GroupRingVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return CharLattice(a.frame(), std::move(gens));
}

CharLattice lattice_intersection(const CharLattice& a, const CharLattice& b) {
    require_same_frame(a.frame(), b.frame(), "lattice_intersection");
    const IntMat& ba = a.basis();
    const IntMat& bb = b.basis();
    const size_t p = ba.size(), q = bb.size();
    const size_t n = static_cast<size_t>(a.frame().order());

    IntMat stacked;
    stacked.reserve(p + q);
    for (const auto& row : ba) stacked.push_back(row);
    for (const auto& row : bb) {
        IntVec neg(row.size());
        for (size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
        stacked.push_back(std::move(neg));
    }
    // integer kernel rows (u | v) satisfy u*ba = v*bb, so u*ba runs over
    // the intersection as (u, v) runs over the kernel
    HermiteTransform ht = hermite_with_transform(std::move(stacked));
    std::vector<GroupRingVector> gens;
    for (size_t i = 0; i < ht.h.size(); ++i) {
        bool zero = true;
        for (const auto& x : ht.h[i])
            if (x != 0) { zero = false; break; }
        if (!zero) continue;
        IntVec w(n, Int(0));
        for (size_t t = 0; t < p; ++t)
            if (ht.u[i][t] != 0)
                for (size_t j = 0; j < n; ++j) w[j] += ht.u[i][t] * ba[t][j];
        gens.push_back(GroupRingVector{a.frame(), std::move(w)});
    }
    return CharLattice(a.frame(), std::move(gens));
}

FgAbelianGroup quotient_group(const CharLattice& num, const CharLattice& den) {
    require_same_frame(num.frame(), den.frame(), "quotient_group");
    CharLattice inter = lattice_intersection(num, den);
    const IntMat& nb = num.basis();
    IntMat rel;
    rel.reserve(inter.basis().size());
    for (const auto& row : inter.basis()) {
        auto coords = coords_in_hermite_basis(nb, row);
        assert(coords.has_value());  // intersection is inside num
        rel.push_back(std::move(*coords));
    }
    return cokernel_invariants(rel, nb.size());
}

std::optional<std::vector<Rat>> solve_rational(const CharLattice& lattice,
                                               const GroupRingVector& target) {
    require_same_frame(lattice.frame(), target.frame, "solve_rational");
    const auto& gens = lattice.generators();
    const size_t k = gens.size();
    const size_t n = target.coeffs.size();

    std::vector<Rat> sol(k, Rat(0));
    // exact generator hit: prefer the unit answer
    for (size_t i = 0; i < k; ++i)
        if (gens[i].coeffs == target.coeffs) {
            sol[i] = 1;
            return sol;
        }
    if (k == 0) {
        if (target.is_zero()) return sol;
        return std::nullopt;
    }

    // columns = generators; solve A x = target over Q
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = Rat(gens[j].coeffs[i]);
        a[i][k] = Rat(target.coeffs[i]);
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < n; ++col) {
        size_t sel = n;
        for (size_t i = row; i < n; ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel == n) continue;
        std::swap(a[row], a[sel]);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (a[i][k] != 0) return std::nullopt;  // inconsistent
    for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
    return sol;
}

} // namespace cmtk
