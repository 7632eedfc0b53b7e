#include "cmtk/hodge.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace cmtk {

const char* witness_error_name(WitnessError e) {
    switch (e) {
        case WitnessError::None: return "none";
        case WitnessError::FrameMismatch: return "frame_mismatch";
        case WitnessError::Alpha0NotWeight: return "alpha0_not_a_weight";
        case WitnessError::BadDegrees: return "bad_degrees";
        case WitnessError::ParityViolation: return "parity_violation";
        case WitnessError::TwistMismatch: return "twist_mismatch";
        case WitnessError::CoeffKeyNotWeight: return "coefficient_key_not_a_weight";
        case WitnessError::NegativeCoeff: return "negative_coefficient";
        case WitnessError::EquationViolated: return "equation_violated";
        case WitnessError::CoeffSumMismatch: return "coefficient_sum_mismatch";
        case WitnessError::CoeffBoundExceeded: return "coefficient_bound_exceeded";
        case WitnessError::RBoundExceeded: return "r_bound_exceeded";
    }
    return "unknown";
}

std::string degree_descriptor(const HodgeWitness& w) {
    std::ostringstream os;
    os << "H^" << w.r << "(A1^" << w.m << ")^v ⊗ H^" << w.s << "(A2^" << w.n << ")(" << w.twist
       << ")";
    return os.str();
}

std::vector<GroupRingVector> exterior_support(const WeightSystem& ws, long r, long m) {
    if (r < 0 || m < 1) throw input_error("exterior_support: need r >= 0 and m >= 1");
    std::set<IntVec> sums;
    const size_t k = ws.weights.size();
    const size_t n = ws.frame.order() == 0 ? 0 : static_cast<size_t>(ws.frame.order());
    IntVec current(n, Int(0));
    // DFS over exponent vectors with 0 <= e_i <= m*mult_i and sum e_i = r
    auto rec = [&](auto&& self, size_t i, long remaining) -> void {
        if (i == k) {
            if (remaining == 0) sums.insert(current);
            return;
        }
        long cap = std::min<long>(remaining, m * ws.multiplicities[i]);
        for (long e = 0; e <= cap; ++e) {
            if (e > 0)
                for (size_t j = 0; j < n; ++j) current[j] += ws.weights[i].coeffs[j];
            self(self, i + 1, remaining - e);
        }
        for (long e = cap; e > 0; --e)
            for (size_t j = 0; j < n; ++j) current[j] -= ws.weights[i].coeffs[j];
    };
    rec(rec, 0, r);
    std::vector<GroupRingVector> out;
    out.reserve(sums.size());
    for (auto& v : sums) out.push_back(GroupRingVector{ws.frame, v});
    return out;
}

namespace {

// Lexicographically least non-negative integer solution of
//   sum_i e_i * w_i = target,
// over 0/1 weight vectors w_i whose coordinate sums all equal g.
// Degrees are small, so plain long arithmetic suffices.
std::optional<std::vector<long>> lex_min_solution(const std::vector<std::vector<int>>& ws,
                                                  std::vector<long> target, long g) {
    const size_t k = ws.size();
    const size_t n = target.size();
    // suffix coverage: positions no remaining weight can reach must be zero
    std::vector<std::vector<char>> suffix(k + 1, std::vector<char>(n, 0));
    for (size_t i = k; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        for (size_t j = 0; j < n; ++j)
            if (ws[i][j]) suffix[i][j] = 1;
    }
    long total = 0;
    for (long x : target) total += x;
    if (total % g != 0) return std::nullopt;

    std::vector<long> sol(k, 0);
    auto rec = [&](auto&& self, size_t i, long rem_sum) -> bool {
        if (i == k) return rem_sum == 0;
        for (size_t j = 0; j < n; ++j) {
            // weights are 0/1, so each coordinate gains at most one per
            // remaining unit, and untouchable coordinates must be finished
            if (target[j] > rem_sum) return false;
            if (target[j] > 0 && !suffix[i][j]) return false;
        }
        long cap = rem_sum;
        for (size_t j = 0; j < n && cap > 0; ++j)
            if (ws[i][j]) cap = std::min(cap, target[j]);
        for (long e = 0; e <= cap; ++e) {
            if (e > 0)
                for (size_t j = 0; j < n; ++j) target[j] -= ws[i][j];
            sol[i] = e;
            if (self(self, i + 1, rem_sum - e)) return true;
        }
        sol[i] = 0;
        for (long e = cap; e > 0; --e)
            for (size_t j = 0; j < n; ++j) target[j] += ws[i][j];
        return false;
    };
    if (!rec(rec, 0, total / g)) return std::nullopt;
    return sol;
}

Int derive_m(const Int& r, long mult_alpha0) {
    return ceil_div(r, Int(mult_alpha0));
}

Int derive_n(const std::vector<std::pair<GroupRingVector, Int>>& coeffs, const WeightSystem& ws) {
    Int n = 1;
    for (const auto& [w, e] : coeffs) {
        long mult = ws.multiplicity_of(w);
        assert(mult > 0);
        Int need = ceil_div(e, Int(mult));
        if (need > n) n = need;
    }
    return n;
}

} // namespace

WitnessSearchResult find_witness(const CMType& source, const CMType& target,
                                 WitnessBounds bounds) {
    require_same_frame(source.frame(), target.frame(), "find_witness");
    const GaloisFrame& f = source.frame();
    const long order = f.order();
    const long g = order / 2;
    const long max_r = bounds.max_r < 0 ? order : bounds.max_r;
    const long max_t = bounds.max_t < 0 ? order : bounds.max_t;

    CharLattice target_lattice = mt_lattice(target);
    if (!qspan_contains(target_lattice, mt_lattice(source)))
        return WitnessSearchResult{WitnessStatus::ProvenAbsent, std::nullopt};

    WeightSystem ws1 = weight_system(source);
    WeightSystem ws2 = weight_system(target);
    const GroupRingVector& alpha0 = ws1.identity_weight;
    long mult_alpha0 = ws1.multiplicity_of(alpha0);

    std::vector<std::vector<int>> w2(ws2.weights.size(), std::vector<int>(order));
    for (size_t i = 0; i < ws2.weights.size(); ++i)
        for (long j = 0; j < order; ++j)
            w2[i][static_cast<size_t>(j)] =
                static_cast<int>(ws2.weights[i].coeffs[static_cast<size_t>(j)]);

    // chi = beta + (chi - beta) lies in every weight lattice, so the
    // integrality of r*alpha0 + t*chi does not depend on t; weed out the
    // impossible values of r before any enumeration
    assert(target_lattice.contains(GroupRingVector::norm_char(f)));

    for (long r = 1; r <= max_r; ++r) {
        if (!target_lattice.contains(Int(r) * alpha0)) continue;
        for (long t = 0; t <= max_t; ++t) {
            std::vector<long> tgt(static_cast<size_t>(order));
            for (long j = 0; j < order; ++j)
                tgt[static_cast<size_t>(j)] =
                    r * static_cast<long>(alpha0.coeffs[static_cast<size_t>(j)]) + t;
            auto sol = lex_min_solution(w2, std::move(tgt), g);
            if (!sol) continue;
            HodgeWitness w(f, alpha0);
            w.r = r;
            w.s = r + 2 * t;
            w.twist = t;
            for (size_t i = 0; i < sol->size(); ++i)
                if ((*sol)[i] > 0) w.coeffs.emplace_back(ws2.weights[i], Int((*sol)[i]));
            w.m = derive_m(w.r, mult_alpha0);
            w.n = derive_n(w.coeffs, ws2);
            assert(verify_witness(w, source, target).ok);
            return WitnessSearchResult{WitnessStatus::Found, std::move(w)};
        }
    }
    return WitnessSearchResult{WitnessStatus::BoundsExhausted, std::nullopt};
}

WitnessCheck verify_witness(const HodgeWitness& w, const CMType& source, const CMType& target) {
    auto fail = [](WitnessError e, std::string detail) {
        return WitnessCheck{false, e, std::move(detail)};
    };
    if (source.frame() != target.frame() || w.frame != source.frame() ||
        w.alpha0.frame != w.frame)
        return fail(WitnessError::FrameMismatch, "witness and CM types must share one frame");

    WeightSystem ws1 = weight_system(source);
    WeightSystem ws2 = weight_system(target);

    long mult_a = ws1.multiplicity_of(w.alpha0);
    if (mult_a == 0)
        return fail(WitnessError::Alpha0NotWeight, "alpha0 is not a weight of the source system");
    if (w.r < 1 || w.s < 1 || w.m < 1 || w.n < 1)
        return fail(WitnessError::BadDegrees, "r, s, m, n must be positive");
    if ((w.r + w.s) % 2 != 0)
        return fail(WitnessError::ParityViolation, "r + s must be even");
    if (w.twist != (w.s - w.r) / 2)
        return fail(WitnessError::TwistMismatch, "twist must equal (s - r)/2");

    Int coeff_sum = 0;
    GroupRingVector rhs = GroupRingVector::zero(w.frame);
    for (const auto& [wt, e] : w.coeffs) {
        if (e < 0) return fail(WitnessError::NegativeCoeff, "coefficients must be non-negative");
        long mult = ws2.multiplicity_of(wt);
        if (mult == 0)
            return fail(WitnessError::CoeffKeyNotWeight,
                        "coefficient key is not a weight of the target system");
        if (e > w.n * Int(mult))
            return fail(WitnessError::CoeffBoundExceeded, "e_beta exceeds n * mult(beta)");
        coeff_sum += e;
        rhs += e * wt;
    }
    if (coeff_sum != w.s)
        return fail(WitnessError::CoeffSumMismatch, "sum of coefficients must equal s");
    if (w.r > w.m * Int(mult_a))
        return fail(WitnessError::RBoundExceeded, "r exceeds m * mult(alpha0)");

    GroupRingVector lhs = w.r * w.alpha0 + w.twist * GroupRingVector::norm_char(w.frame);
    if (lhs != rhs)
        return fail(WitnessError::EquationViolated,
                    "r*alpha0 + twist*chi does not equal the weight combination");
    return WitnessCheck{true, WitnessError::None, ""};
}

HodgeWitness witness_from_rational_solution(const CMType& source, const CMType& target,
                                            const GroupRingVector& alpha0) {
    require_same_frame(source.frame(), target.frame(), "witness_from_rational_solution");
    const GaloisFrame& f = source.frame();
    WeightSystem ws1 = weight_system(source);
    WeightSystem ws2 = weight_system(target);
    if (ws1.multiplicity_of(alpha0) == 0)
        throw input_error("witness_from_rational_solution: alpha0 is not a source weight");

    CharLattice l2 = mt_lattice(target);  // stored generators = distinct weights
    auto sol = solve_rational(l2, alpha0);
    if (!sol)
        throw input_error("witness_from_rational_solution: alpha0 is outside the target Q-span");
    const auto& weights = l2.generators();

    // flip negative coefficients through beta -> chi - beta, tracking the
    // chi surplus; each weight's conjugate is again a weight
    std::vector<Rat> plus(weights.size(), Rat(0));
    Rat chi_coeff = 0;
    GroupRingVector chi = GroupRingVector::norm_char(f);
    for (size_t i = 0; i < weights.size(); ++i) {
        if ((*sol)[i] >= 0) {
            plus[i] += (*sol)[i];
            continue;
        }
        GroupRingVector conj = chi - weights[i];
        auto it = std::lower_bound(weights.begin(), weights.end(), conj);
        assert(it != weights.end() && *it == conj);
        plus[static_cast<size_t>(it - weights.begin())] += -(*sol)[i];
        chi_coeff += -(*sol)[i];
    }

    Int den = denom(chi_coeff);
    for (const auto& c : plus) den = lcm(den, denom(c));

    HodgeWitness w(f, alpha0);
    w.r = den;
    w.twist = Int(den * chi_coeff);
    Int s = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        Int e = Int(den * plus[i]);
        if (e != 0) w.coeffs.emplace_back(weights[i], e);
        s += e;
    }
    w.s = s;
    assert(w.s == w.r + 2 * w.twist);
    // the proof's (loose) choice of powers
    w.m = w.r;
    w.n = w.s;
    assert(verify_witness(w, source, target).ok);
    return w;
}

} // namespace cmtk
