#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "convring/code.hpp"

namespace convring {

/**
 * First order representation (K, L, M) of an (n,k) family of degree
 * delta: the code is {v : exists x, (zK + L)x + Mv = 0}. Minimal when
 * K is injective, (K|M) is surjective and the pencil (zK+L | M) is
 * surjective over R[z].
 */
struct FirstOrderRep {
    RingSpec ring;
    int n = 0, k = 0, delta = 0;
    RMatrix K, L;  // (delta+n-k) x delta
    RMatrix M;     // (delta+n-k) x n
};

struct MinimalityReport {
    bool k_injective = false;
    bool km_surjective = false;
    bool pencil_surjective = false;
    bool minimal() const { return k_injective && km_surjective && pencil_surjective; }
};

inline MinimalityReport check_minimality(const FirstOrderRep& rep) {
    MinimalityReport rpt;
    rpt.k_injective = is_injective_const(rep.K);
    rpt.km_surjective = is_surjective_const(hconcat(rep.K, rep.M));
    rpt.pencil_surjective = is_surjective_polymatrix(
        hconcat_poly(PolyMatrix::pencil(rep.K, rep.L), PolyMatrix::from_const(rep.M)));
    return rpt;
}

/**
 * Shift realization of a column-reduced encoder over a prime field.
 * States are x_{j,i} <-> z^{i-1} u_j for i = 1..nu_j. Rows are the
 * delta-k chain equations z x_{j,i} = x_{j,i+1} followed by one row per
 * code coordinate expressing v_r in terms of the states.
 */
inline FirstOrderRep build_for_field(const PolyMatrix& G) {
    assert(G.ring.is_field());
    int n = G.rows, k = G.cols;
    std::vector<int> nu(k);
    int delta = 0;
    for (int c = 0; c < k; ++c) {
        nu[c] = G.column_degree(c);
        if (nu[c] < 1) throw ZeroColumnDegree("column " + std::to_string(c + 1));
        delta += nu[c];
    }
    RMatrix lead(G.ring, n, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) lead.at(r, c) = G.at(r, c).coeff(nu[c]);
    if (rank_mod_p(lead) != k) throw NotColumnReduced("leading coefficient matrix rank-deficient");

    std::vector<int> offset(k, 0);  // state block start per column
    for (int c = 1; c < k; ++c) offset[c] = offset[c - 1] + nu[c - 1];
    int rows = delta + n - k;
    FirstOrderRep rep;
    rep.ring = G.ring;
    rep.n = n;
    rep.k = k;
    rep.delta = delta;
    rep.K = RMatrix(G.ring, rows, delta);
    rep.L = RMatrix(G.ring, rows, delta);
    rep.M = RMatrix(G.ring, rows, n);
    int row = 0;
    for (int c = 0; c < k; ++c)
        for (int i = 1; i < nu[c]; ++i) {
            rep.K.set(row, offset[c] + i - 1, 1);
            rep.L.set(row, offset[c] + i, -1);
            ++row;
        }
    for (int r = 0; r < n; ++r, ++row) {
        for (int c = 0; c < k; ++c) {
            rep.K.set(row, offset[c] + nu[c] - 1, G.at(r, c).coeff(nu[c]));
            for (int i = 0; i < nu[c]; ++i)
                rep.L.set(row, offset[c] + i,
                          mod_reduce(rep.L.at(row, offset[c] + i) + G.at(r, c).coeff(i),
                                     G.ring.modulus));
        }
        rep.M.set(row, r, -1);
    }
    return rep;
}

inline FirstOrderRep glue_for(const std::vector<FirstOrderRep>& components, const RingSpec& ring) {
    if (static_cast<int>(components.size()) != ring.components())
        throw ComponentCountMismatch("glue_for");
    for (const auto& rep : components)
        if (rep.n != components[0].n || rep.k != components[0].k ||
            rep.delta != components[0].delta)
            throw DimensionMismatch("components disagree on (n, k, delta)");
    FirstOrderRep out;
    out.ring = ring;
    out.n = components[0].n;
    out.k = components[0].k;
    out.delta = components[0].delta;
    std::vector<RMatrix> Ks, Ls, Ms;
    for (const auto& rep : components) {
        Ks.push_back(rep.K);
        Ls.push_back(rep.L);
        Ms.push_back(rep.M);
    }
    out.K = glue(Ks, ring);
    out.L = glue(Ls, ring);
    out.M = glue(Ms, ring);
    return out;
}

inline FirstOrderRep project_for(const FirstOrderRep& rep, int j) {
    FirstOrderRep out;
    out.ring = make_ring(rep.ring.primes[j - 1]);
    out.n = rep.n;
    out.k = rep.k;
    out.delta = rep.delta;
    out.K = project(rep.K, j);
    out.L = project(rep.L, j);
    out.M = project(rep.M, j);
    return out;
}

/// The code represented by (K, L, M): Ker(zK+L | M).
inline ConvCode code_of_rep(const FirstOrderRep& rep) {
    PairKernelBasis kb = kernel_pair(PolyMatrix::pencil(rep.K, rep.L),
                                     PolyMatrix::from_const(rep.M), rep.delta);
    return make_code(rep.ring, kb.basis);
}

namespace detail {

/// Affine solution set search for one component: find (T, S) over F_p
/// with K'S = TK, L'S = TL, M' = TM and both matrices invertible.
inline std::optional<std::pair<RMatrix, RMatrix>> equivalence_witness_field(
    const FirstOrderRep& a, const FirstOrderRep& b, long long search_cap) {
    const RingSpec& f = a.ring;
    i64 p = f.modulus;
    int rho = a.delta + a.n - a.k, d = a.delta;
    int nT = rho * rho, nS = d * d;
    auto tvar = [&](int r, int c) { return r * rho + c; };
    auto svar = [&](int r, int c) { return nT + r * d + c; };
    int neq = 2 * rho * d + rho * a.n;
    RMatrix A(f, neq, nT + nS);
    std::vector<i64> rhs(neq, 0);
    int eq = 0;
    // K'S - TK = 0 and L'S - TL = 0
    for (int pass = 0; pass < 2; ++pass) {
        const RMatrix& X = pass == 0 ? a.K : a.L;
        const RMatrix& Xp = pass == 0 ? b.K : b.L;
        for (int r = 0; r < rho; ++r)
            for (int c = 0; c < d; ++c, ++eq) {
                for (int t = 0; t < d; ++t)
                    A.at(eq, svar(t, c)) = mod_reduce(A.at(eq, svar(t, c)) + Xp.at(r, t), p);
                for (int t = 0; t < rho; ++t)
                    A.at(eq, tvar(r, t)) = mod_reduce(A.at(eq, tvar(r, t)) - X.at(t, c), p);
            }
    }
    // TM = M'
    for (int r = 0; r < rho; ++r)
        for (int c = 0; c < a.n; ++c, ++eq) {
            for (int t = 0; t < rho; ++t)
                A.at(eq, tvar(r, t)) = mod_reduce(A.at(eq, tvar(r, t)) + a.M.at(t, c), p);
            rhs[eq] = b.M.at(r, c);
        }
    auto part = solve_mod_p(A, rhs);
    if (part.empty()) return std::nullopt;
    RMatrix N = nullspace_mod_p(A);
    int dim = N.cols;
    long long combos = 1;
    for (int i = 0; i < dim; ++i) {
        combos *= p;
        if (combos > search_cap) throw Inconclusive("equivalence search space exceeds cap");
    }
    std::vector<i64> coef(dim, 0);
    auto extract = [&](const std::vector<i64>& w) {
        RMatrix T(f, rho, rho), S(f, d, d);
        for (int r = 0; r < rho; ++r)
            for (int c = 0; c < rho; ++c) T.at(r, c) = mod_reduce(w[tvar(r, c)], p);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) S.at(r, c) = mod_reduce(w[svar(r, c)], p);
        return std::make_pair(T, S);
    };
    for (long long it = 0; it < combos; ++it) {
        std::vector<i64> w = part[0];
        for (int i = 0; i < dim; ++i)
            if (coef[i])
                for (int v = 0; v < nT + nS; ++v)
                    w[v] = mod_reduce(w[v] + coef[i] * N.at(v, i), p);
        auto [T, S] = extract(w);
        if (rank_mod_p(T) == rho && (d == 0 || rank_mod_p(S) == d)) return std::make_pair(T, S);
        // odometer
        for (int i = 0; i < dim; ++i) {
            if (++coef[i] < p) break;
            coef[i] = 0;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Searches for invertible T, S over R with K'S = TK, L'S = TL, M' = TM
 * (the linearized equivalence of representations). Solved per component
 * and glued; the witness is re-verified over R before returning.
 */
inline std::optional<std::pair<RMatrix, RMatrix>> representations_equivalent(
    const FirstOrderRep& a, const FirstOrderRep& b, long long search_cap = 1000000) {
    if (a.ring.modulus != b.ring.modulus) throw RingMismatch("representations_equivalent");
    if (a.n != b.n || a.k != b.k || a.delta != b.delta)
        throw DimensionMismatch("representations_equivalent");
    std::vector<RMatrix> Ts, Ss;
    for (int j = 1; j <= a.ring.components(); ++j) {
        auto w = detail::equivalence_witness_field(project_for(a, j), project_for(b, j),
                                                   search_cap);
        if (!w) return std::nullopt;
        Ts.push_back(w->first);
        Ss.push_back(w->second);
    }
    RMatrix T = glue(Ts, a.ring), S = glue(Ss, a.ring);
    assert(mat_mul(b.K, S) == mat_mul(T, a.K));
    assert(mat_mul(b.L, S) == mat_mul(T, a.L));
    assert(mat_mul(T, a.M) == b.M);
    return std::make_pair(T, S);
}

}  // namespace convring
