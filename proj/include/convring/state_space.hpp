#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "convring/first_order.hpp"

namespace convring {

/**
 * I/S/O representation (A, B, C, D) with state dimension delta, input
 * dimension k, output dimension n-k. `permutation` records the code
 * coordinate reordering applied during extraction: coordinate i of the
 * system's (y, u) word is code coordinate permutation[i] (identity for
 * directly constructed systems).
 */
struct StateSpaceSystem {
    RingSpec ring;
    int delta = 0, k = 0, nk = 0;  // nk = n - k
    RMatrix A, B, C, D;
    std::vector<int> permutation;

    int n() const { return nk + k; }

    static StateSpaceSystem make(const RingSpec& ring, RMatrix A, RMatrix B, RMatrix C,
                                 RMatrix D) {
        StateSpaceSystem s;
        s.ring = ring;
        s.delta = A.rows;
        s.k = B.cols;
        s.nk = C.rows;
        if (A.cols != s.delta || B.rows != s.delta || C.cols != s.delta || D.rows != s.nk ||
            D.cols != s.k)
            throw DimensionMismatch("inconsistent (A,B,C,D) shapes");
        s.A = std::move(A);
        s.B = std::move(B);
        s.C = std::move(C);
        s.D = std::move(D);
        s.permutation.resize(s.n());
        std::iota(s.permutation.begin(), s.permutation.end(), 0);
        return s;
    }
};

/// Canonical first order representation of a system:
/// K = [-I; 0], L = [A; C], M = [[0, B], [-I, D]].
inline FirstOrderRep iso_to_for(const StateSpaceSystem& sys) {
    int d = sys.delta, nk = sys.nk, k = sys.k, rows = d + nk;
    FirstOrderRep rep;
    rep.ring = sys.ring;
    rep.n = nk + k;
    rep.k = k;
    rep.delta = d;
    rep.K = RMatrix(sys.ring, rows, d);
    rep.L = RMatrix(sys.ring, rows, d);
    rep.M = RMatrix(sys.ring, rows, rep.n);
    for (int i = 0; i < d; ++i) rep.K.set(i, i, -1);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rep.L.at(r, c) = sys.A.at(r, c);
    for (int r = 0; r < nk; ++r)
        for (int c = 0; c < d; ++c) rep.L.at(d + r, c) = sys.C.at(r, c);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < k; ++c) rep.M.at(r, nk + c) = sys.B.at(r, c);
    for (int i = 0; i < nk; ++i) rep.M.set(d + i, i, -1);
    for (int r = 0; r < nk; ++r)
        for (int c = 0; c < k; ++c) rep.M.at(d + r, nk + c) = sys.D.at(r, c);
    return rep;
}

/**
 * Reduction of a minimal (K, L, M) to the canonical block shape:
 * (1) per-component row reduction of K to [-I; 0], glued into one
 * invertible W over R; (2) the lexicographically first (n-k)-subset of
 * code coordinates whose bottom M-block is invertible over R becomes
 * the output block; (3) that block is normalized to -I and cleared out
 * of the top rows. Blocks A, B, C, D are then read off.
 */
inline StateSpaceSystem for_to_iso(const FirstOrderRep& rep) {
    if (!check_minimality(rep).minimal()) throw NotMinimal("for_to_iso needs a minimal rep");
    int d = rep.delta, n = rep.n, k = rep.k, nk = n - k, rho = d + nk;
    // step 1: W K = [-I; 0]
    std::vector<RMatrix> Ws;
    for (int j = 1; j <= rep.ring.components(); ++j) {
        RMatrix Kj = project(rep.K, j);
        RMatrix Wj = RMatrix::identity(Kj.ring, rho);
        rref_mod_p(Kj, &Wj);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < rho; ++c) Wj.set(r, c, -Wj.at(r, c));
        Ws.push_back(Wj);
    }
    RMatrix W = glue(Ws, rep.ring);
    RMatrix L = mat_mul(W, rep.L);
    RMatrix M = mat_mul(W, rep.M);
    // step 2: output coordinate subset
    std::vector<std::vector<int>> subsets;
    detail::subsets(n, nk, subsets);
    std::vector<int> S;
    bool found = false;
    for (const auto& cand : subsets) {
        std::vector<int> brows(nk);
        std::iota(brows.begin(), brows.end(), d);
        if (is_invertible(submatrix(M, brows, cand))) {
            S = cand;
            found = true;
            break;
        }
    }
    if (!found && nk > 0) throw NoCommonSplit("no output block invertible over R");
    std::vector<int> perm = S;
    for (int c = 0; c < n; ++c)
        if (std::find(S.begin(), S.end(), c) == S.end()) perm.push_back(c);
    RMatrix Mp(rep.ring, rho, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < rho; ++r) Mp.at(r, c) = M.at(r, perm[c]);
    // step 3: normalize bottom block to -I, then clear it from top rows
    if (nk > 0) {
        std::vector<int> brows(nk), bcols(nk);
        std::iota(brows.begin(), brows.end(), d);
        std::iota(bcols.begin(), bcols.end(), 0);
        RMatrix Q = submatrix(Mp, brows, bcols);
        RMatrix F = mat_scale(mat_inverse(Q), -1);  // bottom row op
        for (int blk = 0; blk < 2; ++blk) {
            RMatrix& X = blk == 0 ? L : Mp;
            RMatrix bottom(rep.ring, nk, X.cols);
            for (int r = 0; r < nk; ++r)
                for (int c = 0; c < X.cols; ++c) bottom.at(r, c) = X.at(d + r, c);
            RMatrix nb = mat_mul(F, bottom);
            for (int r = 0; r < nk; ++r)
                for (int c = 0; c < X.cols; ++c) X.at(d + r, c) = nb.at(r, c);
        }
        RMatrix topS(rep.ring, d, nk);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < nk; ++c) topS.at(r, c) = Mp.at(r, c);
        for (int blk = 0; blk < 2; ++blk) {
            RMatrix& X = blk == 0 ? L : Mp;
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < X.cols; ++c) {
                    i64 acc = X.at(r, c);
                    for (int s = 0; s < nk; ++s) acc += topS.at(r, s) * X.at(d + s, c);
                    X.at(r, c) = mod_reduce(acc, rep.ring.modulus);
                }
        }
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < nk; ++c) assert(Mp.at(r, c) == 0);
    }
    RMatrix A(rep.ring, d, d), B(rep.ring, d, k), C(rep.ring, nk, d), D(rep.ring, nk, k);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) A.at(r, c) = L.at(r, c);
    for (int r = 0; r < nk; ++r)
        for (int c = 0; c < d; ++c) C.at(r, c) = L.at(d + r, c);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < k; ++c) B.at(r, c) = Mp.at(r, nk + c);
    for (int r = 0; r < nk; ++r)
        for (int c = 0; c < k; ++c) D.at(r, c) = Mp.at(d + r, nk + c);
    StateSpaceSystem sys = StateSpaceSystem::make(rep.ring, A, B, C, D);
    sys.permutation = perm;
    return sys;
}

inline RMatrix controllability_matrix(const StateSpaceSystem& sys) {
    RMatrix Phi(sys.ring, sys.delta, 0);
    RMatrix blk = sys.B;
    for (int i = 0; i < sys.delta; ++i) {
        Phi = hconcat(Phi, blk);
        blk = mat_mul(sys.A, blk);
    }
    return Phi;
}

inline bool is_reachable(const StateSpaceSystem& sys) {
    return is_surjective_const(controllability_matrix(sys));
}

inline RMatrix observability_matrix(const StateSpaceSystem& sys) {
    RMatrix Omega(sys.ring, 0, sys.delta);
    RMatrix blk = sys.C;
    for (int i = 0; i < sys.delta; ++i) {
        RMatrix next(sys.ring, Omega.rows + blk.rows, sys.delta);
        for (int r = 0; r < Omega.rows; ++r)
            for (int c = 0; c < sys.delta; ++c) next.at(r, c) = Omega.at(r, c);
        for (int r = 0; r < blk.rows; ++r)
            for (int c = 0; c < sys.delta; ++c) next.at(Omega.rows + r, c) = blk.at(r, c);
        Omega = next;
        blk = mat_mul(blk, sys.A);
    }
    return Omega;
}

inline bool is_observable_system(const StateSpaceSystem& sys) {
    return is_injective_const(observability_matrix(sys));
}

inline StateSpaceSystem glue_systems(const std::vector<StateSpaceSystem>& components,
                                     const RingSpec& ring) {
    if (static_cast<int>(components.size()) != ring.components())
        throw ComponentCountMismatch("glue_systems");
    for (const auto& s : components)
        if (s.delta != components[0].delta || s.k != components[0].k || s.nk != components[0].nk)
            throw DimensionMismatch("glue_systems");
    std::vector<RMatrix> As, Bs, Cs, Ds;
    for (const auto& s : components) {
        As.push_back(s.A);
        Bs.push_back(s.B);
        Cs.push_back(s.C);
        Ds.push_back(s.D);
    }
    return StateSpaceSystem::make(ring, glue(As, ring), glue(Bs, ring), glue(Cs, ring),
                                  glue(Ds, ring));
}

inline StateSpaceSystem project_system(const StateSpaceSystem& sys, int j) {
    StateSpaceSystem out = StateSpaceSystem::make(make_ring(sys.ring.primes[j - 1]),
                                                  project(sys.A, j), project(sys.B, j),
                                                  project(sys.C, j), project(sys.D, j));
    out.permutation = sys.permutation;
    return out;
}

/// One run of x_{t+1} = A x_t + B u_t, y_t = C x_t + D u_t from x_0 = 0.
struct Trajectory {
    std::vector<std::vector<i64>> states;   // x_0 .. x_{gamma+1}
    std::vector<std::vector<i64>> inputs;   // u_0 .. u_gamma
    std::vector<std::vector<i64>> outputs;  // y_0 .. y_gamma
    std::vector<Poly> codeword;             // v(z), coordinates in (y, u) order
    bool returned = false;                  // x_{gamma+1} == 0
};

inline Trajectory simulate(const StateSpaceSystem& sys,
                           const std::vector<std::vector<i64>>& inputs) {
    i64 m = sys.ring.modulus;
    Trajectory tr;
    tr.inputs = inputs;
    std::vector<i64> x(sys.delta, 0);
    tr.states.push_back(x);
    std::vector<std::vector<i64>> vcoeffs(sys.n());
    for (const auto& u : inputs) {
        if (static_cast<int>(u.size()) != sys.k) throw ShapeMismatch("input length != k");
        std::vector<i64> y(sys.nk, 0), xn(sys.delta, 0);
        for (int r = 0; r < sys.nk; ++r) {
            i64 acc = 0;
            for (int c = 0; c < sys.delta; ++c) acc += sys.C.at(r, c) * x[c];
            for (int c = 0; c < sys.k; ++c) acc += sys.D.at(r, c) * u[c];
            y[r] = mod_reduce(acc, m);
        }
        for (int r = 0; r < sys.delta; ++r) {
            i64 acc = 0;
            for (int c = 0; c < sys.delta; ++c) acc += sys.A.at(r, c) * x[c];
            for (int c = 0; c < sys.k; ++c) acc += sys.B.at(r, c) * u[c];
            xn[r] = mod_reduce(acc, m);
        }
        for (int r = 0; r < sys.nk; ++r) vcoeffs[r].push_back(y[r]);
        for (int c = 0; c < sys.k; ++c) vcoeffs[sys.nk + c].push_back(mod_reduce(u[c], m));
        tr.outputs.push_back(y);
        x = xn;
        tr.states.push_back(x);
    }
    // codeword coefficients run in reverse time: v(z) = sum_t v_t z^{gamma-t},
    // so that a returned run satisfies (zK+L)x + Mv = 0 with x_0 = x_{gamma+1} = 0
    for (auto& coeffs : vcoeffs) {
        std::reverse(coeffs.begin(), coeffs.end());
        tr.codeword.emplace_back(sys.ring, coeffs);
    }
    tr.returned = std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; });
    return tr;
}

/// Undo the extraction permutation: word in original code coordinates.
inline std::vector<Poly> unpermute_word(const StateSpaceSystem& sys,
                                        const std::vector<Poly>& word) {
    std::vector<Poly> out(word.size(), Poly(sys.ring));
    for (std::size_t i = 0; i < word.size(); ++i) out[sys.permutation[i]] = word[i];
    return out;
}

/// Code generated by the canonical representation of a reachable system.
/// The resulting encoder is in the system's (y, u) coordinate order.
inline ConvCode system_to_code(const StateSpaceSystem& sys) {
    if (!is_reachable(sys)) throw NotReachable("system_to_code needs a reachable system");
    FirstOrderRep rep = iso_to_for(sys);
    PairKernelBasis kb = kernel_pair(PolyMatrix::pencil(rep.K, rep.L),
                                     PolyMatrix::from_const(rep.M), rep.delta);
    return make_code(sys.ring, kb.basis);
}

}  // namespace convring
