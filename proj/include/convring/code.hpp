#pragma once

#include <vector>

#include "convring/poly.hpp"

namespace convring {

/**
 * An (n,k) family of convolutional codes over R = F_{p1} x ... x F_{pt}:
 * the image of an injective n x k polynomial matrix whose component
 * restrictions all column-reduce to the same degree delta.
 */
struct ConvCode {
    RingSpec ring;
    int n = 0, k = 0, delta = 0;
    PolyMatrix encoder;                         // as given, over R
    std::vector<PolyMatrix> component_encoders; // column-reduced, per field
};

inline PolyMatrix poly_transpose(const PolyMatrix& A) {
    PolyMatrix T(A.ring, A.cols, A.rows);
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) T.at(c, r) = A.at(r, c);
    return T;
}

inline std::vector<Poly> poly_column(const PolyMatrix& A, int c) {
    std::vector<Poly> v;
    for (int r = 0; r < A.rows; ++r) v.push_back(A.at(r, c));
    return v;
}

inline int max_minor_degree(const PolyMatrix& G) {
    int d = -1;
    for (const Poly& m : full_size_minors(G)) d = std::max(d, m.deg());
    return d;
}

inline ConvCode make_code(const RingSpec& ring, const PolyMatrix& G) {
    if (G.ring.modulus != ring.modulus) throw RingMismatch("make_code");
    if (G.cols > G.rows) throw ShapeMismatch("encoder needs k <= n");
    ConvCode code;
    code.ring = ring;
    code.n = G.rows;
    code.k = G.cols;
    code.encoder = G;
    int delta = -1;
    for (int j = 1; j <= ring.components(); ++j) {
        PolyMatrix Gj = project(G, j);
        if (poly_rank(Gj) != G.cols)
            throw NotInjective("component " + std::to_string(j) + " has rank below k");
        PolyMatrix Rj = column_reduce(Gj).reduced;
        int dj = 0;
        for (int c = 0; c < Rj.cols; ++c) {
            int nu = Rj.column_degree(c);
            if (nu < 1)
                throw ZeroColumnDegree("component " + std::to_string(j) + ", column " +
                                       std::to_string(c + 1));
            dj += nu;
        }
        assert(dj == max_minor_degree(Rj));
        if (delta >= 0 && dj != delta)
            throw NonConstantDegree("degree " + std::to_string(dj) + " vs " +
                                    std::to_string(delta));
        delta = dj;
        code.component_encoders.push_back(Rj);
    }
    code.delta = delta;
    return code;
}

inline int code_degree(const ConvCode& code) {
    for (const PolyMatrix& Gj : code.component_encoders)
        assert(max_minor_degree(Gj) == code.delta);
    return code.delta;
}

/// Observable iff each component encoder's full-size-minor gcd is a
/// nonzero constant (flat quotient over F_p[z]).
inline bool is_observable_code(const ConvCode& code) {
    if (code.k == code.n) return true;
    for (const PolyMatrix& Gj : code.component_encoders) {
        Poly g = Poly::zero(Gj.ring);
        for (const Poly& m : full_size_minors(Gj)) g = poly_gcd(g, m);
        if (g.deg() != 0) return false;
    }
    return true;
}

/// (n-k) x n matrix H over R with H G = 0 and each component surjective.
inline PolyMatrix syndrome_former(const ConvCode& code) {
    if (!is_observable_code(code)) throw NotObservable("code has no syndrome former");
    int nk = code.n - code.k;
    if (nk == 0) return PolyMatrix(code.ring, 0, code.n);
    std::vector<PolyMatrix> parts;
    for (const PolyMatrix& Gj : code.component_encoders) {
        // left kernel of G_j = right kernel of G_j^t
        PolyMatrix empty(Gj.ring, Gj.cols, 0);
        PairKernelBasis kb = kernel_pair(empty, poly_transpose(Gj), code.delta + code.n);
        PolyMatrix Hj = poly_transpose(kb.basis);
        assert(Hj.rows == nk);
        parts.push_back(Hj);
    }
    PolyMatrix H = glue(parts, code.ring);
    PolyMatrix prod = poly_mat_mul(H, code.encoder);
    for (const Poly& p : prod.e) assert(p.is_zero());
    (void)prod;
    return H;
}

inline std::vector<Poly> encode(const ConvCode& code, const std::vector<Poly>& u) {
    if (static_cast<int>(u.size()) != code.k) throw ShapeMismatch("message length != k");
    std::vector<Poly> v;
    for (int r = 0; r < code.n; ++r) {
        Poly acc(code.ring);
        for (int c = 0; c < code.k; ++c) acc = poly_add(acc, poly_mul(code.encoder.at(r, c), u[c]));
        v.push_back(acc);
    }
    return v;
}

inline bool is_codeword(const ConvCode& code, const std::vector<Poly>& v) {
    if (static_cast<int>(v.size()) != code.n) throw ShapeMismatch("word length != n");
    int dv = -1;
    for (const Poly& vi : v) dv = std::max(dv, vi.deg());
    int bound = std::max(dv, 0) + code.delta;
    for (int j = 1; j <= code.ring.components(); ++j) {
        const PolyMatrix& Gj = code.component_encoders[j - 1];
        std::vector<Poly> vj;
        for (const Poly& vi : v) vj.emplace_back(Gj.ring, vi.c);
        if (!solve_polylinear(Gj, vj, bound)) return false;
    }
    return true;
}

/// Equality as submodules of R[z]^n: mutual column membership.
inline bool codes_equal(const ConvCode& a, const ConvCode& b) {
    if (a.ring.modulus != b.ring.modulus) throw RingMismatch("codes_equal");
    if (a.n != b.n || a.k != b.k) return false;
    for (int c = 0; c < a.k; ++c)
        if (!is_codeword(b, poly_column(a.encoder, c))) return false;
    for (int c = 0; c < b.k; ++c)
        if (!is_codeword(a, poly_column(b.encoder, c))) return false;
    return true;
}

}  // namespace convring
