#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "convring/ring.hpp"

namespace convring {

/// Polynomial over Z/mZ, ascending coefficients, no trailing zeros
/// (the zero polynomial is the empty list).
struct Poly {
    RingSpec ring;
    std::vector<i64> c;

    explicit Poly(RingSpec r) : ring(std::move(r)) {}
    Poly(RingSpec r, std::vector<i64> coeffs) : ring(std::move(r)), c(std::move(coeffs)) {
        normalize();
    }

    void normalize() {
        for (auto& x : c) x = mod_reduce(x, ring.modulus);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }  // deg 0 = -1
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    i64 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }
    i64 lead() const { return c.empty() ? 0 : c.back(); }

    static Poly zero(const RingSpec& r) { return Poly(r); }
    static Poly constant(const RingSpec& r, i64 v) { return Poly(r, {v}); }

    bool operator==(const Poly& o) const { return ring.modulus == o.ring.modulus && c == o.c; }
};

inline Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<i64> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) + b.coeff((int)i);
    return Poly(a.ring, std::move(c));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<i64> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) - b.coeff((int)i);
    return Poly(a.ring, std::move(c));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring);
    std::vector<i64> c(a.c.size() + b.c.size() - 1, 0);
    i64 m = a.ring.modulus;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = mod_reduce(c[i + j] + a.c[i] * b.c[j], m);
    return Poly(a.ring, std::move(c));
}

inline Poly poly_scale(const Poly& a, i64 s) {
    std::vector<i64> c = a.c;
    for (auto& x : c) x *= s;
    return Poly(a.ring, std::move(c));
}

/// a * z^k
inline Poly poly_shift(const Poly& a, int k) {
    if (a.is_zero()) return a;
    std::vector<i64> c(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), c.begin() + k);
    return Poly(a.ring, std::move(c));
}

inline i64 poly_eval(const Poly& a, i64 z0) {
    i64 v = 0, m = a.ring.modulus;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) v = mod_reduce(v * z0 + *it, m);
    return v;
}

/// Division with remainder over a prime field.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    i64 p = a.ring.modulus;
    Poly r = a;
    Poly q(a.ring, std::vector<i64>(std::max(0, a.deg() - b.deg() + 1), 0));
    i64 inv = inv_mod(b.lead(), p);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        i64 f = mod_reduce(r.lead() * inv, p);
        q.c[k] = f;
        r = poly_sub(r, poly_shift(poly_scale(b, f), k));
    }
    q.normalize();
    return {q, r};
}

/// Monic gcd over a prime field; gcd(0,0) = 0.
inline Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.ring.modulus != g.ring.modulus) throw MixedRings("poly_gcd");
    assert(f.ring.is_field());
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = poly_scale(a, inv_mod(a.lead(), a.ring.modulus));
    a.normalize();
    return a;
}

/// Dense matrix of polynomials over Z/mZ.
struct PolyMatrix {
    RingSpec ring;
    int rows = 0, cols = 0;
    std::vector<Poly> e;

    PolyMatrix() = default;
    PolyMatrix(RingSpec r, int nr, int nc)
        : ring(r), rows(nr), cols(nc), e(static_cast<std::size_t>(nr) * nc, Poly(r)) {}

    Poly& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    int degree() const {
        int d = -1;
        for (const auto& p : e) d = std::max(d, p.deg());
        return d;
    }

    int column_degree(int c) const {
        int d = -1;
        for (int r = 0; r < rows; ++r) d = std::max(d, at(r, c).deg());
        return d;
    }

    static PolyMatrix from_const(const RMatrix& A) {
        PolyMatrix G(A.ring, A.rows, A.cols);
        for (int r = 0; r < A.rows; ++r)
            for (int c = 0; c < A.cols; ++c)
                if (A.at(r, c)) G.at(r, c) = Poly::constant(A.ring, A.at(r, c));
        return G;
    }

    /// zK + L
    static PolyMatrix pencil(const RMatrix& K, const RMatrix& L) {
        if (K.rows != L.rows || K.cols != L.cols) throw ShapeMismatch("pencil");
        PolyMatrix P(K.ring, K.rows, K.cols);
        for (int r = 0; r < K.rows; ++r)
            for (int c = 0; c < K.cols; ++c) P.at(r, c) = Poly(K.ring, {L.at(r, c), K.at(r, c)});
        return P;
    }

    static PolyMatrix identity(const RingSpec& ring, int n) {
        PolyMatrix I(ring, n, n);
        for (int i = 0; i < n; ++i) I.at(i, i) = Poly::constant(ring, 1);
        return I;
    }

    bool operator==(const PolyMatrix& o) const {
        return ring.modulus == o.ring.modulus && rows == o.rows && cols == o.cols && e == o.e;
    }
};

inline PolyMatrix poly_mat_mul(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.cols != B.rows) throw ShapeMismatch("polynomial matrix product");
    PolyMatrix C(A.ring, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            Poly s(A.ring);
            for (int k = 0; k < A.cols; ++k) s = poly_add(s, poly_mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = s;
        }
    return C;
}

inline PolyMatrix project(const PolyMatrix& G, int j) {
    if (j < 1 || j > G.ring.components()) throw IndexOutOfRange("component index");
    RingSpec f = make_ring(G.ring.primes[j - 1]);
    PolyMatrix P(f, G.rows, G.cols);
    for (std::size_t i = 0; i < G.e.size(); ++i) P.e[i] = Poly(f, G.e[i].c);
    return P;
}

inline PolyMatrix glue(const std::vector<PolyMatrix>& components, const RingSpec& ring) {
    if (static_cast<int>(components.size()) != ring.components())
        throw ComponentCountMismatch("expected " + std::to_string(ring.components()) +
                                     " components");
    const PolyMatrix& first = components[0];
    PolyMatrix X(ring, first.rows, first.cols);
    for (std::size_t j = 0; j < components.size(); ++j) {
        const PolyMatrix& Cj = components[j];
        if (Cj.rows != first.rows || Cj.cols != first.cols) throw ShapeMismatch("glue");
        i64 ej = ring.idempotents[j];
        for (std::size_t i = 0; i < X.e.size(); ++i)
            X.e[i] = poly_add(X.e[i], poly_scale(Poly(ring, Cj.e[i].c), ej));
    }
    return X;
}

inline PolyMatrix poly_submatrix(const PolyMatrix& A, const std::vector<int>& rs,
                                 const std::vector<int>& cs) {
    PolyMatrix S(A.ring, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (std::size_t c = 0; c < cs.size(); ++c) S.at((int)r, (int)c) = A.at(rs[r], cs[c]);
    return S;
}

/// Laplace expansion along the first row; fine at desk scale.
inline Poly poly_det(const PolyMatrix& A) {
    assert(A.rows == A.cols);
    int n = A.rows;
    if (n == 0) return Poly::constant(A.ring, 1);
    if (n == 1) return A.at(0, 0);
    Poly det(A.ring);
    std::vector<int> rs(n - 1);
    for (int i = 0; i < n - 1; ++i) rs[i] = i + 1;
    for (int c = 0; c < n; ++c) {
        if (A.at(0, c).is_zero()) continue;
        std::vector<int> cs;
        for (int cc = 0; cc < n; ++cc)
            if (cc != c) cs.push_back(cc);
        Poly cof = poly_mul(A.at(0, c), poly_det(poly_submatrix(A, rs, cs)));
        det = (c % 2 == 0) ? poly_add(det, cof) : poly_sub(det, cof);
    }
    return det;
}

/// All r x r minors for r = min(rows, cols), lexicographic in
/// (row subset, column subset).
inline std::vector<Poly> full_size_minors(const PolyMatrix& G) {
    int r = std::min(G.rows, G.cols);
    std::vector<std::vector<int>> rsets, csets;
    detail::subsets(G.rows, r, rsets);
    detail::subsets(G.cols, r, csets);
    std::vector<Poly> out;
    for (const auto& rs : rsets)
        for (const auto& cs : csets) out.push_back(poly_det(poly_submatrix(G, rs, cs)));
    return out;
}

/// Rank over the fraction field F_p(z): fraction-free elimination with
/// cross-multiplication (no division needed in an integral domain).
inline int poly_rank(const PolyMatrix& Gin) {
    assert(Gin.ring.is_field());
    PolyMatrix G = Gin;
    int rank = 0;
    for (int c = 0; c < G.cols && rank < G.rows; ++c) {
        int pr = -1;
        for (int r = rank; r < G.rows; ++r)
            if (!G.at(r, c).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int cc = 0; cc < G.cols; ++cc) std::swap(G.at(rank, cc), G.at(pr, cc));
        for (int r = rank + 1; r < G.rows; ++r) {
            if (G.at(r, c).is_zero()) continue;
            Poly piv = G.at(rank, c), cur = G.at(r, c);
            for (int cc = c; cc < G.cols; ++cc)
                G.at(r, cc) =
                    poly_sub(poly_mul(G.at(r, cc), piv), poly_mul(G.at(rank, cc), cur));
        }
        ++rank;
    }
    return rank;
}

/// Rank of a polynomial matrix over R, taken per component (minimum).
inline int poly_rank_ring(const PolyMatrix& G) {
    int r = std::min(G.rows, G.cols);
    for (int j = 1; j <= G.ring.components(); ++j) r = std::min(r, poly_rank(project(G, j)));
    return r;
}

/// Surjectivity of G: R[z]^cols -> R[z]^rows: per component, the gcd of
/// full-size minors must be a nonzero constant.
inline bool is_surjective_polymatrix(const PolyMatrix& G) {
    if (G.rows > G.cols) throw ShapeError("surjectivity needs rows <= cols");
    if (G.rows == 0) return true;
    for (int j = 1; j <= G.ring.components(); ++j) {
        PolyMatrix Gj = project(G, j);
        Poly g = Poly::zero(Gj.ring);
        for (const Poly& mnr : full_size_minors(Gj)) g = poly_gcd(g, mnr);
        if (!(g.deg() == 0)) return false;
    }
    return true;
}

struct ColumnReduction {
    PolyMatrix reduced;    // G * U
    PolyMatrix transform;  // unimodular U
};

/// Column reduction over F_p[z]: repeatedly cancels dependent leading
/// column coefficients until the leading-coefficient matrix has full
/// column rank. The sum of column degrees of the output is minimal.
inline ColumnReduction column_reduce(const PolyMatrix& Gin) {
    assert(Gin.ring.is_field());
    if (poly_rank(Gin) != Gin.cols) throw RankDeficient("column_reduce needs full column rank");
    PolyMatrix G = Gin;
    PolyMatrix U = PolyMatrix::identity(G.ring, G.cols);
    i64 p = G.ring.modulus;
    while (true) {
        std::vector<int> cdeg(G.cols);
        RMatrix lead(G.ring, G.rows, G.cols);
        for (int c = 0; c < G.cols; ++c) {
            cdeg[c] = G.column_degree(c);
            for (int r = 0; r < G.rows; ++r) lead.at(r, c) = G.at(r, c).coeff(cdeg[c]);
        }
        RMatrix N = nullspace_mod_p(lead);
        if (N.cols == 0) break;
        // take the first null vector; reduce its highest-degree column
        int target = -1;
        for (int c = 0; c < G.cols; ++c)
            if (N.at(c, 0) != 0 && (target < 0 || cdeg[c] > cdeg[target])) target = c;
        i64 inv = inv_mod(N.at(target, 0), p);
        for (int r = 0; r < G.rows; ++r) {
            Poly acc(G.ring);
            for (int c = 0; c < G.cols; ++c) {
                i64 f = mod_reduce(N.at(c, 0) * inv, p);
                if (!f) continue;
                acc = poly_add(acc, poly_shift(poly_scale(G.at(r, c), f), cdeg[target] - cdeg[c]));
            }
            G.at(r, target) = acc;
        }
        for (int r = 0; r < U.rows; ++r) {
            Poly acc(G.ring);
            for (int c = 0; c < U.cols; ++c) {
                i64 f = mod_reduce(N.at(c, 0) * inv, p);
                if (!f) continue;
                acc = poly_add(acc, poly_shift(poly_scale(U.at(r, c), f), cdeg[target] - cdeg[c]));
            }
            U.at(r, target) = acc;
        }
    }
    return {G, U};
}

/// G * u = v with deg(u) <= degree_bound, over a prime field.
/// Empty result means no solution within the bound.
inline std::optional<std::vector<Poly>> solve_polylinear(const PolyMatrix& G,
                                                         const std::vector<Poly>& v,
                                                         int degree_bound) {
    assert(G.ring.is_field());
    if (static_cast<int>(v.size()) != G.rows) throw ShapeMismatch("solve_polylinear");
    int du = std::max(degree_bound, 0);
    int dmax = std::max(G.degree() + du, 0);
    for (const Poly& vi : v) dmax = std::max(dmax, vi.deg());
    int nuk = G.cols * (du + 1);
    RMatrix A(G.ring, G.rows * (dmax + 1), nuk);
    std::vector<i64> b(static_cast<std::size_t>(G.rows) * (dmax + 1), 0);
    for (int r = 0; r < G.rows; ++r)
        for (int s = 0; s <= dmax; ++s) {
            int eq = r * (dmax + 1) + s;
            for (int c = 0; c < G.cols; ++c)
                for (int t = 0; t <= du; ++t)
                    A.at(eq, c * (du + 1) + t) = G.at(r, c).coeff(s - t);
            b[eq] = v[r].coeff(s);
        }
    auto sols = solve_mod_p(A, b);
    if (sols.empty()) return std::nullopt;
    std::vector<Poly> u;
    for (int c = 0; c < G.cols; ++c) {
        std::vector<i64> coeffs(sols[0].begin() + static_cast<std::ptrdiff_t>(c) * (du + 1),
                                sols[0].begin() + static_cast<std::ptrdiff_t>(c + 1) * (du + 1));
        u.emplace_back(G.ring, std::move(coeffs));
    }
    return u;
}

/// Same over R: solve per component and glue by the idempotents.
inline std::optional<std::vector<Poly>> solve_polylinear_ring(const PolyMatrix& G,
                                                              const std::vector<Poly>& v,
                                                              int degree_bound) {
    std::vector<std::vector<Poly>> comps;
    for (int j = 1; j <= G.ring.components(); ++j) {
        RingSpec f = make_ring(G.ring.primes[j - 1]);
        std::vector<Poly> vj;
        for (const Poly& vi : v) vj.emplace_back(f, vi.c);
        auto uj = solve_polylinear(project(G, j), vj, degree_bound);
        if (!uj) return std::nullopt;
        comps.push_back(*uj);
    }
    std::vector<Poly> u;
    for (int c = 0; c < G.cols; ++c) {
        Poly acc(G.ring);
        for (int j = 0; j < G.ring.components(); ++j)
            acc = poly_add(acc, poly_scale(Poly(G.ring, comps[j][c].c), G.ring.idempotents[j]));
        u.push_back(acc);
    }
    return u;
}

struct PairKernelBasis {
    PolyMatrix basis;                        // columns generate Ker(F1 | F2) over R
    std::vector<PolyMatrix> component_bases; // minimal polynomial bases per field
};

inline PolyMatrix hconcat_poly(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.rows != B.rows) throw ShapeMismatch("hconcat_poly");
    PolyMatrix C(A.ring, A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) C.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) C.at(r, A.cols + c) = B.at(r, c);
    }
    return C;
}

namespace detail {

/// Minimal polynomial basis of {v : exists x, F1 x + F2 v = 0} over F_p,
/// by a degree sweep over coefficient (block convolution) matrices.
inline PolyMatrix kernel_pair_field(const PolyMatrix& F1, const PolyMatrix& F2, int degree_cap) {
    assert(F1.ring.is_field());
    int n = F2.cols;
    int target = n - (poly_rank(F1.cols ? hconcat_poly(F1, F2) : F2) - poly_rank(F1));
    PolyMatrix chosen(F2.ring, n, 0);
    for (int d = 0; d <= degree_cap && chosen.cols < target; ++d) {
        int dx = d + degree_cap + 1;  // witness degree slack
        int dmax = std::max(F1.degree() + dx, F2.degree() + d);
        int q1 = F1.cols, q2 = F2.cols;
        RMatrix A(F1.ring, F1.rows * (dmax + 1), q1 * (dx + 1) + q2 * (d + 1));
        for (int r = 0; r < F1.rows; ++r)
            for (int s = 0; s <= dmax; ++s) {
                int eq = r * (dmax + 1) + s;
                for (int c = 0; c < q1; ++c)
                    for (int t = 0; t <= dx; ++t)
                        A.at(eq, c * (dx + 1) + t) = F1.at(r, c).coeff(s - t);
                for (int c = 0; c < q2; ++c)
                    for (int t = 0; t <= d; ++t)
                        A.at(eq, q1 * (dx + 1) + c * (d + 1) + t) = F2.at(r, c).coeff(s - t);
            }
        RMatrix N = nullspace_mod_p(A);
        for (int k = 0; k < N.cols && chosen.cols < target; ++k) {
            PolyMatrix cand(F2.ring, n, chosen.cols + 1);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < chosen.cols; ++c) cand.at(r, c) = chosen.at(r, c);
            bool nonzero = false;
            for (int c = 0; c < n; ++c) {
                std::vector<i64> coeffs(d + 1);
                for (int t = 0; t <= d; ++t)
                    coeffs[t] = N.at(q1 * (dx + 1) + c * (d + 1) + t, k);
                Poly vc(F2.ring, std::move(coeffs));
                nonzero = nonzero || !vc.is_zero();
                cand.at(c, chosen.cols) = vc;
            }
            if (nonzero && poly_rank(cand) == cand.cols) chosen = cand;
        }
    }
    if (chosen.cols < target)
        throw DegreeCapExceeded("kernel basis incomplete at degree cap " +
                                std::to_string(degree_cap));
    if (chosen.cols == 0) return chosen;
    PolyMatrix reduced = column_reduce(chosen).reduced;
    // canonical order: nondecreasing column degrees
    std::vector<int> order(reduced.cols);
    for (int c = 0; c < reduced.cols; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return reduced.column_degree(a) < reduced.column_degree(b);
    });
    PolyMatrix out(reduced.ring, reduced.rows, reduced.cols);
    for (int c = 0; c < reduced.cols; ++c)
        for (int r = 0; r < reduced.rows; ++r) out.at(r, c) = reduced.at(r, order[c]);
    return out;
}

}  // namespace detail

/// Ker(F1 | F2) = {v : exists x, F1 x + F2 v = 0}, per component over
/// each F_p, glued over R via the idempotents.
inline PairKernelBasis kernel_pair(const PolyMatrix& F1, const PolyMatrix& F2, int degree_cap) {
    if (F1.ring.modulus != F2.ring.modulus) throw RingMismatch("kernel_pair");
    if (F1.rows != F2.rows) throw ShapeMismatch("kernel_pair row counts");
    PairKernelBasis result;
    for (int j = 1; j <= F1.ring.components(); ++j)
        result.component_bases.push_back(
            detail::kernel_pair_field(project(F1, j), project(F2, j), degree_cap));
    bool equal_counts = true;
    for (const auto& B : result.component_bases)
        equal_counts = equal_counts && B.cols == result.component_bases[0].cols;
    if (equal_counts) {
        result.basis = glue(result.component_bases, F1.ring);
    } else {
        // unequal component ranks: a generating family, e_j-scaled lifts
        result.basis = PolyMatrix(F1.ring, F2.cols, 0);
        for (std::size_t j = 0; j < result.component_bases.size(); ++j) {
            const PolyMatrix& Bj = result.component_bases[j];
            PolyMatrix lift(F1.ring, Bj.rows, Bj.cols);
            for (std::size_t i = 0; i < Bj.e.size(); ++i)
                lift.e[i] = poly_scale(Poly(F1.ring, Bj.e[i].c), F1.ring.idempotents[j]);
            result.basis = hconcat_poly(result.basis, lift);
        }
    }
    return result;
}

}  // namespace convring
