#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

#include "convring/errors.hpp"

namespace convring {

using i64 = std::int64_t;

inline i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Extended-Euclid inverse of a mod m; a must be a unit.
inline i64 inv_mod(i64 a, i64 m) {
    i64 g = mod_reduce(a, m), x = 0, x1 = 1, b = m;
    while (g != 0) {
        i64 q = b / g;
        b -= q * g;
        std::swap(b, g);
        x -= q * x1;
        std::swap(x, x1);
    }
    assert(b == 1 && "inv_mod of a non-unit");
    return mod_reduce(x, m);
}

/**
 * A finite product of prime fields F_{p1} x ... x F_{pt}, realized as
 * Z/mZ for squarefree m = p1*...*pt, together with the structural
 * idempotents e_j (e_j = 1 mod p_j, 0 mod p_i for i != j).
 */
struct RingSpec {
    i64 modulus = 0;
    std::vector<i64> primes;       // ascending
    std::vector<i64> idempotents;  // aligned with primes

    int components() const { return static_cast<int>(primes.size()); }
    bool is_field() const { return primes.size() == 1; }
    bool operator==(const RingSpec& o) const { return modulus == o.modulus; }
};

inline RingSpec make_ring(i64 m) {
    if (m < 2) throw NotSquarefree("modulus must be >= 2");
    RingSpec ring;
    ring.modulus = m;
    i64 rest = m;
    for (i64 p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) throw NotSquarefree(std::to_string(p * p) + " divides modulus");
            ring.primes.push_back(p);
        }
    }
    if (rest > 1) ring.primes.push_back(rest);
    for (i64 p : ring.primes) {
        // e_j = 1 mod p, 0 mod m/p
        i64 q = m / p;
        i64 e = p == m ? 1 : mod_reduce(q * inv_mod(q % p, p), m);
        ring.idempotents.push_back(e);
    }
    // idempotent algebra checks
    i64 sum = 0;
    for (std::size_t j = 0; j < ring.primes.size(); ++j) {
        i64 ej = ring.idempotents[j];
        assert(mod_reduce(ej * ej - ej, m) == 0);
        for (std::size_t i = 0; i < j; ++i)
            assert(mod_reduce(ej * ring.idempotents[i], m) == 0);
        sum += ej;
    }
    assert(mod_reduce(sum - 1, m) == 0);
    return ring;
}

struct RElem {
    RingSpec ring;
    i64 value = 0;  // canonical residue in [0, m)

    RElem(RingSpec r, i64 v) : ring(std::move(r)), value(mod_reduce(v, ring.modulus)) {}
};

inline bool is_unit(const RElem& a) { return std::gcd(a.value, a.ring.modulus) == 1; }

inline bool is_zero_divisor(const RElem& a) {
    if (a.value == 0) return true;
    return std::gcd(a.value, a.ring.modulus) != 1;
}

/// Principal ideal of Z/mZ, stored by its canonical divisor generator.
struct RIdeal {
    RingSpec ring;
    i64 generator = 0;  // divisor of m; 1 = unit ideal, 0 = zero ideal

    RIdeal(RingSpec r, i64 g) : ring(std::move(r)) {
        generator = std::gcd(mod_reduce(g, ring.modulus), ring.modulus);
        if (generator == ring.modulus) generator = 0;
    }
    bool is_zero() const { return generator == 0; }
    bool is_unit_ideal() const { return generator == 1; }
    bool operator==(const RIdeal& o) const {
        return ring.modulus == o.ring.modulus && generator == o.generator;
    }
};

inline RIdeal annihilator(const RIdeal& I) {
    i64 m = I.ring.modulus;
    i64 d = I.generator == 0 ? m : I.generator;
    return RIdeal(I.ring, m / std::gcd(m, d));
}

/// Dense matrix over Z/mZ with canonical residues.
struct RMatrix {
    RingSpec ring;
    int rows = 0, cols = 0;
    std::vector<i64> e;  // row-major

    RMatrix() = default;
    RMatrix(RingSpec r, int nr, int nc)
        : ring(std::move(r)), rows(nr), cols(nc), e(static_cast<std::size_t>(nr) * nc, 0) {}

    i64& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    void set(int r, int c, i64 v) { at(r, c) = mod_reduce(v, ring.modulus); }

    static RMatrix identity(const RingSpec& ring, int n) {
        RMatrix I(ring, n, n);
        for (int i = 0; i < n; ++i) I.at(i, i) = 1;
        return I;
    }

    static RMatrix from_rows(const RingSpec& ring, std::vector<std::vector<i64>> rows_in) {
        int nr = static_cast<int>(rows_in.size());
        int nc = nr ? static_cast<int>(rows_in[0].size()) : 0;
        RMatrix A(ring, nr, nc);
        for (int r = 0; r < nr; ++r) {
            if (static_cast<int>(rows_in[r].size()) != nc) throw ShapeMismatch("ragged rows");
            for (int c = 0; c < nc; ++c) A.set(r, c, rows_in[r][c]);
        }
        return A;
    }

    bool operator==(const RMatrix& o) const {
        return ring.modulus == o.ring.modulus && rows == o.rows && cols == o.cols && e == o.e;
    }
};

inline RMatrix mat_mul(const RMatrix& A, const RMatrix& B) {
    if (A.ring.modulus != B.ring.modulus) throw RingMismatch("matrix product");
    if (A.cols != B.rows) throw ShapeMismatch("matrix product");
    RMatrix C(A.ring, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            i64 a = A.at(i, k);
            if (!a) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = mod_reduce(C.at(i, j) + a * B.at(k, j), C.ring.modulus);
        }
    return C;
}

inline RMatrix mat_add(const RMatrix& A, const RMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw ShapeMismatch("matrix sum");
    RMatrix C(A.ring, A.rows, A.cols);
    for (std::size_t i = 0; i < A.e.size(); ++i) C.e[i] = mod_reduce(A.e[i] + B.e[i], A.ring.modulus);
    return C;
}

inline RMatrix mat_scale(const RMatrix& A, i64 s) {
    RMatrix C(A.ring, A.rows, A.cols);
    for (std::size_t i = 0; i < A.e.size(); ++i) C.e[i] = mod_reduce(A.e[i] * s, A.ring.modulus);
    return C;
}

inline RMatrix hconcat(const RMatrix& A, const RMatrix& B) {
    if (A.rows != B.rows) throw ShapeMismatch("hconcat");
    RMatrix C(A.ring, A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) C.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) C.at(r, A.cols + c) = B.at(r, c);
    }
    return C;
}

/// Entrywise reduction of A mod the j-th component prime (j is 1-based).
inline RMatrix project(const RMatrix& A, int j) {
    if (j < 1 || j > A.ring.components()) throw IndexOutOfRange("component index");
    RingSpec f = make_ring(A.ring.primes[j - 1]);
    RMatrix P(f, A.rows, A.cols);
    for (std::size_t i = 0; i < A.e.size(); ++i) P.e[i] = mod_reduce(A.e[i], f.modulus);
    return P;
}

/// CRT reconstruction: X with project(X, j) = components[j-1] for all j.
inline RMatrix glue(const std::vector<RMatrix>& components, const RingSpec& ring) {
    if (static_cast<int>(components.size()) != ring.components())
        throw ComponentCountMismatch("expected " + std::to_string(ring.components()) +
                                     " components");
    const RMatrix& first = components[0];
    RMatrix X(ring, first.rows, first.cols);
    for (std::size_t j = 0; j < components.size(); ++j) {
        const RMatrix& Cj = components[j];
        if (Cj.rows != first.rows || Cj.cols != first.cols) throw ShapeMismatch("glue");
        i64 ej = ring.idempotents[j];
        for (std::size_t i = 0; i < X.e.size(); ++i)
            X.e[i] = mod_reduce(X.e[i] + ej * Cj.e[i], ring.modulus);
    }
    return X;
}

// ---- prime-field linear algebra (the ring's components) ----

/// Row-reduce in place mod prime p; returns pivot columns. When transform
/// is given it accumulates the row operations (same ops applied to it).
inline std::vector<int> rref_mod_p(RMatrix& A, RMatrix* transform = nullptr) {
    i64 p = A.ring.modulus;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int pr = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c) % p != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        for (int cc = 0; cc < A.cols; ++cc) std::swap(A.at(r, cc), A.at(pr, cc));
        if (transform)
            for (int cc = 0; cc < transform->cols; ++cc)
                std::swap(transform->at(r, cc), transform->at(pr, cc));
        i64 inv = inv_mod(A.at(r, c), p);
        for (int cc = 0; cc < A.cols; ++cc) A.at(r, cc) = mod_reduce(A.at(r, cc) * inv, p);
        if (transform)
            for (int cc = 0; cc < transform->cols; ++cc)
                transform->at(r, cc) = mod_reduce(transform->at(r, cc) * inv, p);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            i64 f = A.at(i, c);
            if (!f) continue;
            for (int cc = 0; cc < A.cols; ++cc)
                A.at(i, cc) = mod_reduce(A.at(i, cc) - f * A.at(r, cc), p);
            if (transform)
                for (int cc = 0; cc < transform->cols; ++cc)
                    transform->at(i, cc) =
                        mod_reduce(transform->at(i, cc) - f * transform->at(r, cc), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank_mod_p(RMatrix A) { return static_cast<int>(rref_mod_p(A).size()); }

/// Basis of the right nullspace over F_p, one column per basis vector.
inline RMatrix nullspace_mod_p(RMatrix A) {
    i64 p = A.ring.modulus;
    std::vector<int> pivots = rref_mod_p(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int dim = A.cols - static_cast<int>(pivots.size());
    RMatrix N(A.ring, A.cols, dim);
    int k = 0;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        N.at(c, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            N.at(pivots[r], k) = mod_reduce(-A.at(static_cast<int>(r), c), p);
        ++k;
    }
    return N;
}

/// One solution of A x = b over F_p, empty if inconsistent.
inline std::vector<std::vector<i64>> solve_mod_p(const RMatrix& A, const std::vector<i64>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw ShapeMismatch("solve_mod_p");
    RMatrix Ab = A;
    RMatrix rhs(A.ring, A.rows, 1);
    for (int r = 0; r < A.rows; ++r) rhs.at(r, 0) = mod_reduce(b[r], A.ring.modulus);
    Ab = hconcat(Ab, rhs);
    std::vector<int> pivots = rref_mod_p(Ab);
    if (!pivots.empty() && pivots.back() == A.cols) return {};  // inconsistent
    std::vector<i64> x(A.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = Ab.at(static_cast<int>(r), A.cols);
    return {x};
}

// ---- minors, rank and mapping properties over R ----

namespace detail {

inline void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline i64 det_mod_p(RMatrix A) {
    i64 p = A.ring.modulus;
    i64 det = 1;
    int n = A.rows;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (A.at(r, c) % p != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return 0;
        if (pr != c) {
            for (int cc = 0; cc < n; ++cc) std::swap(A.at(c, cc), A.at(pr, cc));
            det = mod_reduce(-det, p);
        }
        det = mod_reduce(det * A.at(c, c), p);
        i64 inv = inv_mod(A.at(c, c), p);
        for (int r = c + 1; r < n; ++r) {
            i64 f = mod_reduce(A.at(r, c) * inv, p);
            if (!f) continue;
            for (int cc = c; cc < n; ++cc)
                A.at(r, cc) = mod_reduce(A.at(r, cc) - f * A.at(c, cc), p);
        }
    }
    return det;
}

}  // namespace detail

/// Determinant over R, computed per component and glued by CRT.
inline i64 det_mod_m(const RMatrix& A) {
    if (A.rows != A.cols) throw ShapeError("determinant of non-square matrix");
    i64 d = 0;
    for (int j = 1; j <= A.ring.components(); ++j)
        d = mod_reduce(d + A.ring.idempotents[j - 1] * detail::det_mod_p(project(A, j)),
                       A.ring.modulus);
    return d;
}

inline RMatrix submatrix(const RMatrix& A, const std::vector<int>& rs, const std::vector<int>& cs) {
    RMatrix S(A.ring, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (std::size_t c = 0; c < cs.size(); ++c) S.at((int)r, (int)c) = A.at(rs[r], cs[c]);
    return S;
}

/// Ideal generated by the i x i minors of A.
inline RIdeal minors_ideal(const RMatrix& A, int i) {
    if (i < 1 || i > std::min(A.rows, A.cols)) throw SizeOutOfRange("minor size");
    i64 m = A.ring.modulus;
    std::vector<std::vector<int>> rsets, csets;
    detail::subsets(A.rows, i, rsets);
    detail::subsets(A.cols, i, csets);
    i64 g = m;
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            g = std::gcd(g, det_mod_m(submatrix(A, rs, cs)));
            if (g == 1) return RIdeal(A.ring, 1);
        }
    return RIdeal(A.ring, g);
}

/// max{ i : Ann(U_i(A)) = 0 }; cross-checked against per-component
/// Gaussian rank (the two agree over a product of fields).
inline int determinantal_rank(const RMatrix& A) {
    int rmax = std::min(A.rows, A.cols);
    int rank = 0;
    for (int i = 1; i <= rmax; ++i) {
        if (annihilator(minors_ideal(A, i)).is_zero())
            rank = i;
        else
            break;
    }
    int comp_rank = rmax;
    for (int j = 1; j <= A.ring.components(); ++j)
        comp_rank = std::min(comp_rank, rank_mod_p(project(A, j)));
    if (A.rows == 0 || A.cols == 0) comp_rank = 0;
    assert(rank == comp_rank && "annihilator rank != min component rank");
    return rank;
}

inline bool is_injective_const(const RMatrix& A) {
    if (A.rows < A.cols) throw ShapeError("injectivity needs rows >= cols");
    return determinantal_rank(A) == A.cols;
}

inline bool is_surjective_const(const RMatrix& A) {
    if (A.rows > A.cols) throw ShapeError("surjectivity needs rows <= cols");
    if (A.rows == 0) return true;
    bool by_ideal = minors_ideal(A, A.rows).is_unit_ideal();
    bool by_rank = true;
    for (int j = 1; j <= A.ring.components(); ++j)
        by_rank = by_rank && rank_mod_p(project(A, j)) == A.rows;
    assert(by_ideal == by_rank);
    return by_ideal;
}

/// Inverse over R; requires determinantal rank n (det a unit).
inline RMatrix mat_inverse(const RMatrix& A) {
    if (A.rows != A.cols) throw ShapeError("inverse of non-square matrix");
    if (!is_unit(RElem(A.ring, det_mod_m(A)))) throw RankDeficient("matrix not invertible over R");
    std::vector<RMatrix> invs;
    for (int j = 1; j <= A.ring.components(); ++j) {
        RMatrix Aj = project(A, j);
        RMatrix I = RMatrix::identity(Aj.ring, Aj.rows);
        rref_mod_p(Aj, &I);
        invs.push_back(I);
    }
    return glue(invs, A.ring);
}

inline bool is_invertible(const RMatrix& A) {
    return A.rows == A.cols && is_unit(RElem(A.ring, det_mod_m(A)));
}

}  // namespace convring
