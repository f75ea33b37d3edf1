#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace convring;
using convring::testing::all_polys;
using convring::testing::brute_force_member;
using convring::testing::cmat;
using convring::testing::pmat;

namespace {
const RingSpec f2 = make_ring(2);
const RingSpec f3 = make_ring(3);
const RingSpec r6 = make_ring(6);

PolyMatrix g1() {
    return pmat(f2, {{{1, 1}, {1}}, {{1, 0, 1}, {0}}, {{1, 0, 1}, {1, 1}}});
}
PolyMatrix g6() {
    return pmat(r6, {{{3, 1}, {5}}, {{1, 0, 3}, {2, 4}}, {{5, 4, 5}, {3, 3}}});
}
}  // namespace

TEST_CASE("poly_gcd") {
    Poly a(f2, {1, 0, 1});                       // z^2+1
    Poly b = poly_mul(a, Poly(f2, {1, 1}));      // (z^2+1)(z+1)
    CHECK(poly_gcd(a, b) == a);
    CHECK(poly_gcd(Poly(f2, {1, 1}), Poly::zero(f2)) == Poly(f2, {1, 1}));
    CHECK(poly_gcd(Poly::zero(f2), Poly::zero(f2)).is_zero());
    CHECK(poly_gcd(Poly(f3, {1, 2, 1}), Poly(f3, {1, 1})) == Poly(f3, {1, 1}));
    CHECK_THROWS_AS(poly_gcd(Poly(f2, {1}), Poly(f3, {1})), MixedRings);
}

TEST_CASE("poly_gcd properties by exhaustive search") {
    for (const RingSpec& f : {f2, f3}) {
        std::vector<Poly> polys = all_polys(f, 2);
        std::vector<Poly> divisors = all_polys(f, 3);
        for (const Poly& a : polys)
            for (const Poly& b : polys) {
                Poly g = poly_gcd(a, b);
                if (g.is_zero()) {
                    CHECK(a.is_zero());
                    CHECK(b.is_zero());
                    continue;
                }
                CHECK(g.lead() == 1);
                CHECK(poly_divmod(a, g).second.is_zero());
                CHECK(poly_divmod(b, g).second.is_zero());
                for (const Poly& d : divisors) {
                    if (d.is_zero()) continue;
                    if (poly_divmod(a, d).second.is_zero() &&
                        poly_divmod(b, d).second.is_zero())
                        CHECK(poly_divmod(g, d).second.is_zero());
                }
            }
    }
}

TEST_CASE("full size minors of the reference encoder") {
    std::vector<Poly> minors = full_size_minors(g6());
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == Poly(r6, {1, 2, 1}));
    CHECK(minors[1] == Poly(r6, {2, 4, 2}));
    CHECK(minors[2] == Poly(r6, {5, 5, 1, 1}));

    // component restriction: U_2(G_1) = <z^2+1>
    Poly g = Poly::zero(f2);
    for (const Poly& m : full_size_minors(g1())) g = poly_gcd(g, m);
    CHECK(g == Poly(f2, {1, 0, 1}));

    CHECK(full_size_minors(PolyMatrix::identity(f2, 2)) ==
          std::vector<Poly>{Poly::constant(f2, 1)});
}

TEST_CASE("column_reduce") {
    // already reduced: unchanged
    ColumnReduction cr = column_reduce(g1());
    CHECK(cr.reduced == g1());
    CHECK(cr.transform == PolyMatrix::identity(f2, 2));

    // reducible input: degrees drop to (1, 0)
    PolyMatrix G = pmat(f2, {{{0, 1}, {1, 1}}, {{0, 1}, {0, 1}}});
    ColumnReduction cr2 = column_reduce(G);
    std::vector<int> degs{cr2.reduced.column_degree(0), cr2.reduced.column_degree(1)};
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{0, 1});
    // image preserved: G and G' mutually solve each other's columns
    for (int c = 0; c < 2; ++c) {
        CHECK(solve_polylinear(G, poly_column(cr2.reduced, c), 3).has_value());
        CHECK(solve_polylinear(cr2.reduced, poly_column(G, c), 3).has_value());
    }
    Poly detU = poly_det(cr2.transform);
    CHECK(detU.deg() == 0);

    // constant invertible input: all degrees 0
    PolyMatrix C = PolyMatrix::from_const(cmat(f3, {{1, 2}, {0, 1}}));
    ColumnReduction cr3 = column_reduce(C);
    CHECK(cr3.reduced.column_degree(0) == 0);
    CHECK(cr3.reduced.column_degree(1) == 0);

    CHECK_THROWS_AS(column_reduce(pmat(f2, {{{1}, {1}}, {{1}, {1}}})), RankDeficient);
}

TEST_CASE("poly_rank") {
    CHECK(poly_rank(g1()) == 2);
    CHECK(poly_rank(PolyMatrix(f2, 2, 3)) == 0);
    // pencil of a minimal first order representation has full row rank
    RMatrix K = cmat(f2, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
    RMatrix L = cmat(f2, {{0, 1, 0}, {1, 0, 1}, {1, 0, 0}, {1, 0, 1}});
    RMatrix M = cmat(f2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(poly_rank(hconcat_poly(PolyMatrix::pencil(K, L), PolyMatrix::from_const(M))) == 4);
}

TEST_CASE("is_surjective_polymatrix") {
    CHECK(is_surjective_polymatrix(pmat(f2, {{{1}, {0, 1}}})));
    CHECK_FALSE(is_surjective_polymatrix(pmat(f2, {{{0, 1}, {0, 0, 1}}})));
    CHECK(is_surjective_polymatrix(PolyMatrix::identity(f2, 3)));
    CHECK_THROWS_AS(is_surjective_polymatrix(pmat(f2, {{{1}}, {{1}}})), ShapeError);
}

TEST_CASE("solve_polylinear") {
    PolyMatrix G = g1();
    auto u = solve_polylinear(G, poly_column(G, 0), 0);
    REQUIRE(u.has_value());
    CHECK((*u)[0] == Poly::constant(f2, 1));
    CHECK((*u)[1].is_zero());

    std::vector<Poly> bad{Poly::constant(f2, 1), Poly::zero(f2), Poly::zero(f2)};
    CHECK_FALSE(solve_polylinear(G, bad, 5).has_value());
    CHECK_FALSE(brute_force_member(G, bad, 5));

    std::vector<Poly> msg{Poly(f2, {0, 1}), Poly::constant(f2, 1)};
    std::vector<Poly> v;
    for (int r = 0; r < 3; ++r) {
        Poly acc(f2);
        for (int c = 0; c < 2; ++c) acc = poly_add(acc, poly_mul(G.at(r, c), msg[c]));
        v.push_back(acc);
    }
    auto u2 = solve_polylinear(G, v, 1);
    REQUIRE(u2.has_value());
    CHECK((*u2)[0] == msg[0]);
    CHECK((*u2)[1] == msg[1]);
}

TEST_CASE("kernel_pair trivial cases") {
    // F1 with no columns, F2 injective: kernel is 0
    PolyMatrix empty(f2, 3, 0);
    PairKernelBasis kb = kernel_pair(empty, PolyMatrix::identity(f2, 3), 2);
    CHECK(kb.basis.cols == 0);

    // F1 the identity: kernel is everything
    PolyMatrix M = pmat(f2, {{{1}, {0, 1}}, {{0}, {1}}});
    PairKernelBasis kb2 = kernel_pair(PolyMatrix::identity(f2, 2), M, 2);
    CHECK(kb2.basis.cols == 2);
    for (int c = 0; c < 2; ++c) CHECK(kb2.basis.column_degree(c) == 0);
}

TEST_CASE("kernel soundness: every basis column has a witness") {
    RMatrix K = cmat(r6, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {0, 0, 0}});
    RMatrix L = cmat(r6, {{0, 1, 0}, {5, 4, 0}, {2, 0, 1}, {3, 1, 5}});
    RMatrix M = cmat(r6, {{0, 0, 0}, {0, 3, 2}, {0, 1, 3}, {5, 0, 0}});
    PolyMatrix F1 = PolyMatrix::pencil(K, L);
    PolyMatrix F2 = PolyMatrix::from_const(M);
    PairKernelBasis kb = kernel_pair(F1, F2, 3);
    REQUIRE(kb.basis.cols == 2);
    for (int c = 0; c < kb.basis.cols; ++c) {
        std::vector<Poly> w = poly_column(kb.basis, c);
        std::vector<Poly> target;
        for (int r = 0; r < F2.rows; ++r) {
            Poly acc(r6);
            for (int cc = 0; cc < F2.cols; ++cc)
                acc = poly_add(acc, poly_mul(F2.at(r, cc), w[cc]));
            target.push_back(poly_sub(Poly::zero(r6), acc));
        }
        auto x = solve_polylinear_ring(F1, target, kb.basis.degree() + 3);
        REQUIRE(x.has_value());
        for (int r = 0; r < F1.rows; ++r) {
            Poly acc(r6);
            for (int cc = 0; cc < F1.cols; ++cc)
                acc = poly_add(acc, poly_mul(F1.at(r, cc), (*x)[cc]));
            for (int cc = 0; cc < F2.cols; ++cc)
                acc = poly_add(acc, poly_mul(F2.at(r, cc), w[cc]));
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("kernel gluing law at desk scale") {
    // small random pencils over Z/6: degree <= 1 members of the glued
    // kernel are exactly the vectors whose projections lie in the
    // component kernels
    std::mt19937 rng(3);
    std::uniform_int_distribution<i64> dist(0, 5);
    for (int trial = 0; trial < 5; ++trial) {
        RMatrix K(r6, 2, 1), L(r6, 2, 1), M(r6, 2, 2);
        for (auto& v : K.e) v = dist(rng);
        for (auto& v : L.e) v = dist(rng);
        for (auto& v : M.e) v = dist(rng);
        PolyMatrix F1 = PolyMatrix::pencil(K, L);
        PolyMatrix F2 = PolyMatrix::from_const(M);
        std::vector<PolyMatrix> F1j{project(F1, 1), project(F1, 2)};
        std::vector<PolyMatrix> F2j{project(F2, 1), project(F2, 2)};
        std::vector<Poly> cands = all_polys(r6, 1);
        for (const Poly& v0 : cands)
            for (const Poly& v1 : cands) {
                std::vector<Poly> v{v0, v1};
                bool in_components = true;
                for (int j = 0; j < 2 && in_components; ++j) {
                    // exists x with F1j x + F2j v = 0, x of degree <= 3
                    std::vector<Poly> target;
                    for (int r = 0; r < 2; ++r) {
                        Poly acc(F2j[j].ring);
                        for (int c = 0; c < 2; ++c)
                            acc = poly_add(acc,
                                           poly_mul(F2j[j].at(r, c), Poly(F2j[j].ring, v[c].c)));
                        target.push_back(poly_sub(Poly::zero(F2j[j].ring), acc));
                    }
                    bool any = false;
                    for (const Poly& x : all_polys(F1j[j].ring, 3)) {
                        bool ok = true;
                        for (int r = 0; r < 2 && ok; ++r)
                            ok = poly_add(poly_mul(F1j[j].at(r, 0), x), poly_sub(Poly::zero(F1j[j].ring), target[r]))
                                     .is_zero();
                        if (ok) any = true;
                    }
                    in_components = any;
                }
                // membership via the solver on each component
                bool by_solver = true;
                for (int j = 0; j < 2 && by_solver; ++j) {
                    std::vector<Poly> vj{Poly(F2j[j].ring, v[0].c), Poly(F2j[j].ring, v[1].c)};
                    std::vector<Poly> target;
                    for (int r = 0; r < 2; ++r) {
                        Poly acc(F2j[j].ring);
                        for (int c = 0; c < 2; ++c)
                            acc = poly_add(acc, poly_mul(F2j[j].at(r, c), vj[c]));
                        target.push_back(poly_sub(Poly::zero(F2j[j].ring), acc));
                    }
                    by_solver = solve_polylinear(F1j[j], target, 3).has_value() ||
                                std::all_of(target.begin(), target.end(),
                                            [](const Poly& p) { return p.is_zero(); });
                }
                CHECK(in_components == by_solver);
            }
    }
}
