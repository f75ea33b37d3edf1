// Acceptance gate: ten end-to-end criteria over the built-in reference
// example, randomized code families and brute-force oracles.  Each
// criterion prints a single pass/fail line; the exit code is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace convring;
using convring::testing::all_polys;
using convring::testing::brute_force_member;
using convring::testing::pmat;
using convring::testing::random_code;

namespace {

int failures = 0;
int criterion_no = 0;

void report(const std::string& what, bool ok, double ms) {
    ++criterion_no;
    std::cout << "criterion " << criterion_no << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << " (" << (int)ms << " ms)" << std::endl;
    if (!ok) ++failures;
}

void criterion(const std::string& what, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << std::endl;
    }
    auto t1 = std::chrono::steady_clock::now();
    report(what, ok, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

const RingSpec f2 = make_ring(2);
const RingSpec f3 = make_ring(3);
const RingSpec r6 = make_ring(6);

}  // namespace

int main() {
    const worked_example::Data ref = worked_example::data();
    const ConvCode code6 = make_code(r6, ref.g6);
    const ConvCode code1 = make_code(f2, ref.g1);
    const ConvCode code2 = make_code(f3, ref.g2);

    criterion("full-size minors of the reference encoder are exact", [&] {
        std::vector<Poly> minors = full_size_minors(ref.g6);
        return minors.size() == 3 && minors[0] == Poly(r6, {1, 2, 1}) &&
               minors[1] == Poly(r6, {2, 4, 2}) && minors[2] == Poly(r6, {5, 5, 1, 1});
    });

    criterion("observability obstruction: common factor mod 2, code not observable", [&] {
        std::vector<Poly> minors = full_size_minors(ref.g1);
        Poly g = minors[0];
        for (std::size_t i = 1; i < minors.size(); ++i) g = poly_gcd(g, minors[i]);
        return g == Poly(f2, {1, 0, 1}) && !is_observable_code(code6) &&
               !is_observable_code(code1);
    });

    criterion("system gluing is exact and reachability transfers", [&] {
        StateSpaceSystem glued = glue_systems({ref.sys1, ref.sys2}, r6);
        bool exact = glued.A == ref.sys6.A && glued.B == ref.sys6.B && glued.C == ref.sys6.C &&
                     glued.D == ref.sys6.D;
        bool ranks = rank_mod_p(controllability_matrix(ref.sys1)) == 3 &&
                     rank_mod_p(controllability_matrix(ref.sys2)) == 3;
        bool ideal = minors_ideal(controllability_matrix(ref.sys6), 3).is_unit_ideal();
        return exact && ranks && ideal && is_reachable(ref.sys6);
    });

    criterion("reference system realizes the reference code, componentwise too", [&] {
        ConvCode rec = system_to_code(ref.sys6);
        return codes_equal(rec, code6) &&
               codes_equal(make_code(f2, project(rec.encoder, 1)), code1) &&
               codes_equal(make_code(f3, project(rec.encoder, 2)), code2);
    });

    std::mt19937 rng(2024);
    std::vector<ConvCode> family;
    for (int t = 0; t < 50; ++t) family.push_back(random_code(rng, t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 6)));

    criterion("first order representations of 50 random codes are minimal and exact", [&] {
        for (const ConvCode& code : family) {
            std::vector<FirstOrderRep> comps;
            for (const PolyMatrix& Gj : code.component_encoders)
                comps.push_back(build_for_field(Gj));
            FirstOrderRep rep = glue_for(comps, code.ring);
            if (!check_minimality(rep).minimal()) return false;
            if (!codes_equal(code_of_rep(rep), code)) return false;
        }
        return true;
    });

    criterion("extracted systems for the same 50 codes are reachable and round trip", [&] {
        for (const ConvCode& code : family) {
            std::vector<FirstOrderRep> comps;
            for (const PolyMatrix& Gj : code.component_encoders)
                comps.push_back(build_for_field(Gj));
            StateSpaceSystem sys = for_to_iso(glue_for(comps, code.ring));
            if (!is_reachable(sys)) return false;
            ConvCode rec = system_to_code(sys);
            PolyMatrix unperm(code.ring, code.n, rec.k);
            for (int c = 0; c < rec.k; ++c)
                for (int r = 0; r < code.n; ++r)
                    unperm.at(sys.permutation[r], c) = rec.encoder.at(r, c);
            if (!codes_equal(make_code(code.ring, unperm), code)) return false;
        }
        return true;
    });

    criterion("observability glues componentwise; observable systems give observable codes", [&] {
        PolyMatrix obs2 = pmat(f2, {{{1}}, {{0, 1}}});
        PolyMatrix non2 = pmat(f2, {{{0, 1}}, {{0, 1}}});
        PolyMatrix obs3 = pmat(f3, {{{2}}, {{0, 1}}});
        PolyMatrix non3 = pmat(f3, {{{0, 1}}, {{0, 1}}});
        for (bool a : {false, true})
            for (bool b : {false, true}) {
                ConvCode glued = make_code(r6, glue({a ? obs2 : non2, b ? obs3 : non3}, r6));
                if (is_observable_code(glued) != (a && b)) return false;
            }
        auto fsys = [](const RingSpec& f) {
            return StateSpaceSystem::make(f, RMatrix(f, 1, 1),
                                          RMatrix::from_rows(f, {{1}}),
                                          RMatrix::from_rows(f, {{1}}),
                                          RMatrix::from_rows(f, {{0}}));
        };
        StateSpaceSystem sys = glue_systems({fsys(f2), fsys(f3)}, r6);
        return is_reachable(sys) && is_observable_system(sys) &&
               is_observable_code(system_to_code(sys));
    });

    criterion("brute-force oracles agree at small scale", [&] {
        // membership vs exhaustive message search over F_2
        std::mt19937 g(7);
        std::uniform_int_distribution<i64> bit(0, 1);
        std::vector<PolyMatrix> encs{ref.g1, pmat(f2, {{{0, 1}}, {{1}}}),
                                     pmat(f2, {{{0, 1}, {0}}, {{0}, {0, 1}}, {{1}, {1}}})};
        for (const PolyMatrix& G : encs) {
            ConvCode c = make_code(f2, G);
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Poly> v;
                for (int r = 0; r < G.rows; ++r) {
                    std::vector<i64> cs(3);
                    for (auto& x : cs) x = bit(g);
                    v.emplace_back(f2, cs);
                }
                int dv = 0;
                for (const Poly& p : v) dv = std::max(dv, p.deg());
                if (is_codeword(c, v) != brute_force_member(G, v, dv + c.delta)) return false;
            }
        }
        // kernel completeness of the recovered code to degree 2
        ConvCode small = make_code(f2, pmat(f2, {{{0, 1}}, {{1}}}));
        ConvCode viaRep = code_of_rep(build_for_field(small.component_encoders[0]));
        for (const Poly& a : all_polys(f2, 2))
            for (const Poly& b : all_polys(f2, 2))
                if (is_codeword(viaRep, {a, b}) != (poly_mul(Poly(f2, {0, 1}), b) == a))
                    return false;
        // injectivity over Z/6 vs exhaustive null-vector search
        std::uniform_int_distribution<i64> six(0, 5);
        for (int trial = 0; trial < 30; ++trial) {
            RMatrix A(r6, 3, 2);
            for (auto& x : A.e) x = six(g);
            bool inj = is_injective_const(A);
            bool found = false;
            for (i64 a = 0; a < 6 && !found; ++a)
                for (i64 b = 0; b < 6 && !found; ++b) {
                    if (a == 0 && b == 0) continue;
                    bool zero = true;
                    for (int r = 0; r < 3; ++r)
                        zero = zero && mod_reduce(A.at(r, 0) * a + A.at(r, 1) * b, 6) == 0;
                    found = zero;
                }
            if (inj == found) return false;
        }
        return true;
    });

    criterion("equivalence witnesses are found and verified", [&] {
        FirstOrderRep built = build_for_field(code1.component_encoders[0]);
        if (!representations_equivalent(built, ref.klm1).has_value()) return false;
        std::mt19937 g(99);
        std::uniform_int_distribution<i64> six(0, 5);
        int done = 0;
        while (done < 20) {
            RMatrix T(r6, 4, 4), S(r6, 3, 3);
            for (auto& x : T.e) x = six(g);
            for (auto& x : S.e) x = six(g);
            if (!is_invertible(T) || !is_invertible(S)) continue;
            FirstOrderRep b = ref.klm6;
            RMatrix Sinv = mat_inverse(S);
            b.K = mat_mul(mat_mul(T, ref.klm6.K), Sinv);
            b.L = mat_mul(mat_mul(T, ref.klm6.L), Sinv);
            b.M = mat_mul(T, ref.klm6.M);
            if (!representations_equivalent(ref.klm6, b).has_value()) return false;
            ++done;
        }
        return true;
    });

    criterion("command line reference pipeline exits cleanly", [&] {
        int status = std::system(CONVRING_CLI_PATH " paper-example > /dev/null 2>&1");
        bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        int neg = std::system(CONVRING_CLI_PATH " paper-example --corrupt-b > /dev/null 2>&1");
        return ok && WIFEXITED(neg) && WEXITSTATUS(neg) == 1;
    });

    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures ? 1 : 0;
}
