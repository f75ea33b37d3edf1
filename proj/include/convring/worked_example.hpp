#pragma once

#include <string>
#include <vector>

#include "convring/io.hpp"
#include "convring/state_space.hpp"

namespace convring {

/**
 * Built-in end-to-end reference example over Z/6Z: two component
 * encoders over F_2 and F_3 with known first order and I/S/O
 * representations, their glued system over Z/6Z, and the encoder
 * recovered from the glued representation. Every intermediate value is
 * checked against the expected matrices.
 */
namespace worked_example {

struct Stage {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    bool corrupt_glued_b = false;  // test hook: perturb one entry of B
    int only_component = 0;        // 0 = full pipeline, 1 or 2 = one field chain
};

struct Data {
    RingSpec r6 = make_ring(6), f2 = make_ring(2), f3 = make_ring(3);
    PolyMatrix g1, g2, g6;
    FirstOrderRep klm1, klm2, klm6;
    StateSpaceSystem sys1, sys2, sys6;
};

inline Data data() {
    Data d;
    auto P = [](const RingSpec& r, std::vector<std::vector<std::vector<i64>>> rows) {
        PolyMatrix G(r, (int)rows.size(), (int)rows[0].size());
        for (int i = 0; i < G.rows; ++i)
            for (int j = 0; j < G.cols; ++j) G.at(i, j) = Poly(r, rows[i][j]);
        return G;
    };
    d.g1 = P(d.f2, {{{1, 1}, {1}}, {{1, 0, 1}, {0}}, {{1, 0, 1}, {1, 1}}});
    d.g2 = P(d.f3, {{{0, 1}, {2}}, {{1}, {2, 1}}, {{2, 1, 2}, {0}}});
    d.g6 = P(d.r6, {{{3, 1}, {5}}, {{1, 0, 3}, {2, 4}}, {{5, 4, 5}, {3, 3}}});

    auto F = [](const RingSpec& r, int n, int k, int delta, std::vector<std::vector<i64>> K,
                std::vector<std::vector<i64>> L, std::vector<std::vector<i64>> M) {
        FirstOrderRep rep;
        rep.ring = r;
        rep.n = n;
        rep.k = k;
        rep.delta = delta;
        rep.K = RMatrix::from_rows(r, K);
        rep.L = RMatrix::from_rows(r, L);
        rep.M = RMatrix::from_rows(r, M);
        return rep;
    };
    d.klm1 = F(d.f2, 3, 2, 3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}},
               {{0, 1, 0}, {1, 0, 1}, {1, 0, 0}, {1, 0, 1}},
               {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    d.klm2 = F(d.f3, 3, 2, 3, {{-1, 0, 0}, {-1, 0, 0}, {0, 0, -1}, {-1, 1, 0}},
               {{0, 1, 0}, {0, 0, 1}, {-1, 0, 1}, {1, 0, 0}},
               {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    d.klm6 = F(d.r6, 3, 2, 3, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 0}},
               {{0, 1, 0}, {5, 4, 0}, {2, 0, 1}, {3, 1, 5}},
               {{0, 0, 0}, {0, 3, 2}, {0, 1, 3}, {-1, 0, 0}});

    auto Sy = [](const RingSpec& r, std::vector<std::vector<i64>> A,
                 std::vector<std::vector<i64>> B, std::vector<std::vector<i64>> C,
                 std::vector<std::vector<i64>> D) {
        return StateSpaceSystem::make(r, RMatrix::from_rows(r, A), RMatrix::from_rows(r, B),
                                      RMatrix::from_rows(r, C), RMatrix::from_rows(r, D));
    };
    d.sys1 = Sy(d.f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 0}, {1, 0}, {1, 1}}, {{1, 1, 1}},
                {{0, 0}});
    d.sys2 = Sy(d.f3, {{0, 1, 0}, {-1, 1, 0}, {-1, 0, 1}}, {{0, 0}, {0, -1}, {1, 0}},
                {{0, 1, -1}}, {{0, 0}});
    d.sys6 = Sy(d.r6, {{0, 1, 0}, {5, 4, 0}, {2, 0, 1}}, {{0, 0}, {3, 2}, {1, 3}}, {{3, 1, 5}},
                {{0, 0}});
    return d;
}

inline std::vector<Stage> run(const Options& opt = {}) {
    Data d = data();
    std::vector<Stage> stages;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        stages.push_back({name, ok, detail});
        return ok;
    };

    bool both = opt.only_component == 0;
    bool c1 = both || opt.only_component == 1;
    bool c2 = both || opt.only_component == 2;

    ConvCode code1, code2;
    if (c1) {
        code1 = make_code(d.f2, d.g1);
        check("component 1 encoder", code1.n == 3 && code1.k == 2 && code1.delta == 3,
              "(n,k,delta) = (3,2,3) over F_2");
        FirstOrderRep built = build_for_field(code1.component_encoders[0]);
        check("component 1 representation minimal", check_minimality(built).minimal());
        check("component 1 kernel equality", codes_equal(code_of_rep(built), code1));
        check("component 1 matches reference (K,L,M)",
              representations_equivalent(built, d.klm1).has_value());
        StateSpaceSystem s = for_to_iso(d.klm1);
        check("component 1 system reachable",
              rank_mod_p(controllability_matrix(d.sys1)) == 3 && is_reachable(s),
              "controllability rank 3");
        check("component 1 code recovered", codes_equal(system_to_code(d.sys1), code1));
    }
    if (c2) {
        code2 = make_code(d.f3, d.g2);
        check("component 2 encoder", code2.n == 3 && code2.k == 2 && code2.delta == 3,
              "(n,k,delta) = (3,2,3) over F_3");
        FirstOrderRep built = build_for_field(code2.component_encoders[0]);
        check("component 2 representation minimal", check_minimality(built).minimal());
        check("component 2 kernel equality", codes_equal(code_of_rep(built), code2));
        check("component 2 matches reference (K,L,M)",
              representations_equivalent(built, d.klm2).has_value());
        check("component 2 system reachable", rank_mod_p(controllability_matrix(d.sys2)) == 3,
              "controllability rank 3");
    }
    if (!both) return stages;

    ConvCode code6 = make_code(d.r6, d.g6);
    check("glued encoder", code6.n == 3 && code6.k == 2 && code6.delta == 3,
          "(n,k,delta) = (3,2,3) over Z/6Z");
    check("glued encoder restricts to components",
          project(d.g6, 1) == d.g1 && project(d.g6, 2) == d.g2);
    check("glued code not observable", !is_observable_code(code6));

    StateSpaceSystem expected = d.sys6;
    if (opt.corrupt_glued_b) expected.B.set(1, 0, expected.B.at(1, 0) + 1);
    StateSpaceSystem glued = glue_systems({d.sys1, d.sys2}, d.r6);
    check("glued system",
          glued.A == expected.A && glued.B == expected.B && glued.C == expected.C &&
              glued.D == expected.D);
    check("glued system reachable", is_reachable(glued) &&
                                        minors_ideal(controllability_matrix(glued), 3)
                                            .is_unit_ideal(),
          "U_3(Phi_3(A,B)) = <1>");
    FirstOrderRep canon = iso_to_for(glued);
    check("canonical (K,L,M)",
          canon.K == d.klm6.K && canon.L == d.klm6.L && canon.M == d.klm6.M);
    ConvCode recovered = system_to_code(glued);
    check("recovered code equals glued code", codes_equal(recovered, code6));
    check("recovered code restricts to components",
          codes_equal(make_code(d.f2, project(recovered.encoder, 1)), code1) &&
              codes_equal(make_code(d.f3, project(recovered.encoder, 2)), code2));
    check("component 1 system not observable", !is_observable_system(d.sys1));
    return stages;
}

}  // namespace worked_example
}  // namespace convring
