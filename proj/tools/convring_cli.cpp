// Command line driver for the convring library: exact convolutional
// codes over products of prime fields, their first order and I/S/O
// representations, and the built-in reference example.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "convring/convring.hpp"
#include "convring/worked_example.hpp"

using namespace convring;

namespace {

FirstOrderRep rep_from_files(const std::string& kf, const std::string& lf,
                             const std::string& mf) {
    RMatrix K = load_matrix(kf).as_const();
    RMatrix L = load_matrix(lf).as_const();
    RMatrix M = load_matrix(mf).as_const();
    if (K.rows != L.rows || K.rows != M.rows || K.cols != L.cols)
        throw ShapeMismatch("K, L, M row/column counts disagree");
    FirstOrderRep rep;
    rep.ring = K.ring;
    rep.delta = K.cols;
    rep.n = M.cols;
    rep.k = rep.n - (K.rows - rep.delta);
    if (rep.k < 0 || rep.k > rep.n) throw ShapeMismatch("inconsistent (K,L,M) block sizes");
    rep.K = K;
    rep.L = L;
    rep.M = M;
    return rep;
}

StateSpaceSystem sys_from_files(const std::string& af, const std::string& bf,
                                const std::string& cf, const std::string& df) {
    return StateSpaceSystem::make(load_matrix(af).ring(), load_matrix(af).as_const(),
                                  load_matrix(bf).as_const(), load_matrix(cf).as_const(),
                                  load_matrix(df).as_const());
}

void print_code_report(const ConvCode& code) {
    std::cout << "n: " << code.n << "\nk: " << code.k << "\ndegree: " << code.delta << "\n";
    for (int j = 1; j <= code.ring.components(); ++j) {
        std::cout << "component " << j << " (p=" << code.ring.primes[j - 1]
                  << ") column degrees:";
        const PolyMatrix& Gj = code.component_encoders[j - 1];
        for (int c = 0; c < Gj.cols; ++c) std::cout << " " << Gj.column_degree(c);
        std::cout << "\n";
    }
    std::cout << "observable: " << (is_observable_code(code) ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact convolutional codes over squarefree Z/mZ"};
    app.require_subcommand(1);

    std::string f1, f2f, f3f, f4f, f5f;
    int arg_i = 1;

    auto* cmd_ring = app.add_subcommand("ring", "print the prime/idempotent split of Z/mZ");
    i64 modulus = 0;
    cmd_ring->add_option("m", modulus)->required();

    auto* cmd_validate = app.add_subcommand("validate", "validate an encoder file");
    cmd_validate->add_option("G", f1)->required();

    auto* cmd_minors = app.add_subcommand("minors", "i x i minor ideal (const) or minors (poly)");
    cmd_minors->add_option("A", f1)->required();
    cmd_minors->add_option("i", arg_i)->required();

    auto* cmd_rank = app.add_subcommand("rank", "determinantal rank of a matrix");
    cmd_rank->add_option("A", f1)->required();

    auto* cmd_for = app.add_subcommand("for", "first order representation of an encoder");
    cmd_for->add_option("G", f1)->required();

    auto* cmd_iso = app.add_subcommand("iso", "extract (A,B,C,D) from (K,L,M)");
    cmd_iso->add_option("K", f1)->required();
    cmd_iso->add_option("L", f2f)->required();
    cmd_iso->add_option("M", f3f)->required();

    auto* cmd_canon = app.add_subcommand("canon", "canonical (K,L,M) of a system");
    cmd_canon->add_option("A", f1)->required();
    cmd_canon->add_option("B", f2f)->required();
    cmd_canon->add_option("C", f3f)->required();
    cmd_canon->add_option("D", f4f)->required();

    auto* cmd_reach = app.add_subcommand("reach", "reachability of (A,B)");
    cmd_reach->add_option("A", f1)->required();
    cmd_reach->add_option("B", f2f)->required();

    auto* cmd_osys = app.add_subcommand("observe-sys", "observability of (A,C)");
    cmd_osys->add_option("A", f1)->required();
    cmd_osys->add_option("C", f2f)->required();

    auto* cmd_ocode = app.add_subcommand("observe-code", "observability of a code");
    cmd_ocode->add_option("G", f1)->required();

    auto* cmd_syn = app.add_subcommand("syndrome", "syndrome former of an observable code");
    cmd_syn->add_option("G", f1)->required();

    auto* cmd_kernel = app.add_subcommand("kernel", "encoder recovery from (K,L,M)");
    cmd_kernel->add_option("K", f1)->required();
    cmd_kernel->add_option("L", f2f)->required();
    cmd_kernel->add_option("M", f3f)->required();

    auto* cmd_encode = app.add_subcommand("encode", "encode a message");
    cmd_encode->add_option("G", f1)->required();
    cmd_encode->add_option("u", f2f)->required();

    auto* cmd_sim = app.add_subcommand("simulate", "run the state recursion");
    cmd_sim->add_option("A", f1)->required();
    cmd_sim->add_option("B", f2f)->required();
    cmd_sim->add_option("C", f3f)->required();
    cmd_sim->add_option("D", f4f)->required();
    cmd_sim->add_option("inputs", f5f)->required();

    auto* cmd_equal = app.add_subcommand("equal", "compare two codes as modules");
    cmd_equal->add_option("G1", f1)->required();
    cmd_equal->add_option("G2", f2f)->required();

    auto* cmd_paper = app.add_subcommand("paper-example", "run the built-in reference pipeline");
    int only_component = 0;
    bool corrupt_b = false;
    cmd_paper->add_option("--component", only_component, "restrict to one component chain");
    cmd_paper->add_flag("--corrupt-b", corrupt_b, "negative-control hook");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_ring) {
            RingSpec r = make_ring(modulus);
            std::cout << "modulus: " << r.modulus << "\nprimes:";
            for (i64 p : r.primes) std::cout << " " << p;
            std::cout << "\nidempotents:";
            for (i64 e : r.idempotents) std::cout << " " << e;
            std::cout << "\n";
        } else if (*cmd_validate) {
            print_code_report(make_code(load_matrix(f1).ring(), load_matrix(f1).as_poly()));
        } else if (*cmd_minors) {
            MatrixFile mf = load_matrix(f1);
            if (mf.poly_kind) {
                PolyMatrix A = mf.polynomial;
                std::vector<std::vector<int>> rsets, csets;
                detail::subsets(A.rows, arg_i, rsets);
                detail::subsets(A.cols, arg_i, csets);
                for (const auto& rs : rsets)
                    for (const auto& cs : csets)
                        std::cout << to_string(poly_det(poly_submatrix(A, rs, cs))) << "\n";
            } else {
                std::cout << "ideal: " << to_string(minors_ideal(mf.constant, arg_i)) << "\n";
            }
        } else if (*cmd_rank) {
            MatrixFile mf = load_matrix(f1);
            if (mf.poly_kind)
                std::cout << "rank: " << poly_rank_ring(mf.polynomial) << "\n";
            else
                std::cout << "rank: " << determinantal_rank(mf.constant) << "\n";
        } else if (*cmd_for) {
            MatrixFile mf = load_matrix(f1);
            ConvCode code = make_code(mf.ring(), mf.as_poly());
            std::vector<FirstOrderRep> reps;
            for (const PolyMatrix& Gj : code.component_encoders)
                reps.push_back(build_for_field(Gj));
            FirstOrderRep rep = glue_for(reps, code.ring);
            MinimalityReport m = check_minimality(rep);
            std::cout << "K:\n" << to_string(rep.K) << "L:\n" << to_string(rep.L) << "M:\n"
                      << to_string(rep.M);
            std::cout << "minimal: " << (m.minimal() ? "true" : "false") << "\n";
            std::cout << "kernel-equality: "
                      << (codes_equal(code_of_rep(rep), code) ? "confirmed" : "FAILED") << "\n";
        } else if (*cmd_iso) {
            StateSpaceSystem sys = for_to_iso(rep_from_files(f1, f2f, f3f));
            std::cout << "A:\n" << to_string(sys.A) << "B:\n" << to_string(sys.B) << "C:\n"
                      << to_string(sys.C) << "D:\n" << to_string(sys.D);
            std::cout << "permutation:";
            for (int p : sys.permutation) std::cout << " " << p + 1;
            std::cout << "\n";
        } else if (*cmd_canon) {
            FirstOrderRep rep = iso_to_for(sys_from_files(f1, f2f, f3f, f4f));
            std::cout << "K:\n" << to_string(rep.K) << "L:\n" << to_string(rep.L) << "M:\n"
                      << to_string(rep.M);
        } else if (*cmd_reach) {
            RMatrix A = load_matrix(f1).as_const(), B = load_matrix(f2f).as_const();
            StateSpaceSystem sys = StateSpaceSystem::make(
                A.ring, A, B, RMatrix(A.ring, 0, A.rows), RMatrix(A.ring, 0, B.cols));
            RMatrix Phi = controllability_matrix(sys);
            std::cout << "reachable: " << (is_reachable(sys) ? "true" : "false") << "; U_"
                      << sys.delta << "(Phi) = " << to_string(minors_ideal(Phi, sys.delta))
                      << "\n";
        } else if (*cmd_osys) {
            RMatrix A = load_matrix(f1).as_const(), C = load_matrix(f2f).as_const();
            StateSpaceSystem sys = StateSpaceSystem::make(
                A.ring, A, RMatrix(A.ring, A.rows, 0), C, RMatrix(A.ring, C.rows, 0));
            std::cout << "observable: " << (is_observable_system(sys) ? "true" : "false")
                      << "\n";
        } else if (*cmd_ocode) {
            ConvCode code = make_code(load_matrix(f1).ring(), load_matrix(f1).as_poly());
            std::cout << "observable: " << (is_observable_code(code) ? "true" : "false") << "\n";
        } else if (*cmd_syn) {
            ConvCode code = make_code(load_matrix(f1).ring(), load_matrix(f1).as_poly());
            PolyMatrix H = syndrome_former(code);
            std::cout << "H:\n" << to_string(H);
            std::cout << "check H*G = 0: confirmed\n";
        } else if (*cmd_kernel) {
            FirstOrderRep rep = rep_from_files(f1, f2f, f3f);
            PairKernelBasis kb = kernel_pair(PolyMatrix::pencil(rep.K, rep.L),
                                             PolyMatrix::from_const(rep.M), rep.delta);
            std::cout << "encoder:\n" << to_string(kb.basis);
            print_code_report(make_code(rep.ring, kb.basis));
        } else if (*cmd_encode) {
            ConvCode code = make_code(load_matrix(f1).ring(), load_matrix(f1).as_poly());
            PolyMatrix um = load_matrix(f2f).as_poly();
            if (um.cols != 1) throw ShapeMismatch("message must be a column vector");
            std::vector<Poly> u;
            for (int r = 0; r < um.rows; ++r) u.push_back(um.at(r, 0));
            std::vector<Poly> v = encode(code, u);
            std::cout << "codeword:\n";
            for (const Poly& p : v) std::cout << to_string(p) << "\n";
        } else if (*cmd_sim) {
            StateSpaceSystem sys = sys_from_files(f1, f2f, f3f, f4f);
            RMatrix in = load_matrix(f5f).as_const();
            if (in.cols != sys.k) throw ShapeMismatch("inputs file needs k columns");
            std::vector<std::vector<i64>> us;
            for (int r = 0; r < in.rows; ++r) {
                std::vector<i64> u(sys.k);
                for (int c = 0; c < sys.k; ++c) u[c] = in.at(r, c);
                us.push_back(u);
            }
            Trajectory tr = simulate(sys, us);
            for (std::size_t t = 0; t < tr.inputs.size(); ++t) {
                std::cout << "t=" << t << " x:";
                for (i64 v : tr.states[t]) std::cout << " " << v;
                std::cout << " y:";
                for (i64 v : tr.outputs[t]) std::cout << " " << v;
                std::cout << "\n";
            }
            std::cout << "final state:";
            for (i64 v : tr.states.back()) std::cout << " " << v;
            std::cout << "\nreturned: " << (tr.returned ? "true" : "false") << "\ncodeword:\n";
            for (const Poly& p : tr.codeword) std::cout << to_string(p) << "\n";
        } else if (*cmd_equal) {
            ConvCode a = make_code(load_matrix(f1).ring(), load_matrix(f1).as_poly());
            ConvCode b = make_code(load_matrix(f2f).ring(), load_matrix(f2f).as_poly());
            std::cout << "equal: " << (codes_equal(a, b) ? "true" : "false") << "\n";
        } else if (*cmd_paper) {
            worked_example::Options opt;
            opt.only_component = only_component;
            opt.corrupt_glued_b = corrupt_b;
            auto stages = worked_example::run(opt);
            std::string first_fail;
            for (const auto& s : stages) {
                std::cout << (s.pass ? "pass" : "FAIL") << ": " << s.name;
                if (!s.detail.empty()) std::cout << " (" << s.detail << ")";
                std::cout << "\n";
                if (!s.pass && first_fail.empty()) first_fail = s.name;
            }
            if (!first_fail.empty()) throw StageMismatch(first_fail);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
