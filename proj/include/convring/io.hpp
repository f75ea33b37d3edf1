#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "convring/poly.hpp"

namespace convring {

/**
 * Plain-text matrix file:
 *
 *   modulus 6
 *   kind poly        (or "const")
 *   rows 3
 *   cols 2
 *   3,1 5
 *   1,0,3 2,4
 *   5,4,5 3,3
 *
 * One line per row, one token per entry. A "poly" entry is a comma
 * separated ascending coefficient list (3,1 = 3 + z); a "const" entry
 * is a single integer. Entries are reduced mod the modulus on load.
 */
struct MatrixFile {
    bool poly_kind = false;
    RMatrix constant;
    PolyMatrix polynomial;

    const RingSpec& ring() const { return poly_kind ? polynomial.ring : constant.ring; }

    /// Always usable as polynomial data.
    PolyMatrix as_poly() const {
        return poly_kind ? polynomial : PolyMatrix::from_const(constant);
    }

    RMatrix as_const() const {
        if (!poly_kind) return constant;
        RMatrix A(polynomial.ring, polynomial.rows, polynomial.cols);
        for (int r = 0; r < polynomial.rows; ++r)
            for (int c = 0; c < polynomial.cols; ++c) {
                const Poly& p = polynomial.at(r, c);
                if (p.deg() > 0) throw ParseError("matrix is not constant");
                A.at(r, c) = p.coeff(0);
            }
        return A;
    }
};

inline MatrixFile parse_matrix(std::istream& in) {
    auto expect_kv = [&](const std::string& key) {
        std::string k;
        if (!(in >> k) || k != key) throw ParseError("expected '" + key + "' header");
    };
    i64 m;
    std::string kind;
    int rows, cols;
    expect_kv("modulus");
    if (!(in >> m)) throw ParseError("bad modulus");
    expect_kv("kind");
    if (!(in >> kind) || (kind != "const" && kind != "poly")) throw ParseError("bad kind");
    expect_kv("rows");
    if (!(in >> rows) || rows < 0) throw ParseError("bad rows");
    expect_kv("cols");
    if (!(in >> cols) || cols < 0) throw ParseError("bad cols");
    RingSpec ring = make_ring(m);
    MatrixFile f;
    f.poly_kind = kind == "poly";
    if (f.poly_kind)
        f.polynomial = PolyMatrix(ring, rows, cols);
    else
        f.constant = RMatrix(ring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("missing entry");
            std::vector<i64> coeffs;
            std::stringstream ss(tok);
            std::string piece;
            while (std::getline(ss, piece, ',')) {
                try {
                    coeffs.push_back(std::stoll(piece));
                } catch (...) {
                    throw ParseError("bad entry '" + tok + "'");
                }
            }
            if (coeffs.empty()) throw ParseError("empty entry");
            if (f.poly_kind) {
                f.polynomial.at(r, c) = Poly(ring, coeffs);
            } else {
                if (coeffs.size() != 1) throw ParseError("const entry with a coefficient list");
                f.constant.set(r, c, coeffs[0]);
            }
        }
    return f;
}

inline MatrixFile load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const RMatrix& A) {
    out << "modulus " << A.ring.modulus << "\nkind const\nrows " << A.rows << "\ncols " << A.cols
        << "\n";
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) out << (c ? " " : "") << A.at(r, c);
        out << "\n";
    }
}

inline void write_matrix(std::ostream& out, const PolyMatrix& G) {
    out << "modulus " << G.ring.modulus << "\nkind poly\nrows " << G.rows << "\ncols " << G.cols
        << "\n";
    for (int r = 0; r < G.rows; ++r) {
        for (int c = 0; c < G.cols; ++c) {
            if (c) out << " ";
            const Poly& p = G.at(r, c);
            if (p.is_zero()) {
                out << "0";
                continue;
            }
            for (std::size_t i = 0; i < p.c.size(); ++i) out << (i ? "," : "") << p.c[i];
        }
        out << "\n";
    }
}

// human-readable forms for reports

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.deg(); i >= 0; --i) {
        i64 a = p.coeff(i);
        if (!a) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || a != 1) s += std::to_string(a);
        if (i >= 1) s += "z";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

inline std::string to_string(const RMatrix& A) {
    std::string s;
    for (int r = 0; r < A.rows; ++r) {
        s += "[";
        for (int c = 0; c < A.cols; ++c) s += (c ? " " : "") + std::to_string(A.at(r, c));
        s += "]\n";
    }
    return s;
}

inline std::string to_string(const PolyMatrix& G) {
    std::string s;
    for (int r = 0; r < G.rows; ++r) {
        s += "[";
        for (int c = 0; c < G.cols; ++c) s += (c ? "  " : "") + to_string(G.at(r, c));
        s += "]\n";
    }
    return s;
}

inline std::string to_string(const RIdeal& I) { return "<" + std::to_string(I.generator) + ">"; }

}  // namespace convring
