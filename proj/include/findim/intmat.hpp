// Exact integer matrices (arbitrary precision) and the Smith normal form.
//
// Used for rank computations on finitely generated subgroups of the free
// abelian group on module iso-classes; arbitrary precision avoids any
// overflow question during the elimination.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "findim/fp.hpp"

namespace findim {

using BigInt = boost::multiprecision::cpp_int;

struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool operator==(const IntMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
    check(x.cols == y.rows, "IntMat mul shape mismatch");
    IntMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const BigInt& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

// Fraction-free determinant (Bareiss).
inline BigInt det(const IntMat& m) {
    check(m.rows == m.cols, "det needs square matrix");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && w.at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

inline bool is_unimodular(const IntMat& m) {
    if (m.rows != m.cols) return false;
    BigInt d = det(m);
    return d == 1 || d == -1;
}

struct Snf {
    IntMat d;                     // diagonal form, same shape as input
    IntMat u, v;                  // unimodular, u * input * v == d
    std::vector<BigInt> factors;  // nonzero invariant factors d_1 | d_2 | ...
    std::size_t rank = 0;
};

// Smith normal form by gcd-reduction pivoting.  The transforms are
// verified on every call: u m v == d and det u, det v == +-1.
inline Snf smith_normal_form(const IntMat& m) {
    Snf out;
    const std::size_t R = m.rows, C = m.cols;
    IntMat d = m, u = IntMat::identity(R), v = IntMat::identity(C);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < C; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < R; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < R; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < C; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < C; ++j) d.at(dst, j) += f * d.at(src, j);
        for (std::size_t j = 0; j < R; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < R; ++i) d.at(i, dst) += f * d.at(i, src);
        for (std::size_t i = 0; i < C; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < C; ++j) d.at(r, j) = -d.at(r, j);
        for (std::size_t j = 0; j < R; ++j) u.at(r, j) = -u.at(r, j);
    };

    std::size_t t = 0;
    while (t < R && t < C) {
        // locate a nonzero entry with minimal absolute value in the block
        std::size_t pr = R, pc = C;
        BigInt best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (d.at(i, j) == 0) continue;
                BigInt av = abs(d.at(i, j));
                if (pr == R || av < best) {
                    best = av;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == R) break;  // block is zero
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i)
            if (d.at(i, t) != 0) {
                addmul_row(i, t, -(d.at(i, t) / d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < C; ++j)
            if (d.at(t, j) != 0) {
                addmul_col(j, t, -(d.at(t, j) / d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
        if (!clean) continue;  // smaller remainders appeared, pick pivot again

        // pivot must divide every remaining entry; otherwise fold the
        // offending row in and reduce again
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    addmul_row(t, i, 1);
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }

    out.d = d;
    out.u = u;
    out.v = v;
    for (std::size_t i = 0; i < t; ++i) out.factors.push_back(d.at(i, i));
    out.rank = t;

    check(mul(mul(u, m), v) == d, "SNF transform identity violated");
    check(is_unimodular(u) && is_unimodular(v), "SNF transform not unimodular");
    for (std::size_t i = 0; i + 1 < out.factors.size(); ++i)
        check(out.factors[i + 1] % out.factors[i] == 0, "SNF divisibility chain violated");
    return out;
}

inline std::size_t int_rank(const IntMat& m) { return smith_normal_form(m).rank; }

}  // namespace findim
