// Dense exact linear algebra over a prime field F_p.
//
// Entries are stored reduced to [0, p).  Elimination works in 64-bit
// accumulators and reduces lazily: one fused multiply-add per entry per
// pivot, with (p-1)^2 < 2^34 there is no overflow for any matrix size
// this library meets.
//
// Reduced row echelon form is the canonical representative for every
// subspace, so subspace equality is entry-wise equality of bases.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace findim {

struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool ok, const std::string& msg) {
    if (!ok) throw MathError(msg);
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace fp {

using Elt = std::uint32_t;

inline Elt add(Elt a, Elt b, Elt p) {
    Elt s = a + b;
    return s >= p ? s - p : s;
}
inline Elt sub(Elt a, Elt b, Elt p) { return a >= b ? a - b : a + p - b; }
inline Elt neg(Elt a, Elt p) { return a == 0 ? 0 : p - a; }
inline Elt mul(Elt a, Elt b, Elt p) {
    return static_cast<Elt>((std::uint64_t)a * b % p);
}
inline Elt reduce_int(long long v, Elt p) {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return (Elt)r;
}
inline Elt pow(Elt a, std::uint64_t e, Elt p) {
    Elt r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline Elt inv(Elt a, Elt p) {
    check(a % p != 0, "fp::inv of zero");
    return pow(a % p, p - 2, p);
}

// Row-major dense matrix over F_p.
struct Mat {
    Elt p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<Elt> a;

    Mat() = default;
    Mat(Elt p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    Elt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elt at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Mat identity(Elt p, std::size_t n) {
        Mat m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool is_zero() const {
        for (Elt x : a)
            if (x) return false;
        return true;
    }
};

inline Mat transpose(const Mat& m) {
    Mat t(m.p, m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

inline Mat mul(const Mat& x, const Mat& y) {
    check(x.p == y.p && x.cols == y.rows, "fp::mul shape/prime mismatch");
    Mat z(x.p, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        std::vector<std::uint64_t> acc(y.cols, 0);
        for (std::size_t k = 0; k < x.cols; ++k) {
            std::uint64_t xv = x.at(i, k);
            if (!xv) continue;
            const Elt* yr = &y.a[k * y.cols];
            for (std::size_t j = 0; j < y.cols; ++j) acc[j] += xv * yr[j];
            if ((k & 1023) == 1023)
                for (auto& v : acc) v %= x.p;
        }
        for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) = (Elt)(acc[j] % x.p);
    }
    return z;
}

inline Mat add(const Mat& x, const Mat& y) {
    check(x.p == y.p && x.rows == y.rows && x.cols == y.cols, "fp::add shape mismatch");
    Mat z(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = add(x.a[i], y.a[i], x.p);
    return z;
}

inline Mat sub(const Mat& x, const Mat& y) {
    check(x.p == y.p && x.rows == y.rows && x.cols == y.cols, "fp::sub shape mismatch");
    Mat z(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = sub(x.a[i], y.a[i], x.p);
    return z;
}

inline Mat scale(const Mat& x, Elt c) {
    Mat z(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = mul(x.a[i], c, x.p);
    return z;
}

inline Mat hstack(const Mat& x, const Mat& y) {
    check(x.p == y.p && x.rows == y.rows, "fp::hstack mismatch");
    Mat z(x.p, x.rows, x.cols + y.cols);
    for (std::size_t r = 0; r < x.rows; ++r) {
        for (std::size_t c = 0; c < x.cols; ++c) z.at(r, c) = x.at(r, c);
        for (std::size_t c = 0; c < y.cols; ++c) z.at(r, x.cols + c) = y.at(r, c);
    }
    return z;
}

inline Mat vstack(const Mat& x, const Mat& y) {
    check(x.p == y.p && x.cols == y.cols, "fp::vstack mismatch");
    Mat z(x.p, x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + (std::ptrdiff_t)x.a.size());
    return z;
}

struct Rref {
    Mat mat;                      // the reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per surviving row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan with lazy reduction; deterministic (first nonzero pivot).
inline Rref rref(const Mat& m) {
    const Elt p = m.p;
    const std::size_t R = m.rows, C = m.cols;
    std::vector<std::uint64_t> w(m.a.begin(), m.a.end());
    auto row = [&](std::size_t r) { return &w[r * C]; };

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i) {
            row(i)[c] %= p;
            if (row(i)[c]) { pr = i; break; }
        }
        if (pr == R) continue;
        if (pr != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(row(pr)[j], row(r)[j]);
        // normalize pivot row
        std::uint64_t iv = inv((Elt)(row(r)[c] % p), p);
        for (std::size_t j = c; j < C; ++j) row(r)[j] = row(r)[j] % p * iv % p;
        // eliminate everywhere else; no per-entry reduction needed:
        // addends are < p^2 < 2^34 and a row sees at most rank of them
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            std::uint64_t f = row(i)[c] % p;
            if (!f) { row(i)[c] = 0; continue; }
            std::uint64_t g = p - f;
            const std::uint64_t* src = row(r);
            std::uint64_t* dst = row(i);
            for (std::size_t j = c; j < C; ++j) dst[j] += g * src[j];
            dst[c] = 0;
        }
        pivots.push_back(c);
        ++r;
    }
    Rref out;
    out.pivots = pivots;
    out.mat = Mat(p, pivots.size(), C);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < C; ++j) out.mat.at(i, j) = (Elt)(w[i * C + j] % p);
    return out;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank(); }

// Canonical basis (rows, themselves in rref) of { x : m x = 0 }.
inline Mat kernel(const Mat& m) {
    Rref r = rref(m);
    const std::size_t C = m.cols;
    std::vector<char> is_pivot(C, 0);
    for (std::size_t c : r.pivots) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.p, free_cols.size(), C);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        k.at(i, fc) = 1;
        for (std::size_t t = 0; t < r.pivots.size(); ++t)
            k.at(i, r.pivots[t]) = neg(r.mat.at(t, fc), m.p);
    }
    return rref(k).mat;  // canonical ordering
}

// Affine solution space of a x = b (b may have several columns).
struct LinSolve {
    bool consistent = false;
    Mat particular;   // a.cols x b.cols, valid when consistent
    Mat kernel_rows;  // canonical basis of ker a, rows
};

inline LinSolve solve(const Mat& a, const Mat& b) {
    check(a.p == b.p && a.rows == b.rows, "fp::solve shape mismatch");
    Rref r = rref(hstack(a, b));
    LinSolve out;
    for (std::size_t c : r.pivots)
        if (c >= a.cols) return out;  // pivot in the rhs block: inconsistent
    out.consistent = true;
    out.particular = Mat(a.p, a.cols, b.cols);
    for (std::size_t t = 0; t < r.pivots.size(); ++t)
        for (std::size_t j = 0; j < b.cols; ++j)
            out.particular.at(r.pivots[t], j) = r.mat.at(t, a.cols + j);
    out.kernel_rows = kernel(a);
    return out;
}

inline std::optional<Mat> inverse(const Mat& m) {
    check(m.rows == m.cols, "fp::inverse needs square");
    Rref r = rref(hstack(m, Mat::identity(m.p, m.rows)));
    if (r.rank() < m.rows) return std::nullopt;
    Mat inv(m.p, m.rows, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) inv.at(i, j) = r.mat.at(i, m.cols + j);
    return inv;
}

// Row space in canonical (rref) form.  The canonical basis makes
// equality of subspaces plain entry-wise equality.
struct Subspace {
    Elt p = 2;
    std::size_t ambient = 0;
    Mat basis;  // rref, full row rank

    Subspace() = default;
    Subspace(Elt p_, std::size_t amb) : p(p_), ambient(amb), basis(p_, 0, amb) {}

    static Subspace from_rows(const Mat& rows) {
        Subspace s;
        s.p = rows.p;
        s.ambient = rows.cols;
        s.basis = rref(rows).mat;
        return s;
    }
    static Subspace full(Elt p, std::size_t amb) {
        return from_rows(Mat::identity(p, amb));
    }

    std::size_t dim() const { return basis.rows; }

    // residue of v after reduction against the basis (zero iff contained)
    std::vector<Elt> reduce(const std::vector<Elt>& v) const {
        check(v.size() == ambient, "Subspace::reduce dimension mismatch");
        std::vector<Elt> w(v);
        Rref rr;  // basis is already rref; find pivots on the fly
        for (std::size_t r = 0; r < basis.rows; ++r) {
            std::size_t c = 0;
            while (c < ambient && basis.at(r, c) == 0) ++c;
            if (c == ambient) continue;
            Elt f = w[c];
            if (!f) continue;
            for (std::size_t j = c; j < ambient; ++j)
                w[j] = sub(w[j], mul(f, basis.at(r, j), p), p);
        }
        return w;
    }

    bool contains(const std::vector<Elt>& v) const {
        auto w = reduce(v);
        for (Elt x : w)
            if (x) return false;
        return true;
    }
    bool contains_rows(const Mat& rows) const {
        for (std::size_t r = 0; r < rows.rows; ++r) {
            std::vector<Elt> v(rows.a.begin() + (std::ptrdiff_t)(r * rows.cols),
                               rows.a.begin() + (std::ptrdiff_t)((r + 1) * rows.cols));
            if (!contains(v)) return false;
        }
        return true;
    }
    bool contains(const Subspace& o) const { return contains_rows(o.basis); }

    Subspace sum(const Subspace& o) const {
        check(p == o.p && ambient == o.ambient, "Subspace::sum mismatch");
        if (o.dim() == 0) return *this;
        if (dim() == 0) return o;
        return from_rows(vstack(basis, o.basis));
    }
    Subspace sum_rows(const Mat& rows) const {
        if (rows.rows == 0) return *this;
        if (dim() == 0) return from_rows(rows);
        return from_rows(vstack(basis, rows));
    }

    bool operator==(const Subspace& o) const {
        return p == o.p && ambient == o.ambient && basis == o.basis;
    }
};

// rows(v) as a 1 x n matrix
inline Mat row_vec(Elt p, const std::vector<Elt>& v) {
    Mat m(p, 1, v.size());
    m.a = v;
    return m;
}
inline Mat col_vec(Elt p, const std::vector<Elt>& v) {
    Mat m(p, v.size(), 1);
    m.a = v;
    return m;
}
inline std::vector<Elt> mat_col(const Mat& m, std::size_t c) {
    std::vector<Elt> v(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
    return v;
}
inline std::vector<Elt> mat_row(const Mat& m, std::size_t r) {
    return std::vector<Elt>(m.a.begin() + (std::ptrdiff_t)(r * m.cols),
                            m.a.begin() + (std::ptrdiff_t)((r + 1) * m.cols));
}
inline std::vector<Elt> apply(const Mat& m, const std::vector<Elt>& v) {
    check(m.cols == v.size(), "fp::apply shape mismatch");
    std::vector<Elt> out(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += (std::uint64_t)m.at(r, c) * v[c];
        out[r] = (Elt)(acc % m.p);
    }
    return out;
}

}  // namespace fp
}  // namespace findim
