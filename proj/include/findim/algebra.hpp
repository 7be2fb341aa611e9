// Finite-dimensional associative F_p-algebras by structure constants,
// with a designated complete system of orthogonal idempotents.
//
// Everything downstream (modules, syzygies, the Igusa-Todorov engine)
// works through this representation; bound quiver algebras are built
// from presentations by linear algebra in the truncated path space.
//
// The radical comes from the trace form, which identifies the Jacobson
// radical whenever p > dim; that inequality is a hard precondition and
// the nilpotency of the result is re-checked on construction.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "findim/fp.hpp"
#include "findim/presentation.hpp"

namespace findim {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Algebra {
    fp::Elt p = 65521;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    // left_mult[i] * coords(y) = coords(b_i y); column j is b_i b_j
    std::vector<fp::Mat> left_mult;
    std::vector<fp::Elt> unit;
    std::vector<std::vector<fp::Elt>> idempotents;
    fp::Subspace rad;
    // multiplicative generating set beyond unit and idempotents;
    // intertwiner systems only impose these
    std::vector<std::vector<fp::Elt>> generators;
    std::optional<QuiverPresentation> quiver;
    // when built from a quiver: the representative path of each basis
    // residue (arrows, leftmost applied last) and its source vertex
    std::vector<Path> basis_paths;
    std::vector<int> basis_src;
    std::uint64_t content_hash = 0;

    std::vector<fp::Elt> mul_vec(const std::vector<fp::Elt>& x,
                                 const std::vector<fp::Elt>& y) const {
        std::vector<fp::Elt> out(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (std::size_t k = 0; k < dim; ++k) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < dim; ++j)
                    acc += (std::uint64_t)left_mult[i].at(k, j) * y[j];
                out[k] = fp::add(out[k], fp::mul(x[i], (fp::Elt)(acc % p), p), p);
            }
        }
        return out;
    }

    // matrix of v -> x v
    fp::Mat left_mult_of(const std::vector<fp::Elt>& x) const {
        fp::Mat m(p, dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (std::size_t t = 0; t < dim * dim; ++t)
                m.a[t] = fp::add(m.a[t], fp::mul(x[i], left_mult[i].a[t], p), p);
        }
        return m;
    }

    // matrix of v -> v y
    fp::Mat right_mult_of(const std::vector<fp::Elt>& y) const {
        fp::Mat m(p, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            auto col = fp::apply(left_mult[j], y);
            for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    std::vector<fp::Elt> basis_vec(std::size_t i) const {
        std::vector<fp::Elt> v(dim, 0);
        v[i] = 1;
        return v;
    }
};

struct AlgebraCheck {
    bool associative = true;
    bool unital = true;
    bool idempotents_ok = true;
    bool prime_ok = true;
    bool p_exceeds_dim = true;
    std::vector<std::string> failures;

    bool ok() const {
        return associative && unital && idempotents_ok && prime_ok && p_exceeds_dim;
    }
};

inline AlgebraCheck check_algebra(const Algebra& a) {
    AlgebraCheck r;
    if (!is_prime_u32(a.p) || a.p >= 65536) {
        r.prime_ok = false;
        r.failures.push_back("p is not a prime below 2^16");
    }
    if (a.p <= a.dim) {
        r.p_exceeds_dim = false;
        r.failures.push_back("p must exceed dim (trace-form radical criterion)");
    }
    // unit acts as identity on both sides
    fp::Mat lu = a.left_mult_of(a.unit), ru = a.right_mult_of(a.unit);
    fp::Mat id = fp::Mat::identity(a.p, a.dim);
    if (!(lu == id) || !(ru == id)) {
        r.unital = false;
        r.failures.push_back("unit does not act as identity");
    }
    // associativity on all basis triples: L_i L_j = L_{b_i b_j}
    for (std::size_t i = 0; i < a.dim && r.associative; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            fp::Mat lhs = fp::mul(a.left_mult[i], a.left_mult[j]);
            fp::Mat rhs(a.p, a.dim, a.dim);
            auto prod = fp::mat_col(a.left_mult[i], j);  // b_i b_j
            for (std::size_t k = 0; k < a.dim; ++k) {
                if (!prod[k]) continue;
                for (std::size_t t = 0; t < a.dim * a.dim; ++t)
                    rhs.a[t] = fp::add(rhs.a[t], fp::mul(prod[k], a.left_mult[k].a[t], a.p), a.p);
            }
            if (!(lhs == rhs)) {
                r.associative = false;
                r.failures.push_back("associativity fails at basis pair (" +
                                     a.basis_names[i] + ", " + a.basis_names[j] + ")");
                break;
            }
        }
    // idempotent system
    std::vector<fp::Elt> sum(a.dim, 0);
    for (std::size_t i = 0; i < a.idempotents.size() && r.idempotents_ok; ++i) {
        for (std::size_t j = 0; j < a.idempotents.size(); ++j) {
            auto prod = a.mul_vec(a.idempotents[i], a.idempotents[j]);
            auto expect = (i == j) ? a.idempotents[i] : std::vector<fp::Elt>(a.dim, 0);
            if (prod != expect) {
                r.idempotents_ok = false;
                r.failures.push_back("idempotents " + std::to_string(i) + "," +
                                     std::to_string(j) + " not orthogonal idempotent");
                break;
            }
        }
        for (std::size_t k = 0; k < a.dim; ++k)
            sum[k] = fp::add(sum[k], a.idempotents[i][k], a.p);
    }
    if (r.idempotents_ok && sum != a.unit) {
        r.idempotents_ok = false;
        r.failures.push_back("idempotents do not sum to the unit");
    }
    return r;
}

namespace detail {

inline fp::Subspace radical_by_trace(fp::Elt p, std::size_t dim,
                                     const std::vector<fp::Mat>& L) {
    // x in rad  iff  trace(L_{x b_j}) = 0 for all j
    std::vector<fp::Elt> tau(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        fp::Elt t = 0;
        for (std::size_t s = 0; s < dim; ++s) t = fp::add(t, L[k].at(s, s), p);
        tau[k] = t;
    }
    fp::Mat cond(p, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            // coefficient of x_i in trace(L_{x b_j}): sum_k tau_k (b_i b_j)_k
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < dim; ++k)
                acc += (std::uint64_t)tau[k] * L[i].at(k, j);
            cond.at(j, i) = (fp::Elt)(acc % p);
        }
    return fp::Subspace::from_rows(fp::kernel(cond));
}

inline std::uint64_t hash_algebra(fp::Elt p, const std::vector<fp::Mat>& L,
                                  const std::vector<fp::Elt>& unit) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(p);
    mix(L.size());
    for (auto& m : L)
        for (auto x : m.a) mix(x);
    for (auto x : unit) mix(x);
    return h;
}

}  // namespace detail

// span closure under multiplication; returns the generated subalgebra
inline fp::Subspace close_under_mul(const Algebra& a, fp::Subspace s) {
    while (true) {
        fp::Mat extra(a.p, 0, a.dim);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) {
                auto prod = a.mul_vec(fp::mat_row(s.basis, i), fp::mat_row(s.basis, j));
                if (!s.contains(prod)) extra = fp::vstack(extra, fp::row_vec(a.p, prod));
            }
        if (extra.rows == 0) return s;
        s = s.sum_rows(extra);
    }
}

// Validates, computes the radical (and verifies its nilpotency), picks a
// multiplicative generating set.  Every algebra in the library passes
// through here.
inline AlgebraPtr make_algebra(fp::Elt p, std::vector<std::string> names,
                               std::vector<fp::Mat> left_mult,
                               std::vector<fp::Elt> unit,
                               std::vector<std::vector<fp::Elt>> idempotents,
                               std::optional<QuiverPresentation> quiver = std::nullopt,
                               std::vector<Path> basis_paths = {},
                               std::vector<int> basis_src = {}) {
    auto a = std::make_shared<Algebra>();
    a->p = p;
    a->dim = names.size();
    a->basis_names = std::move(names);
    a->left_mult = std::move(left_mult);
    a->unit = std::move(unit);
    a->idempotents = std::move(idempotents);
    a->quiver = std::move(quiver);
    a->basis_paths = std::move(basis_paths);
    a->basis_src = std::move(basis_src);

    AlgebraCheck chk = check_algebra(*a);
    if (!chk.ok()) {
        std::string msg = "invalid algebra:";
        for (auto& f : chk.failures) msg += " " + f + ";";
        throw MathError(msg);
    }

    a->rad = detail::radical_by_trace(p, a->dim, a->left_mult);
    // nilpotency: rad^k must vanish for some k <= dim
    {
        fp::Subspace powr = a->rad;
        std::size_t guard = a->dim + 1;
        while (powr.dim() > 0 && guard--) {
            fp::Mat rows(p, 0, a->dim);
            for (std::size_t i = 0; i < powr.dim(); ++i)
                for (std::size_t j = 0; j < a->rad.dim(); ++j) {
                    auto prod = a->mul_vec(fp::mat_row(powr.basis, i),
                                           fp::mat_row(a->rad.basis, j));
                    rows = fp::vstack(rows, fp::row_vec(p, prod));
                }
            fp::Subspace nxt = fp::Subspace::from_rows(rows);
            if (nxt.dim() >= powr.dim() && nxt == powr)
                throw MathError("radical candidate is not nilpotent (p too small or corrupt algebra)");
            powr = nxt;
        }
        check(powr.dim() == 0, "radical nilpotency verification did not terminate");
    }

    // generating set: arrows for quiver algebras, greedy span closure otherwise
    if (a->quiver) {
        const auto& q = *a->quiver;
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
            // the arrow's residue: with admissible relations it is a basis path
            std::string an = q.arrows[ai].name;
            bool found = false;
            for (std::size_t bi = 0; bi < a->dim; ++bi)
                if (a->basis_names[bi] == an) {
                    a->generators.push_back(a->basis_vec(bi));
                    found = true;
                    break;
                }
            check(found, "arrow residue missing from basis: " + an);
        }
    } else {
        fp::Mat seed(p, 0, a->dim);
        seed = fp::vstack(seed, fp::row_vec(p, a->unit));
        for (auto& e : a->idempotents) seed = fp::vstack(seed, fp::row_vec(p, e));
        fp::Subspace span = close_under_mul(*a, fp::Subspace::from_rows(seed));
        for (std::size_t i = 0; i < a->dim && span.dim() < a->dim; ++i) {
            auto v = a->basis_vec(i);
            if (span.contains(v)) continue;
            a->generators.push_back(v);
            span = close_under_mul(*a, span.sum_rows(fp::row_vec(p, v)));
        }
        check(span.dim() == a->dim, "generating-set closure failed");
    }

    a->content_hash = detail::hash_algebra(p, a->left_mult, a->unit);
    return a;
}

inline bool same_algebra(const Algebra& x, const Algebra& y) {
    return &x == &y || (x.content_hash == y.content_hash && x.dim == y.dim && x.p == y.p);
}

inline fp::Subspace radical(const Algebra& a) { return a.rad; }

inline AlgebraPtr opposite(const AlgebraPtr& a) {
    std::vector<fp::Mat> L(a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) L[i] = a->right_mult_of(a->basis_vec(i));
    return make_algebra(a->p, a->basis_names, std::move(L), a->unit, a->idempotents);
}

// quotient by a two-sided ideal; returns the algebra, the projection
// (q x n) and a linear section (n x q)
struct QuotientAlgebra {
    AlgebraPtr alg;
    fp::Mat proj;
    fp::Mat lift;
};

inline QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const fp::Subspace& ideal) {
    // idealness first, for a clear error
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t r = 0; r < ideal.dim(); ++r) {
            auto row = fp::mat_row(ideal.basis, r);
            check(ideal.contains(a->mul_vec(a->basis_vec(i), row)),
                  "quotient_algebra: not a left ideal");
            check(ideal.contains(a->mul_vec(row, a->basis_vec(i))),
                  "quotient_algebra: not a right ideal");
        }
    const std::size_t n = a->dim;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        std::size_t c = 0;
        while (c < n && ideal.basis.at(r, c) == 0) ++c;
        is_pivot[c] = 1;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const std::size_t q = free_cols.size();

    fp::Mat proj(a->p, q, n), lift(a->p, n, q);
    for (std::size_t c = 0; c < n; ++c) {
        auto red = ideal.reduce(a->basis_vec(c));
        for (std::size_t t = 0; t < q; ++t) proj.at(t, c) = red[free_cols[t]];
    }
    for (std::size_t t = 0; t < q; ++t) lift.at(free_cols[t], t) = 1;

    std::vector<fp::Mat> L(q, fp::Mat(a->p, q, q));
    for (std::size_t i = 0; i < q; ++i) {
        auto bi = fp::mat_col(lift, i);
        for (std::size_t j = 0; j < q; ++j) {
            auto bj = fp::mat_col(lift, j);
            auto prod = fp::apply(proj, a->mul_vec(bi, bj));
            for (std::size_t k = 0; k < q; ++k) L[i].at(k, j) = prod[k];
        }
    }
    std::vector<std::string> names(q);
    for (std::size_t t = 0; t < q; ++t) names[t] = a->basis_names[free_cols[t]] + "~";
    auto unit = fp::apply(proj, a->unit);
    std::vector<std::vector<fp::Elt>> idem;
    for (auto& e : a->idempotents) {
        auto img = fp::apply(proj, e);
        bool zero = true;
        for (auto x : img)
            if (x) zero = false;
        if (!zero) idem.push_back(img);
    }
    QuotientAlgebra out;
    out.alg = make_algebra(a->p, std::move(names), std::move(L), std::move(unit), std::move(idem));
    out.proj = proj;
    out.lift = lift;
    return out;
}

// ------------------------------------------------------ bound quiver algebras

struct QuiverBuildReport {
    std::size_t paths_enumerated = 0;       // length < m
    std::size_t dim = 0;
    std::size_t len_m1_total = 0;           // paths of length m-1
    std::size_t len_m1_in_ideal = 0;        // of those, inside the relation ideal
    // exact statement about kQ/(I + R^m) vs kQ/I at the boundary degree:
    // some path of length m survives the relation ideal alone
    bool truncation_active = false;
};

namespace detail {

struct EnumPath {
    int src, tgt;
    Path arr;  // leftmost applied last
};

// all paths of length < bound, ordered by (length, lexicographic arrows)
inline std::vector<EnumPath> enumerate_paths(const QuiverPresentation& q, int bound,
                                             std::size_t limit = 200000) {
    std::vector<EnumPath> all;
    std::vector<EnumPath> level;
    for (int v = 0; v < (int)q.vertices.size(); ++v)
        level.push_back({v, v, {}});
    all = level;
    for (int len = 1; len < bound; ++len) {
        std::vector<EnumPath> next;
        for (auto& pe : level)
            for (int ai = 0; ai < (int)q.arrows.size(); ++ai)
                if (q.arrows[(std::size_t)ai].src == pe.tgt) {
                    EnumPath np;
                    np.src = pe.src;
                    np.tgt = q.arrows[(std::size_t)ai].tgt;
                    np.arr = pe.arr;
                    np.arr.insert(np.arr.begin(), ai);
                    next.push_back(std::move(np));
                }
        std::sort(next.begin(), next.end(),
                  [](const EnumPath& a, const EnumPath& b) { return a.arr < b.arr; });
        check(all.size() + next.size() <= limit, "path space too large");
        for (auto& pe : next) all.push_back(pe);
        level = std::move(next);
        if (level.empty()) break;
    }
    return all;
}

// relation ideal span inside the truncated path space
inline fp::Subspace relation_ideal(const QuiverPresentation& q,
                                   const std::vector<EnumPath>& paths,
                                   int max_len) {
    std::map<std::pair<int, Path>, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index[{paths[i].src, paths[i].arr}] = i;
    const std::size_t P = paths.size();

    auto path_of_rel = [&](const Path& arrs) -> std::size_t {
        int src = q.path_source(arrs);
        auto it = index.find({src, arrs});
        check(it != index.end(), "relation path missing from enumeration");
        return it->second;
    };

    std::vector<std::vector<fp::Elt>> work;
    for (auto& rel : q.relations) {
        std::vector<fp::Elt> v(P, 0);
        for (auto& [pth, coeff] : rel) v[path_of_rel(pth)] = coeff;
        work.push_back(std::move(v));
    }

    fp::Subspace span(q.p, P);
    std::size_t head = 0;
    for (auto& v : work)
        if (!span.contains(v)) span = span.sum_rows(fp::row_vec(q.p, v));
    // saturate under arrow multiplication on both sides
    while (head < work.size()) {
        auto v = work[head++];
        for (int ai = 0; ai < (int)q.arrows.size(); ++ai) {
            std::vector<fp::Elt> lv(P, 0), rv(P, 0);
            bool has_l = false, has_r = false;
            for (std::size_t t = 0; t < P; ++t) {
                if (!v[t]) continue;
                const EnumPath& pe = paths[t];
                // left multiply: arrow applied after the path
                if (q.arrows[(std::size_t)ai].src == pe.tgt &&
                    (int)pe.arr.size() + 1 < max_len) {
                    Path na = pe.arr;
                    na.insert(na.begin(), ai);
                    auto it = index.find({pe.src, na});
                    check(it != index.end(), "extension path missing");
                    lv[it->second] = fp::add(lv[it->second], v[t], q.p);
                    has_l = true;
                }
                // right multiply: arrow applied before the path
                if (q.arrows[(std::size_t)ai].tgt == pe.src &&
                    (int)pe.arr.size() + 1 < max_len) {
                    Path na = pe.arr;
                    na.push_back(ai);
                    auto it = index.find({q.arrows[(std::size_t)ai].src, na});
                    check(it != index.end(), "extension path missing");
                    rv[it->second] = fp::add(rv[it->second], v[t], q.p);
                    has_r = true;
                }
            }
            if (has_l && !span.contains(lv)) {
                span = span.sum_rows(fp::row_vec(q.p, lv));
                work.push_back(lv);
            }
            if (has_r && !span.contains(rv)) {
                span = span.sum_rows(fp::row_vec(q.p, rv));
                work.push_back(rv);
            }
        }
    }
    return span;
}

}  // namespace detail

inline AlgebraPtr build_bound_quiver_algebra(const QuiverPresentation& q,
                                             QuiverBuildReport* report = nullptr,
                                             std::optional<fp::Elt> prime_override = std::nullopt) {
    QuiverPresentation pres = q;
    if (prime_override) pres.p = *prime_override;
    const fp::Elt p = pres.p;
    const int m = pres.nilpotency;

    auto paths = detail::enumerate_paths(pres, m);
    const std::size_t P = paths.size();
    fp::Subspace ideal = detail::relation_ideal(pres, paths, m);

    // basis of the quotient: residues of non-pivot paths
    std::vector<char> is_pivot(P, 0);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        std::size_t c = 0;
        while (c < P && ideal.basis.at(r, c) == 0) ++c;
        is_pivot[c] = 1;
    }
    std::vector<std::size_t> alive;
    for (std::size_t t = 0; t < P; ++t)
        if (!is_pivot[t]) alive.push_back(t);
    const std::size_t n = alive.size();
    check(n > 0, "bound quiver algebra collapsed to zero");
    if (p <= n)
        throw MathError("algebra dimension " + std::to_string(n) +
                        " is not below p = " + std::to_string(p));

    // vertex residues must survive (they always do with admissible relations)
    std::vector<std::size_t> vertex_basis(pres.vertices.size());
    {
        std::map<std::size_t, std::size_t> alive_index;
        for (std::size_t t = 0; t < n; ++t) alive_index[alive[t]] = t;
        for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
            // trivial paths are enumerated first, in vertex order
            auto it = alive_index.find(v);
            if (it == alive_index.end())
                throw MathError("inconsistent relations: vertex idempotent '" +
                                pres.vertices[v] + "' falls in the ideal");
            vertex_basis[v] = it->second;
        }
    }

    // reduce a path-space vector to quotient coordinates
    auto to_coords = [&](std::vector<fp::Elt> v) {
        v = ideal.reduce(v);
        std::vector<fp::Elt> c(n);
        for (std::size_t t = 0; t < n; ++t) c[t] = v[alive[t]];
        return c;
    };
    std::map<std::pair<int, Path>, std::size_t> index;
    for (std::size_t i = 0; i < P; ++i) index[{paths[i].src, paths[i].arr}] = i;

    std::vector<fp::Mat> L(n, fp::Mat(p, n, n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pi = paths[alive[i]];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& pj = paths[alive[j]];
            if (pi.src != pj.tgt) continue;                       // not composable
            if ((int)(pi.arr.size() + pj.arr.size()) >= m) continue;  // truncated
            Path comp = pi.arr;
            comp.insert(comp.end(), pj.arr.begin(), pj.arr.end());
            auto it = index.find({pj.src, comp});
            check(it != index.end(), "composite path missing from enumeration");
            std::vector<fp::Elt> v(P, 0);
            v[it->second] = 1;
            auto coords = to_coords(std::move(v));
            for (std::size_t k = 0; k < n; ++k) L[i].at(k, j) = coords[k];
        }
    }

    std::vector<std::string> names(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto& pe = paths[alive[t]];
        if (pe.arr.empty())
            names[t] = "e" + pres.vertices[(std::size_t)pe.src];
        else {
            std::string s;
            for (std::size_t i = 0; i < pe.arr.size(); ++i) {
                if (i) s += "*";
                s += pres.arrows[(std::size_t)pe.arr[i]].name;
            }
            names[t] = s;
        }
    }

    std::vector<fp::Elt> unit(n, 0);
    std::vector<std::vector<fp::Elt>> idem;
    for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
        std::vector<fp::Elt> e(n, 0);
        e[vertex_basis[v]] = 1;
        unit[vertex_basis[v]] = 1;
        idem.push_back(std::move(e));
    }
    std::vector<Path> bpaths(n);
    std::vector<int> bsrc(n);
    for (std::size_t t = 0; t < n; ++t) {
        bpaths[t] = paths[alive[t]].arr;
        bsrc[t] = paths[alive[t]].src;
    }

    if (report) {
        report->paths_enumerated = P;
        report->dim = n;
        for (std::size_t t = 0; t < P; ++t) {
            if ((int)paths[t].arr.size() != m - 1) continue;
            ++report->len_m1_total;
            if (is_pivot[t]) ++report->len_m1_in_ideal;
        }
        // decide truncation activity exactly at the boundary degree: does
        // any path of length m survive the relation ideal alone?
        auto ext_paths = detail::enumerate_paths(pres, m + 1);
        fp::Subspace ext_ideal = detail::relation_ideal(pres, ext_paths, m + 1);
        report->truncation_active = false;
        for (std::size_t t = 0; t < ext_paths.size(); ++t) {
            if ((int)ext_paths[t].arr.size() != m) continue;
            std::vector<fp::Elt> v(ext_paths.size(), 0);
            v[t] = 1;
            if (!ext_ideal.contains(v)) {
                report->truncation_active = true;
                break;
            }
        }
    }

    return make_algebra(p, std::move(names), std::move(L), std::move(unit),
                        std::move(idem), std::move(pres), std::move(bpaths),
                        std::move(bsrc));
}

}  // namespace findim
