// Left modules over an Algebra: action matrices per algebra basis
// element, homomorphism spaces, randomized isomorphism testing,
// projective covers, duality and injective envelopes.
//
// Conventions: module elements are column vectors; submodules are kept
// as canonical row-space bases (rref), with the inclusion matrix having
// the basis vectors as columns.

#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/rng.hpp"

namespace findim {

struct Module {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<fp::Mat> rho;  // action of each algebra basis element

    Module() = default;
    Module(AlgebraPtr a, std::size_t d)
        : alg(std::move(a)), dim(d), rho(alg->dim, fp::Mat(alg->p, d, d)) {}

    static Module zero(AlgebraPtr a) { return Module(std::move(a), 0); }
    bool is_zero() const { return dim == 0; }

    // action matrix of the algebra element with the given coordinates
    fp::Mat act(const std::vector<fp::Elt>& coeff) const {
        fp::Mat m(alg->p, dim, dim);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (!coeff[i]) continue;
            for (std::size_t t = 0; t < dim * dim; ++t)
                m.a[t] = fp::add(m.a[t], fp::mul(coeff[i], rho[i].a[t], alg->p), alg->p);
        }
        return m;
    }
};

inline void require_same_parent(const Module& m, const Module& n, const char* who) {
    check(same_algebra(*m.alg, *n.alg), std::string(who) + ": different parent algebras");
}

inline Module regular_module(const AlgebraPtr& a) {
    Module m(a, a->dim);
    m.rho = a->left_mult;
    return m;
}

inline Module direct_sum(const Module& x, const Module& y) {
    require_same_parent(x, y, "direct_sum");
    Module s(x.alg, x.dim + y.dim);
    for (std::size_t i = 0; i < x.alg->dim; ++i) {
        for (std::size_t r = 0; r < x.dim; ++r)
            for (std::size_t c = 0; c < x.dim; ++c) s.rho[i].at(r, c) = x.rho[i].at(r, c);
        for (std::size_t r = 0; r < y.dim; ++r)
            for (std::size_t c = 0; c < y.dim; ++c)
                s.rho[i].at(x.dim + r, x.dim + c) = y.rho[i].at(r, c);
    }
    return s;
}

inline Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
    Module s = Module::zero(a);
    for (auto& m : parts) s = direct_sum(s, m);
    return s;
}

struct ModuleCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// full structure-constant compatibility: rho(b_i) rho(b_j) = rho(b_i b_j)
inline ModuleCheck check_module(const Module& m) {
    ModuleCheck r;
    const Algebra& a = *m.alg;
    fp::Mat unit_act = m.act(a.unit);
    if (!(unit_act == fp::Mat::identity(a.p, m.dim))) {
        r.ok = false;
        r.failures.push_back("unit does not act as identity");
        return r;
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            fp::Mat lhs = fp::mul(m.rho[i], m.rho[j]);
            fp::Mat rhs = m.act(fp::mat_col(a.left_mult[i], j));
            if (!(lhs == rhs)) {
                r.ok = false;
                r.failures.push_back("action incompatible with structure constants at (" +
                                     a.basis_names[i] + ", " + a.basis_names[j] + ")");
                return r;
            }
        }
    return r;
}

// ------------------------------------------------------------- submodules

inline bool is_action_closed(const Module& m, const fp::Subspace& rows) {
    for (auto& g : m.alg->generators)
        for (std::size_t r = 0; r < rows.dim(); ++r) {
            auto v = fp::apply(m.act(g), fp::mat_row(rows.basis, r));
            if (!rows.contains(v)) return false;
        }
    return true;
}

// smallest submodule containing the given rows
inline fp::Subspace module_span(const Module& m, const fp::Mat& rows) {
    fp::Subspace s(m.alg->p, m.dim);
    std::vector<std::vector<fp::Elt>> work;
    for (std::size_t r = 0; r < rows.rows; ++r) {
        auto v = fp::mat_row(rows, r);
        if (!s.contains(v)) {
            s = s.sum_rows(fp::row_vec(m.alg->p, v));
            work.push_back(v);
        }
    }
    std::size_t head = 0;
    std::vector<fp::Mat> gen_act;
    for (auto& e : m.alg->idempotents) gen_act.push_back(m.act(e));
    for (auto& g : m.alg->generators) gen_act.push_back(m.act(g));
    while (head < work.size()) {
        auto v = work[head++];
        for (auto& ga : gen_act) {
            auto w = fp::apply(ga, v);
            if (!s.contains(w)) {
                s = s.sum_rows(fp::row_vec(m.alg->p, w));
                work.push_back(w);
            }
        }
    }
    return s;
}

struct SubmoduleResult {
    Module mod;
    fp::Mat inclusion;  // parent.dim x mod.dim, columns are the basis
};

inline SubmoduleResult submodule(const Module& m, const fp::Subspace& rows) {
    check(is_action_closed(m, rows), "submodule: span not closed under the action");
    SubmoduleResult out;
    out.inclusion = fp::transpose(rows.basis);
    out.mod = Module(m.alg, rows.dim());
    for (std::size_t i = 0; i < m.alg->dim; ++i) {
        // solve inclusion * X = rho_i * inclusion
        auto rhs = fp::mul(m.rho[i], out.inclusion);
        auto sol = fp::solve(out.inclusion, rhs);
        check(sol.consistent, "submodule: induced action failed");
        out.mod.rho[i] = sol.particular;
    }
    return out;
}

struct QuotientResult {
    Module mod;
    fp::Mat projection;  // mod.dim x parent.dim
};

inline QuotientResult quotient(const Module& m, const fp::Subspace& rows) {
    check(is_action_closed(m, rows), "quotient: span not closed under the action");
    const std::size_t n = m.dim;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t r = 0; r < rows.dim(); ++r) {
        std::size_t c = 0;
        while (c < n && rows.basis.at(r, c) == 0) ++c;
        is_pivot[c] = 1;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const std::size_t q = free_cols.size();

    QuotientResult out;
    out.projection = fp::Mat(m.alg->p, q, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<fp::Elt> e(n, 0);
        e[c] = 1;
        auto red = rows.reduce(e);
        for (std::size_t t = 0; t < q; ++t) out.projection.at(t, c) = red[free_cols[t]];
    }
    fp::Mat lift(m.alg->p, n, q);
    for (std::size_t t = 0; t < q; ++t) lift.at(free_cols[t], t) = 1;
    out.mod = Module(m.alg, q);
    for (std::size_t i = 0; i < m.alg->dim; ++i)
        out.mod.rho[i] = fp::mul(out.projection, fp::mul(m.rho[i], lift));
    return out;
}

// rad A applied to the whole module
inline fp::Subspace radical_submodule(const Module& m) {
    fp::Mat rows(m.alg->p, 0, m.dim);
    const fp::Subspace& rad = m.alg->rad;
    for (std::size_t r = 0; r < rad.dim(); ++r) {
        fp::Mat actm = m.act(fp::mat_row(rad.basis, r));
        rows = fp::vstack(rows, fp::transpose(actm));
    }
    return fp::Subspace::from_rows(rows);
}

// annihilator of rad A: the socle
inline fp::Subspace socle(const Module& m) {
    const fp::Subspace& rad = m.alg->rad;
    if (rad.dim() == 0) return fp::Subspace::full(m.alg->p, m.dim);
    fp::Mat stacked(m.alg->p, 0, m.dim);
    for (std::size_t r = 0; r < rad.dim(); ++r)
        stacked = fp::vstack(stacked, m.act(fp::mat_row(rad.basis, r)));
    return fp::Subspace::from_rows(fp::kernel(stacked));
}

// ------------------------------------------------------------ hom spaces

inline bool is_hom(const Module& m, const Module& n, const fp::Mat& h) {
    if (h.rows != n.dim || h.cols != m.dim) return false;
    for (std::size_t i = 0; i < m.alg->dim; ++i)
        if (!(fp::mul(h, m.rho[i]) == fp::mul(n.rho[i], h))) return false;
    return true;
}

// canonical basis of Hom_A(m, n); block-diagonalizes along the
// idempotent decomposition first, then imposes the generators
inline std::vector<fp::Mat> hom_space(const Module& m, const Module& n) {
    require_same_parent(m, n, "hom_space");
    const Algebra& A = *m.alg;
    const fp::Elt p = A.p;
    if (m.dim == 0 || n.dim == 0) return {};

    const std::size_t nb = A.idempotents.size();
    auto block_basis = [&](const Module& x) {
        std::vector<fp::Mat> blocks;
        for (std::size_t b = 0; b < nb; ++b) {
            fp::Mat img = x.act(A.idempotents[b]);
            blocks.push_back(fp::rref(fp::transpose(img)).mat);  // rows
        }
        return blocks;
    };
    auto bm = block_basis(m), bn = block_basis(n);
    std::vector<std::size_t> dm(nb), dn(nb), om(nb + 1, 0), on(nb + 1, 0);
    for (std::size_t b = 0; b < nb; ++b) {
        dm[b] = bm[b].rows;
        dn[b] = bn[b].rows;
        om[b + 1] = om[b] + dm[b];
        on[b + 1] = on[b] + dn[b];
    }
    check(om[nb] == m.dim && on[nb] == n.dim,
          "hom_space: idempotent blocks do not fill the module");

    fp::Mat Cm(p, m.dim, m.dim), Cn(p, n.dim, n.dim);
    for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t r = 0; r < dm[b]; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) Cm.at(c, om[b] + r) = bm[b].at(r, c);
        for (std::size_t r = 0; r < dn[b]; ++r)
            for (std::size_t c = 0; c < n.dim; ++c) Cn.at(c, on[b] + r) = bn[b].at(r, c);
    }
    auto Cm_inv = fp::inverse(Cm), Cn_inv = fp::inverse(Cn);
    check(Cm_inv && Cn_inv, "hom_space: block change of basis not invertible");

    // variable layout: blocks H_b of shape dn[b] x dm[b]
    std::vector<std::size_t> voff(nb + 1, 0);
    for (std::size_t b = 0; b < nb; ++b) voff[b + 1] = voff[b] + dn[b] * dm[b];
    const std::size_t V = voff[nb];
    if (V == 0) return {};
    auto var = [&](std::size_t b, std::size_t r, std::size_t c) {
        return voff[b] + r * dm[b] + c;
    };

    std::vector<fp::Elt> eqs;  // row-major, V columns
    std::size_t eq_count = 0;
    for (auto& g : A.generators) {
        fp::Mat Gm = fp::mul(*Cm_inv, fp::mul(m.act(g), Cm));
        fp::Mat Gn = fp::mul(*Cn_inv, fp::mul(n.act(g), Cn));
        for (std::size_t bi = 0; bi < nb; ++bi)
            for (std::size_t bj = 0; bj < nb; ++bj) {
                if (dn[bi] * dm[bj] == 0) continue;
                bool trivial = true;
                for (std::size_t s = 0; s < dm[bi] && trivial; ++s)
                    for (std::size_t c = 0; c < dm[bj]; ++c)
                        if (Gm.at(om[bi] + s, om[bj] + c)) { trivial = false; break; }
                for (std::size_t r = 0; r < dn[bi] && trivial; ++r)
                    for (std::size_t s = 0; s < dn[bj]; ++s)
                        if (Gn.at(on[bi] + r, on[bj] + s)) { trivial = false; break; }
                if (trivial) continue;
                // H_bi Gm[bi][bj] - Gn[bi][bj] H_bj = 0
                for (std::size_t r = 0; r < dn[bi]; ++r)
                    for (std::size_t c = 0; c < dm[bj]; ++c) {
                        std::vector<fp::Elt> row(V, 0);
                        for (std::size_t s = 0; s < dm[bi]; ++s) {
                            fp::Elt coef = Gm.at(om[bi] + s, om[bj] + c);
                            if (coef) row[var(bi, r, s)] =
                                fp::add(row[var(bi, r, s)], coef, p);
                        }
                        for (std::size_t s = 0; s < dn[bj]; ++s) {
                            fp::Elt coef = Gn.at(on[bi] + r, on[bj] + s);
                            if (coef) row[var(bj, s, c)] =
                                fp::sub(row[var(bj, s, c)], coef, p);
                        }
                        eqs.insert(eqs.end(), row.begin(), row.end());
                        ++eq_count;
                    }
            }
    }
    fp::Mat system(p, eq_count, V);
    system.a = std::move(eqs);
    fp::Mat null_rows = fp::kernel(system);

    // lift back to plain matrices and canonicalize by rref of the
    // row-major flattening in the original coordinates
    fp::Mat flat(p, null_rows.rows, n.dim * m.dim);
    for (std::size_t t = 0; t < null_rows.rows; ++t) {
        fp::Mat H(p, n.dim, m.dim);
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t r = 0; r < dn[b]; ++r)
                for (std::size_t c = 0; c < dm[b]; ++c)
                    H.at(on[b] + r, om[b] + c) = null_rows.at(t, var(b, r, c));
        fp::Mat h = fp::mul(Cn, fp::mul(H, *Cm_inv));
        for (std::size_t i = 0; i < h.a.size(); ++i) flat.at(t, i) = h.a[i];
    }
    fp::Mat canon = fp::rref(flat).mat;
    std::vector<fp::Mat> out;
    for (std::size_t t = 0; t < canon.rows; ++t) {
        fp::Mat h(p, n.dim, m.dim);
        for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] = canon.at(t, i);
        out.push_back(std::move(h));
    }
    return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) {
    return hom_space(m, n).size();
}

// ------------------------------------------------------- isomorphism test

struct IsoResult {
    enum class Status { Yes, No, Inconclusive } status = Status::Inconclusive;
    fp::Mat witness;          // n.dim x m.dim invertible hom when Yes
    std::string certificate;  // the separating invariant when No

    bool yes() const { return status == Status::Yes; }
    bool no() const { return status == Status::No; }
};

inline constexpr std::size_t kIsoTrials = 20;

inline IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
    require_same_parent(m, n, "is_isomorphic");
    IsoResult r;
    if (m.dim != n.dim) {
        r.status = IsoResult::Status::No;
        r.certificate = "dim " + std::to_string(m.dim) + " vs " + std::to_string(n.dim);
        return r;
    }
    if (m.dim == 0) {
        r.status = IsoResult::Status::Yes;
        r.witness = fp::Mat(m.alg->p, 0, 0);
        return r;
    }
    auto homs = hom_space(m, n);
    if (homs.empty()) {
        r.status = IsoResult::Status::No;
        r.certificate = "dim Hom(m,n) = 0";
        return r;
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < kIsoTrials; ++t) {
        fp::Mat h(m.alg->p, n.dim, m.dim);
        for (auto& b : homs) {
            fp::Elt c = rng.field_elt(m.alg->p);
            if (!c) continue;
            for (std::size_t i = 0; i < h.a.size(); ++i)
                h.a[i] = fp::add(h.a[i], fp::mul(c, b.a[i], m.alg->p), m.alg->p);
        }
        if (fp::rank(h) == m.dim) {
            r.status = IsoResult::Status::Yes;
            r.witness = std::move(h);
            return r;
        }
    }
    // separating hom-dimension invariants still yield a certified no
    std::size_t em = hom_space(m, m).size(), en = hom_space(n, n).size();
    if (em != en) {
        r.status = IsoResult::Status::No;
        r.certificate = "dim End " + std::to_string(em) + " vs " + std::to_string(en);
        return r;
    }
    std::size_t nm = hom_space(n, m).size();
    if (homs.size() != nm) {
        r.status = IsoResult::Status::No;
        r.certificate = "dim Hom(m,n) " + std::to_string(homs.size()) +
                        " vs dim Hom(n,m) " + std::to_string(nm);
        return r;
    }
    r.status = IsoResult::Status::Inconclusive;
    return r;
}

// ------------------------------------------------------ projective covers

// A e_i as a left module, with its inclusion into the regular module
struct ProjComponent {
    Module mod;
    fp::Mat inclusion;  // alg.dim x mod.dim
};

inline ProjComponent projective_indecomposable(const AlgebraPtr& a, std::size_t idem) {
    fp::Mat right = a->right_mult_of(a->idempotents[idem]);
    auto rows = fp::Subspace::from_rows(fp::transpose(right));
    auto sub = submodule(regular_module(a), rows);
    return {sub.mod, sub.inclusion};
}

struct CoverResult {
    Module proj;                    // direct sum of A e_{type_j}
    fp::Mat cover;                  // m.dim x proj.dim, surjective, ker in rad P
    std::vector<std::size_t> types; // idempotent index per component
    std::vector<std::size_t> offsets;  // component offsets in proj coords
    std::vector<fp::Mat> comp_inclusion;  // A e -> A coords per component
};

inline CoverResult projective_cover(const Module& m) {
    const Algebra& A = *m.alg;
    CoverResult out;
    if (m.dim == 0) {
        out.proj = Module::zero(m.alg);
        out.cover = fp::Mat(A.p, 0, 0);
        return out;
    }
    fp::Subspace covered = radical_submodule(m);
    std::vector<std::vector<fp::Elt>> gens;
    std::vector<fp::Mat> idem_act;
    for (auto& e : A.idempotents) idem_act.push_back(m.act(e));

    while (covered.dim() < m.dim) {
        // first coordinate vector outside the span, then the first
        // idempotent slice of it that still lies outside
        std::size_t pick = m.dim;
        for (std::size_t c = 0; c < m.dim; ++c) {
            std::vector<fp::Elt> e(m.dim, 0);
            e[c] = 1;
            if (!covered.contains(e)) { pick = c; break; }
        }
        check(pick < m.dim, "projective_cover: no vector outside span");
        std::vector<fp::Elt> x(m.dim, 0);
        x[pick] = 1;
        std::size_t type = A.idempotents.size();
        std::vector<fp::Elt> g;
        for (std::size_t i = 0; i < A.idempotents.size(); ++i) {
            auto cand = fp::apply(idem_act[i], x);
            if (!covered.contains(cand)) {
                type = i;
                g = cand;
                break;
            }
        }
        check(type < A.idempotents.size(), "projective_cover: no idempotent separates");
        out.types.push_back(type);
        gens.push_back(g);
        // add A g to the covered span
        fp::Mat rows(A.p, 0, m.dim);
        for (std::size_t k = 0; k < A.dim; ++k)
            rows = fp::vstack(rows, fp::row_vec(A.p, fp::apply(m.rho[k], g)));
        covered = covered.sum_rows(rows);
    }

    std::vector<Module> comps;
    for (std::size_t j = 0; j < out.types.size(); ++j) {
        auto pc = projective_indecomposable(m.alg, out.types[j]);
        comps.push_back(pc.mod);
        out.comp_inclusion.push_back(pc.inclusion);
    }
    out.offsets.assign(out.types.size() + 1, 0);
    for (std::size_t j = 0; j < comps.size(); ++j)
        out.offsets[j + 1] = out.offsets[j] + comps[j].dim;
    out.proj = direct_sum(m.alg, comps);

    out.cover = fp::Mat(A.p, m.dim, out.proj.dim);
    for (std::size_t j = 0; j < comps.size(); ++j) {
        // column for basis vector u of A e: act_m(u) g_j
        fp::Mat W(A.p, m.dim, A.dim);  // columns rho_k g_j
        for (std::size_t k = 0; k < A.dim; ++k) {
            auto col = fp::apply(m.rho[k], gens[j]);
            for (std::size_t r = 0; r < m.dim; ++r) W.at(r, k) = col[r];
        }
        fp::Mat cols = fp::mul(W, out.comp_inclusion[j]);
        for (std::size_t c = 0; c < comps[j].dim; ++c)
            for (std::size_t r = 0; r < m.dim; ++r)
                out.cover.at(r, out.offsets[j] + c) = cols.at(r, c);
    }

    // minimality: surjective with kernel inside rad P
    check(fp::rank(out.cover) == m.dim, "projective_cover: not surjective");
    fp::Mat ker = fp::kernel(out.cover);
    if (ker.rows > 0) {
        fp::Subspace radp = radical_submodule(out.proj);
        check(radp.contains_rows(ker), "projective_cover: kernel escapes rad P");
    }
    return out;
}

inline bool is_projective(const Module& m) {
    if (m.dim == 0) return true;
    auto cov = projective_cover(m);
    return cov.proj.dim == m.dim;
}

// ----------------------------------------------------- duality, injectives

// D(m) over the opposite algebra: transposed action matrices
inline Module dual_module(const Module& m, const AlgebraPtr& opp) {
    check(opp->dim == m.alg->dim && opp->p == m.alg->p, "dual_module: bad opposite");
    Module d(opp, m.dim);
    for (std::size_t i = 0; i < m.alg->dim; ++i) d.rho[i] = fp::transpose(m.rho[i]);
    return d;
}

struct EnvelopeResult {
    Module env;
    fp::Mat embedding;  // env.dim x m.dim, injective, image contains soc env
};

inline EnvelopeResult injective_envelope(const Module& m) {
    auto opp = opposite(m.alg);
    Module dm = dual_module(m, opp);
    auto cov = projective_cover(dm);
    EnvelopeResult out;
    out.env = dual_module(cov.proj, m.alg);
    out.embedding = fp::transpose(cov.cover);
    if (m.dim > 0) {
        check(fp::rank(out.embedding) == m.dim, "injective_envelope: not injective");
        fp::Subspace img = fp::Subspace::from_rows(fp::transpose(out.embedding));
        fp::Subspace soc = socle(out.env);
        check(img.contains(soc), "injective_envelope: image not essential");
    }
    return out;
}

inline Module injective_indecomposable(const AlgebraPtr& a, std::size_t idem) {
    auto opp = opposite(a);
    auto pc = projective_indecomposable(opp, idem);
    return dual_module(pc.mod, a);
}

inline bool is_injective(const Module& m) {
    if (m.dim == 0) return true;
    return injective_envelope(m).env.dim == m.dim;
}

// DA = dual of the regular module of the opposite: the sum of all
// indecomposable injectives with multiplicity
inline Module cogenerator_module(const AlgebraPtr& a) {
    auto opp = opposite(a);
    return dual_module(regular_module(opp), a);
}

// ------------------------------------------ modules from quiver presentations

inline Module module_from_presentation(const AlgebraPtr& a, const ModulePresentation& mp) {
    check(a->quiver.has_value(), "module presentations need a quiver-built algebra");
    const QuiverPresentation& q = *a->quiver;
    const fp::Elt p = a->p;
    const std::size_t nv = q.vertices.size();
    check(mp.dims.size() == nv, "module presentation dims misaligned");

    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + (std::size_t)mp.dims[v];
    const std::size_t d = off[nv];

    auto arrow_mat = [&](int ai) -> fp::Mat {
        auto it = mp.matrices.find(ai);
        std::size_t rows = (std::size_t)mp.dims[(std::size_t)q.arrows[(std::size_t)ai].tgt];
        std::size_t cols = (std::size_t)mp.dims[(std::size_t)q.arrows[(std::size_t)ai].src];
        if (it == mp.matrices.end()) return fp::Mat(p, rows, cols);
        return it->second;
    };

    // product of the arrow matrices along a path (rightmost acts first)
    auto path_mat = [&](int src, const Path& arrs) -> fp::Mat {
        if (arrs.empty()) {
            std::size_t dv = (std::size_t)mp.dims[(std::size_t)src];
            return fp::Mat::identity(p, dv);
        }
        fp::Mat acc = arrow_mat(arrs.back());
        for (std::size_t t = arrs.size() - 1; t-- > 0;) acc = fp::mul(arrow_mat(arrs[t]), acc);
        return acc;
    };

    // relations must evaluate to zero before anything else is trusted
    for (std::size_t ri = 0; ri < q.relations.size(); ++ri) {
        const auto& rel = q.relations[ri];
        int src = q.path_source(rel.begin()->first);
        int tgt = q.path_target(rel.begin()->first);
        fp::Mat acc(p, (std::size_t)mp.dims[(std::size_t)tgt], (std::size_t)mp.dims[(std::size_t)src]);
        for (auto& [pth, coeff] : rel)
            acc = fp::add(acc, fp::scale(path_mat(q.path_source(pth), pth), coeff));
        if (!acc.is_zero())
            throw MathError("module '" + mp.name + "': relation " + std::to_string(ri + 1) +
                            " does not evaluate to zero");
    }

    Module m(a, d);
    for (std::size_t bi = 0; bi < a->dim; ++bi) {
        int src = a->basis_src[bi];
        const Path& arrs = a->basis_paths[bi];
        int tgt = arrs.empty() ? src : q.arrows[(std::size_t)arrs.front()].tgt;
        fp::Mat block = path_mat(src, arrs);
        fp::Mat rho(p, d, d);
        for (std::size_t r = 0; r < block.rows; ++r)
            for (std::size_t c = 0; c < block.cols; ++c)
                rho.at(off[(std::size_t)tgt] + r, off[(std::size_t)src] + c) = block.at(r, c);
        m.rho[bi] = std::move(rho);
    }

    auto chk = check_module(m);
    if (!chk.ok)
        throw MathError("module '" + mp.name + "': " + chk.failures.front() +
                        " (length-" + std::to_string(q.nilpotency) +
                        " paths must also act by zero)");
    return m;
}

// the simple at a vertex of a quiver-built algebra
inline Module vertex_simple(const AlgebraPtr& a, std::size_t vertex) {
    check(a->quiver.has_value(), "vertex_simple needs a quiver-built algebra");
    Module s(a, 1);
    for (std::size_t i = 0; i < a->dim; ++i)
        s.rho[i] = fp::Mat(a->p, 1, 1), s.rho[i].at(0, 0) = a->idempotents[vertex][i];
    return s;
}

}  // namespace findim
