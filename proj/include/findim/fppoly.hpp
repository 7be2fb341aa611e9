// Univariate polynomials over F_p and their factorization
// (squarefree split, distinct degree, Cantor-Zassenhaus equal degree).
// Needed to find splitting idempotents in semisimple endomorphism
// algebras; p is odd there (the library requires p > dim anyway).

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "findim/fp.hpp"
#include "findim/rng.hpp"

namespace findim {

// coefficient vector, c[i] is the coefficient of x^i; normalized (no
// trailing zeros); the zero polynomial is the empty vector
struct Poly {
    fp::Elt p;
    std::vector<fp::Elt> c;

    explicit Poly(fp::Elt p_) : p(p_) {}
    Poly(fp::Elt p_, std::vector<fp::Elt> coeffs) : p(p_), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    fp::Elt lead() const { return c.empty() ? 0 : c.back(); }

    static Poly x(fp::Elt p) { return Poly(p, {0, 1}); }
    static Poly constant(fp::Elt p, fp::Elt v) { return Poly(p, {v}); }
    static Poly one(fp::Elt p) { return constant(p, 1); }

    bool operator==(const Poly& o) const { return p == o.p && c == o.c; }
    bool operator<(const Poly& o) const {  // deterministic ordering for maps
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        return std::lexicographical_compare(c.rbegin(), c.rend(), o.c.rbegin(), o.c.rend());
    }
};

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp::add(r.c[i], b.c[i], a.p);
    r.trim();
    return r;
}
inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp::sub(r.c[i], b.c[i], a.p);
    r.trim();
    return r;
}
inline Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.p);
    Poly r(a.p);
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = fp::add(r.c[i + j], fp::mul(a.c[i], b.c[j], a.p), a.p);
    }
    r.trim();
    return r;
}
inline Poly scale(const Poly& a, fp::Elt k) {
    Poly r(a.p, a.c);
    for (auto& x : r.c) x = fp::mul(x, k, a.p);
    r.trim();
    return r;
}
inline Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, fp::inv(a.lead(), a.p));
}

struct PolyDiv {
    Poly quot, rem;
};
inline PolyDiv divmod(const Poly& a, const Poly& b) {
    check(!b.is_zero(), "poly division by zero");
    Poly r = a, q(a.p);
    q.c.assign(a.c.size(), 0);
    fp::Elt binv = fp::inv(b.lead(), a.p);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        std::size_t shift = (std::size_t)(r.deg() - b.deg());
        fp::Elt f = fp::mul(r.lead(), binv, a.p);
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = fp::sub(r.c[shift + i], fp::mul(f, b.c[i], a.p), a.p);
        r.trim();
    }
    q.trim();
    return {q, r};
}
inline Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = b;
        b = r;
    }
    return monic(a);
}

// g = gcd(a,b) = s a + t b
inline void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(a.p), s1(a.p);
    Poly t0(a.p), t1 = Poly::one(a.p);
    while (!r1.is_zero()) {
        auto qr = divmod(r0, r1);
        Poly r2 = qr.rem;
        Poly s2 = sub(s0, mul(qr.quot, s1));
        Poly t2 = sub(t0, mul(qr.quot, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    fp::Elt lc = r0.lead();
    if (lc != 0 && lc != 1) {
        fp::Elt iv = fp::inv(lc, a.p);
        r0 = scale(r0, iv);
        s0 = scale(s0, iv);
        t0 = scale(t0, iv);
    }
    g = r0; s = s0; t = t0;
}

inline Poly derivative(const Poly& a) {
    Poly r(a.p);
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = fp::mul(a.c[i], (fp::Elt)(i % a.p), a.p);
    r.trim();
    return r;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(base.p);
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        e >>= 1;
    }
    return r;
}

// x^(p^k) mod m, by repeated frobenius
inline Poly frobenius_power(const Poly& m, std::size_t k) {
    Poly r = Poly::x(m.p);
    for (std::size_t i = 0; i < k; ++i) r = powmod(r, m.p, m);
    return r;
}

namespace detail {

// equal-degree splitting (Cantor-Zassenhaus), f squarefree monic,
// all irreducible factors of degree d; p odd
inline void equal_degree(const Poly& f, std::size_t d, Rng& rng,
                         std::vector<Poly>& out) {
    if ((std::size_t)f.deg() == d) {
        out.push_back(f);
        return;
    }
    check(f.p % 2 == 1, "Cantor-Zassenhaus needs odd p");
    while (true) {
        Poly a(f.p, rng.vec(f.p, (std::size_t)f.deg()));
        if (a.deg() < 1) continue;
        Poly g = gcd(a, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).quot, d, rng, out);
            return;
        }
        // a^((p^d-1)/2) = norm(a)^((p-1)/2) with
        // norm(a) = a^(1+p+...+p^(d-1)); avoids forming p^d
        Poly t = a;
        for (std::size_t i = 1; i < d; ++i) t = mod(mul(powmod(t, f.p, f), a), f);
        Poly b = sub(powmod(t, (f.p - 1) / 2, f), Poly::one(f.p));
        g = gcd(b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(monic(g), d, rng, out);
            equal_degree(monic(divmod(f, g).quot), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

// full factorization into monic irreducibles with multiplicities
inline std::map<Poly, std::size_t> factor(const Poly& input, Rng& rng) {
    std::map<Poly, std::size_t> result;
    check(!input.is_zero(), "factor of zero polynomial");
    Poly f = monic(input);
    if (f.deg() == 0) return result;

    // squarefree part first; repeated gcd with the derivative peels
    // multiplicities (p > deg holds for every use in this library, so
    // the derivative never vanishes on a nonconstant polynomial)
    check((std::size_t)f.deg() < f.p, "factor requires p > deg f");
    std::vector<Poly> squarefree_parts;
    Poly rest = f;
    while (rest.deg() > 0) {
        Poly d = derivative(rest);
        Poly g = gcd(rest, d);            // factors of multiplicity > 1
        Poly sf = divmod(rest, g).quot;   // each distinct factor once
        if (sf.deg() > 0) squarefree_parts.push_back(sf);
        rest = g;
    }

    // distinct-degree + equal-degree on each squarefree piece; true
    // multiplicities are recovered by trial division against f, which
    // is exact and keeps the bookkeeping simple
    std::vector<Poly> irreducibles;
    for (auto& sf : squarefree_parts) {
        Poly g = sf;
        std::size_t d = 1;
        while (g.deg() > 0 && d <= (std::size_t)g.deg()) {
            Poly xq = frobenius_power(g, d);       // x^(p^d) mod g
            Poly split = gcd(sub(xq, Poly::x(g.p)), g);
            if (split.deg() > 0) {
                std::vector<Poly> eq;
                detail::equal_degree(monic(split), d, rng, eq);
                for (auto& irr : eq) irreducibles.push_back(irr);
                g = divmod(g, split).quot;
            }
            ++d;
        }
        if (g.deg() > 0) irreducibles.push_back(monic(g));
    }

    std::sort(irreducibles.begin(), irreducibles.end());
    irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end()),
                       irreducibles.end());
    for (auto& irr : irreducibles) {
        std::size_t m = 0;
        Poly rem = f;
        while (true) {
            auto qr = divmod(rem, irr);
            if (!qr.rem.is_zero()) break;
            rem = qr.quot;
            ++m;
        }
        check(m > 0, "factorization lost a factor");
        result[irr] = m;
    }

    // verify the product reconstructs f
    Poly prod = Poly::one(f.p);
    for (auto& [irr, m] : result)
        for (std::size_t i = 0; i < m; ++i) prod = mul(prod, irr);
    check(prod == f, "factorization product mismatch");
    return result;
}

}  // namespace findim
