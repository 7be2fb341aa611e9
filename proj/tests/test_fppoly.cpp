#include <catch2/catch_amalgamated.hpp>

#include "findim/fppoly.hpp"

using namespace findim;

namespace {
constexpr fp::Elt P = 65521;
}

TEST_CASE("factor x^2 - 1") {
    Rng rng(1);
    Poly f(P, {P - 1, 0, 1});
    auto fac = factor(f, rng);
    REQUIRE(fac.size() == 2);
    Poly xm1(P, {P - 1, 1}), xp1(P, {1, 1});
    CHECK(fac.at(xm1) == 1);
    CHECK(fac.at(xp1) == 1);
}

TEST_CASE("factor x^3 keeps multiplicity") {
    Rng rng(2);
    Poly f(P, {0, 0, 0, 1});
    auto fac = factor(f, rng);
    REQUIRE(fac.size() == 1);
    CHECK(fac.begin()->first == Poly(P, {0, 1}));
    CHECK(fac.begin()->second == 3);
}

TEST_CASE("irreducible quadratic stays whole") {
    // x^2 + 1 over F_3 has no roots, hence irreducible
    Rng rng(3);
    Poly f(3, {1, 0, 1});
    auto fac = factor(f, rng);
    REQUIRE(fac.size() == 1);
    CHECK(fac.begin()->first == f);
    CHECK(fac.begin()->second == 1);
}

TEST_CASE("random products reassemble") {
    Rng rng(4);
    for (int t = 0; t < 40; ++t) {
        // multiply a few random monic polynomials, refactor, compare product
        Poly prod = Poly::one(P);
        int parts = 1 + (int)rng.below(3);
        for (int i = 0; i < parts; ++i) {
            std::size_t d = 1 + rng.below(3);
            auto coeffs = rng.vec(P, d + 1);
            coeffs[d] = 1;
            prod = mul(prod, Poly(P, coeffs));
        }
        auto fac = factor(prod, rng);  // self-verifies the reassembly
        std::size_t degsum = 0;
        for (auto& [irr, m] : fac) degsum += (std::size_t)irr.deg() * m;
        CHECK(degsum == (std::size_t)prod.deg());
    }
}

TEST_CASE("extended gcd identity") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        Poly a(P, rng.vec(P, 1 + rng.below(5)));
        Poly b(P, rng.vec(P, 1 + rng.below(5)));
        if (a.is_zero() || b.is_zero()) continue;
        Poly g(P), s(P), u(P);
        ext_gcd(a, b, g, s, u);
        CHECK(add(mul(s, a), mul(u, b)) == g);
        if (!g.is_zero()) {
            CHECK(mod(a, g).is_zero());
            CHECK(mod(b, g).is_zero());
        }
    }
}

TEST_CASE("powmod matches repeated multiplication") {
    Poly m(P, {1, 1, 1});  // x^2 + x + 1
    Poly x = Poly::x(P);
    Poly acc = Poly::one(P);
    for (int e = 0; e < 12; ++e) {
        CHECK(powmod(x, (std::uint64_t)e, m) == acc);
        acc = mod(mul(acc, x), m);
    }
}
