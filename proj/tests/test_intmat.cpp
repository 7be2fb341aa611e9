#include <catch2/catch_amalgamated.hpp>

#include "findim/intmat.hpp"
#include "findim/rng.hpp"

using namespace findim;

namespace {
IntMat from_rows(std::vector<std::vector<long long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}
}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    // oracle: gcd steps by hand give invariant factors 1 | 6
    auto s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(s.rank == 2);
    CHECK(s.factors[0] == 1);
    CHECK(s.factors[1] == 6);
}

TEST_CASE("smith normal form of the zero matrix") {
    auto s = smith_normal_form(IntMat(3, 2));
    CHECK(s.rank == 0);
    CHECK(s.factors.empty());
}

TEST_CASE("smith normal form of the identity") {
    auto s = smith_normal_form(IntMat::identity(5));
    REQUIRE(s.rank == 5);
    for (auto& f : s.factors) CHECK(f == 1);
}

TEST_CASE("bareiss determinant on a known matrix") {
    CHECK(det(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
    CHECK(det(IntMat::identity(4)) == 1);
}

TEST_CASE("snf transforms verified on random matrices") {
    // the implementation re-checks u m v = d and unimodularity on every
    // call; this exercises it over a spread of shapes
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        IntMat m(r, c);
        for (auto& x : m.a) x = (long long)rng.below(19) - 9;
        auto s = smith_normal_form(m);
        CHECK(mul(mul(s.u, m), s.v) == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
            CHECK(s.factors[i + 1] % s.factors[i] == 0);
    }
}

TEST_CASE("integer rank agrees with field rank for generic matrices") {
    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMat m(r, c);
        fp::Mat f(65521, r, c);
        for (std::size_t i = 0; i < m.a.size(); ++i) {
            long long v = (long long)rng.below(7) - 3;
            m.a[i] = v;
            f.a[i] = fp::reduce_int(v, 65521);
        }
        CHECK(int_rank(m) == fp::rank(f));
    }
}
