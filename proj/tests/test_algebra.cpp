#include <catch2/catch_amalgamated.hpp>

#include "findim/algebra.hpp"
#include "findim/parse.hpp"

using namespace findim;

namespace {

AlgebraPtr fixture_algebra(const std::string& name, fp::Elt p = 65521,
                           QuiverBuildReport* rep = nullptr) {
    const Document& doc = fixture_document(p);
    const QuiverPresentation* q = doc.find_algebra(name);
    REQUIRE(q);
    return build_bound_quiver_algebra(*q, rep);
}

std::vector<fp::Elt> name_coords(const Algebra& a, const std::string& n) {
    for (std::size_t i = 0; i < a.dim; ++i)
        if (a.basis_names[i] == n) return a.basis_vec(i);
    FAIL("basis element not found: " + n);
    return {};
}

}  // namespace

TEST_CASE("A2 has dimension 3 with two idempotents") {
    // oracle: paths of length < 2 are e1, e2, a
    auto a = fixture_algebra("A2");
    CHECK(a->dim == 3);
    CHECK(a->idempotents.size() == 2);
}

TEST_CASE("LOOP3 has basis 1, a, a^2") {
    // oracle: path enumeration, a^3 = 0 by the relation
    auto a = fixture_algebra("LOOP3");
    CHECK(a->dim == 3);
    auto x = name_coords(*a, "a");
    auto x2 = a->mul_vec(x, x);
    CHECK(x2 == name_coords(*a, "a*a"));
    CHECK(a->mul_vec(x2, x) == std::vector<fp::Elt>(3, 0));
}

TEST_CASE("SQUARE has dimension 9") {
    // oracle: 4 vertices + 4 arrows + one length-2 class (c*d = e*f)
    auto a = fixture_algebra("SQUARE");
    CHECK(a->dim == 9);
    CHECK(a->idempotents.size() == 4);
}

TEST_CASE("truncation reports") {
    QuiverBuildReport rep;
    fixture_algebra("A2", 65521, &rep);
    CHECK_FALSE(rep.truncation_active);  // no length-2 paths exist at all

    fixture_algebra("LOOP2", 65521, &rep);
    CHECK_FALSE(rep.truncation_active);  // a*a already in the ideal
    CHECK(rep.len_m1_total == 1);
    CHECK(rep.len_m1_in_ideal == 0);

    // a free loop truncated at m = 3: the truncation does real work
    auto r = parse_document(
        "algebra LF { field 65521; vertices 1; arrows a: 1 -> 1; relations; nilpotency 3; }");
    REQUIRE(r.ok());
    auto lf = build_bound_quiver_algebra(r.doc->algebras[0], &rep);
    CHECK(lf->dim == 3);
    CHECK(rep.truncation_active);
}

TEST_CASE("radical of LOOP2 is spanned by the loop") {
    // oracle: direct check on the 2-dimensional algebra k[x]/x^2
    auto a = fixture_algebra("LOOP2");
    CHECK(a->rad.dim() == 1);
    CHECK(a->rad.contains(name_coords(*a, "a")));
}

TEST_CASE("semisimple F_p x F_p has zero radical") {
    auto a = fixture_algebra("SS2");
    CHECK(a->dim == 2);
    CHECK(a->rad.dim() == 0);
}

TEST_CASE("radical of SQUARE is the span of positive-length paths") {
    // oracle: arrows generate a nilpotent ideal with semisimple quotient
    auto a = fixture_algebra("SQUARE");
    CHECK(a->rad.dim() == 5);
    for (std::size_t i = 0; i < a->dim; ++i) {
        bool positive_len = !a->basis_paths[i].empty();
        CHECK(a->rad.contains(a->basis_vec(i)) == positive_len);
    }
}

TEST_CASE("radical is a two-sided ideal and the quotient is semisimple") {
    for (const char* name : {"A2", "LOOP3", "SQUARE"}) {
        auto a = fixture_algebra(name);
        for (std::size_t i = 0; i < a->dim; ++i)
            for (std::size_t r = 0; r < a->rad.dim(); ++r) {
                auto row = fp::mat_row(a->rad.basis, r);
                CHECK(a->rad.contains(a->mul_vec(a->basis_vec(i), row)));
                CHECK(a->rad.contains(a->mul_vec(row, a->basis_vec(i))));
            }
        auto quot = quotient_algebra(a, a->rad);
        CHECK(quot.alg->rad.dim() == 0);
    }
}

TEST_CASE("bound quiver dimension splits over vertex pairs") {
    auto a = fixture_algebra("SQUARE");
    std::size_t total = 0;
    for (auto& ei : a->idempotents)
        for (auto& ej : a->idempotents) {
            // dim of e_j A e_i as the rank of x -> e_j x e_i restricted to A
            fp::Mat both = fp::mul(a->left_mult_of(ej), a->right_mult_of(ei));
            total += fp::rank(both);
        }
    CHECK(total == a->dim);
}

TEST_CASE("opposite is an involution") {
    auto a = fixture_algebra("A2");
    auto opop = opposite(opposite(a));
    CHECK(same_algebra(*a, *opop));
    for (std::size_t i = 0; i < a->dim; ++i) CHECK(a->left_mult[i] == opop->left_mult[i]);
}

TEST_CASE("commutative LOOP2 equals its opposite") {
    auto a = fixture_algebra("LOOP2");
    auto op = opposite(a);
    for (std::size_t i = 0; i < a->dim; ++i) CHECK(a->left_mult[i] == op->left_mult[i]);
}

TEST_CASE("opposite of A2 swaps projective dimensions") {
    // oracle: e_i A by hand; dims of the A2-op projectives are 1 and 2
    auto a = fixture_algebra("A2");
    auto op = opposite(a);
    auto dim_of = [&](const AlgebraPtr& alg, std::size_t idem) {
        return fp::rank(alg->right_mult_of(alg->idempotents[idem]));
    };
    CHECK(dim_of(a, 0) == 2);   // A2: P_1 = span{e1, a}
    CHECK(dim_of(a, 1) == 1);
    CHECK(dim_of(op, 0) == 1);  // reversed arrow
    CHECK(dim_of(op, 1) == 2);
}

TEST_CASE("check_algebra flags corruption") {
    auto a = fixture_algebra("LOOP3");
    CHECK(check_algebra(*a).ok());

    Algebra bad = *a;
    bad.left_mult[1].at(2, 1) = fp::add(bad.left_mult[1].at(2, 1), 1, bad.p);
    auto chk = check_algebra(bad);
    CHECK_FALSE(chk.ok());
    CHECK_FALSE(chk.associative);
    REQUIRE_FALSE(chk.failures.empty());
    CHECK(chk.failures.front().find("associativity") != std::string::npos);

    Algebra bad2 = *a;
    bad2.idempotents.push_back(bad2.idempotents[0]);
    auto chk2 = check_algebra(bad2);
    CHECK_FALSE(chk2.idempotents_ok);
}

TEST_CASE("vertex idempotent killed by relations is reported") {
    // e1 = e1*e1 forced into the ideal is impossible with admissible
    // relations, but a too-small prime is a reachable error
    auto r = parse_document(
        "algebra T { field 3; vertices 1; arrows a: 1 -> 1, b: 1 -> 1; relations a*a, a*b, "
        "b*a, b*b; nilpotency 2; }");
    REQUIRE(r.ok());
    CHECK_THROWS_AS(build_bound_quiver_algebra(r.doc->algebras[0]), MathError);
}

TEST_CASE("p must exceed the dimension") {
    auto r = parse_document(
        "algebra U { field 3; vertices 1 2 3; arrows; relations; nilpotency 2; }");
    REQUIRE(r.ok());
    CHECK_THROWS_AS(build_bound_quiver_algebra(r.doc->algebras[0]), MathError);
}
