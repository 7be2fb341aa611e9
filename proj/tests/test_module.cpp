#include <catch2/catch_amalgamated.hpp>

#include "findim/module.hpp"
#include "findim/parse.hpp"

using namespace findim;

namespace {

AlgebraPtr fixture_algebra(const std::string& name, fp::Elt p = 65521) {
    const Document& doc = fixture_document(p);
    const QuiverPresentation* q = doc.find_algebra(name);
    REQUIRE(q);
    return build_bound_quiver_algebra(*q);
}

bool in_span(const std::vector<fp::Mat>& basis, const fp::Mat& h) {
    if (basis.empty()) return h.is_zero();
    fp::Mat rows(h.p, basis.size(), h.a.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::size_t i = 0; i < h.a.size(); ++i) rows.at(t, i) = basis[t].a[i];
    return fp::Subspace::from_rows(rows).contains(h.a);
}

}  // namespace

TEST_CASE("regular module of LOOP2 acts by a nilpotent Jordan block") {
    // oracle: multiplication table of k[x]/x^2
    auto a = fixture_algebra("LOOP2");
    Module reg = regular_module(a);
    CHECK(reg.dim == 2);
    std::size_t loop = a->basis_names[0] == "a" ? 0 : 1;
    const fp::Mat& x = reg.rho[loop];
    CHECK(fp::rank(x) == 1);
    CHECK(fp::mul(x, x).is_zero());
}

TEST_CASE("regular module dimension equals algebra dimension") {
    auto a = fixture_algebra("A2");
    CHECK(regular_module(a).dim == 3);
    CHECK(check_module(regular_module(a)).ok);
}

TEST_CASE("hom dimensions over A2") {
    // oracle: solving the two intertwining equations by hand
    auto a = fixture_algebra("A2");
    auto p1 = projective_indecomposable(a, 0).mod;
    auto s1 = vertex_simple(a, 0);
    CHECK(hom_space(p1, s1).size() == 1);
    CHECK(hom_space(s1, p1).size() == 0);
}

TEST_CASE("endomorphisms contain the identity") {
    auto a = fixture_algebra("SQUARE");
    Module reg = regular_module(a);
    auto end_basis = hom_space(reg, reg);
    CHECK(in_span(end_basis, fp::Mat::identity(a->p, reg.dim)));
    for (auto& h : end_basis) CHECK(is_hom(reg, reg, h));
}

TEST_CASE("a module is isomorphic to itself") {
    auto a = fixture_algebra("LOOP3");
    Module reg = regular_module(a);
    auto iso = is_isomorphic(reg, reg, 5);
    REQUIRE(iso.yes());
    CHECK(is_hom(reg, reg, iso.witness));
    CHECK(fp::rank(iso.witness) == reg.dim);
}

TEST_CASE("different dimensions give a certified no") {
    auto a = fixture_algebra("LOOP2");
    auto iso = is_isomorphic(regular_module(a), vertex_simple(a, 0), 5);
    REQUIRE(iso.no());
    CHECK(iso.certificate.find("dim") != std::string::npos);
}

TEST_CASE("LOOP2 regular vs S+S separated by endomorphism dimensions") {
    // oracle: dim End B = 2, dim End (S+S) = 4
    auto a = fixture_algebra("LOOP2");
    Module s = vertex_simple(a, 0);
    Module ss = direct_sum(s, s);
    Module reg = regular_module(a);
    CHECK(hom_space(reg, reg).size() == 2);
    CHECK(hom_space(ss, ss).size() == 4);
    auto iso = is_isomorphic(reg, ss, 5);
    REQUIRE(iso.no());
    CHECK(iso.certificate.find("End") != std::string::npos);
}

TEST_CASE("projective cover of a projective is an isomorphism") {
    auto a = fixture_algebra("A2");
    auto p1 = projective_indecomposable(a, 0).mod;
    auto cov = projective_cover(p1);
    CHECK(cov.proj.dim == p1.dim);
    CHECK(fp::rank(cov.cover) == p1.dim);
}

TEST_CASE("cover of the simple over LOOP2 is the regular module") {
    // oracle: hand cover B -> S with kernel rad B
    auto a = fixture_algebra("LOOP2");
    auto cov = projective_cover(vertex_simple(a, 0));
    CHECK(cov.proj.dim == 2);
    CHECK(fp::kernel(cov.cover).rows == 1);
}

TEST_CASE("cover of S1 over A2 is P1 with kernel P2") {
    // oracle: hand cover, kernel is the socle span{a} isomorphic to P2 = S2
    auto a = fixture_algebra("A2");
    auto cov = projective_cover(vertex_simple(a, 0));
    CHECK(cov.proj.dim == 2);
    REQUIRE(cov.types == std::vector<std::size_t>{0});
    auto ker_rows = fp::kernel(cov.cover);
    REQUIRE(ker_rows.rows == 1);
    auto ker = submodule(cov.proj, fp::Subspace::from_rows(ker_rows));
    auto p2 = projective_indecomposable(a, 1).mod;
    CHECK(is_isomorphic(ker.mod, p2, 3).yes());
}

TEST_CASE("double dual is the identity on the nose") {
    auto a = fixture_algebra("SQUARE");
    auto opp = opposite(a);
    Module reg = regular_module(a);
    Module dd = dual_module(dual_module(reg, opp), a);
    CHECK(dd.rho == reg.rho);
}

TEST_CASE("dual of a simple is simple") {
    auto a = fixture_algebra("A2");
    auto opp = opposite(a);
    Module d = dual_module(vertex_simple(a, 0), opp);
    CHECK(d.dim == 1);
    CHECK(check_module(d).ok);
}

TEST_CASE("injective envelope over the self-injective LOOP2") {
    // oracle: k[x]/x^2 is self-dual, so E(S) is the regular module
    auto a = fixture_algebra("LOOP2");
    auto env = injective_envelope(vertex_simple(a, 0));
    CHECK(env.env.dim == 2);
    CHECK(is_isomorphic(env.env, regular_module(a), 5).yes());
}

TEST_CASE("injective envelope of S2 over A2 has dimension vector (1,1)") {
    // oracle: I_2 = D(e_2 A), and e_2 A = span{e_2, a}
    auto a = fixture_algebra("A2");
    auto env = injective_envelope(vertex_simple(a, 1));
    CHECK(env.env.dim == 2);
    auto i2 = injective_indecomposable(a, 1);
    CHECK(is_isomorphic(env.env, i2, 5).yes());
}

TEST_CASE("an injective module is its own envelope") {
    auto a = fixture_algebra("A2");
    auto i2 = injective_indecomposable(a, 1);
    auto env = injective_envelope(i2);
    CHECK(env.env.dim == i2.dim);
}

TEST_CASE("socle of P1 over A2 is one-dimensional") {
    auto a = fixture_algebra("A2");
    auto p1 = projective_indecomposable(a, 0).mod;
    CHECK(socle(p1).dim() == 1);
}

TEST_CASE("modules from presentations check their relations") {
    auto a = fixture_algebra("LOOP2");
    ModulePresentation bad;
    bad.name = "B";
    bad.algebra = "LOOP2";
    bad.dims = {1};
    fp::Mat one(a->p, 1, 1);
    one.at(0, 0) = 1;
    bad.matrices[0] = one;  // a acts invertibly, contradicting a*a = 0
    CHECK_THROWS_AS(module_from_presentation(a, bad), MathError);

    ModulePresentation good = bad;
    good.matrices.clear();  // a acts by zero: the simple module
    Module s = module_from_presentation(a, good);
    CHECK(check_module(s).ok);
    CHECK(is_isomorphic(s, vertex_simple(a, 0), 5).yes());
}

TEST_CASE("presentation modules over A2 realize the projective P1") {
    auto a = fixture_algebra("A2");
    auto r = parse_document(
        "module P over A2 { dims 1=1 2=1; arrow a = [[1]]; }",
        &fixture_document(65521));
    REQUIRE(r.ok());
    Module m = module_from_presentation(a, r.doc->modules[0]);
    CHECK(m.dim == 2);
    CHECK(is_isomorphic(m, projective_indecomposable(a, 0).mod, 5).yes());
}

TEST_CASE("quotient by the radical is semisimple") {
    auto a = fixture_algebra("A2");
    Module reg = regular_module(a);
    auto rad = radical_submodule(reg);
    CHECK(rad.dim() == 1);
    auto q = quotient(reg, rad);
    CHECK(q.mod.dim == 2);
    CHECK(radical_submodule(q.mod).dim() == 0);
}

TEST_CASE("module span generates the smallest submodule") {
    auto a = fixture_algebra("A2");
    Module reg = regular_module(a);
    // the span of e1 under the action contains a = x e1
    std::size_t e1_idx = 0;
    for (std::size_t i = 0; i < a->dim; ++i)
        if (a->basis_names[i] == "e1") e1_idx = i;
    fp::Mat seed(a->p, 1, reg.dim);
    seed.at(0, e1_idx) = 1;
    auto span = module_span(reg, seed);
    CHECK(span.dim() == 2);
    auto sub = submodule(reg, span);
    CHECK(is_isomorphic(sub.mod, projective_indecomposable(a, 0).mod, 5).yes());
}
