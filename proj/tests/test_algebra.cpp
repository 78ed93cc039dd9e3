// Frozen expected values for the bound quiver algebra layer and for
// morphisms between direct sums of indecomposable projectives.

#include "doctest.h"

#include "cforge/fixtures.hpp"
#include "cforge/rep.hpp"

using namespace cforge;

namespace {

size_t proj_dim(const Algebra& A, int v) {
    size_t n = 0;
    for (int w = 1; w <= A.vertices(); ++w) n += A.paths_from_to(v, w).size();
    return n;
}

} // namespace

TEST_CASE("six-vertex fixture algebra: basis, radical layers, hom spaces") {
    AlgebraPtr Ap = fixture_algebra("example-6vertex");
    const Algebra& A = *Ap;

    CHECK(A.vertices() == 6);
    CHECK(A.dim() == 15);
    CHECK(A.loewy_length() == 3);

    std::vector<size_t> pdims = {4, 5, 2, 1, 2, 1};
    for (int v = 1; v <= 6; ++v) CHECK(proj_dim(A, v) == pdims[v - 1]);

    CHECK(A.paths_from_to(1, 3).size() == 1);
    CHECK(A.paths_from_to(2, 6).size() == 1);
    CHECK(A.paths_from_to(1, 4).empty()); // the length-3 composite is killed
    CHECK(A.paths_from_to(1, 6).empty());
    CHECK(A.paths_from_to(2, 2).size() == 1);

    size_t p13 = A.paths_from_to(1, 3)[0];
    CHECK(A.path_name(p13) == "a2*a1");

    for (int v = 1; v <= 6; ++v) CHECK_FALSE(A.has_loop_at(v));

    // Hom(P_2 + P_5, P_2 + P_5) has the two trivial paths and b1.
    ProjObj P25{{2, 5}};
    CHECK(hom_dim(A, P25, P25) == 3);
}

TEST_CASE("path expression parsing") {
    AlgebraPtr Ap = fixture_algebra("example-6vertex");
    const Algebra& A = *Ap;

    SUBCASE("arrow chain, last applied first") {
        AlgElem x = parse_path_expr(A, "a2*a1");
        CHECK(x.dom_v == 3);
        CHECK(x.cod_v == 1);
        CHECK_FALSE(elem_is_zero(x));
        CHECK(elem_to_string(A, x) == "a2*a1");
    }
    SUBCASE("trivial path") {
        AlgElem e = parse_path_expr(A, "e4");
        CHECK(e.dom_v == 4);
        CHECK(e.cod_v == 4);
        CHECK(elem_scalar_part(A, e) == 1);
    }
    SUBCASE("a killed composite parses to the zero class") {
        AlgElem z = parse_path_expr(A, "a3*a2*a1");
        CHECK(z.dom_v == 4);
        CHECK(z.cod_v == 1);
        CHECK(elem_is_zero(z));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_path_expr(A, "a1*a3"), CfError); // not composable
        CHECK_THROWS_AS(parse_path_expr(A, "zz"), CfError);    // unknown arrow
        CHECK_THROWS_AS(parse_path_expr(A, "e9"), CfError);    // vertex out of range
        CHECK_THROWS_AS(parse_path_expr(A, ""), CfError);
    }
}

TEST_CASE("element composition respects the relations") {
    AlgebraPtr Ap = fixture_algebra("example-6vertex");
    const Algebra& A = *Ap;

    AlgElem f = parse_path_expr(A, "b2*b1"); // P_6 -> P_2
    AlgElem g = parse_path_expr(A, "a1");    // P_2 -> P_1
    AlgElem gf = elem_compose(A, f, g);      // P_6 -> P_1
    CHECK(gf.dom_v == 6);
    CHECK(gf.cod_v == 1);
    CHECK(elem_is_zero(gf)); // b2*b1*a1 is killed

    // module maps compose P_4 --a3--> P_3 --a2--> P_2; the resulting class
    // is the path a3*a2 read off from vertex 2
    AlgElem a2 = parse_path_expr(A, "a2"); // P_3 -> P_2
    AlgElem a3 = parse_path_expr(A, "a3"); // P_4 -> P_3
    AlgElem a3a2 = elem_compose(A, a3, a2);
    CHECK_FALSE(elem_is_zero(a3a2));
    CHECK(elem_to_string(A, a3a2) == "a3*a2");

    CHECK(elem_in_radical(A, f));
    CHECK(elem_in_radical_square(A, f));
    AlgElem b2 = parse_path_expr(A, "b2");
    CHECK(elem_in_radical(A, b2));
    CHECK_FALSE(elem_in_radical_square(A, b2));
    AlgElem e2 = parse_path_expr(A, "e2");
    CHECK_FALSE(elem_in_radical(A, e2));
}

TEST_CASE("nine-vertex fixture algebra") {
    AlgebraPtr Ap = fixture_algebra("example-9vertex");
    const Algebra& A = *Ap;

    CHECK(A.vertices() == 9);
    CHECK(A.dim() == 19);
    CHECK(A.loewy_length() == 3);

    std::vector<size_t> pdims = {2, 2, 3, 2, 3, 2, 3, 1, 1};
    for (int v = 1; v <= 9; ++v) CHECK(proj_dim(A, v) == pdims[v - 1]);

    // exactly two length-2 classes survive
    CHECK_FALSE(elem_is_zero(parse_path_expr(A, "a3*a2")));
    CHECK_FALSE(elem_is_zero(parse_path_expr(A, "a5*a4")));
    CHECK(elem_is_zero(parse_path_expr(A, "a2*a1")));
    CHECK(elem_is_zero(parse_path_expr(A, "a2*b1")));
    CHECK(elem_is_zero(parse_path_expr(A, "a4*a3")));
    CHECK(elem_is_zero(parse_path_expr(A, "b2*a5")));
    CHECK(elem_is_zero(parse_path_expr(A, "a6*a5")));

    for (int v = 1; v <= 9; ++v) CHECK_FALSE(A.has_loop_at(v));
}

TEST_CASE("toy algebras") {
    Fp F(32003);

    SUBCASE("two-vertex line") {
        AlgebraPtr A = fixture_algebra("toy-a2");
        CHECK(A->dim() == 3);
        CHECK(proj_dim(*A, 1) == 2);
        CHECK(proj_dim(*A, 2) == 1);
    }
    SUBCASE("three-vertex line with killed composite") {
        AlgebraPtr A = fixture_algebra("toy-a3");
        CHECK(A->dim() == 5);
        CHECK(A->paths_from_to(1, 3).empty());
    }
    SUBCASE("two-vertex cyclic with killed squares, over F_2") {
        AlgebraPtr A = fixture_algebra("toy-cycle2", 2);
        CHECK(A->field().p() == 2);
        CHECK(A->dim() == 4);
        CHECK(A->loewy_length() == 2);
        CHECK_FALSE(A->has_loop_at(1));
        CHECK_FALSE(A->has_loop_at(2));
    }
    SUBCASE("five-vertex two-source fixture") {
        AlgebraPtr A = fixture_algebra("toy-t2", 2);
        CHECK(A->dim() == 10);
        CHECK(A->loewy_length() == 2);
        const Algebra& T = *A;
        CHECK(hom_dim(T, ProjObj{{3}}, ProjObj{{2}}) == 1); // y
        CHECK(hom_dim(T, ProjObj{{3}}, ProjObj{{5}}) == 1); // q
        CHECK(hom_dim(T, ProjObj{{4}}, ProjObj{{2}}) == 1); // z
        CHECK(hom_dim(T, ProjObj{{4}}, ProjObj{{5}}) == 1); // r
        CHECK(hom_dim(T, ProjObj{{2}}, ProjObj{{5}}) == 0);
        CHECK(hom_dim(T, ProjObj{{5}}, ProjObj{{2}}) == 0);
        CHECK(hom_dim(T, ProjObj{{3}}, ProjObj{{1}}) == 0); // both routes killed
    }
    SUBCASE("kronecker") {
        AlgebraPtr A = fixture_algebra("toy-kronecker");
        CHECK(A->dim() == 4);
        CHECK(proj_dim(*A, 1) == 3);
    }
    SUBCASE("single loop with square zero") {
        AlgebraPtr A = Algebra::build(F, 1, {{"l", 1, 1}},
                                      {Relation{{RelTerm{1, {0, 0}}}}});
        CHECK(A->dim() == 2);
        CHECK(A->has_loop_at(1));
    }
    SUBCASE("commutative square via a two-term relation") {
        std::vector<Arrow> ar = {{"a", 1, 2}, {"b", 2, 4}, {"c", 1, 3}, {"d", 3, 4}};
        Relation comm;
        comm.terms.push_back(RelTerm{1, {0, 1}});
        comm.terms.push_back(RelTerm{F.neg(1), {2, 3}});
        AlgebraPtr A = Algebra::build(F, 4, ar, {comm});
        CHECK(A->dim() == 9); // the two length-2 paths fall into one class
        CHECK(A->paths_from_to(1, 4).size() == 1);
    }
    SUBCASE("rejected inputs") {
        // unbounded cycle: no relations, so paths never die
        CHECK_THROWS_AS(Algebra::build(F, 2, {{"x", 1, 2}, {"y", 2, 1}}, {}), CfError);
        // mixed-length relation terms
        Relation bad;
        bad.terms.push_back(RelTerm{1, {0, 1}});
        bad.terms.push_back(RelTerm{1, {0, 1, 0}});
        CHECK_THROWS_AS(
            Algebra::build(F, 2, {{"x", 1, 2}, {"y", 2, 1}}, {bad}), CfError);
    }
}

TEST_CASE("morphism assembly, invertibility, one-sided inverses") {
    AlgebraPtr Ap = fixture_algebra("example-6vertex");
    const Algebra& A = *Ap;
    ProjObj P2{{2}}, P25{{2, 5}}, P52{{5, 2}};

    // U = [[e2, b1], [0, e5]] is invertible: unitriangular over the radical
    ProjMor U = mor_from_entries(A, P25, P25,
                                 {{0, 0, 1, "e2"}, {0, 1, 1, "b1"}, {1, 1, 1, "e5"}});
    CHECK(mor_is_iso(A, U));
    ProjMor V = mor_inverse(A, U);
    CHECK(mor_equal(mor_compose(A, U, V), mor_identity(A, P25)));
    CHECK(mor_equal(mor_compose(A, V, U), mor_identity(A, P25)));
    // the inverse negates the radical entry
    ProjMor Vexp = mor_from_entries(
        A, P25, P25,
        {{0, 0, 1, "e2"}, {0, 1, A.field().neg(1), "b1"}, {1, 1, 1, "e5"}});
    CHECK(mor_equal(V, Vexp));

    // dropping the e5 makes it singular at vertex 5
    ProjMor S = mor_from_entries(A, P25, P25, {{0, 0, 1, "e2"}, {0, 1, 1, "b1"}});
    CHECK_FALSE(mor_is_iso(A, S));

    // a slot permutation is invertible
    ProjMor W = mor_from_entries(A, P25, P52, {{0, 1, 1, "e5"}, {1, 0, 1, "e2"}});
    CHECK(mor_is_iso(A, W));

    // first-summand inclusion and projection
    ProjMor iota = mor_from_entries(A, P2, P25, {{0, 0, 1, "e2"}});
    ProjMor pi = mor_from_entries(A, P25, P2, {{0, 0, 1, "e2"}});
    CHECK(mor_is_section(A, iota));
    CHECK_FALSE(mor_is_retraction(A, iota));
    CHECK(mor_is_retraction(A, pi));
    CHECK_FALSE(mor_is_section(A, pi));
    CHECK(mor_equal(mor_compose(A, iota, pi), mor_identity(A, P2)));

    // entry endpoint validation
    CHECK_THROWS_AS(mor_from_entries(A, P2, P25, {{0, 0, 1, "b1"}}), CfError);
    CHECK_THROWS_AS(mor_from_entries(A, P2, P25, {{5, 0, 1, "e2"}}), CfError);

    CHECK(mor_in_radical(A, mor_from_entries(A, P25, P2, {{0, 1, 1, "b1"}})));
    CHECK_FALSE(mor_in_radical(A, U));
}

TEST_CASE("idempotent splitting of projective objects") {
    AlgebraPtr Ap = fixture_algebra("example-6vertex");
    const Algebra& A = *Ap;
    ProjObj P25{{2, 5}};

    SUBCASE("coordinate projection") {
        ProjMor e = mor_from_entries(A, P25, P25, {{0, 0, 1, "e2"}});
        ProjSplit s = split_idempotent_proj(A, e);
        CHECK(s.sub.verts == std::vector<int>{2});
        CHECK(mor_equal(mor_compose(A, s.pi, s.iota), e));
        CHECK(mor_equal(mor_compose(A, s.iota, s.pi), mor_identity(A, s.sub)));
    }
    SUBCASE("idempotent twisted by a radical off-diagonal") {
        ProjMor e = mor_from_entries(A, P25, P25, {{0, 0, 1, "e2"}, {0, 1, 1, "b1"}});
        CHECK(mor_equal(mor_compose(A, e, e), e));
        ProjSplit s = split_idempotent_proj(A, e);
        CHECK(s.sub.verts == std::vector<int>{2});
        CHECK(mor_equal(mor_compose(A, s.pi, s.iota), e));
        CHECK(mor_equal(mor_compose(A, s.iota, s.pi), mor_identity(A, s.sub)));
    }
    SUBCASE("complementary idempotent") {
        ProjMor e = mor_from_entries(A, P25, P25, {{1, 1, 1, "e5"}});
        ProjSplit s = split_idempotent_proj(A, e);
        CHECK(s.sub.verts == std::vector<int>{5});
    }
}

TEST_CASE("kernel, socle, and projective cover of the socle") {
    SUBCASE("six-vertex: kernel of right multiplication along a1") {
        AlgebraPtr Ap = fixture_algebra("example-6vertex");
        const Algebra& A = *Ap;
        ProjMor d = mor_from_entries(A, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "a1"}});
        KernelSocle ks = kernel_socle_of_mor(A, d);
        CHECK_FALSE(ks.kernel_is_zero);
        CHECK(ks.kernel_dims == std::vector<size_t>{0, 0, 0, 1, 0, 1});
        CHECK(ks.socle_mult == std::vector<size_t>{0, 0, 0, 1, 0, 1});
        ProjObj cover = projective_cover_of_socle(A, ks.socle_mult);
        CHECK(cover.verts == std::vector<int>{4, 6});
    }
    SUBCASE("nine-vertex: kernel of right multiplication along a5*a4") {
        AlgebraPtr Ap = fixture_algebra("example-9vertex");
        const Algebra& A = *Ap;
        ProjMor d = mor_from_entries(A, ProjObj{{7}}, ProjObj{{5}}, {{0, 0, 1, "a5*a4"}});
        KernelSocle ks = kernel_socle_of_mor(A, d);
        CHECK(ks.kernel_dims == std::vector<size_t>{0, 0, 0, 0, 0, 0, 0, 1, 1});
        ProjObj cover = projective_cover_of_socle(A, ks.socle_mult);
        CHECK(cover.verts == std::vector<int>{8, 9});
    }
    SUBCASE("injective multiplication has zero kernel") {
        AlgebraPtr Ap = fixture_algebra("toy-a2");
        const Algebra& A = *Ap;
        ProjMor d = mor_from_entries(A, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}});
        KernelSocle ks = kernel_socle_of_mor(A, d);
        CHECK(ks.kernel_is_zero);
        CHECK(projective_cover_of_socle(A, ks.socle_mult).verts.empty());
    }
}
