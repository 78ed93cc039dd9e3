// Frozen expected values for typing chain maps: degreewise common-summand
// elimination, one-sided invertibility of components, the four shape kinds
// of asserted-irreducible maps, the identity-plus-radical tail shape between
// one-step extensions, factorization witnesses against irreducibility, and
// restriction typing.

#include "doctest.h"

#include "cforge/classify.hpp"
#include "cforge/fixtures.hpp"

using namespace cforge;

namespace {

Complex stalk(AlgebraPtr A, int deg, std::vector<int> verts) {
    return make_complex(A, deg, {ProjObj{std::move(verts)}}, {});
}

// The inclusion of the base into the whole one-step extension Z1.
ChainMap base_inclusion_6v(const Example& ex) {
    const Algebra& A = *ex.A;
    return make_chain_map(ex.cx("X"), ex.cx("Z1"), 1,
                          {mor_from_entries(A, ProjObj{{2}}, ProjObj{{2, 5}}, {{0, 0, 1, "e2"}}),
                           mor_from_entries(A, ProjObj{{1}}, ProjObj{{1}}, {{0, 0, 1, "e1"}})});
}

// The one-dimensional space of chain maps Z1 -> EXT is spanned by this map:
// identity on the head and the top, the projection away from P_5 in between.
ChainMap onto_extension_6v(const Example& ex) {
    const Algebra& A = *ex.A;
    return make_chain_map(ex.cx("Z1"), ex.cx("EXT"), 0,
                          {mor_from_entries(A, ProjObj{{6}}, ProjObj{{6}}, {{0, 0, 1, "e6"}}),
                           mor_from_entries(A, ProjObj{{2, 5}}, ProjObj{{2}}, {{0, 0, 1, "e2"}}),
                           mor_from_entries(A, ProjObj{{1}}, ProjObj{{1}}, {{0, 0, 1, "e1"}})});
}

} // namespace

TEST_CASE("split_common peels identity blocks and leaves radical residuals") {
    Example ex = example_6vertex();
    const Algebra& A = *ex.A;

    SUBCASE("the identity map is entirely common") {
        CommonSplit cs = split_common(chain_identity(ex.cx("Z1")));
        REQUIRE(cs.lo == 0);
        REQUIRE(cs.degrees.size() == 3);
        for (int i = 0; i <= 2; ++i) {
            const DegreeSplit& s = cs.degrees[i];
            CHECK(s.common == obj_at(ex.cx("Z1"), i));
            CHECK(s.dom_rest.empty());
            CHECK(s.cod_rest.empty());
            CHECK(mor_equal(split_normal_form(A, s), mor_identity(A, s.common)));
        }
    }

    SUBCASE("a radical map has no common part") {
        AlgebraPtr A2 = fixture_algebra("toy-a2");
        ProjMor x = mor_from_entries(*A2, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}});
        ChainMap f = make_chain_map(stalk(A2, 0, {2}), stalk(A2, 0, {1}), 0, {x});
        CommonSplit cs = split_common(f);
        REQUIRE(cs.degrees.size() == 1);
        CHECK(cs.degrees[0].common.size() == 0);
        CHECK(mor_equal(cs.degrees[0].residual, x));
        CHECK(mor_equal(cs.degrees[0].dom_auto, mor_identity(*A2, x.dom)));
    }

    SUBCASE("the 6-vertex map splits into the base and the arrow residual") {
        CommonSplit cs = split_common(ex.mp("f"));
        REQUIRE(cs.lo == 0);
        REQUIRE(cs.degrees.size() == 3);

        CHECK(cs.degrees[0].common == ProjObj{{6}});
        CHECK(cs.degrees[0].dom_pivot == std::vector<size_t>{0});
        CHECK(cs.degrees[0].cod_pivot == std::vector<size_t>{1});
        CHECK(cs.degrees[0].dom_rest.empty());
        CHECK(cs.degrees[0].cod_rest == std::vector<size_t>{0});

        CHECK(cs.degrees[1].common == ProjObj{{2}});
        CHECK(cs.degrees[1].dom_pivot == std::vector<size_t>{0});
        CHECK(cs.degrees[1].cod_pivot == std::vector<size_t>{0});
        CHECK(cs.degrees[1].dom_rest == std::vector<size_t>{1});
        CHECK(cs.degrees[1].cod_rest == std::vector<size_t>{1});
        CHECK(mor_equal(cs.degrees[1].residual,
                        mor_from_entries(A, ProjObj{{5}}, ProjObj{{2}}, {{0, 0, 1, "b1"}})));

        CHECK(cs.degrees[2].common == ProjObj{{1}});
        CHECK(cs.degrees[2].dom_rest.empty());
        CHECK(cs.degrees[2].cod_rest.empty());

        for (int i = 0; i <= 2; ++i) {
            const DegreeSplit& s = cs.degrees[i];
            CHECK(mor_is_iso(A, s.dom_auto));
            CHECK(mor_is_iso(A, s.cod_auto));
            CHECK(mor_equal(split_reassemble(A, s), chain_comp_at(ex.mp("f"), i)));
        }

        // Fixed point: eliminating the residual again finds nothing common.
        ChainMap rs = make_chain_map(stalk(ex.A, 0, {5}), stalk(ex.A, 0, {2}), 0,
                                     {cs.degrees[1].residual});
        CHECK(split_common(rs).degrees[0].common.size() == 0);
    }

    SUBCASE("a pivot that needs scaling and causes fill-in") {
        ProjObj dom{{2, 5}}, cod{{2, 2}};
        ProjMor g = mor_from_entries(A, dom, cod,
                                     {{0, 0, 2, "e2"},
                                      {0, 1, 1, "b1"},
                                      {1, 0, 3, "e2"},
                                      {1, 1, 2, "b1"}});
        ChainMap f = make_chain_map(make_complex(ex.A, 0, {dom}, {}),
                                    make_complex(ex.A, 0, {cod}, {}), 0, {g});
        CommonSplit cs = split_common(f);
        const DegreeSplit& s = cs.degrees[0];
        CHECK(s.common == ProjObj{{2}});
        CHECK(s.dom_pivot == std::vector<size_t>{0});
        CHECK(s.cod_pivot == std::vector<size_t>{0});
        // 2 - 3/2 = 1/2 over F_32003
        CHECK(mor_equal(s.residual,
                        mor_from_entries(A, ProjObj{{5}}, ProjObj{{2}}, {{0, 0, 16002, "b1"}})));
        CHECK(mor_equal(split_reassemble(A, s), g));
    }
}

TEST_CASE("entry_type solves for one-sided inverses") {
    Example ex = example_6vertex();
    const Algebra& A = *ex.A;
    ProjObj P2{{2}}, P25{{2, 5}};

    CHECK(entry_type(A, mor_identity(A, P25)) == EntryType::Both);
    CHECK(entry_type(A, mor_from_entries(A, P2, P25, {{0, 0, 1, "e2"}})) == EntryType::Section);
    CHECK(entry_type(A, mor_from_entries(A, P25, P2, {{0, 0, 1, "e2"}})) ==
          EntryType::Retraction);
    CHECK(entry_type(A, mor_zero(A, ProjObj{}, ProjObj{})) == EntryType::Both);

    AlgebraPtr A2 = fixture_algebra("toy-a2");
    CHECK(entry_type(*A2, mor_from_entries(*A2, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}})) ==
          EntryType::Neither);

    CHECK(std::string(entry_type_name(EntryType::Neither)) == "neither");
    CHECK(std::string(entry_type_name(EntryType::Both)) == "both");
}

TEST_CASE("has_irreducible_self_map detects exactly the quiver loops") {
    Example ex = example_6vertex();
    for (int v = 1; v <= 6; ++v) CHECK_FALSE(has_irreducible_self_map(*ex.A, v));
    Example e9 = example_9vertex();
    for (int v = 1; v <= 9; ++v) CHECK_FALSE(has_irreducible_self_map(*e9.A, v));

    AlgebraPtr L = Algebra::build(Fp(32003), 1, {Arrow{"x", 1, 1}},
                                  {Relation{{RelTerm{1, {0, 0}}}}});
    CHECK(has_irreducible_self_map(*L, 1));

    ProjMor x = mor_from_entries(*L, ProjObj{{1}}, ProjObj{{1}}, {{0, 0, 1, "x"}});
    ChainMap f = make_chain_map(stalk(L, 0, {1}), stalk(L, 0, {1}), 0, {x});
    CHECK_THROWS_WITH(classify_method(f),
                      "classify_method: hypothesis violated: P1 has an irreducible self-map");
}

TEST_CASE("classify_method types the fixture maps") {
    Example ex = example_6vertex();
    Example e9 = example_9vertex();

    SUBCASE("the 9-vertex map is ret-irr-sec with pivot degree 2") {
        const Algebra& B = *e9.A;
        ClassificationResult r = classify_method(e9.mp("f"));
        CHECK(r.kind == MapKind::RetIrrSec);
        REQUIRE(r.pivot.has_value());
        CHECK(*r.pivot == 2);
        CHECK(r.lo == 0);
        CHECK(r.entry_types == std::vector<EntryType>{EntryType::Both, EntryType::Both,
                                                      EntryType::Neither, EntryType::Section});
        CHECK(std::string(map_kind_name(r.kind)) == "ret-irr-sec");

        const DegreeSplit& s = r.evidence.degrees[2];
        CHECK(s.common == ProjObj{{5}});
        CHECK(mor_equal(s.residual,
                        mor_from_entries(B, ProjObj{{6}}, ProjObj{{5}}, {{0, 0, 1, "a4"}})));
        CHECK(elem_in_radical(B, s.residual.at(0, 0)));
        CHECK_FALSE(elem_in_radical_square(B, s.residual.at(0, 0)));
        CHECK(entry_type(B, chain_comp_at(e9.mp("f"), 2)) == EntryType::Neither);
    }

    SUBCASE("the inclusion of the base into its extension is of kind sec") {
        ClassificationResult r = classify_method(base_inclusion_6v(ex));
        CHECK(r.kind == MapKind::Sec);
        CHECK_FALSE(r.pivot.has_value());
        CHECK(r.entry_types == std::vector<EntryType>{EntryType::Section, EntryType::Section,
                                                      EntryType::Both});
        // kind sec forces an empty domain residual in degree 0
        CHECK(r.evidence.degrees[0].dom_rest.empty());
    }

    SUBCASE("the map onto the extension is of kind ret") {
        ClassificationResult r = classify_method(onto_extension_6v(ex));
        CHECK(r.kind == MapKind::Ret);
        CHECK_FALSE(r.pivot.has_value());
        CHECK(r.entry_types == std::vector<EntryType>{EntryType::Both, EntryType::Retraction,
                                                      EntryType::Both});
    }

    SUBCASE("an irreducible component at the lowest degree gives irr-sec") {
        AlgebraPtr A2 = fixture_algebra("toy-a2");
        ProjMor x = mor_from_entries(*A2, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}});
        ChainMap f = make_chain_map(stalk(A2, 1, {2}), stalk(A2, 1, {1}), 1, {x});
        ClassificationResult r = classify_method(f);
        CHECK(r.kind == MapKind::IrrSec);
        REQUIRE(r.pivot.has_value());
        CHECK(*r.pivot == 1);
        CHECK(std::string(map_kind_name(r.kind)) == "irr-sec");
    }

    SUBCASE("scaling does not change the classification") {
        ClassificationResult r = classify_method(chain_scale(7, e9.mp("f")));
        CHECK(r.kind == MapKind::RetIrrSec);
        CHECK(*r.pivot == 2);
    }
}

TEST_CASE("classify_method rejects impossible patterns") {
    Example ex = example_6vertex();

    // the worked non-irreducible map: a strict section below the pivot
    CHECK_THROWS_WITH(classify_method(ex.mp("f")),
                      "classify_method: inconsistent pattern: a section sits below the "
                      "irreducible component");
    CHECK_THROWS_WITH(classify_method(chain_identity(ex.cx("Z1"))),
                      "classify_method: inconsistent pattern: every component is invertible");
    CHECK_THROWS_WITH(classify_method(chain_zero(ex.cx("X"), ex.cx("Z1"))),
                      "classify_method: inconsistent pattern: f is the zero map");
    Complex XX = direct_sum_complex(ex.cx("X"), ex.cx("X"));
    CHECK_THROWS_WITH(classify_method(chain_identity(XX)),
                      "classify_method: the domain is not indecomposable");

    // two radical-irreducible components cannot sit in one irreducible map
    AlgebraPtr A3 = fixture_algebra("toy-a3");
    const Algebra& B = *A3;
    Complex Xa = make_complex(A3, 1, {ProjObj{{2}}, ProjObj{{1}}},
                              {mor_from_entries(B, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}})});
    Complex Ya = make_complex(A3, 1, {ProjObj{{3}}, ProjObj{{2}}},
                              {mor_from_entries(B, ProjObj{{3}}, ProjObj{{2}}, {{0, 0, 1, "y"}})});
    ChainMap w = make_chain_map(
        Ya, Xa, 1,
        {mor_from_entries(B, ProjObj{{3}}, ProjObj{{2}}, {{0, 0, 1, "y"}}),
         mor_from_entries(B, ProjObj{{2}}, ProjObj{{1}}, {{0, 0, 1, "x"}})});
    CHECK_THROWS_WITH(classify_method(w),
                      "classify_method: inconsistent pattern: more than one irreducible "
                      "component");
}

TEST_CASE("check_F_shape reports the worked tail shape") {
    Example ex = example_6vertex();
    const Algebra& A = *ex.A;

    SUBCASE("the worked map: identity on the base plus the arrow residual") {
        FShapeReport rep = check_F_shape(ex.mp("f"));
        CHECK(rep.shape_confirmed);
        CHECK(rep.common_is_base);
        CHECK(rep.residual_radical);
        CHECK_FALSE(rep.degenerate);
        CHECK_FALSE(rep.section_like);
        CHECK_FALSE(rep.retraction_like);
        CHECK(rep.note ==
              "the tail restriction is the identity on the base plus a radical residual");

        CHECK(are_isomorphic(rep.base, ex.cx("X")).isomorphic);
        CHECK(are_isomorphic(rep.dom_rest, stalk(ex.A, 1, {5})).isomorphic);
        CHECK(are_isomorphic(rep.cod_rest, stalk(ex.A, 1, {2})).isomorphic);

        // the residual is nonzero and lives strictly between the radical layers
        ProjMor g1 = chain_comp_at(rep.residual, 1);
        REQUIRE(g1.dom.size() == 1);
        REQUIRE(g1.cod.size() == 1);
        CHECK_FALSE(elem_is_zero(g1.at(0, 0)));
        CHECK(elem_in_radical(A, g1.at(0, 0)));
        CHECK_FALSE(elem_in_radical_square(A, g1.at(0, 0)));

        // deterministic degreewise elimination: the residual entry is b1 itself
        CHECK(mor_equal(rep.split.degrees[0].residual,
                        mor_from_entries(A, ProjObj{{5}}, ProjObj{{2}}, {{0, 0, 1, "b1"}})));
    }

    SUBCASE("the zero map is degenerate") {
        FShapeReport rep = check_F_shape(chain_zero(ex.cx("Z1"), ex.cx("Z2")));
        CHECK(rep.degenerate);
        CHECK_FALSE(rep.shape_confirmed);
        CHECK(rep.note == "degenerate: the tail restriction of f is zero");
        CHECK(chain_map_is_zero(rep.residual));
    }

    SUBCASE("an identity has a section tail, which is not the expected shape") {
        FShapeReport rep = check_F_shape(chain_identity(ex.cx("Z1")));
        CHECK(rep.section_like);
        CHECK_FALSE(rep.shape_confirmed);
        CHECK(rep.note == "the tail restriction is a section - not the expected shape");
    }

    SUBCASE("a projection onto the extension has a retraction tail") {
        FShapeReport rep = check_F_shape(onto_extension_6v(ex));
        CHECK(rep.retraction_like);
        CHECK_FALSE(rep.shape_confirmed);
        CHECK(rep.note == "the tail restriction is a retraction - not the expected shape");
    }

    SUBCASE("hypothesis failures are thrown") {
        CHECK_THROWS_WITH(check_F_shape(base_inclusion_6v(ex)),
                          "check_F_shape: hypotheses not met: the domain has no degree-0 head");
    }
}

TEST_CASE("verify_nonirreducible_witness certifies the worked factorization") {
    Example ex = example_6vertex();

    WitnessReport w = verify_nonirreducible_witness(ex.mp("f"), ex.mp("h1"), ex.mp("h2"));
    CHECK(w.witnessed);
    CHECK_FALSE(w.h1_section);
    CHECK_FALSE(w.h2_retraction);
    CHECK(w.verdict == "witnessed non-irreducible");

    ChainMap id = chain_identity(ex.cx("Z1"));
    WitnessReport r = verify_nonirreducible_witness(id, id, id);
    CHECK_FALSE(r.witnessed);
    CHECK(r.verdict == "rejected: h1 is a section and h2 is a retraction");

    // the zero map factors through the zero complex with useless legs
    Complex zero;
    zero.A = ex.A;
    WitnessReport z = verify_nonirreducible_witness(chain_zero(ex.cx("X"), ex.cx("EXT")),
                                                    chain_zero(ex.cx("X"), zero),
                                                    chain_zero(zero, ex.cx("EXT")));
    CHECK(z.witnessed);
    CHECK(z.verdict == "witnessed non-irreducible");

    CHECK_THROWS_WITH(
        verify_nonirreducible_witness(ex.mp("f"), ex.mp("h1"), chain_scale(2, ex.mp("h2"))),
        "verify_nonirreducible_witness: composition mismatch: h2.h1 differs from f");
    CHECK_THROWS_WITH(verify_nonirreducible_witness(ex.mp("f"), ex.mp("h1"), onto_extension_6v(ex)),
                      "verify_nonirreducible_witness: the legs do not compose");
}

TEST_CASE("type_agreement compares kinds and pivots") {
    Example ex = example_6vertex();
    Example e9 = example_9vertex();

    AgreementReport a = type_agreement(e9.mp("f"), chain_scale(7, e9.mp("f")));
    CHECK(a.agree);
    CHECK(a.note == "agreement: both maps are ret-irr-sec with pivot degree 2");

    AgreementReport d = type_agreement(onto_extension_6v(ex), base_inclusion_6v(ex));
    CHECK_FALSE(d.agree);
    CHECK(d.note == "property violation: the maps classify differently: ret vs sec");
}

TEST_CASE("restriction_type sorts the three restriction outcomes") {
    Example ex = example_6vertex();

    ChainMap incl = base_inclusion_6v(ex);
    CHECK(restriction_type(incl, 1, 2) == RestrictionType::Section);
    // degree 0 obstructs the splitting of the full map
    CHECK(restriction_type(incl, 0, 2) == RestrictionType::IrreducibleCandidate);

    CHECK(restriction_type(ex.mp("f"), 1, 2) == RestrictionType::IrreducibleCandidate);

    ChainMap onto = onto_extension_6v(ex);
    CHECK(restriction_type(onto, 1, 2) == RestrictionType::Retraction);
    CHECK(restriction_type(onto, 2, 2) == RestrictionType::Section);

    CHECK(std::string(restriction_type_name(RestrictionType::IrreducibleCandidate)) ==
          "irreducible-candidate");
    CHECK_THROWS_WITH(restriction_type(incl, 2, 1), "restriction_type: the degree window is empty");
}

TEST_CASE("a retraction of tails extends to a retraction of the whole map") {
    Example ex = example_6vertex();
    Example e9 = example_9vertex();
    const Algebra& A = *ex.A;

    // Count the solved maps (one-step complex) -> (base) whose tail
    // restriction is a retraction, and check that every one of them is a
    // retraction outright -- the degree-0 square of the needed section is
    // vacuous because the base has no degree-0 part.
    auto check_pair = [](const Complex& Z, const Complex& base) {
        int qualifying = 0;
        const int hi = std::max(Z.hi(), base.hi());
        for (const ChainMap& f : chain_map_space(Z, base)) {
            ChainMap Ff = chain_map_truncate(f, 1, hi);
            if (!chain_is_retraction(Ff)) continue;
            ++qualifying;
            CHECK(chain_is_retraction(f));
            ChainMap s = chain_section_of(Ff).value();
            std::vector<ProjMor> comps;
            for (int i = 1; i <= hi; ++i) comps.push_back(chain_comp_at(s, i));
            ChainMap h = make_chain_map(base, Z, 1, comps);
            CHECK(chain_map_equal(chain_compose(h, f), chain_identity(base)));
        }
        return qualifying;
    };

    int total = 0;
    total += check_pair(ex.cx("Z1"), ex.cx("X"));
    total += check_pair(ex.cx("Z2"), ex.cx("X"));
    total += check_pair(ex.cx("EXT"), ex.cx("X"));
    total += check_pair(e9.cx("D"), e9.cx("X"));
    total += check_pair(e9.cx("E"), e9.cx("X"));

    // A decomposable one-step complex whose head maps into the complement of
    // the base: here the projection onto the base does extend.
    Complex Zp = make_complex(
        ex.A, 0, {ProjObj{{6}}, ProjObj{{2, 5}}, ProjObj{{1}}},
        {mor_from_entries(A, ProjObj{{6}}, ProjObj{{2, 5}}, {{1, 0, 1, "b2"}}),
         mor_from_entries(A, ProjObj{{2, 5}}, ProjObj{{1}}, {{0, 0, 1, "a1"}})});
    int extra = check_pair(Zp, ex.cx("X"));
    CHECK(extra >= 1);
    total += extra;
    CHECK(total >= 1);
}
