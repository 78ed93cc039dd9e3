#include "cforge/fixtures.hpp"

namespace cforge {

namespace {

Relation monomial(std::vector<int> arrows_in_application_order) {
    Relation r;
    r.terms.push_back(RelTerm{1, std::move(arrows_in_application_order)});
    return r;
}

// Six vertices; two paths 1 -> 2 -> 3 -> 4 and 1 -> 2 -> 5 -> 6 sharing the
// first arrow, with both length-3 composites killed.
AlgebraPtr alg6(const Fp& F) {
    std::vector<Arrow> ar = {
        {"a1", 1, 2}, {"a2", 2, 3}, {"a3", 3, 4}, {"b1", 2, 5}, {"b2", 5, 6},
    };
    std::vector<Relation> rel = {monomial({0, 1, 2}), monomial({0, 3, 4})};
    return Algebra::build(F, 6, std::move(ar), std::move(rel));
}

// Nine vertices; a long spine 1 -> 3 -> 4 -> 5 -> 6 -> 7 -> 8 with side
// arrows 2 -> 3 and 7 -> 9, and five length-2 composites killed.
AlgebraPtr alg9(const Fp& F) {
    std::vector<Arrow> ar = {
        {"a1", 1, 3}, {"b1", 2, 3}, {"a2", 3, 4}, {"a3", 4, 5},
        {"a4", 5, 6}, {"a5", 6, 7}, {"a6", 7, 8}, {"b2", 7, 9},
    };
    std::vector<Relation> rel = {
        monomial({0, 2}), // a2 . a1
        monomial({1, 2}), // a2 . b1
        monomial({3, 4}), // a4 . a3
        monomial({5, 7}), // b2 . a5
        monomial({5, 6}), // a6 . a5
    };
    return Algebra::build(F, 9, std::move(ar), std::move(rel));
}

AlgebraPtr alg_a2(const Fp& F) {
    return Algebra::build(F, 2, {{"x", 1, 2}}, {});
}

AlgebraPtr alg_a3(const Fp& F) {
    return Algebra::build(F, 3, {{"x", 1, 2}, {"y", 2, 3}}, {monomial({0, 1})});
}

// Two vertices with arrows both ways and both length-2 cycles killed.
AlgebraPtr alg_cycle2(const Fp& F) {
    return Algebra::build(F, 2, {{"x", 1, 2}, {"y", 2, 1}},
                          {monomial({0, 1}), monomial({1, 0})});
}

// Five vertices: 1 -> 2, two arrows out of 2 and two out of 5 into the same
// targets 3 and 4; the composites through vertex 2 are killed.
AlgebraPtr alg_t2(const Fp& F) {
    std::vector<Arrow> ar = {
        {"x", 1, 2}, {"y", 2, 3}, {"z", 2, 4}, {"q", 5, 3}, {"r", 5, 4},
    };
    std::vector<Relation> rel = {monomial({0, 1}), monomial({0, 2})};
    return Algebra::build(F, 5, std::move(ar), std::move(rel));
}

AlgebraPtr alg_kronecker(const Fp& F) {
    return Algebra::build(F, 2, {{"x", 1, 2}, {"y", 1, 2}}, {});
}

ProjMor mor(const AlgebraPtr& A, ProjObj dom, ProjObj cod,
            const std::vector<MorEntry>& entries) {
    return mor_from_entries(*A, std::move(dom), std::move(cod), entries);
}

} // namespace

std::vector<std::string> fixture_algebra_names() {
    return {"example-6vertex", "example-9vertex", "toy-a2",
            "toy-a3",          "toy-cycle2",      "toy-t2",
            "toy-kronecker"};
}

AlgebraPtr fixture_algebra(const std::string& name, uint32_t prime) {
    Fp F(prime);
    if (name == "example-6vertex") return alg6(F);
    if (name == "example-9vertex") return alg9(F);
    if (name == "toy-a2") return alg_a2(F);
    if (name == "toy-a3") return alg_a3(F);
    if (name == "toy-cycle2") return alg_cycle2(F);
    if (name == "toy-t2") return alg_t2(F);
    if (name == "toy-kronecker") return alg_kronecker(F);
    throw CfError("unknown fixture algebra '" + name + "'");
}

const Complex& Example::cx(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) throw CfError("no fixture complex '" + name + "'");
    return it->second;
}

const ChainMap& Example::mp(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw CfError("no fixture map '" + name + "'");
    return it->second;
}

Example example_6vertex(uint32_t prime) {
    Example ex;
    ex.A = fixture_algebra("example-6vertex", prime);
    const AlgebraPtr& A = ex.A;

    ProjObj P1{{1}}, P2{{2}}, P6{{6}};
    ProjObj P25{{2, 5}}, P46{{4, 6}}, P22{{2, 2}};

    // X = [1] P2 --a1--> [2] P1
    ex.complexes.emplace(
        "X", make_complex(A, 1, {P2, P1}, {mor(A, P2, P1, {{0, 0, 1, "a1"}})}));

    // Z1 = [0] P6 --(b2*b1 ; b2)--> [1] P2+P5 --(a1, 0)--> [2] P1
    ex.complexes.emplace(
        "Z1", make_complex(A, 0, {P6, P25, P1},
                           {mor(A, P6, P25, {{0, 0, 1, "b2*b1"}, {1, 0, 1, "b2"}}),
                            mor(A, P25, P1, {{0, 0, 1, "a1"}})}));

    // Z2 = [0] P4+P6 --[[a3*a2, b2*b1], [a3*a2, 2*b2*b1]]--> [1] P2+P2
    //      --(a1, 0)--> [2] P1
    ex.complexes.emplace(
        "Z2", make_complex(A, 0, {P46, P22, P1},
                           {mor(A, P46, P22,
                                {{0, 0, 1, "a3*a2"},
                                 {0, 1, 1, "b2*b1"},
                                 {1, 0, 1, "a3*a2"},
                                 {1, 1, 2, "b2*b1"}}),
                            mor(A, P22, P1, {{0, 0, 1, "a1"}})}));

    // Y = [0] P4+P6 --[[a3*a2, b2*b1], [0, b2]]--> [1] P2+P5 --(a1, 0)--> [2] P1
    ex.complexes.emplace(
        "Y", make_complex(A, 0, {P46, P25, P1},
                          {mor(A, P46, P25,
                               {{0, 0, 1, "a3*a2"}, {0, 1, 1, "b2*b1"}, {1, 1, 1, "b2"}}),
                           mor(A, P25, P1, {{0, 0, 1, "a1"}})}));

    // EXT = [0] P6 --b2*b1--> [1] P2 --a1--> [2] P1
    ex.complexes.emplace(
        "EXT", make_complex(A, 0, {P6, P2, P1},
                            {mor(A, P6, P2, {{0, 0, 1, "b2*b1"}}),
                             mor(A, P2, P1, {{0, 0, 1, "a1"}})}));

    // FZ1 = Z1 with its degree-0 object removed
    ex.complexes.emplace("FZ1", truncate_low(ex.cx("Z1")));

    // f : Z1 -> Z2, the composite of h1 and h2 below
    ex.maps.emplace(
        "f", make_chain_map(ex.cx("Z1"), ex.cx("Z2"), 0,
                            {mor(A, P6, P46, {{1, 0, 1, "e6"}}),
                             mor(A, P25, P22,
                                 {{0, 0, 1, "e2"}, {1, 0, 1, "e2"}, {1, 1, 1, "b1"}}),
                             mor(A, P1, P1, {{0, 0, 1, "e1"}})}));

    // h1 : Z1 -> Y
    ex.maps.emplace(
        "h1", make_chain_map(ex.cx("Z1"), ex.cx("Y"), 0,
                             {mor(A, P6, P46, {{1, 0, 1, "e6"}}),
                              mor(A, P25, P25, {{0, 0, 1, "e2"}, {1, 1, 1, "e5"}}),
                              mor(A, P1, P1, {{0, 0, 1, "e1"}})}));

    // h2 : Y -> Z2
    ex.maps.emplace(
        "h2", make_chain_map(ex.cx("Y"), ex.cx("Z2"), 0,
                             {mor(A, P46, P46, {{0, 0, 1, "e4"}, {1, 1, 1, "e6"}}),
                              mor(A, P25, P22,
                                  {{0, 0, 1, "e2"}, {1, 0, 1, "e2"}, {1, 1, 1, "b1"}}),
                              mor(A, P1, P1, {{0, 0, 1, "e1"}})}));

    // incl : X -> FZ1, the first-summand inclusion
    ex.maps.emplace(
        "incl", make_chain_map(ex.cx("X"), ex.cx("FZ1"), 1,
                               {mor(A, P2, P25, {{0, 0, 1, "e2"}}),
                                mor(A, P1, P1, {{0, 0, 1, "e1"}})}));

    return ex;
}

Example example_9vertex(uint32_t prime) {
    Example ex;
    ex.A = fixture_algebra("example-9vertex", prime);
    const AlgebraPtr& A = ex.A;

    ProjObj P3{{3}}, P5{{5}}, P6{{6}}, P7{{7}};
    ProjObj P98{{9, 8}}, P77{{7, 7}}, P56{{5, 6}}, P55{{5, 5}}, P43{{4, 3}};

    // X = [1] P7 --a5*a4--> [2] P5 --a3*a2--> [3] P3
    ex.complexes.emplace(
        "X", make_complex(A, 1, {P7, P5, P3},
                          {mor(A, P7, P5, {{0, 0, 1, "a5*a4"}}),
                           mor(A, P5, P3, {{0, 0, 1, "a3*a2"}})}));

    // D = [0] P9+P8 --[[b2, 0], [b2, a6]]--> [1] P7+P7
    //     --[[a5*a4, 0], [0, a5]]--> [2] P5+P6 --(a3*a2, 0)--> [3] P3
    ex.complexes.emplace(
        "D", make_complex(
                 A, 0, {P98, P77, P56, P3},
                 {mor(A, P98, P77, {{0, 0, 1, "b2"}, {1, 0, 1, "b2"}, {1, 1, 1, "a6"}}),
                  mor(A, P77, P56, {{0, 0, 1, "a5*a4"}, {1, 1, 1, "a5"}}),
                  mor(A, P56, P3, {{0, 0, 1, "a3*a2"}})}));

    // E = [0] P9+P8 --[[b2, 0], [b2, a6]]--> [1] P7+P7
    //     --diag(a5*a4, a5*a4)--> [2] P5+P5 --[[0, a3], [a3*a2, 0]]--> [3] P4+P3
    ex.complexes.emplace(
        "E", make_complex(
                 A, 0, {P98, P77, P55, P43},
                 {mor(A, P98, P77, {{0, 0, 1, "b2"}, {1, 0, 1, "b2"}, {1, 1, 1, "a6"}}),
                  mor(A, P77, P55, {{0, 0, 1, "a5*a4"}, {1, 1, 1, "a5*a4"}}),
                  mor(A, P55, P43, {{0, 1, 1, "a3"}, {1, 0, 1, "a3*a2"}})}));

    // W2 = [1] P7 --a5--> [2] P6 (complement of X inside D with degree 0 dropped)
    ex.complexes.emplace(
        "W2", make_complex(A, 1, {P7, P6}, {mor(A, P7, P6, {{0, 0, 1, "a5"}})}));

    // WP = [1] P7 --a5*a4--> [2] P5 --a3--> [3] P4 (same role inside E)
    ex.complexes.emplace(
        "WP", make_complex(A, 1, {P7, P5, ProjObj{{4}}},
                           {mor(A, P7, P5, {{0, 0, 1, "a5*a4"}}),
                            mor(A, P5, ProjObj{{4}}, {{0, 0, 1, "a3"}})}));

    // YD = [1] P7 --a5--> [2] P6, separate copy kept under the name used when
    // building one-step extensions of X.
    ex.complexes.emplace("YD", ex.cx("W2"));

    // f : D -> E; identity in degrees 0 and 1.
    ex.maps.emplace(
        "f", make_chain_map(
                 ex.cx("D"), ex.cx("E"), 0,
                 {mor(A, P98, P98, {{0, 0, 1, "e9"}, {1, 1, 1, "e8"}}),
                  mor(A, P77, P77, {{0, 0, 1, "e7"}, {1, 1, 1, "e7"}}),
                  mor(A, P56, P55, {{0, 0, 1, "e5"}, {1, 1, 1, "a4"}}),
                  mor(A, P3, P43, {{1, 0, 1, "e3"}})}));

    return ex;
}

} // namespace cforge
