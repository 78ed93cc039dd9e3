// The random generators must produce structurally valid output for any seed:
// complexes that pass validation, automorphisms that invert, scrambles that
// stay isomorphic to their input, and identical output for identical seeds.

#include "doctest.h"

#include "cforge/decompose.hpp"
#include "cforge/fixtures.hpp"
#include "cforge/randgen.hpp"

using namespace cforge;

TEST_CASE("random complexes are valid and reproducible") {
    for (const char* name : {"example-6vertex", "example-9vertex", "toy-t2"}) {
        AlgebraPtr A = fixture_algebra(name);
        std::mt19937_64 rng(42);
        for (int k = 0; k < 10; ++k) {
            Complex Z = random_complex(A, 0, 3, 3, rng);
            CHECK_NOTHROW(validate_complex(Z));
            CHECK(Z.lo == 0);
        }
    }

    AlgebraPtr A = fixture_algebra("example-6vertex");
    std::mt19937_64 r1(7), r2(7), r3(8);
    Complex a = random_complex(A, 0, 2, 3, r1);
    Complex b = random_complex(A, 0, 2, 3, r2);
    Complex c = random_complex(A, 0, 2, 3, r3);
    CHECK(complex_equal(a, b));
    CHECK_FALSE(complex_equal(a, c));
}

TEST_CASE("random automorphisms invert, even over F_2") {
    for (int prime : {32003, 2}) {
        AlgebraPtr A = fixture_algebra("toy-cycle2", prime);
        std::mt19937_64 rng(5);
        ProjObj obj{{1, 1, 2}};
        for (int k = 0; k < 20; ++k) {
            ProjMor u = random_auto(*A, obj, rng);
            CHECK(mor_is_iso(*A, u));
        }
    }
}

TEST_CASE("random maps into the kernel compose to zero with the differential") {
    Example ex = example_6vertex();
    const Algebra& A = *ex.A;
    std::mt19937_64 rng(11);
    const Complex& X = ex.cx("X"); // [1] P2 -> [2] P1
    for (int k = 0; k < 20; ++k) {
        ProjMor g = random_map_into_kernel(A, ProjObj{{6, 2}}, X, rng);
        CHECK(mor_is_zero(mor_compose(A, g, diff_at(X, X.lo))));
    }
}

TEST_CASE("scrambled copies are isomorphic but rarely equal") {
    Example ex = example_6vertex();
    std::mt19937_64 rng(3);
    int changed = 0;
    for (int k = 0; k < 5; ++k) {
        Scramble s = scramble_complex(ex.cx("Z1"), rng);
        CHECK_NOTHROW(validate_complex(s.twisted));
        CHECK(chain_map_is_iso(s.iso));
        CHECK(are_isomorphic(ex.cx("Z1"), s.twisted).isomorphic);
        if (!complex_equal(s.twisted, ex.cx("Z1"))) ++changed;
    }
    CHECK(changed >= 4);
}
