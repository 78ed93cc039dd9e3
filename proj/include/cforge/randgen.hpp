#pragma once
// Seeded pseudo-random generators for property tests: morphisms with uniform
// path coefficients, invertible endomorphisms, objects, valid complexes whose
// differentials are sampled from the exact solution space of d.d = 0, and
// basis-scrambled isomorphic copies of a given complex.  Everything is
// deterministic for a fixed generator state.

#include "complex.hpp"

#include <random>

namespace cforge {

// Uniform element of Hom(P_dom_v, P_cod_v): independent uniform coefficients
// on every path basis vector.
AlgElem random_elem(const Algebra& A, int dom_v, int cod_v, std::mt19937_64& rng);

// Uniform morphism dom -> cod, entrywise.
ProjMor random_mor(const Algebra& A, const ProjObj& dom, const ProjObj& cod,
                   std::mt19937_64& rng);

// Random invertible endomorphism of obj.  Rejection-samples uniform
// endomorphisms; after too many misses (tiny fields) falls back to
// identity + a random radical part, which is always invertible.
ProjMor random_auto(const Algebra& A, const ProjObj& obj, std::mt19937_64& rng);

// Random object with between min_slots and max_slots summands, each a
// uniformly chosen P_v.
ProjObj random_obj(const Algebra& A, size_t min_slots, size_t max_slots,
                   std::mt19937_64& rng);

// Uniform sample of { g : dom -> X^lo  with  d_X . g = 0 }; the zero
// morphism of the right shape when X is empty at its lowest degree.
ProjMor random_map_into_kernel(const Algebra& A, const ProjObj& dom, const Complex& X,
                               std::mt19937_64& rng);

// A valid complex on [lo, hi]: random objects of 1..max_slots summands, the
// lowest differential uniform, every later one uniform in the solution space
// of  d . d_prev = 0.
Complex random_complex(AlgebraPtr A, int lo, int hi, size_t max_slots,
                       std::mt19937_64& rng);

struct Scramble {
    Complex twisted; // isomorphic copy with every degree rewritten through a
                     // random invertible change of basis
    ChainMap iso;    // witness: input -> twisted
};

Scramble scramble_complex(const Complex& Z, std::mt19937_64& rng);

} // namespace cforge
