#pragma once
// Direct-sum decomposition of bounded complexes of projectives.
//
// The engine works inside the endomorphism algebra End(X) of chain maps:
// it computes the Jacobson radical, decides whether End(X)/rad is a division
// algebra (then X is indecomposable), and otherwise produces a nontrivial
// idempotent chain endomorphism, splits X along it degree by degree, and
// recurses.  Every choice is deterministic for a fixed seed; randomness only
// enters as a seeded fallback when searching for a splitting element.

#include "assoc.hpp"
#include "complex.hpp"

#include <cstdint>
#include <optional>

namespace cforge {

inline constexpr uint64_t kDefaultSeed = 0xC0FFEE;

// End(X) with a chain-map basis and the multiplication table on it.
// The product of f and g is the composite "g first, then f".
struct EndoAlgebra {
    Complex X;
    ChainHomLayout layout;
    std::vector<ChainMap> basis;
    Mat basis_rows;                        // row i = coordinates of basis[i]
    StructAlg alg;                         // same basis, structure constants
    ChainMap from_coords(const Vec& c) const;
    Vec to_coords(const ChainMap& f) const; // throws if f is not an endomorphism of X
};

EndoAlgebra endo_algebra(const Complex& X);

// Rows span the Jacobson radical of End(X); needs p > dim End(X) and throws
// "prime too small" otherwise.
Mat radical_of_endo(const EndoAlgebra& E);

// True iff End(X)/rad is a division algebra, i.e. X is indecomposable.
// Needs p > dim End(X).  The zero complex reports false.
bool is_local_endo(const EndoAlgebra& E);

struct SplitOnce {
    bool indecomposable = false; // certified; the remaining fields are empty
    Complex part_a, part_b;      // nontrivial summands with X = part_a + part_b
    ChainMap iota_a, pi_a;       // part_a -> X and X -> part_a, pi.iota = id
    ChainMap iota_b, pi_b;
};

// Certify X indecomposable or split off a nontrivial direct summand.  When
// p <= dim End(X) the endomorphism algebra is searched exhaustively for an
// idempotent (only feasible for small cases; throws "prime too small" when
// the search space exceeds the built-in cap).  Throws on the zero complex.
SplitOnce split_once(const Complex& X, uint64_t seed = kDefaultSeed);

bool is_certified_indecomposable(const Complex& X, uint64_t seed = kDefaultSeed);

struct Decomposition {
    std::vector<Complex> reps;         // one representative per isomorphism class
    std::vector<size_t> multiplicity;  // parallel to reps
    std::vector<Complex> instances;    // all indecomposable summands, canonical order
    std::vector<size_t> instance_class; // index into reps, parallel to instances
    std::vector<ChainMap> iotas;       // instances[k] -> X
    std::vector<ChainMap> pis;         // X -> instances[k]
    Complex sum;                       // direct sum of the instances in order
    ChainMap iso;                      // sum -> X
    ChainMap iso_inv;                  // X -> sum
};

// Full decomposition into indecomposable summands with witnesses:
//   pis[s].iotas[t] = delta_st id,   sum_k iotas[k].pis[k] = id_X,
// and iso, iso_inv are mutually inverse chain isomorphisms.
Decomposition decompose(const Complex& X, uint64_t seed = kDefaultSeed);

struct IsoCheck {
    bool isomorphic = false;
    std::optional<ChainMap> witness; // an isomorphism X -> Y when one exists
};

// Decide isomorphism by decomposing both sides and matching the parts.
IsoCheck are_isomorphic(const Complex& X, const Complex& Y, uint64_t seed = kDefaultSeed);

} // namespace cforge
