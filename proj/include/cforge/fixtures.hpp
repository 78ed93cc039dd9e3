#pragma once
// Built-in worked examples over small bound quiver algebras: the two main
// fixture algebras with their named complexes and chain maps, plus a few toy
// algebras.  Used by the unit tests, the acceptance runner, and the CLI.

#include "complex.hpp"

#include <map>

namespace cforge {

// "example-6vertex", "example-9vertex", "toy-a2", "toy-a3", "toy-cycle2",
// "toy-t2", "toy-kronecker"
std::vector<std::string> fixture_algebra_names();
AlgebraPtr fixture_algebra(const std::string& name, uint32_t prime = 32003);

// One worked example: an algebra with named complexes and chain maps.
struct Example {
    AlgebraPtr A;
    std::map<std::string, Complex> complexes;
    std::map<std::string, ChainMap> maps;

    const Complex& cx(const std::string& name) const;
    const ChainMap& mp(const std::string& name) const;
};

// Complexes: X, Z1, Z2, Y, EXT, FZ1; maps: f, h1, h2, incl (X -> FZ1).
Example example_6vertex(uint32_t prime = 32003);
// Complexes: X, D, E, W2, WP, YD; maps: f (D -> E).
Example example_9vertex(uint32_t prime = 32003);

} // namespace cforge
