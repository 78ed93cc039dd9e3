#pragma once
// Univariate polynomials over F_p: coefficient vectors (low degree first,
// trailing zeros trimmed).  Includes the factorization steps needed to find
// idempotents: squarefree part, distinct-degree splitting and a deterministic
// equal-degree split, plus root extraction for split polynomials.

#include "matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cforge {

using Poly = std::vector<uint32_t>; // coefficients, index = degree

Poly poly_trim(Poly a);
int poly_deg(const Poly& a); // -1 for the zero polynomial
bool poly_is_zero(const Poly& a);
Poly poly_add(const Fp& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fp& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fp& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fp& F, uint32_t s, const Poly& a);
Poly poly_monic(const Fp& F, const Poly& a);
// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Fp& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fp& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Fp& F, Poly a, Poly b); // monic gcd
// g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_xgcd(const Fp& F, const Poly& a, const Poly& b);
Poly poly_derivative(const Fp& F, const Poly& a);
uint32_t poly_eval(const Fp& F, const Poly& a, uint32_t x);
// base^e mod m
Poly poly_powmod(const Fp& F, Poly base, uint64_t e, const Poly& m);
std::string poly_to_string(const Poly& a, const std::string& var = "x");

// Largest squarefree divisor (the radical) of a nonzero polynomial.
// Assumes p exceeds the degree, so the derivative of a nonconstant
// polynomial never vanishes.
Poly poly_squarefree_part(const Fp& F, const Poly& a);

// All roots in F_p of a polynomial that splits into distinct linear factors.
// Deterministic: gcd((x+c)^((p-1)/2) - 1, f) for c = 0,1,2,...
std::vector<uint32_t> poly_roots_of_split_squarefree(const Fp& F, const Poly& f);

// Try to write a squarefree monic polynomial of degree >= 2 as a product of
// two coprime nonconstant monic factors.  Returns nothing when f is
// irreducible; otherwise a pair (f1, f2) with f = f1*f2, gcd(f1,f2)=1.
std::optional<std::pair<Poly, Poly>> poly_coprime_split(const Fp& F, const Poly& f);

// Minimal polynomial of a square matrix, monic.
Poly minimal_polynomial(const Fp& F, const Mat& A);

} // namespace cforge
