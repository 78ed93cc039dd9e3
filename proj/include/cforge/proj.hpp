#pragma once
// Morphisms between finite direct sums of indecomposable projectives P_v.
// A morphism P_i -> P_j is an element of e_i A e_j acting by right
// multiplication, stored by its coefficients over the surviving paths from j
// to i.  Composition g.f corresponds to the algebra product u_f * u_g.

#include "quiver.hpp"

namespace cforge {

struct ProjObj {
    std::vector<int> verts; // P_{verts[0]} + P_{verts[1]} + ...
    size_t size() const { return verts.size(); }
    bool operator==(const ProjObj& o) const { return verts == o.verts; }
    bool operator!=(const ProjObj& o) const { return !(*this == o); }
};

struct AlgElem {
    int dom_v = 0, cod_v = 0;
    Vec coeffs; // over paths_from_to(cod_v, dom_v)
};

struct ProjMor {
    ProjObj dom, cod;
    std::vector<AlgElem> e; // row-major: e[b * dom.size() + a] : P_dom[a] -> P_cod[b]
    AlgElem& at(size_t b, size_t a) { return e[b * dom.size() + a]; }
    const AlgElem& at(size_t b, size_t a) const { return e[b * dom.size() + a]; }
};

// --- elements ---
AlgElem elem_zero(const Algebra& A, int dom_v, int cod_v);
AlgElem elem_path(const Algebra& A, size_t path_id); // basis path as a morphism
bool elem_is_zero(const AlgElem& x);
AlgElem elem_add(const Algebra& A, const AlgElem& x, const AlgElem& y);
AlgElem elem_sub(const Algebra& A, const AlgElem& x, const AlgElem& y);
AlgElem elem_scale(const Algebra& A, uint32_t s, const AlgElem& x);
// composition g.f of f: P_a -> P_b, g: P_b -> P_c
AlgElem elem_compose(const Algebra& A, const AlgElem& f, const AlgElem& g);
// coefficient of the trivial path (0 when dom_v != cod_v)
uint32_t elem_scalar_part(const Algebra& A, const AlgElem& x);
// supported only on paths of length >= 1 / >= 2
bool elem_in_radical(const Algebra& A, const AlgElem& x);
bool elem_in_radical_square(const Algebra& A, const AlgElem& x);
std::string elem_to_string(const Algebra& A, const AlgElem& x);

// --- morphisms ---
ProjMor mor_zero(const Algebra& A, ProjObj dom, ProjObj cod);
ProjMor mor_identity(const Algebra& A, ProjObj obj);
bool mor_is_zero(const ProjMor& f);
bool mor_equal(const ProjMor& f, const ProjMor& g);
ProjMor mor_add(const Algebra& A, const ProjMor& f, const ProjMor& g);
ProjMor mor_sub(const Algebra& A, const ProjMor& f, const ProjMor& g);
ProjMor mor_scale(const Algebra& A, uint32_t s, const ProjMor& f);
ProjMor mor_compose(const Algebra& A, const ProjMor& f, const ProjMor& g); // g.f
ProjMor mor_direct_sum(const Algebra& A, const ProjMor& f, const ProjMor& g);
// every nonzero coefficient sits on a path of positive length
bool mor_in_radical(const Algebra& A, const ProjMor& f);

// --- hom spaces as coordinate vectors ---
// layout: entries row-major, each entry over its path basis
size_t hom_dim(const Algebra& A, const ProjObj& X, const ProjObj& Y);
Vec mor_to_vec(const Algebra& A, const ProjMor& f);
ProjMor vec_to_mor(const Algebra& A, const ProjObj& dom, const ProjObj& cod, const Vec& v);

// matrix of g -> g.f : Hom(Y,Z) -> Hom(X,Z), where f: X -> Y
Mat precompose_matrix(const Algebra& A, const ProjMor& f, const ProjObj& Z);
// matrix of g -> f.g : Hom(Z,X) -> Hom(Z,Y), where f: X -> Y
Mat postcompose_matrix(const Algebra& A, const ProjMor& f, const ProjObj& Z);

// invertibility = per-vertex scalar blocks are square and invertible
bool mor_is_iso(const Algebra& A, const ProjMor& f);
ProjMor mor_inverse(const Algebra& A, const ProjMor& f);
// one-sided inverses via exact linear solves
bool mor_is_section(const Algebra& A, const ProjMor& f);
bool mor_is_retraction(const Algebra& A, const ProjMor& f);

struct ProjSplit {
    ProjObj sub;
    ProjMor iota; // sub -> P, with iota.pi = e
    ProjMor pi;   // P -> sub, with pi.iota = id
};

// Split a projective object along an idempotent endomorphism.
ProjSplit split_idempotent_proj(const Algebra& A, const ProjMor& e);

std::string obj_to_string(const ProjObj& o);

// Parse a path expression: "e4" (trivial path at vertex 4) or arrow names
// joined by '*' with the last-applied arrow first ("b2*b1" applies b1, then
// b2).  The result is the residue class in the algebra, possibly zero or a
// combination of basis paths.  Throws on unknown arrows or non-composable
// chains.
AlgElem parse_path_expr(const Algebra& A, const std::string& expr);

// One additive term of a morphism entry: coeff * path into slot (row, col).
struct MorEntry {
    size_t row = 0, col = 0;
    uint32_t coeff = 1;
    std::string path;
};

// Assemble a morphism from per-entry path terms (terms accumulate).
ProjMor mor_from_entries(const Algebra& A, ProjObj dom, ProjObj cod,
                         const std::vector<MorEntry>& entries);

} // namespace cforge
