#pragma once
// Bounded complexes of finite direct sums of indecomposable projectives and
// chain maps between them.  Degrees are arbitrary integers; objects outside
// the stored interval are zero.

#include "proj.hpp"

#include <optional>

namespace cforge {

struct Complex {
    AlgebraPtr A;
    int lo = 0;
    std::vector<ProjObj> obj; // degrees lo .. lo + obj.size() - 1
    std::vector<ProjMor> d;   // d[i] : obj[i] -> obj[i+1]

    int hi() const { return lo + (int)obj.size() - 1; }
    bool in_range(int deg) const { return deg >= lo && deg <= hi(); }
    bool is_zero() const {
        for (const ProjObj& o : obj)
            if (!o.verts.empty()) return false;
        return true;
    }
};

ProjObj obj_at(const Complex& C, int deg);
ProjMor diff_at(const Complex& C, int deg); // zero-shaped outside the interval

// Throws with a description when shapes disagree or d.d != 0.
void validate_complex(const Complex& C);

// Build from pieces (runs validate_complex).
Complex make_complex(AlgebraPtr A, int lo, std::vector<ProjObj> obj, std::vector<ProjMor> d);

// Drop zero objects at both ends (empty complex normalizes to interval [0,-1]).
Complex trim_complex(const Complex& C);

// X[k]: degree i holds X^{i+k}; differentials pick up the sign (-1)^k.
Complex shift_complex(const Complex& C, int k);

// Remove the lowest-degree object (the rest keeps its degrees).
Complex truncate_low(const Complex& C);
// Remove the highest-degree object.
Complex truncate_high(const Complex& C);

// Restrict to the degrees [lo, hi] (a complex again).
Complex restrict_complex(const Complex& C, int lo, int hi);

Complex direct_sum_complex(const Complex& X, const Complex& Y);

bool complex_equal(const Complex& X, const Complex& Y);

struct ChainMap {
    Complex X, Y; // domain and codomain
    int lo = 0;   // degree of comps[0]; covers the union of both intervals
    std::vector<ProjMor> comps;
};

ProjMor chain_comp_at(const ChainMap& f, int deg);
void validate_chain_map(const ChainMap& f); // shapes + commuting squares
ChainMap make_chain_map(Complex X, Complex Y, int lo, std::vector<ProjMor> comps);
ChainMap chain_zero(const Complex& X, const Complex& Y);
ChainMap chain_identity(const Complex& X);
ChainMap chain_add(const ChainMap& f, const ChainMap& g);
ChainMap chain_sub(const ChainMap& f, const ChainMap& g);
ChainMap chain_scale(uint32_t s, const ChainMap& f);
ChainMap chain_compose(const ChainMap& f, const ChainMap& g); // g.f
ChainMap chain_direct_sum(const ChainMap& f, const ChainMap& g);

// An n-ary direct sum together with the canonical inclusion and projection
// of every part: proj[k].incl[k] = id, proj[j].incl[k] = 0 for j != k, and
// the incl[k].proj[k] sum to the identity of `sum`.  Parts are laid out in
// the given order inside each degree.
struct SumDiagram {
    Complex sum;
    std::vector<ChainMap> incl; // parts[k] -> sum
    std::vector<ChainMap> proj; // sum -> parts[k]
};

SumDiagram direct_sum_diagram(AlgebraPtr A, const std::vector<Complex>& parts);

bool chain_map_is_zero(const ChainMap& f);
bool chain_map_equal(const ChainMap& f, const ChainMap& g);
// truncation is functorial: restrict a chain map to given degrees of X and Y
ChainMap chain_map_truncate(const ChainMap& f, int lo, int hi);

// Degreewise invertibility.
bool chain_map_is_iso(const ChainMap& f);
ChainMap chain_map_inverse(const ChainMap& f);

// Coordinates of a chain map: concatenated Hom(X^i, Y^i) over the common
// support interval [max(X.lo,Y.lo), min(X.hi,Y.hi)] intersected degreewise.
struct ChainHomLayout {
    int lo = 0, hi = -1;             // degree range carrying coordinates
    std::vector<size_t> offset;      // per degree, offset into the vector
    size_t total = 0;
};
ChainHomLayout chain_hom_layout(const Complex& X, const Complex& Y);
Vec chain_map_to_vec(const ChainHomLayout& L, const ChainMap& f);
ChainMap vec_to_chain_map(const ChainHomLayout& L, const Complex& X, const Complex& Y, const Vec& v);

// Basis of the space of chain maps X -> Y.
std::vector<ChainMap> chain_map_space(const Complex& X, const Complex& Y);

struct HomotopyHom {
    size_t chain_dim = 0;    // dim of the space of chain maps
    size_t boundary_dim = 0; // dim of null-homotopic maps
    std::vector<ChainMap> reps; // chain maps spanning a complement of the boundaries
    size_t dim() const { return chain_dim - boundary_dim; }
};
// Hom in the homotopy category: chain maps modulo the maps d.s + s.d.
HomotopyHom homotopy_category_hom(const Complex& X, const Complex& Y);

// Split mono / split epi in the chain category, by exact linear solving.
bool chain_is_section(const ChainMap& f);
bool chain_is_retraction(const ChainMap& f);
// Witnesses for the splits: a retraction r with r.f = id_X (exists iff f is a
// section), or a section s with f.s = id_Y (exists iff f is a retraction).
std::optional<ChainMap> chain_retraction_of(const ChainMap& f);
std::optional<ChainMap> chain_section_of(const ChainMap& f);

// C(f)^i = U^{i+1} + V^i with differential [-d_U, 0; f, d_V], for f: U -> V.
Complex mapping_cone(const ChainMap& f);
// Canonical chain maps V -> C(f) and C(f) -> U[1].
ChainMap cone_inclusion(const ChainMap& f);
ChainMap cone_projection(const ChainMap& f);

std::string complex_to_string(const Complex& C);

} // namespace cforge
