#pragma once
// Module-level view of projective objects: the component of P_v at a vertex w
// is spanned by the surviving paths v -> w, arrows act by composition on the
// target side.  Used to compute the kernel of a morphism together with the
// socle of that kernel and its projective cover.

#include "proj.hpp"

namespace cforge {

struct KernelSocle {
    std::vector<size_t> kernel_dims; // per vertex (1-based shifted by -1): dim of Ker at that vertex
    std::vector<size_t> socle_mult;  // multiplicity of the simple at each vertex in soc(Ker)
    bool kernel_is_zero = true;
};

KernelSocle kernel_socle_of_mor(const Algebra& A, const ProjMor& d);

// Direct sum of P_v with the given multiplicities, vertices ascending.
ProjObj projective_cover_of_socle(const Algebra& A, const std::vector<size_t>& mult);

} // namespace cforge
