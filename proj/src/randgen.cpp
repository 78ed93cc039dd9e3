#include "cforge/randgen.hpp"

namespace cforge {

namespace {

uint32_t random_coeff(const Fp& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, F.p() - 1);
    return dist(rng);
}

// Strip the scalar (trivial-path) part of every diagonal-vertex entry.
ProjMor radical_part(const Algebra& A, ProjMor m) {
    for (size_t b = 0; b < m.cod.size(); ++b)
        for (size_t a = 0; a < m.dom.size(); ++a) {
            AlgElem& e = m.at(b, a);
            if (e.dom_v != e.cod_v) continue;
            uint32_t c = elem_scalar_part(A, e);
            if (!c) continue;
            AlgElem one = mor_identity(A, ProjObj{{e.dom_v}}).at(0, 0);
            e = elem_sub(A, e, elem_scale(A, c, one));
        }
    return m;
}

} // namespace

AlgElem random_elem(const Algebra& A, int dom_v, int cod_v, std::mt19937_64& rng) {
    AlgElem e = elem_zero(A, dom_v, cod_v);
    for (uint32_t& c : e.coeffs) c = random_coeff(A.field(), rng);
    return e;
}

ProjMor random_mor(const Algebra& A, const ProjObj& dom, const ProjObj& cod,
                   std::mt19937_64& rng) {
    ProjMor m = mor_zero(A, dom, cod);
    for (size_t b = 0; b < cod.size(); ++b)
        for (size_t a = 0; a < dom.size(); ++a)
            m.at(b, a) = random_elem(A, dom.verts[a], cod.verts[b], rng);
    return m;
}

ProjMor random_auto(const Algebra& A, const ProjObj& obj, std::mt19937_64& rng) {
    for (int tries = 0; tries < 500; ++tries) {
        ProjMor m = random_mor(A, obj, obj, rng);
        if (mor_is_iso(A, m)) return m;
    }
    return mor_add(A, mor_identity(A, obj), radical_part(A, random_mor(A, obj, obj, rng)));
}

ProjObj random_obj(const Algebra& A, size_t min_slots, size_t max_slots, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> nslots(min_slots, max_slots);
    std::uniform_int_distribution<int> vert(1, A.vertices());
    size_t n = nslots(rng);
    std::vector<int> verts;
    verts.reserve(n);
    for (size_t k = 0; k < n; ++k) verts.push_back(vert(rng));
    return ProjObj{std::move(verts)};
}

namespace {

// Uniform vector in the row span of K.
Vec random_combination(const Fp& F, const Mat& K, size_t dim, std::mt19937_64& rng) {
    Vec v(dim, 0);
    for (size_t r = 0; r < K.rows(); ++r) {
        uint32_t c = random_coeff(F, rng);
        if (!c) continue;
        for (size_t j = 0; j < dim; ++j) v[j] = F.add(v[j], F.mul(c, K.at(r, j)));
    }
    return v;
}

} // namespace

ProjMor random_map_into_kernel(const Algebra& A, const ProjObj& dom, const Complex& X,
                               std::mt19937_64& rng) {
    const ProjObj& target = obj_at(X, X.lo);
    size_t dim = hom_dim(A, dom, target);
    if (dim == 0) return mor_zero(A, dom, target);
    Mat M = postcompose_matrix(A, diff_at(X, X.lo), dom);
    Mat K = kernel_basis(A.field(), M);
    return vec_to_mor(A, dom, target, random_combination(A.field(), K, dim, rng));
}

Complex random_complex(AlgebraPtr A, int lo, int hi, size_t max_slots, std::mt19937_64& rng) {
    const Algebra& B = *A;
    std::vector<ProjObj> objs;
    for (int i = lo; i <= hi; ++i) objs.push_back(random_obj(B, 1, max_slots, rng));
    std::vector<ProjMor> ds;
    for (int i = lo; i < hi; ++i) {
        const ProjObj& dom = objs[i - lo];
        const ProjObj& cod = objs[i + 1 - lo];
        if (i == lo) {
            ds.push_back(random_mor(B, dom, cod, rng));
            continue;
        }
        size_t dim = hom_dim(B, dom, cod);
        if (dim == 0) {
            ds.push_back(mor_zero(B, dom, cod));
            continue;
        }
        Mat M = precompose_matrix(B, ds.back(), cod);
        Mat K = kernel_basis(B.field(), M);
        ds.push_back(vec_to_mor(B, dom, cod, random_combination(B.field(), K, dim, rng)));
    }
    return make_complex(A, lo, objs, ds);
}

Scramble scramble_complex(const Complex& Z, std::mt19937_64& rng) {
    const Algebra& A = *Z.A;
    std::vector<ProjMor> us;
    for (int i = Z.lo; i <= Z.hi(); ++i) us.push_back(random_auto(A, obj_at(Z, i), rng));
    std::vector<ProjMor> ds;
    for (int i = Z.lo; i < Z.hi(); ++i) {
        ProjMor t = mor_compose(A, mor_inverse(A, us[i - Z.lo]), diff_at(Z, i));
        ds.push_back(mor_compose(A, t, us[i + 1 - Z.lo]));
    }
    Scramble out;
    out.twisted = make_complex(Z.A, Z.lo, Z.obj, ds);
    out.iso = make_chain_map(Z, out.twisted, Z.lo, us);
    return out;
}

} // namespace cforge
