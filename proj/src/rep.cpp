#include "cforge/rep.hpp"

namespace cforge {

namespace {

// Basis of the component of a projective object at vertex w: pairs
// (slot, path from slot vertex to w).
struct CompBasis {
    std::vector<std::pair<size_t, size_t>> elems; // (slot, global path id)
    std::map<std::pair<size_t, size_t>, size_t> index;
};

CompBasis component_basis(const Algebra& A, const ProjObj& P, int w) {
    CompBasis b;
    for (size_t s = 0; s < P.size(); ++s)
        for (size_t pid : A.paths_from_to(P.verts[s], w)) {
            b.index[{s, pid}] = b.elems.size();
            b.elems.push_back({s, pid});
        }
    return b;
}

} // namespace

KernelSocle kernel_socle_of_mor(const Algebra& A, const ProjMor& d) {
    const Fp& F = A.field();
    int nv = A.vertices();
    KernelSocle out;
    out.kernel_dims.assign(nv, 0);
    out.socle_mult.assign(nv, 0);

    std::vector<CompBasis> dom_basis(nv + 1), cod_basis(nv + 1);
    for (int w = 1; w <= nv; ++w) {
        dom_basis[w] = component_basis(A, d.dom, w);
        cod_basis[w] = component_basis(A, d.cod, w);
    }

    for (int w = 1; w <= nv; ++w) {
        const CompBasis& db = dom_basis[w];
        const CompBasis& cb = cod_basis[w];
        // Matrix of d on the component at w: x -> x * u_f entrywise.
        Mat M(cb.elems.size(), db.elems.size());
        for (size_t j = 0; j < db.elems.size(); ++j) {
            auto [s, pid] = db.elems[j];
            for (size_t b = 0; b < d.cod.size(); ++b) {
                const AlgElem& u = d.at(b, s);
                const auto& upaths = A.paths_from_to(u.cod_v, u.dom_v);
                for (size_t k = 0; k < upaths.size(); ++k) {
                    if (!u.coeffs[k]) continue;
                    for (auto [qid, qc] : A.path_product(pid, upaths[k])) {
                        size_t row = cb.index.at({b, qid});
                        M.at(row, j) = F.add(M.at(row, j), F.mul(u.coeffs[k], qc));
                    }
                }
            }
        }
        Mat K = kernel_basis(F, M); // rows span Ker at w
        out.kernel_dims[w - 1] = K.rows();
        if (K.rows() > 0) out.kernel_is_zero = false;

        // Socle: kernel vectors additionally killed by every arrow out of w.
        std::vector<Mat> arrow_mats;
        for (size_t ai = 0; ai < A.arrows().size(); ++ai) {
            const Arrow& a = A.arrows()[ai];
            if (a.src != w) continue;
            size_t apid = SIZE_MAX;
            for (size_t pid : A.paths_from_to(a.src, a.tgt))
                if (A.path(pid).length() == 1 && A.path(pid).arrows[0] == (int)ai) apid = pid;
            const CompBasis& tb = dom_basis[a.tgt];
            Mat Ma(tb.elems.size(), db.elems.size());
            if (apid != SIZE_MAX) {
                for (size_t j = 0; j < db.elems.size(); ++j) {
                    auto [s, pid] = db.elems[j];
                    for (auto [qid, qc] : A.path_product(apid, pid))
                        Ma.at(tb.index.at({s, qid}), j) = F.add(Ma.at(tb.index.at({s, qid}), j), qc);
                }
            }
            arrow_mats.push_back(std::move(Ma));
        }
        if (arrow_mats.empty()) {
            out.socle_mult[w - 1] = K.rows();
        } else if (K.rows() > 0) {
            Mat stacked(0, 0);
            bool first = true;
            for (const Mat& Ma : arrow_mats) {
                Mat img = mat_mul(F, Ma, mat_transpose(K)); // arrow action on kernel basis
                stacked = first ? img : mat_vcat(stacked, img);
                first = false;
            }
            out.socle_mult[w - 1] = K.rows() - rank(F, stacked);
        }
    }
    return out;
}

ProjObj projective_cover_of_socle(const Algebra& A, const std::vector<size_t>& mult) {
    if ((int)mult.size() != A.vertices()) throw CfError("multiplicity vector has wrong length");
    ProjObj P;
    for (int v = 1; v <= A.vertices(); ++v)
        for (size_t k = 0; k < mult[v - 1]; ++k) P.verts.push_back(v);
    return P;
}

} // namespace cforge
