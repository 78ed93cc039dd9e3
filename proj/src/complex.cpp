#include "cforge/complex.hpp"

#include <algorithm>

namespace cforge {

ProjObj obj_at(const Complex& C, int deg) {
    if (!C.in_range(deg)) return ProjObj{};
    return C.obj[deg - C.lo];
}

ProjMor diff_at(const Complex& C, int deg) {
    if (deg >= C.lo && deg < C.hi()) return C.d[deg - C.lo];
    return mor_zero(*C.A, obj_at(C, deg), obj_at(C, deg + 1));
}

void validate_complex(const Complex& C) {
    if (!C.A) throw CfError("complex has no algebra attached");
    for (int v : [&] {
             std::vector<int> vs;
             for (const ProjObj& o : C.obj) vs.insert(vs.end(), o.verts.begin(), o.verts.end());
             return vs;
         }())
        if (v < 1 || v > C.A->vertices()) throw CfError("complex object uses vertex out of range");
    if (!C.obj.empty() && C.d.size() + 1 != C.obj.size())
        throw CfError("complex needs exactly one differential per adjacent degree pair");
    for (size_t i = 0; i < C.d.size(); ++i) {
        if (C.d[i].dom != C.obj[i] || C.d[i].cod != C.obj[i + 1])
            throw CfError("differential at degree " + std::to_string(C.lo + (int)i) +
                          " has mismatched objects");
        for (size_t b = 0; b < C.d[i].cod.size(); ++b)
            for (size_t a = 0; a < C.d[i].dom.size(); ++a) {
                const AlgElem& x = C.d[i].at(b, a);
                if (x.dom_v != C.d[i].dom.verts[a] || x.cod_v != C.d[i].cod.verts[b])
                    throw CfError("differential entry with wrong hom-space tag");
            }
    }
    for (size_t i = 0; i + 1 < C.d.size(); ++i)
        if (!mor_is_zero(mor_compose(*C.A, C.d[i], C.d[i + 1])))
            throw CfError("d.d != 0 at degree " + std::to_string(C.lo + (int)i));
}

Complex make_complex(AlgebraPtr A, int lo, std::vector<ProjObj> obj, std::vector<ProjMor> d) {
    Complex C;
    C.A = std::move(A);
    C.lo = lo;
    C.obj = std::move(obj);
    C.d = std::move(d);
    validate_complex(C);
    return C;
}

Complex trim_complex(const Complex& C) {
    size_t first = 0, last = C.obj.size();
    while (first < C.obj.size() && C.obj[first].verts.empty()) ++first;
    while (last > first && C.obj[last - 1].verts.empty()) --last;
    Complex R;
    R.A = C.A;
    if (first >= last) {
        R.lo = 0;
        return R;
    }
    R.lo = C.lo + (int)first;
    R.obj.assign(C.obj.begin() + first, C.obj.begin() + last);
    R.d.assign(C.d.begin() + first, C.d.begin() + (last - 1));
    return R;
}

Complex shift_complex(const Complex& C, int k) {
    Complex R = C;
    R.lo = C.lo - k;
    if (k % 2 != 0) {
        uint32_t m1 = C.A->field().neg(1);
        for (ProjMor& m : R.d) m = mor_scale(*C.A, m1, m);
    }
    return R;
}

Complex truncate_low(const Complex& C) {
    Complex T = trim_complex(C);
    if (T.obj.empty()) return T;
    Complex R;
    R.A = T.A;
    R.lo = T.lo + 1;
    R.obj.assign(T.obj.begin() + 1, T.obj.end());
    R.d.assign(T.d.begin() + (T.d.empty() ? 0 : 1), T.d.end());
    if (T.obj.size() == 1) R.d.clear();
    return trim_complex(R);
}

Complex truncate_high(const Complex& C) {
    Complex T = trim_complex(C);
    if (T.obj.empty()) return T;
    Complex R;
    R.A = T.A;
    R.lo = T.lo;
    R.obj.assign(T.obj.begin(), T.obj.end() - 1);
    if (!T.d.empty()) R.d.assign(T.d.begin(), T.d.end() - 1);
    return trim_complex(R);
}

Complex restrict_complex(const Complex& C, int lo, int hi) {
    Complex R;
    R.A = C.A;
    R.lo = lo;
    for (int i = lo; i <= hi; ++i) R.obj.push_back(obj_at(C, i));
    for (int i = lo; i < hi; ++i) {
        ProjMor m = diff_at(C, i);
        R.d.push_back(std::move(m));
    }
    if (R.obj.empty()) R.lo = 0;
    return trim_complex(R);
}

Complex direct_sum_complex(const Complex& X, const Complex& Y) {
    if (X.A != Y.A) throw CfError("direct_sum_complex: different algebras");
    if (X.is_zero() || X.obj.empty()) return trim_complex(Y);
    if (Y.is_zero() || Y.obj.empty()) return trim_complex(X);
    int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
    Complex R;
    R.A = X.A;
    R.lo = lo;
    for (int i = lo; i <= hi; ++i) {
        ProjObj o = obj_at(X, i);
        ProjObj oy = obj_at(Y, i);
        o.verts.insert(o.verts.end(), oy.verts.begin(), oy.verts.end());
        R.obj.push_back(std::move(o));
    }
    for (int i = lo; i < hi; ++i)
        R.d.push_back(mor_direct_sum(*X.A, diff_at(X, i), diff_at(Y, i)));
    return R;
}

SumDiagram direct_sum_diagram(AlgebraPtr A, const std::vector<Complex>& parts) {
    for (const Complex& P : parts)
        if (P.A != A) throw CfError("direct_sum_diagram: different algebras");
    int lo = 0, hi = -1;
    bool any = false;
    for (const Complex& P : parts) {
        Complex t = trim_complex(P);
        if (t.obj.empty()) continue;
        if (!any) {
            lo = t.lo;
            hi = t.hi();
            any = true;
        } else {
            lo = std::min(lo, t.lo);
            hi = std::max(hi, t.hi());
        }
    }
    SumDiagram dg;
    dg.sum.A = A;
    dg.sum.lo = any ? lo : 0;
    if (!any) {
        for (const Complex& P : parts) {
            dg.incl.push_back(chain_zero(P, dg.sum));
            dg.proj.push_back(chain_zero(dg.sum, P));
        }
        return dg;
    }
    size_t K = parts.size();
    // off[k][i - lo] = slot offset of part k inside the degree-i object
    std::vector<std::vector<size_t>> off(K, std::vector<size_t>(hi - lo + 1, 0));
    for (int i = lo; i <= hi; ++i) {
        ProjObj o;
        for (size_t k = 0; k < K; ++k) {
            off[k][i - lo] = o.verts.size();
            ProjObj ok = obj_at(parts[k], i);
            o.verts.insert(o.verts.end(), ok.verts.begin(), ok.verts.end());
        }
        dg.sum.obj.push_back(std::move(o));
    }
    for (int i = lo; i < hi; ++i) {
        ProjMor m = mor_zero(*A, dg.sum.obj[i - lo], dg.sum.obj[i - lo + 1]);
        for (size_t k = 0; k < K; ++k) {
            ProjMor dk = diff_at(parts[k], i);
            for (size_t b = 0; b < dk.cod.size(); ++b)
                for (size_t a = 0; a < dk.dom.size(); ++a)
                    m.at(off[k][i - lo + 1] + b, off[k][i - lo] + a) = dk.at(b, a);
        }
        dg.sum.d.push_back(std::move(m));
    }
    validate_complex(dg.sum);
    for (size_t k = 0; k < K; ++k) {
        std::vector<ProjMor> ic, pc;
        for (int i = lo; i <= hi; ++i) {
            ProjObj ok = obj_at(parts[k], i);
            ProjMor id_k = mor_identity(*A, ok);
            ProjMor in = mor_zero(*A, ok, dg.sum.obj[i - lo]);
            ProjMor pr = mor_zero(*A, dg.sum.obj[i - lo], ok);
            for (size_t a = 0; a < ok.size(); ++a) {
                in.at(off[k][i - lo] + a, a) = id_k.at(a, a);
                pr.at(a, off[k][i - lo] + a) = id_k.at(a, a);
            }
            ic.push_back(std::move(in));
            pc.push_back(std::move(pr));
        }
        dg.incl.push_back(make_chain_map(parts[k], dg.sum, lo, std::move(ic)));
        dg.proj.push_back(make_chain_map(dg.sum, parts[k], lo, std::move(pc)));
    }
    return dg;
}

bool complex_equal(const Complex& X, const Complex& Y) {
    Complex a = trim_complex(X), b = trim_complex(Y);
    if (a.lo != b.lo || a.obj.size() != b.obj.size()) return false;
    for (size_t i = 0; i < a.obj.size(); ++i)
        if (a.obj[i] != b.obj[i]) return false;
    for (size_t i = 0; i < a.d.size(); ++i)
        if (!mor_equal(a.d[i], b.d[i])) return false;
    return true;
}

ProjMor chain_comp_at(const ChainMap& f, int deg) {
    int idx = deg - f.lo;
    if (idx >= 0 && idx < (int)f.comps.size()) return f.comps[idx];
    return mor_zero(*f.X.A, obj_at(f.X, deg), obj_at(f.Y, deg));
}

void validate_chain_map(const ChainMap& f) {
    if (f.X.A != f.Y.A) throw CfError("chain map between complexes over different algebras");
    const Algebra& A = *f.X.A;
    for (size_t i = 0; i < f.comps.size(); ++i) {
        int deg = f.lo + (int)i;
        if (f.comps[i].dom != obj_at(f.X, deg) || f.comps[i].cod != obj_at(f.Y, deg))
            throw CfError("chain map component at degree " + std::to_string(deg) +
                          " has mismatched objects");
    }
    int lo = std::min(f.X.lo, f.Y.lo) - 1, hi = std::max(f.X.hi(), f.Y.hi());
    for (int i = lo; i <= hi; ++i) {
        ProjMor lhs = mor_compose(A, diff_at(f.X, i), chain_comp_at(f, i + 1));
        ProjMor rhs = mor_compose(A, chain_comp_at(f, i), diff_at(f.Y, i));
        if (!mor_equal(lhs, rhs))
            throw CfError("chain map square does not commute at degree " + std::to_string(i));
    }
}

ChainMap make_chain_map(Complex X, Complex Y, int lo, std::vector<ProjMor> comps) {
    ChainMap f;
    f.X = std::move(X);
    f.Y = std::move(Y);
    int ulo = std::min(f.X.lo, f.Y.lo), uhi = std::max(f.X.hi(), f.Y.hi());
    f.lo = ulo;
    for (int i = ulo; i <= uhi; ++i) {
        int idx = i - lo;
        if (idx >= 0 && idx < (int)comps.size())
            f.comps.push_back(comps[idx]);
        else
            f.comps.push_back(mor_zero(*f.X.A, obj_at(f.X, i), obj_at(f.Y, i)));
    }
    validate_chain_map(f);
    return f;
}

ChainMap chain_zero(const Complex& X, const Complex& Y) {
    return make_chain_map(X, Y, 0, {});
}

ChainMap chain_identity(const Complex& X) {
    ChainMap f;
    f.X = X;
    f.Y = X;
    f.lo = X.lo;
    for (int i = X.lo; i <= X.hi(); ++i) f.comps.push_back(mor_identity(*X.A, obj_at(X, i)));
    return f;
}

static void check_parallel(const ChainMap& f, const ChainMap& g) {
    if (!complex_equal(f.X, g.X) || !complex_equal(f.Y, g.Y))
        throw CfError("chain maps are not parallel");
}

ChainMap chain_add(const ChainMap& f, const ChainMap& g) {
    check_parallel(f, g);
    ChainMap r = f;
    for (size_t i = 0; i < r.comps.size(); ++i)
        r.comps[i] = mor_add(*f.X.A, r.comps[i], chain_comp_at(g, f.lo + (int)i));
    return r;
}

ChainMap chain_sub(const ChainMap& f, const ChainMap& g) {
    check_parallel(f, g);
    ChainMap r = f;
    for (size_t i = 0; i < r.comps.size(); ++i)
        r.comps[i] = mor_sub(*f.X.A, r.comps[i], chain_comp_at(g, f.lo + (int)i));
    return r;
}

ChainMap chain_scale(uint32_t s, const ChainMap& f) {
    ChainMap r = f;
    for (ProjMor& m : r.comps) m = mor_scale(*f.X.A, s, m);
    return r;
}

ChainMap chain_compose(const ChainMap& f, const ChainMap& g) {
    if (!complex_equal(f.Y, g.X)) throw CfError("chain_compose: middle complex mismatch");
    ChainMap r;
    r.X = f.X;
    r.Y = g.Y;
    r.lo = std::min(r.X.lo, r.Y.lo);
    int hi = std::max(r.X.hi(), r.Y.hi());
    for (int i = r.lo; i <= hi; ++i)
        r.comps.push_back(mor_compose(*f.X.A, chain_comp_at(f, i), chain_comp_at(g, i)));
    return r;
}

ChainMap chain_direct_sum(const ChainMap& f, const ChainMap& g) {
    ChainMap r;
    r.X = direct_sum_complex(f.X, g.X);
    r.Y = direct_sum_complex(f.Y, g.Y);
    r.lo = std::min(r.X.lo, r.Y.lo);
    int hi = std::max(r.X.hi(), r.Y.hi());
    for (int i = r.lo; i <= hi; ++i) {
        ProjMor m = mor_direct_sum(*f.X.A, chain_comp_at(f, i), chain_comp_at(g, i));
        if (m.dom != obj_at(r.X, i) || m.cod != obj_at(r.Y, i))
            throw CfError("chain_direct_sum: internal shape mismatch");
        r.comps.push_back(std::move(m));
    }
    return r;
}

bool chain_map_is_zero(const ChainMap& f) {
    for (const ProjMor& m : f.comps)
        if (!mor_is_zero(m)) return false;
    return true;
}

bool chain_map_equal(const ChainMap& f, const ChainMap& g) {
    if (!complex_equal(f.X, g.X) || !complex_equal(f.Y, g.Y)) return false;
    int lo = std::min(f.lo, g.lo);
    int hi = std::max(f.lo + (int)f.comps.size(), g.lo + (int)g.comps.size());
    for (int i = lo; i < hi; ++i)
        if (!mor_equal(chain_comp_at(f, i), chain_comp_at(g, i))) return false;
    return true;
}

ChainMap chain_map_truncate(const ChainMap& f, int lo, int hi) {
    Complex X = restrict_complex(f.X, lo, hi);
    Complex Y = restrict_complex(f.Y, lo, hi);
    std::vector<ProjMor> comps;
    for (int i = lo; i <= hi; ++i) comps.push_back(chain_comp_at(f, i));
    return make_chain_map(std::move(X), std::move(Y), lo, std::move(comps));
}

bool chain_map_is_iso(const ChainMap& f) {
    int lo = std::min(f.X.lo, f.Y.lo), hi = std::max(f.X.hi(), f.Y.hi());
    for (int i = lo; i <= hi; ++i)
        if (!mor_is_iso(*f.X.A, chain_comp_at(f, i))) return false;
    return true;
}

ChainMap chain_map_inverse(const ChainMap& f) {
    ChainMap r;
    r.X = f.Y;
    r.Y = f.X;
    r.lo = std::min(f.X.lo, f.Y.lo);
    int hi = std::max(f.X.hi(), f.Y.hi());
    for (int i = r.lo; i <= hi; ++i) r.comps.push_back(mor_inverse(*f.X.A, chain_comp_at(f, i)));
    validate_chain_map(r);
    return r;
}

ChainHomLayout chain_hom_layout(const Complex& X, const Complex& Y) {
    ChainHomLayout L;
    L.lo = std::min(X.lo, Y.lo);
    L.hi = std::max(X.hi(), Y.hi());
    size_t off = 0;
    for (int i = L.lo; i <= L.hi; ++i) {
        L.offset.push_back(off);
        off += hom_dim(*X.A, obj_at(X, i), obj_at(Y, i));
    }
    L.total = off;
    return L;
}

Vec chain_map_to_vec(const ChainHomLayout& L, const ChainMap& f) {
    Vec v(L.total, 0);
    for (int i = L.lo; i <= L.hi; ++i) {
        Vec c = mor_to_vec(*f.X.A, chain_comp_at(f, i));
        size_t off = L.offset[i - L.lo];
        for (size_t k = 0; k < c.size(); ++k) v[off + k] = c[k];
    }
    return v;
}

ChainMap vec_to_chain_map(const ChainHomLayout& L, const Complex& X, const Complex& Y, const Vec& v) {
    ChainMap f;
    f.X = X;
    f.Y = Y;
    f.lo = L.lo;
    for (int i = L.lo; i <= L.hi; ++i) {
        size_t off = L.offset[i - L.lo];
        size_t n = hom_dim(*X.A, obj_at(X, i), obj_at(Y, i));
        Vec c(v.begin() + off, v.begin() + off + n);
        f.comps.push_back(vec_to_mor(*X.A, obj_at(X, i), obj_at(Y, i), c));
    }
    return f;
}

// Constraint matrix whose kernel is the space of chain maps X -> Y.
static Mat chain_constraint_matrix(const Complex& X, const Complex& Y, const ChainHomLayout& L) {
    const Algebra& A = *X.A;
    const Fp& F = A.field();
    // rows: for each degree i, coordinates of Hom(X^i, Y^{i+1})
    std::vector<size_t> row_off;
    size_t rows = 0;
    for (int i = L.lo - 1; i <= L.hi; ++i) {
        row_off.push_back(rows);
        rows += hom_dim(A, obj_at(X, i), obj_at(Y, i + 1));
    }
    Mat M(rows, L.total);
    for (int i = L.lo - 1; i <= L.hi; ++i) {
        size_t ro = row_off[i - (L.lo - 1)];
        size_t nrows = hom_dim(A, obj_at(X, i), obj_at(Y, i + 1));
        if (nrows == 0) continue;
        // + f^{i+1} . d_X^i  (acts on coordinates of f^{i+1})
        if (i + 1 >= L.lo && i + 1 <= L.hi) {
            Mat P = precompose_matrix(A, diff_at(X, i), obj_at(Y, i + 1));
            size_t co = L.offset[i + 1 - L.lo];
            for (size_t r = 0; r < P.rows(); ++r)
                for (size_t c = 0; c < P.cols(); ++c)
                    if (P.at(r, c)) M.at(ro + r, co + c) = F.add(M.at(ro + r, co + c), P.at(r, c));
        }
        // - d_Y^i . f^i  (acts on coordinates of f^i)
        if (i >= L.lo && i <= L.hi) {
            Mat Q = postcompose_matrix(A, diff_at(Y, i), obj_at(X, i));
            size_t co = L.offset[i - L.lo];
            for (size_t r = 0; r < Q.rows(); ++r)
                for (size_t c = 0; c < Q.cols(); ++c)
                    if (Q.at(r, c)) M.at(ro + r, co + c) = F.sub(M.at(ro + r, co + c), Q.at(r, c));
        }
    }
    return M;
}

std::vector<ChainMap> chain_map_space(const Complex& X, const Complex& Y) {
    ChainHomLayout L = chain_hom_layout(X, Y);
    Mat M = chain_constraint_matrix(X, Y, L);
    Mat K = kernel_basis(X.A->field(), M);
    std::vector<ChainMap> basis;
    for (size_t r = 0; r < K.rows(); ++r) {
        Vec v(L.total);
        for (size_t c = 0; c < L.total; ++c) v[c] = K.at(r, c);
        basis.push_back(vec_to_chain_map(L, X, Y, v));
    }
    return basis;
}

HomotopyHom homotopy_category_hom(const Complex& X, const Complex& Y) {
    const Algebra& A = *X.A;
    const Fp& F = A.field();
    ChainHomLayout L = chain_hom_layout(X, Y);
    std::vector<ChainMap> basis = chain_map_space(X, Y);
    HomotopyHom out;
    out.chain_dim = basis.size();

    // Homotopy coordinates: s^i : X^i -> Y^{i-1}, i in [L.lo, L.hi + 1].
    std::vector<size_t> s_off;
    size_t s_total = 0;
    for (int i = L.lo; i <= L.hi + 1; ++i) {
        s_off.push_back(s_total);
        s_total += hom_dim(A, obj_at(X, i), obj_at(Y, i - 1));
    }
    // Boundary map s -> d_Y^{i-1}.s^i + s^{i+1}.d_X^i, columns over s-coordinates.
    Mat B(L.total, s_total);
    for (int i = L.lo; i <= L.hi; ++i) {
        size_t ro = L.offset[i - L.lo];
        // d_Y^{i-1} . s^i
        {
            Mat Q = postcompose_matrix(A, diff_at(Y, i - 1), obj_at(X, i));
            size_t co = s_off[i - L.lo];
            for (size_t r = 0; r < Q.rows(); ++r)
                for (size_t c = 0; c < Q.cols(); ++c)
                    if (Q.at(r, c)) B.at(ro + r, co + c) = F.add(B.at(ro + r, co + c), Q.at(r, c));
        }
        // s^{i+1} . d_X^i
        {
            Mat P = precompose_matrix(A, diff_at(X, i), obj_at(Y, i));
            size_t co = s_off[i + 1 - L.lo];
            for (size_t r = 0; r < P.rows(); ++r)
                for (size_t c = 0; c < P.cols(); ++c)
                    if (P.at(r, c)) B.at(ro + r, co + c) = F.add(B.at(ro + r, co + c), P.at(r, c));
        }
    }
    Mat Brows = mat_transpose(B);
    out.boundary_dim = rank(F, Brows);

    Mat C(basis.size(), L.total);
    for (size_t r = 0; r < basis.size(); ++r) {
        Vec v = chain_map_to_vec(L, basis[r]);
        for (size_t c = 0; c < L.total; ++c) C.at(r, c) = v[c];
    }
    for (size_t idx : extend_basis_rows(F, Brows, C)) out.reps.push_back(basis[idx]);
    return out;
}

// Joint solve for g with the chain-map constraints plus a composition pin.
static std::optional<ChainMap> solve_one_sided(const ChainMap& f, bool section) {
    const Complex& X = f.X;
    const Complex& Y = f.Y;
    const Algebra& A = *X.A;
    const Fp& F = A.field();
    // unknown r : Y -> X
    ChainHomLayout L = chain_hom_layout(Y, X);
    Mat M = chain_constraint_matrix(Y, X, L);
    // append degreewise composition equations
    std::vector<Mat> extra;
    std::vector<Vec> rhs_parts;
    int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
    for (int i = lo; i <= hi; ++i) {
        if (section) {
            // r^i . f^i = id_{X^i}: precompose with f^i on Hom(Y^i, X^i)
            Mat P = precompose_matrix(A, chain_comp_at(f, i), obj_at(X, i));
            extra.push_back(P);
            rhs_parts.push_back(mor_to_vec(A, mor_identity(A, obj_at(X, i))));
        } else {
            // f^i . r^i = id_{Y^i}: postcompose with f^i on Hom(Y^i, X^i)
            Mat P = postcompose_matrix(A, chain_comp_at(f, i), obj_at(Y, i));
            extra.push_back(P);
            rhs_parts.push_back(mor_to_vec(A, mor_identity(A, obj_at(Y, i))));
        }
    }
    size_t extra_rows = 0;
    for (const Mat& E : extra) extra_rows += E.rows();
    Mat Full(M.rows() + extra_rows, L.total);
    Mat rhs(M.rows() + extra_rows, 1);
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) Full.at(r, c) = M.at(r, c);
    size_t ro = M.rows();
    for (size_t k = 0; k < extra.size(); ++k) {
        const Mat& E = extra[k];
        int deg = lo + (int)k;
        // outside the layout range one side is the zero object, so there are
        // no unknown columns; the equations still land in the rhs
        size_t co = (deg >= L.lo && deg <= L.hi) ? L.offset[deg - L.lo] : 0;
        for (size_t r = 0; r < E.rows(); ++r) {
            for (size_t c = 0; c < E.cols(); ++c) Full.at(ro + r, co + c) = E.at(r, c);
            rhs.at(ro + r, 0) = rhs_parts[k][r];
        }
        ro += E.rows();
    }
    SolveResult s = solve(F, Full, rhs);
    if (!s.consistent) return std::nullopt;
    Vec v(L.total, 0);
    for (size_t c = 0; c < L.total; ++c) v[c] = s.particular.at(c, 0);
    ChainMap r = vec_to_chain_map(L, Y, X, v);
    validate_chain_map(r);
    return r;
}

bool chain_is_section(const ChainMap& f) { return solve_one_sided(f, true).has_value(); }
bool chain_is_retraction(const ChainMap& f) { return solve_one_sided(f, false).has_value(); }

std::optional<ChainMap> chain_retraction_of(const ChainMap& f) {
    return solve_one_sided(f, true);
}
std::optional<ChainMap> chain_section_of(const ChainMap& f) {
    return solve_one_sided(f, false);
}

Complex mapping_cone(const ChainMap& f) {
    const Complex& U = f.X;
    const Complex& V = f.Y;
    const Algebra& A = *U.A;
    const Fp& F = A.field();
    int lo = std::min(U.lo - 1, V.lo), hi = std::max(U.hi() - 1, V.hi());
    Complex C;
    C.A = U.A;
    C.lo = lo;
    for (int i = lo; i <= hi; ++i) {
        ProjObj o = obj_at(U, i + 1);
        ProjObj ov = obj_at(V, i);
        o.verts.insert(o.verts.end(), ov.verts.begin(), ov.verts.end());
        C.obj.push_back(std::move(o));
    }
    for (int i = lo; i < hi; ++i) {
        ProjObj dom = C.obj[i - lo], cod = C.obj[i + 1 - lo];
        ProjMor m = mor_zero(A, dom, cod);
        size_t ur = obj_at(U, i + 2).size(); // rows in the U block of the codomain
        size_t uc = obj_at(U, i + 1).size();
        ProjMor du = diff_at(U, i + 1);
        ProjMor dv = diff_at(V, i);
        ProjMor fc = chain_comp_at(f, i + 1);
        for (size_t b = 0; b < ur; ++b)
            for (size_t a = 0; a < uc; ++a) m.at(b, a) = elem_scale(A, F.neg(1), du.at(b, a));
        for (size_t b = 0; b < fc.cod.size(); ++b)
            for (size_t a = 0; a < uc; ++a) m.at(ur + b, a) = fc.at(b, a);
        for (size_t b = 0; b < dv.cod.size(); ++b)
            for (size_t a = 0; a < dv.dom.size(); ++a) m.at(ur + b, uc + a) = dv.at(b, a);
        C.d.push_back(std::move(m));
    }
    validate_complex(C);
    return C;
}

ChainMap cone_inclusion(const ChainMap& f) {
    Complex C = mapping_cone(f);
    const Algebra& A = *f.X.A;
    ChainMap inc;
    inc.X = f.Y;
    inc.Y = C;
    inc.lo = std::min(inc.X.lo, inc.Y.lo);
    int hi = std::max(inc.X.hi(), inc.Y.hi());
    for (int i = inc.lo; i <= hi; ++i) {
        ProjMor m = mor_zero(A, obj_at(inc.X, i), obj_at(inc.Y, i));
        size_t ur = obj_at(f.X, i + 1).size();
        for (size_t a = 0; a < m.dom.size(); ++a)
            m.at(ur + a, a) = elem_path(A, A.trivial_path_id(m.dom.verts[a]));
        inc.comps.push_back(std::move(m));
    }
    validate_chain_map(inc);
    return inc;
}

ChainMap cone_projection(const ChainMap& f) {
    Complex C = mapping_cone(f);
    const Algebra& A = *f.X.A;
    ChainMap pr;
    pr.X = C;
    pr.Y = shift_complex(f.X, 1);
    pr.lo = std::min(pr.X.lo, pr.Y.lo);
    int hi = std::max(pr.X.hi(), pr.Y.hi());
    for (int i = pr.lo; i <= hi; ++i) {
        ProjMor m = mor_zero(A, obj_at(pr.X, i), obj_at(pr.Y, i));
        for (size_t b = 0; b < m.cod.size(); ++b)
            m.at(b, b) = elem_path(A, A.trivial_path_id(m.cod.verts[b]));
        pr.comps.push_back(std::move(m));
    }
    validate_chain_map(pr);
    return pr;
}

std::string complex_to_string(const Complex& C) {
    Complex T = trim_complex(C);
    if (T.obj.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < T.obj.size(); ++i) {
        if (i) s += " | ";
        s += "[" + std::to_string(T.lo + (int)i) + "] " + obj_to_string(T.obj[i]);
    }
    return s;
}

} // namespace cforge
