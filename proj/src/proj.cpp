#include "cforge/proj.hpp"

#include <map>

namespace cforge {

AlgElem elem_zero(const Algebra& A, int dom_v, int cod_v) {
    return AlgElem{dom_v, cod_v, Vec(A.paths_from_to(cod_v, dom_v).size(), 0)};
}

AlgElem elem_path(const Algebra& A, size_t path_id) {
    const Path& p = A.path(path_id);
    AlgElem x = elem_zero(A, p.tgt, p.src);
    x.coeffs[A.index_in_pair(path_id)] = 1;
    return x;
}

bool elem_is_zero(const AlgElem& x) {
    for (uint32_t v : x.coeffs)
        if (v) return false;
    return true;
}

static void check_same_space(const AlgElem& x, const AlgElem& y) {
    if (x.dom_v != y.dom_v || x.cod_v != y.cod_v) throw CfError("element space mismatch");
}

AlgElem elem_add(const Algebra& A, const AlgElem& x, const AlgElem& y) {
    check_same_space(x, y);
    AlgElem r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = A.field().add(r.coeffs[i], y.coeffs[i]);
    return r;
}

AlgElem elem_sub(const Algebra& A, const AlgElem& x, const AlgElem& y) {
    check_same_space(x, y);
    AlgElem r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = A.field().sub(r.coeffs[i], y.coeffs[i]);
    return r;
}

AlgElem elem_scale(const Algebra& A, uint32_t s, const AlgElem& x) {
    AlgElem r = x;
    for (auto& c : r.coeffs) c = A.field().mul(s, c);
    return r;
}

AlgElem elem_compose(const Algebra& A, const AlgElem& f, const AlgElem& g) {
    if (f.cod_v != g.dom_v) throw CfError("elem_compose: middle object mismatch");
    AlgElem r = elem_zero(A, f.dom_v, g.cod_v);
    const auto& fpaths = A.paths_from_to(f.cod_v, f.dom_v);
    const auto& gpaths = A.paths_from_to(g.cod_v, g.dom_v);
    for (size_t i = 0; i < fpaths.size(); ++i) {
        if (!f.coeffs[i]) continue;
        for (size_t j = 0; j < gpaths.size(); ++j) {
            if (!g.coeffs[j]) continue;
            uint32_t c = A.field().mul(f.coeffs[i], g.coeffs[j]);
            for (auto [pid, pc] : A.path_product(fpaths[i], gpaths[j])) {
                size_t pos = A.index_in_pair(pid);
                r.coeffs[pos] = A.field().add(r.coeffs[pos], A.field().mul(c, pc));
            }
        }
    }
    return r;
}

uint32_t elem_scalar_part(const Algebra& A, const AlgElem& x) {
    if (x.dom_v != x.cod_v) return 0;
    const auto& paths = A.paths_from_to(x.cod_v, x.dom_v);
    for (size_t i = 0; i < paths.size(); ++i)
        if (A.path(paths[i]).length() == 0) return x.coeffs[i];
    return 0;
}

bool elem_in_radical(const Algebra& A, const AlgElem& x) {
    const auto& paths = A.paths_from_to(x.cod_v, x.dom_v);
    for (size_t i = 0; i < paths.size(); ++i)
        if (x.coeffs[i] && A.path(paths[i]).length() == 0) return false;
    return true;
}

bool elem_in_radical_square(const Algebra& A, const AlgElem& x) {
    const auto& paths = A.paths_from_to(x.cod_v, x.dom_v);
    for (size_t i = 0; i < paths.size(); ++i)
        if (x.coeffs[i] && A.path(paths[i]).length() < 2) return false;
    return true;
}

std::string elem_to_string(const Algebra& A, const AlgElem& x) {
    const auto& paths = A.paths_from_to(x.cod_v, x.dom_v);
    std::string s;
    for (size_t i = 0; i < paths.size(); ++i) {
        if (!x.coeffs[i]) continue;
        if (!s.empty()) s += " + ";
        if (x.coeffs[i] != 1)
            s += std::to_string(x.coeffs[i]) + "*" + A.path_name(paths[i]);
        else
            s += A.path_name(paths[i]);
    }
    return s.empty() ? "0" : s;
}

ProjMor mor_zero(const Algebra& A, ProjObj dom, ProjObj cod) {
    ProjMor f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.e.reserve(f.cod.size() * f.dom.size());
    for (size_t b = 0; b < f.cod.size(); ++b)
        for (size_t a = 0; a < f.dom.size(); ++a) f.e.push_back(elem_zero(A, f.dom.verts[a], f.cod.verts[b]));
    return f;
}

ProjMor mor_identity(const Algebra& A, ProjObj obj) {
    ProjMor f = mor_zero(A, obj, obj);
    for (size_t a = 0; a < f.dom.size(); ++a)
        f.at(a, a) = elem_path(A, A.trivial_path_id(f.dom.verts[a]));
    return f;
}

bool mor_is_zero(const ProjMor& f) {
    for (const AlgElem& x : f.e)
        if (!elem_is_zero(x)) return false;
    return true;
}

bool mor_equal(const ProjMor& f, const ProjMor& g) {
    if (f.dom != g.dom || f.cod != g.cod) return false;
    for (size_t i = 0; i < f.e.size(); ++i)
        if (f.e[i].coeffs != g.e[i].coeffs) return false;
    return true;
}

ProjMor mor_add(const Algebra& A, const ProjMor& f, const ProjMor& g) {
    if (f.dom != g.dom || f.cod != g.cod) throw CfError("mor_add: shape mismatch");
    ProjMor r = f;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = elem_add(A, r.e[i], g.e[i]);
    return r;
}

ProjMor mor_sub(const Algebra& A, const ProjMor& f, const ProjMor& g) {
    if (f.dom != g.dom || f.cod != g.cod) throw CfError("mor_sub: shape mismatch");
    ProjMor r = f;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = elem_sub(A, r.e[i], g.e[i]);
    return r;
}

ProjMor mor_scale(const Algebra& A, uint32_t s, const ProjMor& f) {
    ProjMor r = f;
    for (auto& x : r.e) x = elem_scale(A, s, x);
    return r;
}

ProjMor mor_compose(const Algebra& A, const ProjMor& f, const ProjMor& g) {
    if (f.cod != g.dom) throw CfError("mor_compose: middle object mismatch");
    ProjMor r = mor_zero(A, f.dom, g.cod);
    for (size_t c = 0; c < g.cod.size(); ++c)
        for (size_t a = 0; a < f.dom.size(); ++a) {
            AlgElem acc = elem_zero(A, f.dom.verts[a], g.cod.verts[c]);
            for (size_t b = 0; b < f.cod.size(); ++b)
                acc = elem_add(A, acc, elem_compose(A, f.at(b, a), g.at(c, b)));
            r.at(c, a) = std::move(acc);
        }
    return r;
}

ProjMor mor_direct_sum(const Algebra& A, const ProjMor& f, const ProjMor& g) {
    ProjObj dom, cod;
    dom.verts = f.dom.verts;
    dom.verts.insert(dom.verts.end(), g.dom.verts.begin(), g.dom.verts.end());
    cod.verts = f.cod.verts;
    cod.verts.insert(cod.verts.end(), g.cod.verts.begin(), g.cod.verts.end());
    ProjMor r = mor_zero(A, dom, cod);
    for (size_t b = 0; b < f.cod.size(); ++b)
        for (size_t a = 0; a < f.dom.size(); ++a) r.at(b, a) = f.at(b, a);
    for (size_t b = 0; b < g.cod.size(); ++b)
        for (size_t a = 0; a < g.dom.size(); ++a) r.at(f.cod.size() + b, f.dom.size() + a) = g.at(b, a);
    return r;
}

bool mor_in_radical(const Algebra& A, const ProjMor& f) {
    for (const AlgElem& x : f.e)
        if (!elem_in_radical(A, x)) return false;
    return true;
}

size_t hom_dim(const Algebra& A, const ProjObj& X, const ProjObj& Y) {
    size_t d = 0;
    for (int cv : Y.verts)
        for (int dv : X.verts) d += A.paths_from_to(cv, dv).size();
    return d;
}

Vec mor_to_vec(const Algebra& A, const ProjMor& f) {
    (void)A;
    Vec v;
    for (const AlgElem& x : f.e) v.insert(v.end(), x.coeffs.begin(), x.coeffs.end());
    return v;
}

ProjMor vec_to_mor(const Algebra& A, const ProjObj& dom, const ProjObj& cod, const Vec& v) {
    ProjMor f = mor_zero(A, dom, cod);
    size_t k = 0;
    for (AlgElem& x : f.e)
        for (auto& c : x.coeffs) {
            if (k >= v.size()) throw CfError("vec_to_mor: vector too short");
            c = v[k++];
        }
    if (k != v.size()) throw CfError("vec_to_mor: vector length mismatch");
    return f;
}

// Enumerate basis morphisms of Hom(X, Y): one path in one entry, in layout order.
static std::vector<ProjMor> hom_basis(const Algebra& A, const ProjObj& X, const ProjObj& Y) {
    std::vector<ProjMor> out;
    size_t n = hom_dim(A, X, Y);
    for (size_t k = 0; k < n; ++k) {
        Vec v(n, 0);
        v[k] = 1;
        out.push_back(vec_to_mor(A, X, Y, v));
    }
    return out;
}

Mat precompose_matrix(const Algebra& A, const ProjMor& f, const ProjObj& Z) {
    std::vector<ProjMor> basis = hom_basis(A, f.cod, Z);
    Mat M(hom_dim(A, f.dom, Z), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        Vec col = mor_to_vec(A, mor_compose(A, f, basis[j]));
        for (size_t i = 0; i < col.size(); ++i) M.at(i, j) = col[i];
    }
    return M;
}

Mat postcompose_matrix(const Algebra& A, const ProjMor& f, const ProjObj& Z) {
    std::vector<ProjMor> basis = hom_basis(A, Z, f.dom);
    Mat M(hom_dim(A, Z, f.cod), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        Vec col = mor_to_vec(A, mor_compose(A, basis[j], f));
        for (size_t i = 0; i < col.size(); ++i) M.at(i, j) = col[i];
    }
    return M;
}

// Per-vertex matrices of trivial-path coefficients; the morphism is invertible
// exactly when all of these are square and invertible.
static std::map<int, Mat> scalar_blocks(const Algebra& A, const ProjMor& f) {
    std::map<int, std::vector<size_t>> dom_slots, cod_slots;
    for (size_t a = 0; a < f.dom.size(); ++a) dom_slots[f.dom.verts[a]].push_back(a);
    for (size_t b = 0; b < f.cod.size(); ++b) cod_slots[f.cod.verts[b]].push_back(b);
    std::map<int, Mat> blocks;
    for (auto& [v, ds] : dom_slots) {
        auto& cs = cod_slots[v];
        Mat M(cs.size(), ds.size());
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < ds.size(); ++j) M.at(i, j) = elem_scalar_part(A, f.at(cs[i], ds[j]));
        blocks[v] = std::move(M);
    }
    for (auto& [v, cs] : cod_slots)
        if (!dom_slots.count(v)) blocks[v] = Mat(cs.size(), 0);
    return blocks;
}

bool mor_is_iso(const Algebra& A, const ProjMor& f) {
    for (auto& [v, M] : scalar_blocks(A, f)) {
        if (M.rows() != M.cols()) return false;
        if (rank(A.field(), M) != M.rows()) return false;
    }
    return true;
}

ProjMor mor_inverse(const Algebra& A, const ProjMor& f) {
    // solve g.f = id_dom, then verify f.g = id_cod
    Mat M = precompose_matrix(A, f, f.dom);
    Vec idv = mor_to_vec(A, mor_identity(A, f.dom));
    Mat rhs(idv.size(), 1);
    for (size_t i = 0; i < idv.size(); ++i) rhs.at(i, 0) = idv[i];
    SolveResult s = solve(A.field(), M, rhs);
    if (!s.consistent) throw CfError("mor_inverse: morphism is not invertible");
    Vec gv(M.cols());
    for (size_t i = 0; i < gv.size(); ++i) gv[i] = s.particular.at(i, 0);
    ProjMor g = vec_to_mor(A, f.cod, f.dom, gv);
    if (!mor_equal(mor_compose(A, g, f), mor_identity(A, f.cod)))
        throw CfError("mor_inverse: morphism is not invertible");
    return g;
}

bool mor_is_section(const Algebra& A, const ProjMor& f) {
    Mat M = precompose_matrix(A, f, f.dom);
    Vec idv = mor_to_vec(A, mor_identity(A, f.dom));
    Mat rhs(idv.size(), 1);
    for (size_t i = 0; i < idv.size(); ++i) rhs.at(i, 0) = idv[i];
    return solve(A.field(), M, rhs).consistent;
}

bool mor_is_retraction(const Algebra& A, const ProjMor& f) {
    Mat M = postcompose_matrix(A, f, f.cod);
    Vec idv = mor_to_vec(A, mor_identity(A, f.cod));
    Mat rhs(idv.size(), 1);
    for (size_t i = 0; i < idv.size(); ++i) rhs.at(i, 0) = idv[i];
    return solve(A.field(), M, rhs).consistent;
}

ProjSplit split_idempotent_proj(const Algebra& A, const ProjMor& e) {
    if (e.dom != e.cod) throw CfError("split_idempotent_proj: not an endomorphism");
    if (!mor_equal(mor_compose(A, e, e), e)) throw CfError("split_idempotent_proj: not idempotent");
    const Fp& F = A.field();
    const ProjObj& P = e.dom;
    size_t n = P.size();

    std::map<int, std::vector<size_t>> slots;
    for (size_t i = 0; i < n; ++i) slots[P.verts[i]].push_back(i);

    // Per vertex: conjugate the scalar block to diag(1..1,0..0) by [im | ker].
    std::map<int, Mat> Us, Uinvs;
    std::map<int, size_t> sel_count;
    for (auto& [v, sl] : slots) {
        size_t m = sl.size();
        Mat M(m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) M.at(i, j) = elem_scalar_part(A, e.at(sl[i], sl[j]));
        RrefResult R = rref(F, M);
        Mat U(m, m);
        for (size_t k = 0; k < R.rank; ++k)
            for (size_t i = 0; i < m; ++i) U.at(i, k) = M.at(i, R.pivots[k]);
        Mat K = kernel_basis(F, M);
        for (size_t k = 0; k < K.rows(); ++k)
            for (size_t i = 0; i < m; ++i) U.at(i, R.rank + k) = K.at(k, i);
        Us[v] = U;
        Uinvs[v] = mat_inverse(F, U);
        sel_count[v] = R.rank;
    }

    auto scalar_block_mor = [&](const std::map<int, Mat>& blocks) {
        ProjMor W = mor_zero(A, P, P);
        for (auto& [v, sl] : slots) {
            const Mat& B = blocks.at(v);
            for (size_t i = 0; i < sl.size(); ++i)
                for (size_t j = 0; j < sl.size(); ++j)
                    if (B.at(i, j))
                        W.at(sl[i], sl[j]) =
                            elem_scale(A, B.at(i, j), elem_path(A, A.trivial_path_id(v)));
        }
        return W;
    };
    ProjMor W = scalar_block_mor(Us);
    ProjMor Winv = scalar_block_mor(Uinvs);

    ProjMor eps = mor_compose(A, mor_compose(A, W, e), Winv); // Winv . e . W

    // Coordinate idempotent on the selected slots (first rank-many per vertex).
    std::vector<bool> selected(n, false);
    for (auto& [v, sl] : slots)
        for (size_t k = 0; k < sel_count[v]; ++k) selected[sl[k]] = true;
    ProjMor fsel = mor_zero(A, P, P);
    for (size_t i = 0; i < n; ++i)
        if (selected[i]) fsel.at(i, i) = elem_path(A, A.trivial_path_id(P.verts[i]));

    ProjMor id = mor_identity(A, P);
    // u = fsel.eps + (id - fsel).(id - eps); it satisfies u.eps = fsel.u and has
    // invertible scalar part, so it corrects the radical discrepancy.
    ProjMor u = mor_add(A, mor_compose(A, eps, fsel),
                        mor_compose(A, mor_sub(A, id, eps), mor_sub(A, id, fsel)));
    ProjMor rho = mor_sub(A, id, u);
    ProjMor uinv = id;
    ProjMor pw = rho;
    for (size_t k = 0; k + 1 < A.loewy_length() + 2 && !mor_is_zero(pw); ++k) {
        uinv = mor_add(A, uinv, pw);
        pw = mor_compose(A, pw, rho);
    }
    if (!mor_equal(mor_compose(A, u, uinv), id))
        throw CfError("split_idempotent_proj: internal inversion failure");

    ProjMor V = mor_compose(A, uinv, W);       // W . uinv
    ProjMor Vinv = mor_compose(A, Winv, u);    // u . Winv

    ProjSplit out;
    for (size_t i = 0; i < n; ++i)
        if (selected[i]) out.sub.verts.push_back(P.verts[i]);
    ProjMor incl = mor_zero(A, out.sub, P);
    ProjMor proj = mor_zero(A, P, out.sub);
    size_t t = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!selected[i]) continue;
        incl.at(i, t) = elem_path(A, A.trivial_path_id(P.verts[i]));
        proj.at(t, i) = elem_path(A, A.trivial_path_id(P.verts[i]));
        ++t;
    }
    out.iota = mor_compose(A, incl, V);   // V . incl
    out.pi = mor_compose(A, Vinv, proj);  // proj . Vinv
    if (!mor_equal(mor_compose(A, out.pi, out.iota), e))
        throw CfError("split_idempotent_proj: iota.pi != e");
    if (!mor_equal(mor_compose(A, out.iota, out.pi), mor_identity(A, out.sub)))
        throw CfError("split_idempotent_proj: pi.iota != id");
    return out;
}

std::string obj_to_string(const ProjObj& o) {
    if (o.verts.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < o.verts.size(); ++i) {
        if (i) s += "+";
        s += "P" + std::to_string(o.verts[i]);
    }
    return s;
}

AlgElem parse_path_expr(const Algebra& A, const std::string& expr) {
    if (expr.empty()) throw CfError("empty path expression");
    std::vector<std::string> tokens;
    size_t start = 0;
    while (start <= expr.size()) {
        size_t star = expr.find('*', start);
        if (star == std::string::npos) {
            tokens.push_back(expr.substr(start));
            break;
        }
        tokens.push_back(expr.substr(start, star - start));
        start = star + 1;
    }
    for (const std::string& t : tokens)
        if (t.empty()) throw CfError("malformed path expression '" + expr + "'");

    // Trivial path "e<v>".
    if (tokens.size() == 1 && tokens[0].size() >= 2 && tokens[0][0] == 'e' &&
        A.arrow_index(tokens[0]) < 0) {
        int v = 0;
        for (size_t i = 1; i < tokens[0].size(); ++i) {
            char c = tokens[0][i];
            if (c < '0' || c > '9') throw CfError("unknown arrow '" + tokens[0] + "'");
            v = v * 10 + (c - '0');
        }
        if (v < 1 || v > A.vertices()) throw CfError("vertex out of range in '" + expr + "'");
        return elem_path(A, A.trivial_path_id(v));
    }

    // Arrow chain, written with the last-applied arrow first.
    std::vector<int> arrows; // application order
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        int idx = A.arrow_index(*it);
        if (idx < 0) throw CfError("unknown arrow '" + *it + "'");
        arrows.push_back(idx);
    }
    int src = A.arrows()[arrows.front()].src;
    int at = src;
    // Accumulate the residue class as (basis path id, coeff) pairs.
    std::vector<std::pair<size_t, uint32_t>> acc = {{A.trivial_path_id(src), 1}};
    for (int ai : arrows) {
        const Arrow& ar = A.arrows()[ai];
        if (ar.src != at)
            throw CfError("non-composable chain in '" + expr + "': arrow '" + ar.name +
                          "' starts at " + std::to_string(ar.src) + ", not " + std::to_string(at));
        at = ar.tgt;
        size_t arrow_path = (size_t)-1;
        for (size_t pid : A.paths_from_to(ar.src, ar.tgt)) {
            const Path& p = A.path(pid);
            if (p.length() == 1 && p.arrows[0] == ai) {
                arrow_path = pid;
                break;
            }
        }
        if (arrow_path == (size_t)-1) throw CfError("arrow '" + ar.name + "' missing from basis");
        std::map<size_t, uint32_t> next;
        for (auto [pid, pc] : acc)
            for (auto [qid, qc] : A.path_product(arrow_path, pid)) {
                uint32_t add = A.field().mul(pc, qc);
                auto [it2, inserted] = next.emplace(qid, add);
                if (!inserted) it2->second = A.field().add(it2->second, add);
            }
        acc.assign(next.begin(), next.end());
    }
    AlgElem r = elem_zero(A, at, src);
    for (auto [pid, pc] : acc) {
        size_t pos = A.index_in_pair(pid);
        r.coeffs[pos] = A.field().add(r.coeffs[pos], pc);
    }
    return r;
}

ProjMor mor_from_entries(const Algebra& A, ProjObj dom, ProjObj cod,
                         const std::vector<MorEntry>& entries) {
    ProjMor f = mor_zero(A, std::move(dom), std::move(cod));
    for (const MorEntry& en : entries) {
        if (en.row >= f.cod.size() || en.col >= f.dom.size())
            throw CfError("morphism entry (" + std::to_string(en.row) + "," +
                          std::to_string(en.col) + ") outside the " + std::to_string(f.cod.size()) +
                          "x" + std::to_string(f.dom.size()) + " shape");
        AlgElem el = parse_path_expr(A, en.path);
        if (el.dom_v != f.dom.verts[en.col] || el.cod_v != f.cod.verts[en.row])
            throw CfError("path '" + en.path + "' maps P" + std::to_string(el.dom_v) + " -> P" +
                          std::to_string(el.cod_v) + " but entry (" + std::to_string(en.row) + "," +
                          std::to_string(en.col) + ") needs P" +
                          std::to_string(f.dom.verts[en.col]) + " -> P" +
                          std::to_string(f.cod.verts[en.row]));
        f.at(en.row, en.col) = elem_add(A, f.at(en.row, en.col), elem_scale(A, en.coeff, el));
    }
    return f;
}

} // namespace cforge
