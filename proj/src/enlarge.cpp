#include "cforge/enlarge.hpp"

#include <algorithm>

namespace cforge {

namespace {

// Z restricted to degrees >= 1 (what a one-step extension is built over).
Complex tail_of(const Complex& Z) { return restrict_complex(Z, 1, Z.hi()); }

ProjObj concat_obj(const ProjObj& a, const ProjObj& b) {
    ProjObj r = a;
    r.verts.insert(r.verts.end(), b.verts.begin(), b.verts.end());
    return r;
}

// [top; bot] : dom -> cod(top) + cod(bot), shared domain.
ProjMor stack_rows(const Algebra& A, const ProjMor& top, const ProjMor& bot) {
    if (top.dom != bot.dom) throw CfError("stack_rows: domains differ");
    ProjMor r = mor_zero(A, top.dom, concat_obj(top.cod, bot.cod));
    for (size_t b = 0; b < top.cod.size(); ++b)
        for (size_t a = 0; a < top.dom.size(); ++a) r.at(b, a) = top.at(b, a);
    for (size_t b = 0; b < bot.cod.size(); ++b)
        for (size_t a = 0; a < bot.dom.size(); ++a) r.at(top.cod.size() + b, a) = bot.at(b, a);
    return r;
}

// [left, right] : dom(left) + dom(right) -> cod, shared codomain.
ProjMor concat_cols(const Algebra& A, const ProjMor& left, const ProjMor& right) {
    if (left.cod != right.cod) throw CfError("concat_cols: codomains differ");
    ProjMor r = mor_zero(A, concat_obj(left.dom, right.dom), left.cod);
    for (size_t b = 0; b < left.cod.size(); ++b) {
        for (size_t a = 0; a < left.dom.size(); ++a) r.at(b, a) = left.at(b, a);
        for (size_t a = 0; a < right.dom.size(); ++a)
            r.at(b, left.dom.size() + a) = right.at(b, a);
    }
    return r;
}

// Rows [r0, r1) and columns [c0, c1) of f as a morphism between the sliced
// objects.
ProjMor sub_block(const Algebra& A, const ProjMor& f, size_t r0, size_t r1, size_t c0,
                  size_t c1) {
    ProjObj dom, cod;
    dom.verts.assign(f.dom.verts.begin() + (long)c0, f.dom.verts.begin() + (long)c1);
    cod.verts.assign(f.cod.verts.begin() + (long)r0, f.cod.verts.begin() + (long)r1);
    ProjMor r = mor_zero(A, dom, cod);
    for (size_t b = r0; b < r1; ++b)
        for (size_t a = c0; a < c1; ++a) r.at(b - r0, a - c0) = f.at(b, a);
    return r;
}

// Is h degreewise the inclusion of X into the leading slots of Z's tail?
bool is_plain_inclusion(const Algebra& A, const Complex& X, const Complex& FZ,
                        const ChainMap& h) {
    for (int i = std::min(X.lo, FZ.lo); i <= std::max(X.hi(), FZ.hi()); ++i) {
        ProjObj xo = obj_at(X, i), zo = obj_at(FZ, i);
        if (xo.size() > zo.size()) return false;
        if (!std::equal(xo.verts.begin(), xo.verts.end(), zo.verts.begin())) return false;
        ProjMor inc = mor_zero(A, xo, zo);
        ProjMor id = mor_identity(A, xo);
        for (size_t k = 0; k < xo.size(); ++k) inc.at(k, k) = id.at(k, k);
        if (!mor_equal(chain_comp_at(h, i), inc)) return false;
    }
    return true;
}

// The inclusion of the leading slots, base -> whole's tail, as a chain map.
ChainMap first_slots_inclusion(const Complex& base, const Complex& tail) {
    const Algebra& A = *base.A;
    int lo = std::min(base.lo, tail.lo), hi = std::max(base.hi(), tail.hi());
    std::vector<ProjMor> comps;
    for (int i = lo; i <= hi; ++i) {
        ProjObj xo = obj_at(base, i), zo = obj_at(tail, i);
        ProjMor inc = mor_zero(A, xo, zo);
        ProjMor id = mor_identity(A, xo);
        for (size_t k = 0; k < xo.size(); ++k) inc.at(k, k) = id.at(k, k);
        comps.push_back(std::move(inc));
    }
    return make_chain_map(base, tail, lo, std::move(comps));
}

void check_tail_supported_above_zero(const Complex& C, const char* who) {
    Complex t = trim_complex(C);
    if (!t.is_zero() && t.lo < 1)
        throw CfError(std::string(who) + ": tail complexes must be supported in degrees >= 1");
}

} // namespace

Complex assemble_one_step(const ProjObj& head, const std::vector<Complex>& parts,
                          const std::vector<ProjMor>& d0s) {
    if (parts.empty()) throw CfError("assemble_one_step: no tail parts");
    if (parts.size() != d0s.size())
        throw CfError("assemble_one_step: one degree-0 block per part required");
    AlgebraPtr A = parts[0].A;
    for (const Complex& P : parts) {
        if (P.A != A) throw CfError("assemble_one_step: parts over different algebras");
        check_tail_supported_above_zero(P, "assemble_one_step");
    }
    for (size_t k = 0; k < parts.size(); ++k) {
        if (d0s[k].dom != head || d0s[k].cod != obj_at(parts[k], 1))
            throw CfError("assemble_one_step: degree-0 block " + std::to_string(k) +
                          " does not map the head into the part's degree-1 object");
    }

    Complex tail = direct_sum_diagram(A, parts).sum;
    int n = std::max(tail.hi(), 0);
    std::vector<ProjObj> obj;
    std::vector<ProjMor> d;
    obj.push_back(head);
    if (n >= 1) {
        ProjMor d0 = d0s[0];
        for (size_t k = 1; k < d0s.size(); ++k) d0 = stack_rows(*A, d0, d0s[k]);
        // The parts are laid out in order inside each degree, so the stacked
        // blocks land exactly on the tail's degree-1 slots.
        if (d0.cod != obj_at(tail, 1))
            throw CfError("assemble_one_step: stacked degree-0 blocks do not match the tail");
        d.push_back(std::move(d0));
        for (int i = 1; i <= n; ++i) {
            obj.push_back(obj_at(tail, i));
            if (i < n) d.push_back(diff_at(tail, i));
        }
    }
    return make_complex(A, 0, std::move(obj), std::move(d));
}

Complex assemble_one_step(const ProjObj& head, const Complex& X, const Complex& Y,
                          const ProjMor& dX0, const ProjMor& dY0) {
    return assemble_one_step(head, {X, Y}, {dX0, dY0});
}

DiagonalizeResult diagonalize(const Complex& Z, const Complex& X, const ChainMap& h,
                              uint64_t seed) {
    const Algebra& A = *Z.A;
    if (trim_complex(Z).lo < 0 && !trim_complex(Z).is_zero())
        throw CfError("diagonalize: Z must be supported in degrees >= 0");
    Complex FZ = tail_of(Z);
    if (!complex_equal(h.X, X)) throw CfError("diagonalize: h does not start at X");
    if (!complex_equal(h.Y, FZ)) throw CfError("diagonalize: h does not land in the tail of Z");
    if (!is_certified_indecomposable(X, seed))
        throw CfError("diagonalize: X is not indecomposable");

    std::optional<ChainMap> t = chain_retraction_of(h);
    if (!t) throw CfError("diagonalize: h is not a section");

    int n = std::max(Z.hi(), 0);
    bool standard = is_plain_inclusion(A, X, FZ, h);

    // Per degree >= 1: the complement object with its inclusion/projection,
    // splitting off the image of h, plus the corrector block in standard
    // position.
    std::vector<ProjObj> yobj(n >= 1 ? (size_t)n : 0);
    std::vector<ProjMor> yiota(yobj.size()), ypi(yobj.size());
    std::vector<ProjMor> correctors;
    if (standard) {
        for (int i = 1; i <= n; ++i) {
            ProjObj xo = obj_at(X, i), zo = obj_at(FZ, i);
            ProjMor ti = chain_comp_at(*t, i);
            // t^i = (1, c_i); its complement splits as iota = [-c_i; 1],
            // pi = (0, 1) against the rest slots.
            ProjMor ci = sub_block(A, ti, 0, xo.size(), xo.size(), zo.size());
            ProjObj rest = ci.dom;
            ProjMor iota = stack_rows(A, mor_scale(A, A.field().p() - 1, ci),
                                      mor_identity(A, rest));
            yobj[i - 1] = rest;
            yiota[i - 1] = std::move(iota);
            ypi[i - 1] = sub_block(A, mor_identity(A, zo), xo.size(), zo.size(), 0, zo.size());
            correctors.push_back(std::move(ci));
        }
    } else {
        ChainMap e = chain_compose(*t, h); // h after t : FZ -> FZ
        ChainMap q = chain_sub(chain_identity(FZ), e);
        for (int i = 1; i <= n; ++i) {
            ProjSplit s = split_idempotent_proj(A, chain_comp_at(q, i));
            yobj[i - 1] = s.sub;
            yiota[i - 1] = std::move(s.iota);
            ypi[i - 1] = std::move(s.pi);
        }
    }

    // rest = pi . d . iota  is a complex because iota.pi is a chain-map
    // idempotent of the tail.
    std::vector<ProjMor> yd;
    for (int i = 1; i < n; ++i)
        yd.push_back(mor_compose(A, mor_compose(A, yiota[i - 1], diff_at(FZ, i)), ypi[i]));
    Complex rest = make_complex(Z.A, 1, yobj, std::move(yd));

    // The rewritten complex: head unchanged, X + rest above, with the
    // conjugating map g = id in degree 0 and g^i = [t^i; pi^i] above.
    std::vector<ProjObj> obj;
    std::vector<ProjMor> dd;
    std::vector<ProjMor> comps;
    obj.push_back(obj_at(Z, 0));
    comps.push_back(mor_identity(A, obj_at(Z, 0)));
    for (int i = 1; i <= n; ++i) {
        obj.push_back(concat_obj(obj_at(X, i), yobj[i - 1]));
        comps.push_back(stack_rows(A, chain_comp_at(*t, i), ypi[i - 1]));
    }
    if (n >= 1) {
        ProjMor dz0 = diff_at(Z, 0);
        dd.push_back(stack_rows(A, mor_compose(A, dz0, chain_comp_at(*t, 1)),
                                mor_compose(A, dz0, ypi[0])));
        for (int i = 1; i < n; ++i)
            dd.push_back(mor_direct_sum(A, diff_at(X, i), diff_at(rest, i)));
    }
    Complex whole = make_complex(Z.A, 0, std::move(obj), std::move(dd));

    ChainMap iso = make_chain_map(Z, whole, 0, std::move(comps));
    if (!chain_map_is_iso(iso))
        throw CfError("diagonalize: conjugating map failed to be invertible");

    DiagonalizeResult r;
    r.view.base = X;
    r.view.whole = whole;
    r.view.direction = EnlargementView::Direction::Left;
    r.view.witness = first_slots_inclusion(X, tail_of(whole));
    r.view.correctors = std::move(correctors);
    r.iso = std::move(iso);
    r.rest = trim_complex(rest);
    return r;
}

DiagonalizeResult diagonalize_summand(const Complex& Z, const Complex& X, uint64_t seed) {
    Complex FZ = tail_of(Z);
    Decomposition D = decompose(FZ, seed);
    for (size_t k = 0; k < D.instances.size(); ++k) {
        IsoCheck ic = are_isomorphic(X, D.instances[k], seed);
        if (!ic.isomorphic) continue;
        ChainMap h = chain_compose(*ic.witness, D.iotas[k]); // X -> instance -> FZ
        return diagonalize(Z, X, h, seed);
    }
    throw CfError("diagonalize_summand: X is not a direct summand of the tail of Z");
}

FullDiagonalization fully_diagonalize(const Complex& Z, uint64_t seed) {
    const Algebra& A = *Z.A;
    if (trim_complex(Z).lo < 0 && !trim_complex(Z).is_zero())
        throw CfError("fully_diagonalize: Z must be supported in degrees >= 0");
    Complex FZ = tail_of(Z);
    Decomposition D = decompose(FZ, seed);

    int n = std::max(D.sum.hi(), 0);
    std::vector<ProjObj> obj;
    std::vector<ProjMor> dd;
    std::vector<ProjMor> comps;
    obj.push_back(obj_at(Z, 0));
    comps.push_back(mor_identity(A, obj_at(Z, 0)));
    if (n >= 1) {
        dd.push_back(mor_compose(A, diff_at(Z, 0), chain_comp_at(D.iso_inv, 1)));
        for (int i = 1; i <= n; ++i) {
            obj.push_back(obj_at(D.sum, i));
            comps.push_back(chain_comp_at(D.iso_inv, i));
            if (i < n) dd.push_back(diff_at(D.sum, i));
        }
    }
    FullDiagonalization r;
    r.whole = make_complex(Z.A, 0, std::move(obj), std::move(dd));
    r.iso = make_chain_map(Z, r.whole, 0, std::move(comps));
    if (!chain_map_is_iso(r.iso))
        throw CfError("fully_diagonalize: conjugating map failed to be invertible");
    r.parts = D.instances;
    r.part_class = D.instance_class;
    return r;
}

EnlargementView build_left_enlargement(const Complex& X, const Complex& Y,
                                       const ProjObj& head, const ProjMor& dX0,
                                       const ProjMor& dY0, uint64_t seed) {
    if (X.A != Y.A) throw CfError("build_left_enlargement: X and Y over different algebras");
    const Algebra& A = *X.A;
    check_tail_supported_above_zero(X, "build_left_enlargement");
    check_tail_supported_above_zero(Y, "build_left_enlargement");
    if (dX0.dom != head || dX0.cod != obj_at(X, 1))
        throw CfError("build_left_enlargement: dX0 must map the head into X^1");
    if (dY0.dom != head || dY0.cod != obj_at(Y, 1))
        throw CfError("build_left_enlargement: dY0 must map the head into Y^1");

    std::vector<std::string> failed;
    if (!is_certified_indecomposable(X, seed)) failed.push_back("X is not indecomposable");
    bool x_sq = mor_is_zero(mor_compose(A, dX0, diff_at(X, 1)));
    bool y_sq = mor_is_zero(mor_compose(A, dY0, diff_at(Y, 1)));
    if (!x_sq) failed.push_back("d_X^1 . dX0 is nonzero");
    if (!y_sq) failed.push_back("d_Y^1 . dY0 is nonzero");
    if (mor_is_zero(dX0)) failed.push_back("dX0 is zero");
    if (homotopy_category_hom(X, Y).dim() != 0)
        failed.push_back("maps X -> Y survive in the homotopy category");
    if (y_sq) {
        Complex headY = assemble_one_step(head, {Y}, {dY0});
        if (!is_certified_indecomposable(headY, seed))
            failed.push_back("(head -> Y) is not indecomposable");
    }
    if (!failed.empty()) {
        std::string msg = "build_left_enlargement: hypotheses not met: " + failed[0];
        for (size_t i = 1; i < failed.size(); ++i) msg += "; " + failed[i];
        throw CfError(msg);
    }

    // The cone route: shift (head -> Y) one degree up and map it into X
    // through dX0 in degree 1.
    Complex headY = assemble_one_step(head, {Y}, {dY0});
    Complex shifted = shift_complex(headY, -1); // degrees [1, n+1], head in degree 1
    ChainMap into_x = make_chain_map(shifted, X, 1, {dX0});
    Complex cone = mapping_cone(into_x); // degree i: shifted^{i+1} + X^i

    // The same complex with the X slots leading, by the degreewise block swap.
    Complex whole = assemble_one_step(head, X, Y, dX0, dY0);
    {
        int lo = std::min(cone.lo, whole.lo), hi = std::max(cone.hi(), whole.hi());
        std::vector<ProjMor> sw;
        for (int i = lo; i <= hi; ++i) {
            ProjObj co = obj_at(cone, i), wo = obj_at(whole, i);
            ProjMor s = mor_zero(A, co, wo);
            size_t xc = obj_at(X, i).size(), yc = co.size() - (i >= 1 ? xc : 0);
            ProjMor idc = mor_identity(A, co);
            if (i == 0) {
                s = idc; // both sides hold the head itself
            } else {
                for (size_t j = 0; j < xc; ++j) s.at(j, yc + j) = idc.at(yc + j, yc + j);
                for (size_t j = 0; j < yc; ++j) s.at(xc + j, j) = idc.at(j, j);
            }
            sw.push_back(std::move(s));
        }
        ChainMap swap = make_chain_map(cone, whole, lo, std::move(sw));
        if (!chain_map_is_iso(swap))
            throw CfError("build_left_enlargement: cone does not match the assembled complex");
    }

    if (!is_certified_indecomposable(whole, seed))
        throw CfError("build_left_enlargement: cone decomposed");

    EnlargementView v;
    v.base = X;
    v.whole = whole;
    v.direction = EnlargementView::Direction::Left;
    v.witness = first_slots_inclusion(X, tail_of(whole));
    return v;
}

SummandTest summand_test(const Complex& X, const Complex& Y, const ProjMor& dX0,
                         const ProjMor& dY0) {
    if (X.A != Y.A) throw CfError("summand_test: X and Y over different algebras");
    const Algebra& A = *X.A;
    const Fp& F = A.field();
    check_tail_supported_above_zero(X, "summand_test");
    check_tail_supported_above_zero(Y, "summand_test");
    if (dX0.dom != dY0.dom) throw CfError("summand_test: dX0 and dY0 have different heads");
    if (dX0.cod != obj_at(X, 1) || dY0.cod != obj_at(Y, 1))
        throw CfError("summand_test: degree-0 blocks must land in the degree-1 objects");
    if (!mor_is_zero(mor_compose(A, dX0, diff_at(X, 1))) ||
        !mor_is_zero(mor_compose(A, dY0, diff_at(Y, 1))))
        throw CfError("summand_test: degree-0 blocks do not square to zero");

    SummandTest result;
    std::vector<ChainMap> basis = chain_map_space(Y, X);
    if (basis.empty()) {
        if (mor_is_zero(dX0)) result.witness = chain_zero(Y, X);
        return result;
    }
    size_t rows = hom_dim(A, dX0.dom, dX0.cod);
    Mat M(rows, basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        Vec col = mor_to_vec(A, mor_compose(A, dY0, chain_comp_at(basis[k], 1)));
        for (size_t r = 0; r < rows; ++r) M.at(r, k) = col[r];
    }
    Vec rhs = mor_to_vec(A, mor_scale(A, F.p() - 1, dX0));
    Mat B(rows, 1);
    for (size_t r = 0; r < rows; ++r) B.at(r, 0) = rhs[r];
    SolveResult sr = solve(F, M, B);
    if (!sr.consistent) return result;

    ChainMap g = chain_zero(Y, X);
    for (size_t k = 0; k < basis.size(); ++k)
        g = chain_add(g, chain_scale(sr.particular.at(k, 0), basis[k]));
    if (!mor_equal(mor_compose(A, dY0, chain_comp_at(g, 1)), mor_scale(A, F.p() - 1, dX0)))
        throw CfError("summand_test: solved witness failed verification");
    result.witness = std::move(g);
    return result;
}

NormalizeResult normalize_summand(const Complex& X, const Complex& Y, const ProjMor& dX0,
                                  const ProjMor& dY0, const ChainMap& g) {
    const Algebra& A = *X.A;
    const Fp& F = A.field();
    if (!complex_equal(g.X, Y) || !complex_equal(g.Y, X))
        throw CfError("normalize_summand: g must be a chain map Y -> X");
    if (!mor_equal(mor_compose(A, dY0, chain_comp_at(g, 1)), mor_scale(A, F.p() - 1, dX0)))
        throw CfError("normalize_summand: g is not a summand witness");

    Complex before = assemble_one_step(dX0.dom, X, Y, dX0, dY0);
    ProjMor dX0_new = mor_add(A, dX0, mor_compose(A, dY0, chain_comp_at(g, 1)));
    NormalizeResult r;
    r.whole = assemble_one_step(dX0.dom, X, Y, dX0_new, dY0);

    int n = std::max(before.hi(), 0);
    std::vector<ProjMor> comps;
    comps.push_back(mor_identity(A, dX0.dom));
    for (int i = 1; i <= n; ++i) {
        ProjObj xo = obj_at(X, i), yo = obj_at(Y, i);
        ProjMor u = mor_identity(A, obj_at(before, i));
        ProjMor gi = chain_comp_at(g, i);
        for (size_t b = 0; b < xo.size(); ++b)
            for (size_t a = 0; a < yo.size(); ++a) u.at(b, xo.size() + a) = gi.at(b, a);
        comps.push_back(std::move(u));
    }
    r.iso = make_chain_map(before, r.whole, 0, std::move(comps));
    if (!chain_map_is_iso(r.iso))
        throw CfError("normalize_summand: unitriangular map failed to be invertible");
    return r;
}

DiagonalIndecResult diagonal_indecomposability(const ProjObj& head,
                                               const std::vector<Complex>& parts,
                                               const std::vector<ProjMor>& d0s,
                                               uint64_t seed) {
    if (parts.empty()) throw CfError("diagonal_indecomposability: no parts");
    AlgebraPtr A = parts[0].A;
    for (size_t i = 0; i < parts.size(); ++i)
        if (!is_certified_indecomposable(parts[i], seed))
            throw CfError("diagonal_indecomposability: part " + std::to_string(i) +
                          " is not indecomposable");

    DiagonalIndecResult r;
    r.head_indecomposable = head.size() == 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::vector<Complex> others;
        ProjMor stacked = mor_zero(*A, head, ProjObj{});
        for (size_t j = 0; j < parts.size(); ++j) {
            if (j == i) continue;
            others.push_back(parts[j]);
            stacked = stack_rows(*A, stacked, d0s[j]);
        }
        Complex rest = direct_sum_diagram(A, others).sum;
        SummandTest st = summand_test(parts[i], rest, d0s[i], stacked);
        if (st.has_witness()) {
            r.split_parts.push_back(i);
            r.witnesses.push_back(std::move(*st.witness));
        }
    }

    Complex whole = assemble_one_step(head, parts, d0s);
    r.total_parts = decompose(whole, seed).instances.size();
    r.indecomposable = r.total_parts == 1;
    if (r.head_indecomposable && r.indecomposable != r.split_parts.empty())
        throw CfError("diagonal_indecomposability: witness criterion disagrees with the "
                      "direct-sum decomposition");
    return r;
}

CandidateZ0 candidate_Z0(const Complex& X) {
    const Algebra& A = *X.A;
    KernelSocle ks = kernel_socle_of_mor(A, diff_at(X, 1));
    CandidateZ0 r;
    r.cover = projective_cover_of_socle(A, ks.socle_mult);
    r.kernel_is_zero = ks.kernel_is_zero;
    r.socle_mult = std::move(ks.socle_mult);
    return r;
}

D0ShapeReport d0_shape_check(const ProjObj& head0, const ProjObj& head1, const Complex& X,
                             const Complex& W, const ProjMor& a, const ProjMor& b,
                             const ProjMor& c, const ProjMor& d, uint64_t seed) {
    const Algebra& A = *X.A;
    if (head0.size() != 1 || head1.size() != 1)
        throw CfError("d0_shape_check: heads must be single indecomposable projectives");

    ProjObj head = concat_obj(head0, head1);
    Complex whole = assemble_one_step(head, X, W, concat_cols(A, a, c), concat_cols(A, b, d));

    D0ShapeReport r;
    r.a_zero = mor_is_zero(a);
    r.b_zero = mor_is_zero(b);
    r.c_zero = mor_is_zero(c);
    r.d_zero = mor_is_zero(d);
    r.indecomposable = is_certified_indecomposable(whole, seed);

    r.hypothesis_ok = true;
    if (!r.a_zero && !chain_map_space(assemble_one_step(head0, {X}, {a}), whole).empty())
        r.hypothesis_ok = false;
    if (r.hypothesis_ok && !r.c_zero &&
        !chain_map_space(assemble_one_step(head1, {X}, {c}), whole).empty())
        r.hypothesis_ok = false;

    if (!r.indecomposable) {
        r.verdict = "Z not indecomposable";
        return r;
    }
    if (!r.hypothesis_ok) {
        r.verdict = "hypothesis violated: a head-column extension of X maps into Z";
        return r;
    }
    if (r.b_zero || r.d_zero) {
        r.verdict = "unexpected zero block";
        return r;
    }
    if (!r.a_zero && r.c_zero) r.pattern = 1;
    if (!r.a_zero && !r.c_zero) r.pattern = 2;
    if (r.a_zero && !r.c_zero) r.pattern = 3;
    r.verdict = "admissible shape " + std::to_string(r.pattern);
    return r;
}

Classification classify_indecomposable(const Complex& Z, int n, uint64_t seed) {
    if (n < 1) throw CfError("classify_indecomposable: the window needs n >= 1");
    Complex t = trim_complex(Z);
    if (t.is_zero()) throw CfError("classify_indecomposable: Z is the zero complex");
    if (t.lo < 0 || t.hi() > n)
        throw CfError("classify_indecomposable: Z is not supported in [0, n]");
    if (!is_certified_indecomposable(Z, seed))
        throw CfError("classify_indecomposable: Z is not indecomposable");

    Classification r;
    if (obj_at(Z, 0).verts.empty()) {
        r.kind = Classification::Kind::Shift;
        r.base = t;
        r.shift_by = 0;
        return r;
    }
    if (obj_at(Z, n).verts.empty()) {
        r.kind = Classification::Kind::Shift;
        r.base = shift_complex(t, -1);
        r.shift_by = 1;
        return r;
    }
    r.kind = Classification::Kind::LeftEnlargement;
    Decomposition D = decompose(restrict_complex(Z, 1, n), seed);
    r.bases = std::move(D.reps);
    r.base_multiplicity = std::move(D.multiplicity);
    return r;
}

} // namespace cforge
