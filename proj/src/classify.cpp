#include "cforge/classify.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace cforge {

namespace {

AlgElem identity_elem(const Algebra& A, int v) {
    return mor_identity(A, ProjObj{{v}}).e[0];
}

// Gaussian elimination on a single component; see split_common.
DegreeSplit split_degree(const Algebra& A, const ProjMor& f0) {
    ProjMor f = f0;
    const size_t nc = f.dom.size(), nr = f.cod.size();
    ProjMor U = mor_identity(A, f.dom);
    ProjMor V = mor_identity(A, f.cod);
    std::vector<char> col_done(nc, 0), row_done(nr, 0);

    DegreeSplit s;
    for (;;) {
        size_t pb = nr, pa = nc;
        for (size_t b = 0; b < nr && pb == nr; ++b) {
            if (row_done[b]) continue;
            for (size_t a = 0; a < nc; ++a) {
                if (col_done[a]) continue;
                const AlgElem& x = f.at(b, a);
                if (x.dom_v == x.cod_v && elem_scalar_part(A, x) != 0) {
                    pb = b;
                    pa = a;
                    break;
                }
            }
        }
        if (pb == nr) break;
        const int v = f.dom.verts[pa];

        // Normalize the pivot to the identity: compose the domain slot with
        // the inverse of the pivot, a unit of the local algebra at v.
        {
            ProjMor one;
            one.dom = ProjObj{{v}};
            one.cod = one.dom;
            one.e = {f.at(pb, pa)};
            ProjMor E = mor_identity(A, f.dom);
            E.at(pa, pa) = mor_inverse(A, one).e[0];
            f = mor_compose(A, E, f);
            U = mor_compose(A, E, U);
        }
        // Clear the pivot row by column operations through the pivot slot.
        {
            ProjMor E = mor_identity(A, f.dom);
            bool any = false;
            for (size_t a = 0; a < nc; ++a) {
                if (a == pa || elem_is_zero(f.at(pb, a))) continue;
                E.at(pa, a) = elem_scale(A, A.field().neg(1), f.at(pb, a));
                any = true;
            }
            if (any) {
                f = mor_compose(A, E, f);
                U = mor_compose(A, E, U);
            }
        }
        // Clear the pivot column by row operations; the pivot row is already
        // zero away from the pivot, so no fill-in lands back in it.
        {
            ProjMor W = mor_identity(A, f.cod);
            bool any = false;
            for (size_t b = 0; b < nr; ++b) {
                if (b == pb || elem_is_zero(f.at(b, pa))) continue;
                W.at(b, pb) = elem_scale(A, A.field().neg(1), f.at(b, pa));
                any = true;
            }
            if (any) {
                f = mor_compose(A, f, W);
                V = mor_compose(A, V, W);
            }
        }
        row_done[pb] = 1;
        col_done[pa] = 1;
        s.dom_pivot.push_back(pa);
        s.cod_pivot.push_back(pb);
        s.common.verts.push_back(v);
    }

    for (size_t a = 0; a < nc; ++a)
        if (!col_done[a]) s.dom_rest.push_back(a);
    for (size_t b = 0; b < nr; ++b)
        if (!row_done[b]) s.cod_rest.push_back(b);

    ProjObj rdom, rcod;
    for (size_t a : s.dom_rest) rdom.verts.push_back(f.dom.verts[a]);
    for (size_t b : s.cod_rest) rcod.verts.push_back(f.cod.verts[b]);
    s.residual = mor_zero(A, rdom, rcod);
    for (size_t ri = 0; ri < s.cod_rest.size(); ++ri)
        for (size_t ci = 0; ci < s.dom_rest.size(); ++ci)
            s.residual.at(ri, ci) = f.at(s.cod_rest[ri], s.dom_rest[ci]);
    s.dom_auto = U;
    s.cod_auto = V;

    // Elimination fixed point: no residual coefficient may be invertible,
    // and the accumulated automorphisms must reproduce the eliminated form.
    if (!mor_in_radical(A, s.residual))
        throw CfError("split_common: internal check failed: residual not radical");
    ProjMor nf = mor_compose(A, mor_compose(A, U, f0), V);
    if (!mor_equal(nf, split_normal_form(A, s)))
        throw CfError("split_common: internal check failed: normal form mismatch");
    return s;
}

int lowest_supported_degree(const ChainMap& f) {
    int lo = std::min(f.X.lo, f.Y.lo), hi = std::max(f.X.hi(), f.Y.hi());
    for (int i = lo; i <= hi; ++i)
        if (!obj_at(f.X, i).verts.empty() || !obj_at(f.Y, i).verts.empty()) return i;
    return INT_MAX;
}

std::string join_list(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    return out;
}

std::string describe_kind(const ClassificationResult& c) {
    std::string out = map_kind_name(c.kind);
    if (c.pivot) out += " with pivot degree " + std::to_string(*c.pivot);
    return out;
}

} // namespace

CommonSplit split_common(const ChainMap& f) {
    const Algebra& A = *f.X.A;
    CommonSplit cs;
    cs.lo = std::min(f.X.lo, f.Y.lo);
    const int hi = std::max(f.X.hi(), f.Y.hi());
    for (int i = cs.lo; i <= hi; ++i) cs.degrees.push_back(split_degree(A, chain_comp_at(f, i)));
    return cs;
}

ProjMor split_normal_form(const Algebra& A, const DegreeSplit& s) {
    ProjMor nf = mor_zero(A, s.dom_auto.dom, s.cod_auto.dom);
    for (size_t k = 0; k < s.common.size(); ++k)
        nf.at(s.cod_pivot[k], s.dom_pivot[k]) = identity_elem(A, s.common.verts[k]);
    for (size_t ri = 0; ri < s.cod_rest.size(); ++ri)
        for (size_t ci = 0; ci < s.dom_rest.size(); ++ci)
            nf.at(s.cod_rest[ri], s.dom_rest[ci]) = s.residual.at(ri, ci);
    return nf;
}

ProjMor split_reassemble(const Algebra& A, const DegreeSplit& s) {
    ProjMor nf = split_normal_form(A, s);
    ProjMor ui = mor_inverse(A, s.dom_auto);
    ProjMor vi = mor_inverse(A, s.cod_auto);
    return mor_compose(A, mor_compose(A, ui, nf), vi);
}

EntryType entry_type(const Algebra& A, const ProjMor& f) {
    const bool sec = mor_is_section(A, f);
    const bool ret = mor_is_retraction(A, f);
    if (sec && ret) return EntryType::Both;
    if (sec) return EntryType::Section;
    if (ret) return EntryType::Retraction;
    return EntryType::Neither;
}

const char* entry_type_name(EntryType t) {
    switch (t) {
    case EntryType::Section: return "section";
    case EntryType::Retraction: return "retraction";
    case EntryType::Both: return "both";
    default: return "neither";
    }
}

const char* map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::Sec: return "sec";
    case MapKind::Ret: return "ret";
    case MapKind::RetIrrSec: return "ret-irr-sec";
    default: return "irr-sec";
    }
}

bool has_irreducible_self_map(const Algebra& A, int v) { return A.has_loop_at(v); }

ClassificationResult classify_method(const ChainMap& f, uint64_t seed) {
    const Algebra& A = *f.X.A;
    for (int v = 1; v <= A.vertices(); ++v)
        if (has_irreducible_self_map(A, v))
            throw CfError("classify_method: hypothesis violated: P" + std::to_string(v) +
                          " has an irreducible self-map");
    if (chain_map_is_zero(f))
        throw CfError("classify_method: inconsistent pattern: f is the zero map");
    if (!is_certified_indecomposable(f.X, seed))
        throw CfError("classify_method: the domain is not indecomposable");
    if (!is_certified_indecomposable(f.Y, seed))
        throw CfError("classify_method: the codomain is not indecomposable");

    ClassificationResult res;
    res.evidence = split_common(f);
    res.lo = res.evidence.lo;
    for (size_t k = 0; k < res.evidence.degrees.size(); ++k) {
        const DegreeSplit& s = res.evidence.degrees[k];
        const bool dz = s.dom_rest.empty(), cz = s.cod_rest.empty();
        const EntryType t = dz ? (cz ? EntryType::Both : EntryType::Section)
                               : (cz ? EntryType::Retraction : EntryType::Neither);
        if (t != entry_type(A, chain_comp_at(f, res.lo + (int)k)))
            throw CfError("classify_method: internal check failed: residual pattern vs entry type");
        res.entry_types.push_back(t);
    }

    std::vector<int> pivots;
    bool all_both = true, all_sec = true, all_ret = true;
    for (size_t k = 0; k < res.entry_types.size(); ++k) {
        const EntryType t = res.entry_types[k];
        if (t == EntryType::Neither) pivots.push_back(res.lo + (int)k);
        if (t != EntryType::Both) all_both = false;
        if (t != EntryType::Section && t != EntryType::Both) all_sec = false;
        if (t != EntryType::Retraction && t != EntryType::Both) all_ret = false;
    }
    if (all_both)
        throw CfError("classify_method: inconsistent pattern: every component is invertible");
    if (pivots.empty()) {
        if (all_sec) {
            res.kind = MapKind::Sec;
            return res;
        }
        if (all_ret) {
            res.kind = MapKind::Ret;
            return res;
        }
        throw CfError("classify_method: inconsistent pattern: sections and retractions "
                      "interleave without an irreducible component");
    }
    if (pivots.size() > 1)
        throw CfError("classify_method: inconsistent pattern: more than one irreducible component");
    const int p = pivots[0];
    for (size_t k = 0; k < res.entry_types.size(); ++k) {
        const int i = res.lo + (int)k;
        const EntryType t = res.entry_types[k];
        if (i < p && t != EntryType::Retraction && t != EntryType::Both)
            throw CfError("classify_method: inconsistent pattern: a section sits below the "
                          "irreducible component");
        if (i > p && t != EntryType::Section && t != EntryType::Both)
            throw CfError("classify_method: inconsistent pattern: a retraction sits above the "
                          "irreducible component");
    }
    res.pivot = p;
    res.kind = p == lowest_supported_degree(f) ? MapKind::IrrSec : MapKind::RetIrrSec;
    return res;
}

FShapeReport check_F_shape(const ChainMap& f, uint64_t seed) {
    AlgebraPtr Ap = f.X.A;
    const Algebra& A = *Ap;

    std::vector<std::string> bad;
    const Complex dt = trim_complex(f.X), ct = trim_complex(f.Y);
    if (dt.is_zero() || dt.lo != 0) bad.push_back("the domain has no degree-0 head");
    if (ct.is_zero() || ct.lo != 0) bad.push_back("the codomain has no degree-0 head");
    const int hi = std::max(f.X.hi(), f.Y.hi());
    const Complex tail_dom = restrict_complex(f.X, 1, hi);
    const Complex tail_cod = restrict_complex(f.Y, 1, hi);
    if (tail_dom.is_zero()) bad.push_back("the domain has an empty tail");
    if (tail_cod.is_zero()) bad.push_back("the codomain has an empty tail");
    if (!bad.empty()) throw CfError("check_F_shape: hypotheses not met: " + join_list(bad));
    if (!is_certified_indecomposable(f.X, seed)) bad.push_back("the domain is not indecomposable");
    if (!is_certified_indecomposable(f.Y, seed)) bad.push_back("the codomain is not indecomposable");
    if (!bad.empty()) throw CfError("check_F_shape: hypotheses not met: " + join_list(bad));

    FShapeReport rep;
    ChainMap Ff = chain_map_truncate(f, 1, hi);
    rep.split = split_common(Ff);
    rep.base.A = Ap;
    rep.dom_rest = Ff.X;
    rep.cod_rest = Ff.Y;
    rep.residual = chain_zero(rep.dom_rest, rep.cod_rest);

    // Match the indecomposable summands of the two tails.
    Decomposition Dd = decompose(Ff.X, seed);
    Decomposition Dc = decompose(Ff.Y, seed);
    std::vector<std::pair<size_t, size_t>> shared;
    size_t shared_total = 0;
    for (size_t di = 0; di < Dd.reps.size(); ++di)
        for (size_t ci = 0; ci < Dc.reps.size(); ++ci)
            if (are_isomorphic(Dd.reps[di], Dc.reps[ci], seed).isomorphic) {
                shared.emplace_back(di, ci);
                shared_total += std::min(Dd.multiplicity[di], Dc.multiplicity[ci]);
            }
    const bool base_ok = shared.size() == 1 && shared_total == 1;
    if (base_ok) rep.base = Dd.reps[shared[0].first];

    // Verdicts the tail restriction settles on its own.
    if (chain_map_is_zero(Ff)) {
        rep.degenerate = true;
        rep.note = "degenerate: the tail restriction of f is zero";
        return rep;
    }
    if (chain_is_section(Ff)) {
        rep.section_like = true;
        rep.note = "the tail restriction is a section - not the expected shape";
        return rep;
    }
    if (chain_is_retraction(Ff)) {
        rep.retraction_like = true;
        rep.note = "the tail restriction is a retraction - not the expected shape";
        return rep;
    }

    if (shared.empty()) bad.push_back("the tails share no indecomposable summand");
    else if (!base_ok) bad.push_back("the tails share more than a single summand");
    if (base_ok) {
        if (Dd.instances.size() < 2) bad.push_back("the domain tail has no part besides the base");
        if (Dc.instances.size() < 2) bad.push_back("the codomain tail has no part besides the base");
    }
    if (!bad.empty()) throw CfError("check_F_shape: hypotheses not met: " + join_list(bad));

    // Complements of the base instance on both sides, with their inclusion
    // and projection into the tails.
    auto complement = [&](const Decomposition& D, size_t cls, const Complex& tail, ChainMap& incl,
                          ChainMap& proj, size_t& base_inst) {
        std::vector<Complex> parts;
        std::vector<size_t> idx;
        for (size_t k = 0; k < D.instances.size(); ++k) {
            if (D.instance_class[k] == cls) {
                base_inst = k;
                continue;
            }
            parts.push_back(D.instances[k]);
            idx.push_back(k);
        }
        SumDiagram sd = direct_sum_diagram(Ap, parts);
        incl = chain_zero(sd.sum, tail);
        proj = chain_zero(tail, sd.sum);
        for (size_t j = 0; j < idx.size(); ++j) {
            incl = chain_add(incl, chain_compose(sd.proj[j], D.iotas[idx[j]]));
            proj = chain_add(proj, chain_compose(D.pis[idx[j]], sd.incl[j]));
        }
        return sd.sum;
    };
    ChainMap iw_dom, pw_dom, iw_cod, pw_cod;
    size_t bd = 0, bc = 0;
    rep.dom_rest = complement(Dd, shared[0].first, Ff.X, iw_dom, pw_dom, bd);
    rep.cod_rest = complement(Dc, shared[0].second, Ff.Y, iw_cod, pw_cod, bc);

    const ChainMap c = chain_compose(chain_compose(Dd.iotas[bd], Ff), Dc.pis[bc]);
    const ChainMap beta = chain_compose(chain_compose(iw_dom, Ff), Dc.pis[bc]);
    const ChainMap gamma = chain_compose(chain_compose(Dd.iotas[bd], Ff), pw_cod);
    const ChainMap delta = chain_compose(chain_compose(iw_dom, Ff), pw_cod);

    if (chain_map_is_iso(c)) {
        rep.shape_confirmed = true;
        const ChainMap cinv = chain_map_inverse(c);
        rep.residual = chain_sub(delta, chain_compose(chain_compose(beta, cinv), gamma));
    } else {
        rep.residual = delta;
    }

    rep.common_is_base = true;
    for (int i = 1; i <= hi; ++i) {
        std::vector<int> cv;
        if (i >= rep.split.lo && i - rep.split.lo < (int)rep.split.degrees.size())
            cv = rep.split.degrees[i - rep.split.lo].common.verts;
        std::vector<int> bv = obj_at(rep.base, i).verts;
        std::sort(cv.begin(), cv.end());
        std::sort(bv.begin(), bv.end());
        if (cv != bv) rep.common_is_base = false;
    }
    rep.residual_radical = true;
    for (int i = rep.residual.lo; i <= std::max(rep.residual.X.hi(), rep.residual.Y.hi()); ++i)
        if (!mor_in_radical(A, chain_comp_at(rep.residual, i))) rep.residual_radical = false;

    if (!rep.shape_confirmed)
        rep.note = "the base-to-base block of the tail restriction is not invertible";
    else if (!rep.common_is_base)
        rep.note = "identity-plus-residual shape found, but the degreewise common part "
                   "differs from the base";
    else if (!rep.residual_radical)
        rep.note = "identity on the base plus a residual with an invertible coefficient";
    else
        rep.note = "the tail restriction is the identity on the base plus a radical residual";
    return rep;
}

WitnessReport verify_nonirreducible_witness(const ChainMap& f, const ChainMap& h1,
                                            const ChainMap& h2) {
    if (!complex_equal(h1.Y, h2.X))
        throw CfError("verify_nonirreducible_witness: the legs do not compose");
    if (!complex_equal(h1.X, f.X) || !complex_equal(h2.Y, f.Y))
        throw CfError("verify_nonirreducible_witness: the legs do not match the endpoints of f");
    if (!chain_map_equal(chain_compose(h1, h2), f))
        throw CfError("verify_nonirreducible_witness: composition mismatch: h2.h1 differs from f");

    WitnessReport w;
    w.h1_section = chain_is_section(h1);
    w.h2_retraction = chain_is_retraction(h2);
    w.witnessed = !w.h1_section && !w.h2_retraction;
    if (w.witnessed)
        w.verdict = "witnessed non-irreducible";
    else if (w.h1_section && w.h2_retraction)
        w.verdict = "rejected: h1 is a section and h2 is a retraction";
    else if (w.h1_section)
        w.verdict = "rejected: h1 is a section";
    else
        w.verdict = "rejected: h2 is a retraction";
    return w;
}

AgreementReport type_agreement(const ChainMap& f, const ChainMap& g, uint64_t seed) {
    AgreementReport r;
    r.left = classify_method(f, seed);
    r.right = classify_method(g, seed);
    r.agree = r.left.kind == r.right.kind && r.left.pivot == r.right.pivot;
    std::ostringstream os;
    if (r.agree)
        os << "agreement: both maps are " << describe_kind(r.left);
    else
        os << "property violation: the maps classify differently: " << describe_kind(r.left)
           << " vs " << describe_kind(r.right);
    r.note = os.str();
    return r;
}

const char* restriction_type_name(RestrictionType t) {
    switch (t) {
    case RestrictionType::Section: return "section";
    case RestrictionType::Retraction: return "retraction";
    default: return "irreducible-candidate";
    }
}

RestrictionType restriction_type(const ChainMap& f, int lo, int hi) {
    if (lo > hi) throw CfError("restriction_type: the degree window is empty");
    const ChainMap fI = chain_map_truncate(f, lo, hi);
    if (chain_is_section(fI)) return RestrictionType::Section;
    if (chain_is_retraction(fI)) return RestrictionType::Retraction;
    return RestrictionType::IrreducibleCandidate;
}

} // namespace cforge
