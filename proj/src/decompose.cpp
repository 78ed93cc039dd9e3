#include "cforge/decompose.hpp"

#include <algorithm>
#include <random>

namespace cforge {

// ---------------------------------------------------------------------------
// End(X) as a structure-constant algebra
// ---------------------------------------------------------------------------

ChainMap EndoAlgebra::from_coords(const Vec& c) const {
    const Fp& F = X.A->field();
    if (c.size() != basis.size()) throw CfError("from_coords: wrong coordinate length");
    Vec v(layout.total, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint32_t ci = c[i] % F.p();
        if (!ci) continue;
        for (size_t t = 0; t < layout.total; ++t)
            v[t] = F.add(v[t], F.mul(ci, basis_rows.at(i, t)));
    }
    return vec_to_chain_map(layout, X, X, v);
}

Vec EndoAlgebra::to_coords(const ChainMap& f) const {
    Vec v = chain_map_to_vec(layout, f);
    return StructAlg::coords_in_rows(X.A->field(), basis_rows, v);
}

EndoAlgebra endo_algebra(const Complex& X) {
    const Fp& F = X.A->field();
    ChainHomLayout layout = chain_hom_layout(X, X);
    std::vector<ChainMap> basis = chain_map_space(X, X);
    size_t n = basis.size();
    Mat rows(n, layout.total);
    for (size_t i = 0; i < n; ++i) {
        Vec v = chain_map_to_vec(layout, basis[i]);
        for (size_t t = 0; t < layout.total; ++t) rows.at(i, t) = v[t];
    }
    Mat bt = mat_transpose(rows);
    std::vector<Mat> left;
    left.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Mat rhs(layout.total, n);
        for (size_t j = 0; j < n; ++j) {
            // product convention: basis[i] * basis[j] applies basis[j] first
            Vec v = chain_map_to_vec(layout, chain_compose(basis[j], basis[i]));
            for (size_t t = 0; t < layout.total; ++t) rhs.at(t, j) = v[t];
        }
        SolveResult sr = solve(F, bt, rhs);
        if (!sr.consistent) throw CfError("endo_algebra: products leave the span");
        left.push_back(sr.particular);
    }
    return EndoAlgebra{X, std::move(layout), std::move(basis), std::move(rows),
                       StructAlg(F, std::move(left))};
}

Mat radical_of_endo(const EndoAlgebra& E) { return E.alg.radical_basis(); }

// Basis of a complement of the radical, as 0/1 rows picking coordinate axes.
static Mat radical_complement(const Fp& F, const Mat& rad, size_t n) {
    std::vector<size_t> idx = extend_basis_rows(F, rad, Mat::identity(n));
    Mat comp(idx.size(), n);
    for (size_t t = 0; t < idx.size(); ++t) comp.at(t, idx[t]) = 1;
    return comp;
}

bool is_local_endo(const EndoAlgebra& E) {
    size_t n = E.alg.dim();
    if (n == 0) return false;
    const Fp& F = E.alg.field();
    Mat rad = E.alg.radical_basis();
    Mat comp = radical_complement(F, rad, n);
    StructAlg S = E.alg.subquotient(comp, rad);
    StructAlg ZS = S.subquotient(S.center_basis(), Mat(0, S.dim()));
    return ZS.frobenius_fixed_dim() == 1 && S.dim() == ZS.dim();
}

// ---------------------------------------------------------------------------
// idempotent search in the semisimple quotient
// ---------------------------------------------------------------------------

static Poly poly_pow(const Fp& F, Poly b, size_t k) {
    Poly r{1};
    while (k) {
        if (k & 1) r = poly_mul(F, r, b);
        b = poly_mul(F, b, b);
        k >>= 1;
    }
    return r;
}

// Factor m = m1 * m2 with gcd(m1, m2) = 1 and both factors nonconstant, when
// m has at least two distinct irreducible factors.
static std::optional<std::pair<Poly, Poly>> coprime_factor(const Fp& F, const Poly& m) {
    int d = poly_deg(m);
    if (d < 2) return std::nullopt;
    // peel off the power of x when 0 is a root
    size_t a = 0;
    Poly q = m;
    while (!q.empty() && q[0] == 0) {
        q.erase(q.begin());
        ++a;
    }
    if (a >= 1) {
        if (poly_deg(q) < 1) return std::nullopt; // m = x^a
        Poly xa(a + 1, 0);
        xa[a] = 1;
        return std::make_pair(xa, poly_monic(F, q));
    }
    Poly s = poly_squarefree_part(F, m);
    if (poly_deg(s) < 2) return std::nullopt; // single linear primary factor
    auto sp = poly_coprime_split(F, s);
    if (!sp) return std::nullopt; // s irreducible: single primary factor
    Poly m1 = poly_gcd(F, m, poly_pow(F, sp->first, (size_t)d));
    auto dm = poly_divmod(F, m, m1);
    if (!poly_is_zero(dm.second)) throw CfError("coprime_factor: inexact primary split");
    return std::make_pair(m1, poly_monic(F, dm.first));
}

static Vec add_scaled_identity(const StructAlg& S, Vec x, uint32_t c, const Vec& one) {
    const Fp& F = S.field();
    for (size_t t = 0; t < x.size(); ++t) x[t] = F.add(x[t], F.mul(c, one[t]));
    return x;
}

// Evaluate a polynomial at an algebra element (Horner).
static Vec eval_at(const StructAlg& S, const Poly& c, const Vec& u, const Vec& one) {
    Vec r = S.zero();
    for (size_t k = c.size(); k-- > 0;) {
        r = S.mul(r, u);
        if (c[k]) r = add_scaled_identity(S, std::move(r), c[k], one);
    }
    return r;
}

// Idempotent e(u) with e = 0 on the m1-primary part and 1 on the m2-primary
// part of F[u] = F[x]/(m1 m2).
static Vec crt_idempotent(const StructAlg& S, const Vec& u, const Poly& m1, const Poly& m2) {
    const Fp& F = S.field();
    PolyXgcd xg = poly_xgcd(F, m1, m2);
    if (poly_deg(xg.g) != 0) throw CfError("crt_idempotent: factors are not coprime");
    Poly e = poly_mul(F, poly_scale(F, F.inv(xg.g[0]), xg.u), m1);
    e = poly_mod(F, e, poly_mul(F, m1, m2));
    return eval_at(S, e, u, S.identity());
}

// A nontrivial idempotent of the semisimple algebra S (dim >= 2, not a
// division algebra).  Deterministic for a fixed seed.
static std::optional<Vec> idempotent_in_semisimple(const StructAlg& S, uint64_t seed) {
    const Fp& F = S.field();
    size_t n = S.dim();
    Vec one = S.identity();

    auto accept = [&](Vec e) -> std::optional<Vec> {
        if (S.is_zero(e) || e == one) return std::nullopt;
        if (S.mul(e, e) != e) throw CfError("idempotent_in_semisimple: unstable candidate");
        return e;
    };

    // several simple factors: project onto an eigencomponent of a Frobenius-
    // fixed central element, whose minimal polynomial splits with simple roots
    StructAlg ZS = S.subquotient(S.center_basis(), Mat(0, n));
    Mat zc = S.center_basis();
    if (ZS.frobenius_fixed_dim() > 1) {
        size_t z = ZS.dim();
        Mat frob(z, z);
        for (size_t c = 0; c < z; ++c) {
            Vec bc(z, 0);
            bc[c] = 1;
            Vec fp = ZS.pow_element(bc, F.p());
            for (size_t r = 0; r < z; ++r) frob.at(r, c) = F.sub(fp[r], r == c ? 1 : 0);
        }
        Mat fixed = kernel_basis(F, frob);
        for (size_t r = 0; r < fixed.rows(); ++r) {
            Vec u(n, 0);
            for (size_t c = 0; c < z; ++c)
                for (size_t t = 0; t < n; ++t)
                    u[t] = F.add(u[t], F.mul(fixed.at(r, c), zc.at(c, t)));
            Poly m = S.min_poly(u);
            if (poly_deg(m) < 2) continue;
            std::vector<uint32_t> roots = poly_roots_of_split_squarefree(F, m);
            Vec e = one;
            uint32_t denom = 1;
            for (size_t c = 1; c < roots.size(); ++c) {
                e = S.mul(e, add_scaled_identity(S, u, F.neg(roots[c]), one));
                denom = F.mul(denom, F.sub(roots[0], roots[c]));
            }
            uint32_t s = F.inv(denom);
            for (uint32_t& t : e) t = F.mul(t, s);
            if (auto r2 = accept(std::move(e))) return r2;
        }
    }

    // matrix ring over a field: find u whose minimal polynomial has two
    // coprime parts and cut along them
    auto try_element = [&](const Vec& u) -> std::optional<Vec> {
        Poly m = S.min_poly(u);
        auto cf = coprime_factor(F, m);
        if (!cf) return std::nullopt;
        return accept(crt_idempotent(S, u, cf->first, cf->second));
    };
    for (size_t i = 0; i < n; ++i) {
        Vec b(n, 0);
        b[i] = 1;
        if (auto r = try_element(b)) return r;
    }
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
    std::uniform_int_distribution<uint32_t> dist(0, F.p() - 1);
    for (int t = 0; t < 64; ++t) {
        Vec u(n);
        for (uint32_t& c : u) c = dist(rng);
        if (auto r = try_element(u)) return r;
    }
    return std::nullopt;
}

// Lift an idempotent of E/rad to an exact idempotent of E along e -> 3e^2-2e^3
// (all iterates commute, and the discrepancy deepens into the radical).
static Vec newton_lift(const StructAlg& E, Vec e) {
    const Fp& F = E.field();
    uint32_t three = F.reduce_int(3), two = F.reduce_int(2);
    for (int it = 0; it < 100; ++it) {
        Vec e2 = E.mul(e, e);
        if (e2 == e) return e;
        Vec e3 = E.mul(e2, e);
        for (size_t t = 0; t < e.size(); ++t)
            e[t] = F.sub(F.mul(three, e2[t]), F.mul(two, e3[t]));
    }
    throw CfError("split_once: idempotent lift did not converge");
}

// ---------------------------------------------------------------------------
// splitting a complex along an idempotent chain endomorphism
// ---------------------------------------------------------------------------

static SplitOnce split_along(const EndoAlgebra& E, const Vec& e_coords) {
    const Complex& X = E.X;
    const Algebra& A = *X.A;
    ChainMap eps = E.from_coords(e_coords);
    if (!chain_map_equal(chain_compose(eps, eps), eps))
        throw CfError("split_once: splitting endomorphism is not idempotent");

    std::vector<ProjObj> objA, objB;
    std::vector<ProjMor> incA, prjA, incB, prjB;
    for (int deg = X.lo; deg <= X.hi(); ++deg) {
        ProjMor ei = chain_comp_at(eps, deg);
        ProjMor ci = mor_sub(A, mor_identity(A, obj_at(X, deg)), ei);
        ProjSplit sa = split_idempotent_proj(A, ei);
        ProjSplit sb = split_idempotent_proj(A, ci);
        objA.push_back(sa.sub);
        incA.push_back(sa.iota);
        prjA.push_back(sa.pi);
        objB.push_back(sb.sub);
        incB.push_back(sb.iota);
        prjB.push_back(sb.pi);
    }
    auto assemble = [&](std::vector<ProjObj>& obj, std::vector<ProjMor>& inc,
                        std::vector<ProjMor>& prj) {
        std::vector<ProjMor> d;
        for (int deg = X.lo; deg < X.hi(); ++deg) {
            size_t k = (size_t)(deg - X.lo);
            d.push_back(mor_compose(A, mor_compose(A, inc[k], diff_at(X, deg)), prj[k + 1]));
        }
        Complex C = trim_complex(make_complex(X.A, X.lo, obj, d));
        ChainMap io = make_chain_map(C, X, X.lo, inc);
        ChainMap pi = make_chain_map(X, C, X.lo, prj);
        return std::make_tuple(std::move(C), std::move(io), std::move(pi));
    };
    SplitOnce r;
    std::tie(r.part_a, r.iota_a, r.pi_a) = assemble(objA, incA, prjA);
    std::tie(r.part_b, r.iota_b, r.pi_b) = assemble(objB, incB, prjB);
    if (r.part_a.obj.empty() || r.part_b.obj.empty())
        throw CfError("split_once: splitting idempotent is trivial");
    return r;
}

SplitOnce split_once(const Complex& X, uint64_t seed) {
    if (trim_complex(X).obj.empty()) throw CfError("split_once: zero complex");
    EndoAlgebra E = endo_algebra(X);
    size_t n = E.alg.dim();
    const Fp& F = E.alg.field();

    if (F.p() > n) {
        Mat rad = E.alg.radical_basis();
        Mat comp = radical_complement(F, rad, n);
        StructAlg S = E.alg.subquotient(comp, rad);
        StructAlg ZS = S.subquotient(S.center_basis(), Mat(0, S.dim()));
        if (ZS.frobenius_fixed_dim() == 1 && S.dim() == ZS.dim()) {
            SplitOnce r;
            r.indecomposable = true;
            return r;
        }
        std::optional<Vec> eS = idempotent_in_semisimple(S, seed);
        if (!eS)
            throw CfError("split_once: no splitting idempotent found; retry with another seed");
        Vec e0(n, 0);
        for (size_t r = 0; r < comp.rows(); ++r) {
            if (!(*eS)[r]) continue;
            for (size_t j = 0; j < n; ++j)
                e0[j] = F.add(e0[j], F.mul((*eS)[r], comp.at(r, j)));
        }
        Vec e = newton_lift(E.alg, std::move(e0));
        if (E.alg.is_zero(e) || e == E.alg.identity())
            throw CfError("split_once: lifted idempotent is trivial");
        return split_along(E, e);
    }

    // small field: exhaustive search of End(X) for an idempotent, which either
    // splits X or certifies indecomposability outright
    const uint64_t cap = 1ull << 14;
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        total *= F.p();
        if (total > cap) throw CfError("prime too small: decomposition needs p > dim End(X)");
    }
    Vec one = E.alg.identity();
    Vec v(n, 0);
    for (uint64_t t = 1; t < total; ++t) {
        size_t k = 0;
        while (true) {
            if (++v[k] == F.p()) {
                v[k] = 0;
                ++k;
            } else
                break;
        }
        if (v == one) continue;
        if (E.alg.mul(v, v) == v) return split_along(E, v);
    }
    SplitOnce r;
    r.indecomposable = true;
    return r;
}

bool is_certified_indecomposable(const Complex& X, uint64_t seed) {
    return split_once(X, seed).indecomposable;
}

// ---------------------------------------------------------------------------
// full decomposition
// ---------------------------------------------------------------------------

// Lexicographic key ordering summands deterministically.
static std::vector<long long> sort_key(const Complex& C0) {
    Complex C = trim_complex(C0);
    std::vector<long long> k;
    k.push_back(C.lo);
    k.push_back(C.hi());
    for (const ProjObj& o : C.obj) {
        k.push_back((long long)o.size());
        for (int v : o.verts) k.push_back(v);
    }
    for (const ProjMor& d : C.d) {
        Vec v = mor_to_vec(*C.A, d);
        for (uint32_t x : v) k.push_back((long long)x);
    }
    return k;
}

// Isomorphism test for certified-indecomposable complexes: some basis pair
// f: U -> V, g: V -> U with g.f a unit of the local algebra End(U) makes f
// itself an isomorphism; if every pair lands in the radical, none exists.
static IsoCheck iso_indec(const Complex& U, const Complex& V, uint64_t seed) {
    IsoCheck none;
    Complex Ut = trim_complex(U), Vt = trim_complex(V);
    if (Ut.lo != Vt.lo || Ut.obj.size() != Vt.obj.size()) return none;
    for (size_t i = 0; i < Ut.obj.size(); ++i) {
        std::vector<int> a = Ut.obj[i].verts, b = Vt.obj[i].verts;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return none;
    }
    const Fp& F = U.A->field();
    std::vector<ChainMap> fb = chain_map_space(U, V);
    if (fb.empty()) return none;
    EndoAlgebra EU = endo_algebra(U);
    size_t n = EU.alg.dim();
    if (F.p() > n) {
        Mat rad = EU.alg.radical_basis();
        std::vector<ChainMap> gb = chain_map_space(V, U);
        for (const ChainMap& f : fb) {
            for (const ChainMap& g : gb) {
                Vec c = EU.to_coords(chain_compose(f, g));
                Mat row(1, n);
                for (size_t j = 0; j < n; ++j) row.at(0, j) = c[j];
                if (!rows_in_span(F, rad, row)) {
                    IsoCheck r;
                    r.isomorphic = true;
                    r.witness = f;
                    return r;
                }
            }
        }
        return none;
    }
    (void)seed;
    // small field: enumerate Hom(U, V) exhaustively
    const uint64_t cap = 1ull << 14;
    uint64_t total = 1;
    for (size_t i = 0; i < fb.size(); ++i) {
        total *= F.p();
        if (total > cap) throw CfError("prime too small: isomorphism search space too large");
    }
    Vec v(fb.size(), 0);
    for (uint64_t t = 1; t < total; ++t) {
        size_t k = 0;
        while (true) {
            if (++v[k] == F.p()) {
                v[k] = 0;
                ++k;
            } else
                break;
        }
        ChainMap f = chain_zero(U, V);
        for (size_t i = 0; i < fb.size(); ++i)
            if (v[i]) f = chain_add(f, chain_scale(v[i], fb[i]));
        if (chain_map_is_iso(f)) {
            IsoCheck r;
            r.isomorphic = true;
            r.witness = f;
            return r;
        }
    }
    return none;
}

Decomposition decompose(const Complex& X, uint64_t seed) {
    struct Item {
        Complex C;
        ChainMap io; // C -> X
        ChainMap pi; // X -> C
    };
    std::vector<Item> done, work;
    if (!trim_complex(X).obj.empty())
        work.push_back({X, chain_identity(X), chain_identity(X)});
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        SplitOnce s = split_once(it.C, seed);
        if (s.indecomposable) {
            done.push_back(std::move(it));
            continue;
        }
        work.push_back({s.part_a, chain_compose(s.iota_a, it.io), chain_compose(it.pi, s.pi_a)});
        work.push_back({s.part_b, chain_compose(s.iota_b, it.io), chain_compose(it.pi, s.pi_b)});
    }

    std::vector<size_t> order(done.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::vector<long long>> keys(done.size());
    for (size_t i = 0; i < done.size(); ++i) keys[i] = sort_key(done[i].C);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return keys[a] < keys[b]; });

    Decomposition D;
    for (size_t idx : order) {
        Complex part = trim_complex(done[idx].C);
        size_t cls = D.reps.size();
        for (size_t r = 0; r < D.reps.size(); ++r) {
            if (complex_equal(part, D.reps[r]) || iso_indec(part, D.reps[r], seed).isomorphic) {
                cls = r;
                break;
            }
        }
        if (cls == D.reps.size()) {
            D.reps.push_back(part);
            D.multiplicity.push_back(0);
        }
        D.multiplicity[cls] += 1;
        D.instances.push_back(part);
        D.instance_class.push_back(cls);
        D.iotas.push_back(std::move(done[idx].io));
        D.pis.push_back(std::move(done[idx].pi));
    }

    SumDiagram dg = direct_sum_diagram(X.A, D.instances);
    D.sum = dg.sum;
    ChainMap iso = chain_zero(D.sum, X);
    ChainMap inv = chain_zero(X, D.sum);
    for (size_t k = 0; k < D.instances.size(); ++k) {
        iso = chain_add(iso, chain_compose(dg.proj[k], D.iotas[k]));
        inv = chain_add(inv, chain_compose(D.pis[k], dg.incl[k]));
    }
    if (!chain_map_equal(chain_compose(iso, inv), chain_identity(D.sum)) ||
        !chain_map_equal(chain_compose(inv, iso), chain_identity(X)))
        throw CfError("decompose: assembled isomorphism failed verification");
    D.iso = std::move(iso);
    D.iso_inv = std::move(inv);
    return D;
}

IsoCheck are_isomorphic(const Complex& X, const Complex& Y, uint64_t seed) {
    IsoCheck none;
    Complex Xt = trim_complex(X), Yt = trim_complex(Y);
    if (Xt.lo != Yt.lo || Xt.obj.size() != Yt.obj.size()) return none;
    for (size_t i = 0; i < Xt.obj.size(); ++i) {
        std::vector<int> a = Xt.obj[i].verts, b = Yt.obj[i].verts;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return none;
    }
    if (Xt.obj.empty()) {
        IsoCheck r;
        r.isomorphic = true;
        r.witness = chain_zero(X, Y);
        return r;
    }
    Decomposition DX = decompose(X, seed), DY = decompose(Y, seed);
    size_t m = DX.instances.size();
    if (m != DY.instances.size()) return none;
    std::vector<bool> used(m, false);
    std::vector<size_t> match(m, 0);
    std::vector<ChainMap> w(m);
    for (size_t i = 0; i < m; ++i) {
        bool found = false;
        for (size_t j = 0; j < m && !found; ++j) {
            if (used[j]) continue;
            IsoCheck c = iso_indec(DX.instances[i], DY.instances[j], seed);
            if (c.isomorphic) {
                used[j] = true;
                match[i] = j;
                w[i] = *c.witness;
                found = true;
            }
        }
        if (!found) return none;
    }
    ChainMap f = chain_zero(X, Y);
    for (size_t i = 0; i < m; ++i)
        f = chain_add(f, chain_compose(chain_compose(DX.pis[i], w[i]), DY.iotas[match[i]]));
    if (!chain_map_is_iso(f)) throw CfError("are_isomorphic: assembled witness is not invertible");
    IsoCheck r;
    r.isomorphic = true;
    r.witness = std::move(f);
    return r;
}

} // namespace cforge
