#include "cforge/poly.hpp"

#include <algorithm>

namespace cforge {

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_deg(const Poly& a) { return (int)a.size() - 1; }

bool poly_is_zero(const Poly& a) { return a.empty(); }

Poly poly_add(const Fp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    return poly_trim(r);
}

Poly poly_sub(const Fp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    return poly_trim(r);
}

Poly poly_mul(const Fp& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return poly_trim(r);
}

Poly poly_scale(const Fp& F, uint32_t s, const Poly& a) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
    return poly_trim(r);
}

Poly poly_monic(const Fp& F, const Poly& a) {
    if (a.empty()) return a;
    return poly_scale(F, F.inv(a.back()), a);
}

std::pair<Poly, Poly> poly_divmod(const Fp& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw CfError("polynomial division by zero");
    Poly rem = a, quo;
    int db = poly_deg(b);
    uint32_t lead_inv = F.inv(b.back());
    if (poly_deg(rem) >= db) quo.assign(poly_deg(rem) - db + 1, 0);
    while (poly_deg(rem) >= db) {
        int k = poly_deg(rem) - db;
        uint32_t c = F.mul(rem.back(), lead_inv);
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]));
        rem = poly_trim(rem);
    }
    return {poly_trim(quo), rem};
}

Poly poly_mod(const Fp& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

PolyXgcd poly_xgcd(const Fp& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = {1}, u1 = {}, v0 = {}, v1 = {1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        Poly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
        Poly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.empty()) return {r0, u0, v0};
    uint32_t s = F.inv(r0.back());
    return {poly_scale(F, s, r0), poly_scale(F, s, u0), poly_scale(F, s, v0)};
}

Poly poly_derivative(const Fp& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.reduce_int((long long)i), a[i]);
    return poly_trim(r);
}

uint32_t poly_eval(const Fp& F, const Poly& a, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly poly_powmod(const Fp& F, Poly base, uint64_t e, const Poly& m) {
    Poly r = {1};
    base = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), m);
        base = poly_mod(F, poly_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

std::string poly_to_string(const Poly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i > 0) {
            if (a[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

Poly poly_squarefree_part(const Fp& F, const Poly& a) {
    if (poly_deg(a) <= 0) throw CfError("squarefree part of a constant");
    if ((uint64_t)poly_deg(a) >= F.p())
        throw CfError("prime too small for squarefree computation");
    Poly d = poly_derivative(F, a);
    Poly g = poly_gcd(F, a, d);
    return poly_monic(F, poly_divmod(F, a, g).first);
}

std::vector<uint32_t> poly_roots_of_split_squarefree(const Fp& F, const Poly& f0) {
    if (F.p() == 2) throw CfError("root splitting needs an odd prime");
    std::vector<uint32_t> roots;
    std::vector<Poly> stack = {poly_monic(F, f0)};
    while (!stack.empty()) {
        Poly f = stack.back();
        stack.pop_back();
        if (poly_deg(f) <= 0) continue;
        if (poly_deg(f) == 1) {
            roots.push_back(F.neg(f[0]));
            continue;
        }
        bool split_done = false;
        for (uint32_t c = 0; c < F.p(); ++c) {
            // Pull out the root -c directly when present.
            if (poly_eval(F, f, F.neg(c)) == 0) {
                roots.push_back(F.neg(c));
                f = poly_divmod(F, f, Poly{c, 1}).first;
                if (poly_deg(f) <= 1) {
                    if (poly_deg(f) == 1) roots.push_back(F.neg(f[0]));
                    split_done = true;
                    break;
                }
            }
            Poly b = poly_powmod(F, Poly{c, 1}, (F.p() - 1) / 2, f);
            Poly g = poly_gcd(F, poly_sub(F, b, Poly{1}), f);
            if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
                stack.push_back(g);
                stack.push_back(poly_divmod(F, f, g).first);
                split_done = true;
                break;
            }
        }
        if (!split_done) throw CfError("root extraction failed: polynomial does not split");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::pair<Poly, Poly>> poly_coprime_split(const Fp& F, const Poly& f0) {
    if (F.p() == 2) throw CfError("coprime splitting needs an odd prime");
    Poly f = poly_monic(F, f0);
    int n = poly_deg(f);
    if (n < 2) return std::nullopt;
    // Distinct-degree stage: factors of degree d divide x^(p^d) - x.
    Poly xp = Poly{0, 1}; // running x^(p^d) mod f
    for (int d = 1; 2 * d <= n; ++d) {
        xp = poly_powmod(F, xp, F.p(), f);
        Poly g = poly_gcd(F, poly_sub(F, xp, Poly{0, 1}), f);
        if (poly_deg(g) == 0) continue;
        if (poly_deg(g) < n) return std::make_pair(g, poly_divmod(F, f, g).first);
        // All irreducible factors have the same degree d; need an equal-degree split.
        if (d == n) return std::nullopt;
        uint64_t half = 1;
        {
            // (p^d - 1) / 2 without overflow for the sizes we use (p^d < 2^63).
            __uint128_t pd = 1;
            for (int i = 0; i < d; ++i) pd *= F.p();
            half = (uint64_t)((pd - 1) / 2);
        }
        for (uint32_t c = 0; c < F.p(); ++c) {
            Poly b = poly_powmod(F, Poly{c, 1}, half, f);
            Poly g1 = poly_gcd(F, poly_sub(F, b, Poly{1}), f);
            if (poly_deg(g1) > 0 && poly_deg(g1) < n)
                return std::make_pair(g1, poly_divmod(F, f, g1).first);
            Poly g2 = poly_gcd(F, poly_add(F, b, Poly{1}), f);
            if (poly_deg(g2) > 0 && poly_deg(g2) < n)
                return std::make_pair(g2, poly_divmod(F, f, g2).first);
        }
        throw CfError("equal-degree split failed");
    }
    return std::nullopt; // irreducible
}

Poly minimal_polynomial(const Fp& F, const Mat& A) {
    if (A.rows() != A.cols()) throw CfError("minimal_polynomial: not square");
    size_t n = A.rows();
    if (n == 0) return Poly{1};
    // Krylov iteration on vectorized powers of A.
    std::vector<Mat> pows;
    pows.push_back(Mat::identity(n));
    Mat rows(0, n * n);
    for (size_t m = 1;; ++m) {
        Mat prev_rows(m, n * n);
        for (size_t k = 0; k < m; ++k)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) prev_rows.at(k, i * n + j) = pows[k].at(i, j);
        Mat next = mat_mul(F, pows.back(), A);
        Mat target(n * n, 1);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) target.at(i * n + j, 0) = next.at(i, j);
        SolveResult s = solve(F, mat_transpose(prev_rows), target);
        if (s.consistent) {
            Poly mu(m + 1, 0);
            mu[m] = 1;
            for (size_t k = 0; k < m; ++k) mu[k] = F.neg(s.particular.at(k, 0));
            return mu;
        }
        pows.push_back(next);
        if (m > n) throw CfError("minimal_polynomial: iteration exceeded dimension");
    }
}

} // namespace cforge
