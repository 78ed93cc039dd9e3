#include "cforge/assoc.hpp"

namespace cforge {

StructAlg::StructAlg(Fp F, std::vector<Mat> left_mult) : F_(F), n_(left_mult.size()), L_(std::move(left_mult)) {
    for (const Mat& m : L_)
        if (m.rows() != n_ || m.cols() != n_) throw CfError("StructAlg: bad multiplication table shape");
}

Vec StructAlg::mul(const Vec& x, const Vec& y) const {
    Mat ym(n_, 1);
    for (size_t i = 0; i < n_; ++i) ym.at(i, 0) = y[i];
    Mat r = mat_mul(F_, left_mult_matrix(x), ym);
    Vec out(n_);
    for (size_t i = 0; i < n_; ++i) out[i] = r.at(i, 0);
    return out;
}

Mat StructAlg::left_mult_matrix(const Vec& x) const {
    Mat r(n_, n_);
    for (size_t i = 0; i < n_; ++i) {
        if (!x[i]) continue;
        for (size_t a = 0; a < n_; ++a)
            for (size_t b = 0; b < n_; ++b) r.at(a, b) = F_.add(r.at(a, b), F_.mul(x[i], L_[i].at(a, b)));
    }
    return r;
}

Vec StructAlg::pow_element(Vec x, uint64_t e) const {
    if (e == 0) throw CfError("pow_element: exponent must be positive");
    int top = 63;
    while (top > 0 && !((e >> top) & 1)) --top;
    Vec r = x;
    for (int i = top - 1; i >= 0; --i) {
        r = mul(r, r);
        if ((e >> i) & 1) r = mul(r, x);
    }
    return r;
}

Poly StructAlg::min_poly(const Vec& x) const { return minimal_polynomial(F_, left_mult_matrix(x)); }

bool StructAlg::is_zero(const Vec& x) const {
    for (uint32_t v : x)
        if (v) return false;
    return true;
}

Vec StructAlg::identity() const {
    // x is a two-sided identity iff x*b_j = b_j and b_j*x = b_j for all j.
    Mat A(2 * n_ * n_, n_), rhs(2 * n_ * n_, 1);
    size_t row = 0;
    for (size_t j = 0; j < n_; ++j)
        for (size_t k = 0; k < n_; ++k) {
            for (size_t i = 0; i < n_; ++i) A.at(row, i) = L_[i].at(k, j);
            rhs.at(row, 0) = (k == j) ? 1 : 0;
            ++row;
        }
    for (size_t j = 0; j < n_; ++j)
        for (size_t k = 0; k < n_; ++k) {
            for (size_t i = 0; i < n_; ++i) A.at(row, i) = L_[j].at(k, i);
            rhs.at(row, 0) = (k == j) ? 1 : 0;
            ++row;
        }
    SolveResult s = solve(F_, A, rhs);
    if (!s.consistent) throw CfError("algebra has no identity element");
    Vec e(n_);
    for (size_t i = 0; i < n_; ++i) e[i] = s.particular.at(i, 0);
    return e;
}

Mat StructAlg::radical_basis() const {
    if ((uint64_t)n_ >= F_.p())
        throw CfError("prime too small: radical computation needs p > " + std::to_string(n_));
    Mat T(n_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i; j < n_; ++j) {
            Mat prod = mat_mul(F_, L_[i], L_[j]);
            uint32_t tr = 0;
            for (size_t k = 0; k < n_; ++k) tr = F_.add(tr, prod.at(k, k));
            T.at(i, j) = tr;
            T.at(j, i) = tr;
        }
    return kernel_basis(F_, T);
}

Mat StructAlg::center_basis() const {
    Mat A(n_ * n_, n_);
    size_t row = 0;
    for (size_t j = 0; j < n_; ++j)
        for (size_t k = 0; k < n_; ++k) {
            for (size_t i = 0; i < n_; ++i) A.at(row, i) = F_.sub(L_[i].at(k, j), L_[j].at(k, i));
            ++row;
        }
    return kernel_basis(F_, A);
}

bool StructAlg::is_commutative() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            for (size_t k = 0; k < n_; ++k)
                if (L_[i].at(k, j) != L_[j].at(k, i)) return false;
    return true;
}

StructAlg StructAlg::subquotient(const Mat& sub_basis, const Mat& mod_basis) const {
    size_t m = sub_basis.rows();
    Mat stacked = mod_basis.rows() == 0 ? sub_basis : mat_vcat(mod_basis, sub_basis);
    // Columns: all pairwise products of sub-basis rows, expressed over [mod; sub].
    Mat prods(n_, m * m);
    for (size_t a = 0; a < m; ++a) {
        Vec xa(n_), xb(n_);
        for (size_t i = 0; i < n_; ++i) xa[i] = sub_basis.at(a, i);
        for (size_t b = 0; b < m; ++b) {
            for (size_t i = 0; i < n_; ++i) xb[i] = sub_basis.at(b, i);
            Vec pr = mul(xa, xb);
            for (size_t i = 0; i < n_; ++i) prods.at(i, a * m + b) = pr[i];
        }
    }
    SolveResult s = solve(F_, mat_transpose(stacked), prods);
    if (!s.consistent) throw CfError("subquotient: products leave the span");
    std::vector<Mat> Lq(m, Mat(m, m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t k = 0; k < m; ++k) Lq[a].at(k, b) = s.particular.at(mod_basis.rows() + k, a * m + b);
    return StructAlg(F_, std::move(Lq));
}

size_t StructAlg::frobenius_fixed_dim() const {
    if (!is_commutative()) throw CfError("frobenius_fixed_dim requires a commutative algebra");
    Mat M(n_, n_);
    for (size_t j = 0; j < n_; ++j) {
        Vec e(n_, 0);
        e[j] = 1;
        Vec f = pow_element(e, F_.p());
        for (size_t i = 0; i < n_; ++i) M.at(i, j) = f[i];
    }
    Mat D = mat_sub(F_, M, Mat::identity(n_));
    return kernel_basis(F_, D).rows();
}

Vec StructAlg::coords_in_rows(const Fp& F, const Mat& rows, const Vec& x) {
    Mat xm(x.size(), 1);
    for (size_t i = 0; i < x.size(); ++i) xm.at(i, 0) = x[i];
    SolveResult s = solve(F, mat_transpose(rows), xm);
    if (!s.consistent) throw CfError("coords_in_rows: vector not in span");
    Vec c(rows.rows());
    for (size_t i = 0; i < rows.rows(); ++i) c[i] = s.particular.at(i, 0);
    return c;
}

} // namespace cforge
