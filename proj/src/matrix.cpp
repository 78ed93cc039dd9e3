#include "cforge/matrix.hpp"

namespace cforge {

bool is_prime_u64(uint64_t n) {
    // Deterministic Miller-Rabin, valid for all 64-bit inputs.
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    auto mulmod = [&](uint64_t a, uint64_t b) { return (uint64_t)((__uint128_t)a * b % n); };
    auto powmod = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Mat mat_add(const Fp& F, const Mat& A, const Mat& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw CfError("mat_add: shape mismatch");
    Mat R(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) = F.add(A.at(i, j), B.at(i, j));
    return R;
}

Mat mat_sub(const Fp& F, const Mat& A, const Mat& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw CfError("mat_sub: shape mismatch");
    Mat R(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) = F.sub(A.at(i, j), B.at(i, j));
    return R;
}

Mat mat_scale(const Fp& F, uint32_t s, const Mat& A) {
    Mat R(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) = F.mul(s, A.at(i, j));
    return R;
}

Mat mat_mul(const Fp& F, const Mat& A, const Mat& B) {
    if (A.cols() != B.rows()) throw CfError("mat_mul: shape mismatch");
    Mat R(A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            uint32_t aik = A.at(i, k);
            if (!aik) continue;
            for (size_t j = 0; j < B.cols(); ++j)
                if (B.at(k, j)) R.at(i, j) = F.add(R.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return R;
}

Mat mat_transpose(const Mat& A) {
    Mat R(A.cols(), A.rows());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(j, i) = A.at(i, j);
    return R;
}

Mat mat_hcat(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw CfError("mat_hcat: row mismatch");
    Mat R(A.rows(), A.cols() + B.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
        for (size_t j = 0; j < B.cols(); ++j) R.at(i, A.cols() + j) = B.at(i, j);
    }
    return R;
}

Mat mat_vcat(const Mat& A, const Mat& B) {
    if (A.cols() != B.cols()) throw CfError("mat_vcat: column mismatch");
    Mat R(A.rows() + B.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) R.at(A.rows() + i, j) = B.at(i, j);
    return R;
}

RrefResult rref(const Fp& F, Mat A) {
    // Callers may hand in raw residues >= p; field ops assume reduced entries.
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            if (A.at(i, j) >= F.p()) A.at(i, j) %= F.p();
    RrefResult res;
    size_t row = 0;
    for (size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        size_t piv = row;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(piv, j), A.at(row, j));
        uint32_t s = F.inv(A.at(row, col));
        for (size_t j = col; j < A.cols(); ++j) A.at(row, j) = F.mul(s, A.at(row, j));
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            uint32_t f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    res.m = std::move(A);
    return res;
}

size_t rank(const Fp& F, const Mat& A) { return rref(F, A).rank; }

Mat kernel_basis(const Fp& F, const Mat& A) {
    RrefResult R = rref(F, A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : R.pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < A.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(free_cols.size(), A.cols());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        K.at(k, fc) = 1;
        for (size_t r = 0; r < R.rank; ++r) K.at(k, R.pivots[r]) = F.neg(R.m.at(r, fc));
    }
    return K;
}

SolveResult solve(const Fp& F, const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw CfError("solve: row mismatch");
    SolveResult out;
    RrefResult R = rref(F, mat_hcat(A, B));
    // Inconsistent iff some pivot lands in the B block.
    for (size_t c : R.pivots)
        if (c >= A.cols()) return out;
    out.consistent = true;
    out.particular = Mat(A.cols(), B.cols());
    for (size_t r = 0; r < R.rank; ++r)
        for (size_t j = 0; j < B.cols(); ++j) out.particular.at(R.pivots[r], j) = R.m.at(r, A.cols() + j);
    out.kernel = kernel_basis(F, A);
    return out;
}

Mat mat_inverse(const Fp& F, const Mat& A) {
    if (A.rows() != A.cols()) throw CfError("mat_inverse: not square");
    SolveResult s = solve(F, A, Mat::identity(A.rows()));
    if (!s.consistent || s.kernel.rows() != 0) throw CfError("mat_inverse: singular matrix");
    return s.particular;
}

bool rows_in_span(const Fp& F, const Mat& W, const Mat& V) {
    if (W.cols() != V.cols()) throw CfError("rows_in_span: column mismatch");
    size_t rw = rank(F, W);
    return rank(F, mat_vcat(W, V)) == rw;
}

std::vector<size_t> extend_basis_rows(const Fp& F, const Mat& A, const Mat& B) {
    std::vector<size_t> picked;
    Mat cur = A;
    size_t cur_rank = rank(F, cur);
    for (size_t i = 0; i < B.rows(); ++i) {
        Mat row(1, B.cols());
        for (size_t j = 0; j < B.cols(); ++j) row.at(0, j) = B.at(i, j);
        Mat cand = cur.rows() == 0 ? row : mat_vcat(cur, row);
        size_t r = rank(F, cand);
        if (r > cur_rank) {
            picked.push_back(i);
            cur = cand;
            cur_rank = r;
        }
    }
    return picked;
}

} // namespace cforge
