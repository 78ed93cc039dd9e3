#pragma once
// Dense exact matrices over F_p with reduced row echelon form, linear solving
// and kernel computation.  Everything is deterministic: pivoting always picks
// the first nonzero entry in column order.

#include "fp.hpp"

#include <cstddef>
#include <vector>

namespace cforge {

class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(size_t r, size_t c) : r_(r), c_(c), a_(r * c, 0) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    uint32_t& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    uint32_t at(size_t i, size_t j) const { return a_[i * c_ + j]; }
    bool is_zero() const {
        for (uint32_t v : a_)
            if (v) return false;
        return true;
    }
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    const std::vector<uint32_t>& data() const { return a_; }

  private:
    size_t r_, c_;
    std::vector<uint32_t> a_;
};

Mat mat_add(const Fp& F, const Mat& A, const Mat& B);
Mat mat_sub(const Fp& F, const Mat& A, const Mat& B);
Mat mat_scale(const Fp& F, uint32_t s, const Mat& A);
Mat mat_mul(const Fp& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
// Horizontal concatenation [A | B] (same row count).
Mat mat_hcat(const Mat& A, const Mat& B);
// Vertical concatenation [A ; B] (same column count).
Mat mat_vcat(const Mat& A, const Mat& B);

struct RrefResult {
    Mat m;                      // reduced row echelon form
    std::vector<size_t> pivots; // pivot column of each nonzero row
    size_t rank = 0;
};

RrefResult rref(const Fp& F, Mat A);
size_t rank(const Fp& F, const Mat& A);

// Basis of { x : A x = 0 }, returned as rows of the result.
Mat kernel_basis(const Fp& F, const Mat& A);

struct SolveResult {
    bool consistent = false;
    Mat particular; // one solution per right-hand-side column (cols(A) x cols(B))
    Mat kernel;     // rows form a basis of the homogeneous solution space
};

// Solve A X = B for all columns of B simultaneously.
SolveResult solve(const Fp& F, const Mat& A, const Mat& B);

// Inverse of a square matrix; throws if singular.
Mat mat_inverse(const Fp& F, const Mat& A);

// Row space membership: can each row of V be written in the row span of W?
bool rows_in_span(const Fp& F, const Mat& W, const Mat& V);

// Deterministic completion: rows of B that extend the row space of A to the
// row space of [A; B], in order of first appearance.
std::vector<size_t> extend_basis_rows(const Fp& F, const Mat& A, const Mat& B);

} // namespace cforge
