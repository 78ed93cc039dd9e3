#pragma once
// Finite-dimensional associative F_p-algebras presented by structure
// constants, as they arise for endomorphism algebras.  Elements are
// coordinate vectors in the given basis.  Provides the semisimple-quotient
// toolkit: Jacobson radical via the trace form, center, and the dimension of
// the subspace fixed by the Frobenius map x -> x^p.

#include "poly.hpp"

namespace cforge {

using Vec = std::vector<uint32_t>;

class StructAlg {
  public:
    // left_mult[i] is the matrix of left multiplication by basis element i.
    StructAlg(Fp F, std::vector<Mat> left_mult);

    const Fp& field() const { return F_; }
    size_t dim() const { return n_; }

    Vec mul(const Vec& x, const Vec& y) const;
    Mat left_mult_matrix(const Vec& x) const;
    Vec pow_element(Vec x, uint64_t e) const; // e >= 1
    Poly min_poly(const Vec& x) const;        // minimal polynomial of left multiplication
    bool is_zero(const Vec& x) const;
    Vec zero() const { return Vec(n_, 0); }

    // Coordinates of the two-sided identity; throws if the algebra is not unital.
    Vec identity() const;

    // Rows span the Jacobson radical.  Valid only when p > dim; throws
    // "prime too small" otherwise.
    Mat radical_basis() const;

    // Rows span the center.
    Mat center_basis() const;

    bool is_commutative() const;

    // Restriction to the subalgebra spanned by the rows of `sub` (assumed
    // multiplicatively closed): returns the algebra on that basis.
    StructAlg subquotient(const Mat& sub_basis, const Mat& mod_basis) const;

    // Dimension of { x : x^p = x } for a commutative algebra; this counts the
    // simple factors of a commutative semisimple algebra.
    size_t frobenius_fixed_dim() const;

    // Express x in the row basis `rows` (throws if not in the span).
    static Vec coords_in_rows(const Fp& F, const Mat& rows, const Vec& x);

  private:
    Fp F_;
    size_t n_;
    std::vector<Mat> L_;
};

} // namespace cforge
