#pragma once

#include "arborflow/bigint.hpp"
#include "arborflow/field.hpp"
#include "arborflow/poly.hpp"

#include <stdexcept>
#include <vector>

namespace arborflow {

/// Dense row-major matrix over an arbitrary scalar.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, S fill = S())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

/// Exact integer determinant by fraction-free Bareiss elimination with row
/// pivoting; every interior division is checked to be exact. det of the 0x0
/// matrix is 1.
BigInt det_bareiss_int(Matrix<BigInt> m);

/// Determinant over the prime field by Gaussian elimination.
Fp det_gauss_field(Matrix<Fp> m);

/// Symbolic determinant: the full Leibniz polynomial, computed by cofactor
/// recursion over column subsets (memoized, zero entries skipped). Guarded to
/// dimension <= 8.
Poly det_expansion_poly(const Matrix<Poly>& m);

} // namespace arborflow
