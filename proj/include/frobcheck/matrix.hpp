#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "frobcheck/rational.hpp"

namespace frobcheck {

// Dense row-major matrix of exact rationals. A morphism Mat(n) -> Mat(m)
// is an m x n matrix acting on column vectors. Zero rows or columns are
// legal; such matrices carry no entries but still compose.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    // Row-major literal, every row the same length.
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(size_t n);
    static RatMatrix zero(size_t rows, size_t cols) { return RatMatrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool is_identity() const;
    bool is_zero() const;

    RatMatrix transpose() const;
    RatMatrix scaled(const Rational& s) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    // "[1 0; 1/2 -3]"
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

    // First entry where the two matrices differ, as (row, col). Both must
    // share a shape; returns false when equal.
    static bool first_difference(const RatMatrix& a, const RatMatrix& b, size_t& row, size_t& col);

private:
    size_t rows_;
    size_t cols_;
    std::vector<Rational> e_;
};

// Matrix product f.g (f applied after g in the composition order used by
// the category layer is mat_mul(f, g) with f.cols == g.rows). Throws
// ShapeError naming both shapes on a mismatch.
RatMatrix mat_mul(const RatMatrix& f, const RatMatrix& g);

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);

// Kronecker product, f indexing the outer blocks:
// result((i1*g.rows+i2),(j1*g.cols+j2)) = f(i1,j1) * g(i2,j2).
RatMatrix kron(const RatMatrix& f, const RatMatrix& g);

// The mn x mn permutation matrix sigma_{m,n} with sigma(x (x) y) = y (x) x
// on pure tensors, basis e_i (x) e_j at index i*n + j (0-based).
RatMatrix commutation_matrix(size_t m, size_t n);

}  // namespace frobcheck
