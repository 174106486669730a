#include "frobcheck/linalg.hpp"

#include <algorithm>

namespace frobcheck {

RrefResult row_reduce(const RatMatrix& m) {
    RrefResult res;
    res.rref = m;
    RatMatrix& a = res.rref;
    size_t r = 0;  // next pivot row
    for (size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        // First row at or below r with a nonzero entry in this column.
        size_t piv = r;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rational inv = Rational(1) / a.at(r, col);
        for (size_t j = col; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Rational factor = a.at(i, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
        }
        res.pivot_cols.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

size_t rank(const RatMatrix& m) {
    // Forward elimination only.
    RatMatrix a = m;
    size_t r = 0;
    for (size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        size_t piv = r;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (size_t j = col; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (size_t i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational factor = a.at(i, col) / a.at(r, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
        }
        ++r;
    }
    return r;
}

bool is_iso(const RatMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    if (n == 0) return RatMatrix(0, 0);
    // Gauss-Jordan on [m | id].
    RatMatrix a(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
        a.at(i, n + i) = Rational(1);
    }
    RrefResult rr = row_reduce(a);
    // Invertible iff every pivot lands in the left block, i.e. pivots 0..n-1.
    if (rr.rank < n || rr.pivot_cols[n - 1] >= n) return std::nullopt;
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

CokernelResult cokernel(const RatMatrix& f) {
    size_t ambient = f.rows();
    RrefResult rr = row_reduce(f.transpose());
    const std::vector<size_t>& piv = rr.pivot_cols;
    std::vector<size_t> free_cols;
    {
        size_t p = 0;
        for (size_t j = 0; j < ambient; ++j) {
            if (p < piv.size() && piv[p] == j) {
                ++p;
            } else {
                free_cols.push_back(j);
            }
        }
    }
    size_t q = free_cols.size();
    CokernelResult out;
    out.projection = RatMatrix(q, ambient);
    out.section = RatMatrix(ambient, q);
    // Row i of the reduced f^T reads e_{piv[i]} + sum_l R[i,l] e_l over the
    // free coordinates l, so the class of e_{piv[i]} is -sum_l R[i,l] [e_l].
    for (size_t l = 0; l < q; ++l) {
        out.projection.at(l, free_cols[l]) = Rational(1);
        out.section.at(free_cols[l], l) = Rational(1);
        for (size_t i = 0; i < piv.size(); ++i)
            out.projection.at(l, piv[i]) = -rr.rref.at(i, free_cols[l]);
    }
    return out;
}

}  // namespace frobcheck
