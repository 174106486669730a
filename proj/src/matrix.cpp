#include "frobcheck/matrix.hpp"

#include <ostream>
#include <sstream>

#include "frobcheck/error.hpp"

namespace frobcheck {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        for (const auto& x : row) e_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const Rational& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
    }
    os << ']';
    if (is_empty()) os << "(" << rows_ << "x" << cols_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    return os << m.to_string();
}

bool RatMatrix::first_difference(const RatMatrix& a, const RatMatrix& b, size_t& row, size_t& col) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("first_difference on mismatched shapes " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j)
            if (a.at(i, j) != b.at(i, j)) {
                row = i;
                col = j;
                return true;
            }
    return false;
}

RatMatrix mat_mul(const RatMatrix& f, const RatMatrix& g) {
    if (f.cols() != g.rows())
        throw ShapeError("mat_mul shape mismatch: " + std::to_string(f.rows()) + "x" +
                         std::to_string(f.cols()) + " . " + std::to_string(g.rows()) + "x" +
                         std::to_string(g.cols()));
    RatMatrix out(f.rows(), g.cols());
    // (i,k,j) order with a zero skip on f(i,k); the structure maps that flow
    // through here are mostly permutation-sparse and this avoids touching
    // their zero blocks.
    for (size_t i = 0; i < f.rows(); ++i)
        for (size_t k = 0; k < f.cols(); ++k) {
            const Rational& fik = f.at(i, k);
            if (fik.is_zero()) continue;
            for (size_t j = 0; j < g.cols(); ++j) {
                const Rational& gkj = g.at(k, j);
                if (gkj.is_zero()) continue;
                out.at(i, j) += fik * gkj;
            }
        }
    return out;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("mat_add shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " + " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    RatMatrix out = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
    return out;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("mat_sub shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " - " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    RatMatrix out = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
    return out;
}

RatMatrix kron(const RatMatrix& f, const RatMatrix& g) {
    RatMatrix out(f.rows() * g.rows(), f.cols() * g.cols());
    for (size_t i1 = 0; i1 < f.rows(); ++i1)
        for (size_t j1 = 0; j1 < f.cols(); ++j1) {
            const Rational& fij = f.at(i1, j1);
            if (fij.is_zero()) continue;
            for (size_t i2 = 0; i2 < g.rows(); ++i2)
                for (size_t j2 = 0; j2 < g.cols(); ++j2) {
                    const Rational& gij = g.at(i2, j2);
                    if (gij.is_zero()) continue;
                    out.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = fij * gij;
                }
        }
    return out;
}

RatMatrix commutation_matrix(size_t m, size_t n) {
    RatMatrix out(m * n, m * n);
    // Column e_i (x) e_j (index i*n + j) maps to e_j (x) e_i (index j*m + i).
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) out.at(j * m + i, i * n + j) = Rational(1);
    return out;
}

}  // namespace frobcheck
