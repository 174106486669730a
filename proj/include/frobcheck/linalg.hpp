#pragma once

#include <optional>
#include <vector>

#include "frobcheck/matrix.hpp"

namespace frobcheck {

struct RrefResult {
    RatMatrix rref;
    std::vector<size_t> pivot_cols;  // ascending
    size_t rank = 0;
};

// Reduced row echelon form with first-nonzero pivot selection; the pivot
// choice is what fixes every quotient basis in this library, so it must
// stay deterministic.
RrefResult row_reduce(const RatMatrix& m);

size_t rank(const RatMatrix& m);

// True iff m is square of full rank.
bool is_iso(const RatMatrix& m);

// Exact inverse, or nullopt when singular/non-square.
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct CokernelResult {
    RatMatrix projection;  // q x rows(f), full row rank, projection.f = 0
    RatMatrix section;     // rows(f) x q, projection.section = id_q
};

// Quotient of the target of f by its column span. q = rows(f) - rank(f).
// Basis: the non-pivot coordinates of the row reduction of f^T, so repeated
// calls give bit-identical results.
CokernelResult cokernel(const RatMatrix& f);

}  // namespace frobcheck
