#pragma once

#include <string>

#include "frobcheck/category.hpp"
#include "frobcheck/report.hpp"

namespace frobcheck {

// A Frobenius algebra in Mat(Q): monoid (mu, eta) and comonoid (delta, eps)
// on the same object, linked by the Frobenius laws. The data is not assumed
// valid at construction; check_frobenius_algebra is the explicit gate, so
// deliberately broken algebras remain representable.
struct FrobeniusAlgebra {
    MonObject r = MonObject::mat(1);
    RatMatrix mu;     // R (x) R -> R
    RatMatrix eta;    // I -> R
    RatMatrix delta;  // R -> R (x) R
    RatMatrix eps;    // R -> I
    std::string name = "R";

    size_t dim() const { return r.dim; }
};

// Verifies the eight defining equations exactly, one report entry each:
// associativity, both unit laws, coassociativity, both counit laws, and
// (mu(x)1)(1(x)delta) = delta mu = (1(x)mu)(delta(x)1).
Report check_frobenius_algebra(const FrobeniusAlgebra& alg);

// Group algebra Q[Z/n]: mu(e_g (x) e_h) = e_{g+h}, eta = e_0,
// delta(e_g) = sum_h e_h (x) e_{g-h}, eps = coefficient of e_0.
// The generated matrices are passed through check_frobenius_algebra before
// being returned.
FrobeniusAlgebra zmod_algebra(int n);

// The unit object with all structure maps [[1]].
FrobeniusAlgebra unit_algebra();

}  // namespace frobcheck
